"""Finite-dimensional representations of the affine Hecke algebra at q = 0.

A :class:`Rep` is given by the matrices of ``T`` and ``S1``; ``S2`` is always
derived as ``T^-1 S1 T`` (from ``T S2 = S1 T``).  The construction checks the
defining relations, specialised to residue characteristic p where q = 0:

* quadratic:  (S1 + 1) S1 = 0
* braid:      S1 S2 S1 = S2 S1 S2
* T^3 S1 = S1 T^3

The central elements sigma3, q*sigma1, q*sigma2 are stored as linear
combinations of words whose coefficients are polynomials in q.  They were
obtained by rewriting the Bernstein elements with S_i^{-1} = q^{-1}(S_i + 1 - q);
specialising q = 0 gives the words evaluated here, and :mod:`hecke_a2.oracle`
checks the same combinations over the rationals for generic q.
"""
from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from . import linalg as la
from .errors import InputError, NotInvertible, NotScalar, RelationViolated
from .gf import FFElem, FieldSpec

LETTERS = ("T", "Tinv", "S1", "S2")

Word = tuple[str, ...]
# coefficient polynomial in q (low degree first) times a word
Term = tuple[tuple[int, ...], Word]


def _polymul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def _simplify(word: Word) -> Word:
    out: list[str] = []
    for letter in word:
        if out and {out[-1], letter} == {"T", "Tinv"}:
            out.pop()
        else:
            out.append(letter)
    return tuple(out)


def expand(*factors: Sequence[Term]) -> list[Term]:
    """Multiply out a product of linear combinations of words."""
    acc: dict[Word, tuple[int, ...]] = {(): (1,)}
    for factor in factors:
        nxt: dict[Word, tuple[int, ...]] = {}
        for w1, c1 in acc.items():
            for c2, w2 in factor:
                w = _simplify(w1 + tuple(w2))
                c = _polymul(c1, c2)
                old = nxt.get(w, (0,))
                n = max(len(old), len(c))
                nxt[w] = tuple((old[i] if i < len(old) else 0) + (c[i] if i < len(c) else 0)
                               for i in range(n))
        acc = nxt
    return [(c, w) for w, c in acc.items() if any(c)]


def _letter(x: str) -> list[Term]:
    return [((1,), (x,))]


# S_i + 1 - q
_S1p = [((1,), ("S1",)), ((1, -1), ())]
_S2p = [((1,), ("S2",)), ((1, -1), ())]
_T, _Tinv, _S1, _S2 = (_letter(x) for x in LETTERS)
_T3 = [((1,), ("T", "T", "T"))]

# q*Y1 = (S1+1-q)(S2+1-q)T,  q*Y2 = (S2+1-q) T S1,  q*Y3 = T S1 S2
# q*Y1^-1 = T^-1 S2 S1,  q*Y2^-1 = (S1+1-q) T^-1 S2,  q*Y3^-1 = (S2+1-q)(S1+1-q) T^-1
CENTRAL_WORDS: dict[str, list[Term]] = {
    "sigma3": expand(_T3),
    "q_sigma1": (expand(_S1p, _S2p, _T) + expand(_S2p, _T, _S1) + expand(_T, _S1, _S2)),
    "q_sigma2": (expand(_T3, _Tinv, _S2, _S1) + expand(_T3, _S1p, _Tinv, _S2)
                 + expand(_T3, _S2p, _S1p, _Tinv)),
}


def specialize(terms: Iterable[Term], q) -> list[tuple[object, Word]]:
    """Evaluate the q-polynomial coefficients at a given q."""
    out = []
    for coeffs, w in terms:
        c = sum(ci * q ** i for i, ci in enumerate(coeffs))
        out.append((c, w))
    return out


@dataclass(frozen=True, eq=False)
class Rep:
    field: FieldSpec
    matT: np.ndarray
    matS1: np.ndarray
    name: str = dc_field(default="", compare=False)

    @property
    def dim(self) -> int:
        return self.matT.shape[0]

    @cached_property
    def matTinv(self) -> np.ndarray:
        return la.inverse(self.field, self.matT)

    @cached_property
    def matS2(self) -> np.ndarray:
        return la.matprod(self.field, self.matTinv, self.matS1, self.matT)

    def generator(self, letter: str) -> np.ndarray:
        return {"T": self.matT, "Tinv": self.matTinv, "S1": self.matS1, "S2": self.matS2}[letter]

    def same_matrices(self, other: "Rep") -> bool:
        return (self.field == other.field and np.array_equal(self.matT, other.matT)
                and np.array_equal(self.matS1, other.matS1))

    def key(self) -> tuple:
        return (self.field, self.matT.tobytes(), self.matS1.tobytes(), self.dim)

    def to_json(self) -> dict:
        f = self.field
        return {
            "field": f.to_json(),
            "T": [[list(f.coords(int(c))) for c in row] for row in self.matT],
            "S1": [[list(f.coords(int(c))) for c in row] for row in self.matS1],
        }

    @classmethod
    def from_json(cls, data: dict, field: FieldSpec | None = None) -> "Rep":
        if "field" in data:
            field = FieldSpec.from_json(data["field"])
        if field is None:
            raise InputError("representation JSON needs a field")
        return rep_make(field, _parse_matrix(field, data["T"]), _parse_matrix(field, data["S1"]))


def _parse_matrix(field: FieldSpec, rows) -> np.ndarray:
    return la.asmat(field, [[x if isinstance(x, list) else int(x) for x in row] for row in rows])


def check_relations(rep: Rep) -> list[str]:
    """Names of violated relations (empty when the Rep is valid)."""
    f, T, S1, S2 = rep.field, rep.matT, rep.matS1, rep.matS2
    n = rep.dim
    bad = []
    if la.matmul(f, la.add(f, S1, la.identity(n)), S1).any():
        bad.append("quadratic")
    if not np.array_equal(la.matprod(f, S1, S2, S1), la.matprod(f, S2, S1, S2)):
        bad.append("braid")
    T3 = la.matprod(f, T, T, T)
    if not np.array_equal(la.matmul(f, T3, S1), la.matmul(f, S1, T3)):
        bad.append("T3-central")
    if not np.array_equal(la.matmul(f, T, S2), la.matmul(f, S1, T)):
        bad.append("T-conjugation")
    return bad


def rep_make(field: FieldSpec, matT, matS1, name: str = "") -> Rep:
    matT = np.asarray(matT, dtype=la.DTYPE)
    matS1 = np.asarray(matS1, dtype=la.DTYPE)
    if matT.ndim != 2 or matT.shape[0] != matT.shape[1] or matT.shape != matS1.shape:
        raise InputError("T and S1 must be square matrices of equal size")
    if matT.shape[0] < 1:
        raise InputError("dimension must be >= 1")
    if np.any(matT < 0) or np.any(matT >= field.order) or np.any(matS1 < 0) or np.any(matS1 >= field.order):
        raise InputError("matrix entries are not element codes of the field")
    matT.setflags(write=False)
    matS1.setflags(write=False)
    if not la.is_invertible(field, matT):
        raise NotInvertible("T is not invertible")
    rep = Rep(field, matT, matS1, name)
    bad = check_relations(rep)
    if bad:
        raise RelationViolated(bad[0])
    return rep


def eval_word(rep: Rep, word: Sequence[str]) -> np.ndarray:
    out = la.identity(rep.dim)
    for letter in word:
        if letter not in LETTERS:
            raise InputError(f"unknown letter {letter!r}")
        out = la.matmul(rep.field, out, rep.generator(letter))
    return out


def eval_combination(rep: Rep, terms: Iterable[tuple[int, Word]]) -> np.ndarray:
    f = rep.field
    acc = np.zeros((rep.dim, rep.dim), dtype=la.DTYPE)
    for c, w in terms:
        c = int(c) % f.p
        if c:
            acc = la.add(f, acc, la.scale(f, c, eval_word(rep, w)))
    return acc


def central_matrices(rep: Rep) -> dict[str, np.ndarray]:
    """Matrices of sigma3, q*sigma1, q*sigma2 at q = 0."""
    return {name: eval_combination(rep, specialize(terms, 0))
            for name, terms in CENTRAL_WORDS.items()}


def central_scalars(rep: Rep) -> tuple[FFElem, FFElem, FFElem]:
    """(z, c1, c2): the scalars by which sigma3, q*sigma1, q*sigma2 act."""
    out = []
    for name, m in central_matrices(rep).items():
        if not la.is_scalar(m):
            raise NotScalar(name)
        out.append(FFElem(rep.field, int(m[0, 0])))
    return tuple(out)


def direct_sum(*reps: Rep) -> Rep:
    f = reps[0].field
    n = sum(r.dim for r in reps)
    T = np.zeros((n, n), dtype=la.DTYPE)
    S = np.zeros((n, n), dtype=la.DTYPE)
    i = 0
    for r in reps:
        T[i:i + r.dim, i:i + r.dim] = r.matT
        S[i:i + r.dim, i:i + r.dim] = r.matS1
        i += r.dim
    return rep_make(f, T, S, "+".join(r.name for r in reps))
