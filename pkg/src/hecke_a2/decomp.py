"""Exhaustive module analysis over small finite fields.

Every cyclic submodule is found by spinning every projective point of F^n
(all points at once, as a batch of row reductions), and the full submodule
lattice is the closure of the cyclic ones under sums.  Composition series,
structure tags, socle layers, isomorphism tests and identification against
the named modules are built on top of that.

Hard limits: dimension <= 6 and field order <= 9.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field as dc_field
from itertools import product
from typing import Optional

import numpy as np

from . import linalg as la
from .chartool import Structure
from .errors import (AmbiguousMatch, BadParams, IdentifyFailed, InputError, NotScalar,
                     TooLarge, ZeroVector)
from .gf import FieldSpec
from .repcore import Rep, central_scalars, rep_make
from .zoo import SimpleLabel, expected_irreducible, make_module

MAX_DIM = 6
MAX_FIELD = 9
MAX_SUBMODULES = 20000
ISO_SEARCH_LIMIT = 200000


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of F^n stored by its reduced row echelon basis."""

    basis: np.ndarray
    n: int

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def key(self) -> tuple:
        return (self.n, tuple(self.basis.ravel().tolist()))

    def __eq__(self, other):
        return isinstance(other, Subspace) and self.key == other.key

    def __hash__(self):
        return hash(self.key)

    def sort_key(self) -> tuple:
        return (self.dim, self.key[1])

    def __repr__(self):
        return f"Subspace(dim={self.dim}, basis={self.basis.tolist()})"


def check_bounds(rep: Rep):
    if rep.dim > MAX_DIM or rep.field.order > MAX_FIELD:
        raise TooLarge(f"exhaustive analysis needs dim <= {MAX_DIM} and |F| <= {MAX_FIELD}; "
                       f"got dim {rep.dim} over {rep.field!r}")


def projective_points(field: FieldSpec, n: int) -> np.ndarray:
    """One representative (leading coordinate 1) of every line in F^n."""
    q = field.order
    blocks = []
    for lead in range(n):
        tail = n - lead - 1
        rest = np.array(list(product(range(q), repeat=tail)), dtype=la.DTYPE).reshape(q ** tail, tail)
        blk = np.zeros((rest.shape[0], n), dtype=la.DTYPE)
        blk[:, lead] = 1
        blk[:, lead + 1:] = rest
        blocks.append(blk)
    return np.vstack(blocks)


def spin_batch(rep: Rep, vectors: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Cyclic submodules generated by each row of ``vectors``.

    Returns (bases, ranks): bases has shape (N, n, n) in RREF with the first
    ``rank`` rows spanning the submodule.
    """
    f, n = rep.field, rep.dim
    vectors = np.asarray(vectors, dtype=la.DTYPE).reshape(-1, n)
    k = np.zeros((vectors.shape[0], n, n), dtype=la.DTYPE)
    k[:, 0, :] = vectors
    k, rank = la.rref(f, k)
    tT, tS = rep.matT.T.copy(), rep.matS1.T.copy()
    active = np.nonzero(rank < n)[0]
    for _ in range(n):
        if not len(active):
            break
        ka = k[active]
        stacked = np.concatenate([ka, la.matmul(f, ka, tT), la.matmul(f, ka, tS)], axis=1)
        r, new_rank = la.rref(f, stacked)
        k[active] = r[:, :n, :]
        grew = new_rank > rank[active]
        rank[active] = new_rank
        # a span that did not grow is closed; a full one is the whole space
        active = active[grew & (new_rank < n)]
    return k, rank


def spin(rep: Rep, v) -> Subspace:
    v = np.asarray([rep.field(x).code for x in v] if not isinstance(v, np.ndarray) else v,
                   dtype=la.DTYPE)
    if not v.any():
        raise ZeroVector("cannot spin the zero vector")
    bases, ranks = spin_batch(rep, v[None, :])
    return Subspace(bases[0, : int(ranks[0])].copy(), rep.dim)


def subspace_sum(field: FieldSpec, a: Subspace, b: Subspace) -> Subspace:
    return Subspace(la.row_space(field, np.vstack([a.basis, b.basis])), a.n)


def contains(field: FieldSpec, big: Subspace, small: Subspace) -> bool:
    return subspace_sum(field, big, small).dim == big.dim


def is_invariant(rep: Rep, w: Subspace) -> bool:
    f = rep.field
    for m in (rep.matT, rep.matS1):
        img = la.matmul(f, w.basis, m.T.copy())
        if la.row_space(f, np.vstack([w.basis, img])).shape[0] != w.dim:
            return False
    return True


_LATTICE_CACHE: dict[tuple, tuple[Subspace, ...]] = {}


def cyclic_submodules(rep: Rep) -> list[Subspace]:
    """All proper nonzero cyclic submodules."""
    check_bounds(rep)
    n = rep.dim
    bases, ranks = spin_batch(rep, projective_points(rep.field, n))
    proper = ranks < n
    if not proper.any():
        return []
    b, r = bases[proper], ranks[proper]
    flat = np.concatenate([r[:, None], b.reshape(len(b), -1)], axis=1)
    uniq = np.unique(flat, axis=0)
    return [Subspace(u[1:].reshape(n, n)[: u[0]].copy(), n) for u in uniq]


def proper_submodules(rep: Rep) -> list[Subspace]:
    """Every proper nonzero submodule, sorted by (dim, canonical basis)."""
    key = rep.key()
    if key in _LATTICE_CACHE:
        return list(_LATTICE_CACHE[key])
    f, n = rep.field, rep.dim
    cyclic = cyclic_submodules(rep)
    found = set(cyclic)
    queue = list(cyclic)
    if cyclic:
        padded = np.zeros((len(cyclic), n, n), dtype=la.DTYPE)
        for i, c in enumerate(cyclic):
            padded[i, : c.dim] = c.basis
    while queue:
        x = queue.pop()
        stacked = np.concatenate(
            [np.broadcast_to(x.basis, (len(cyclic),) + x.basis.shape), padded], axis=1)
        r, ranks = la.rref(f, stacked)
        for i in np.nonzero((ranks > x.dim) & (ranks < n))[0]:
            s = Subspace(r[i, : ranks[i]].copy(), n)
            if s not in found:
                found.add(s)
                queue.append(s)
                if len(found) > MAX_SUBMODULES:
                    raise TooLarge(f"more than {MAX_SUBMODULES} submodules")
    out = tuple(sorted(found, key=Subspace.sort_key))
    if len(_LATTICE_CACHE) > 4096:
        _LATTICE_CACHE.clear()
    _LATTICE_CACHE[key] = out
    return list(out)


def split(rep: Rep, w: Subspace) -> tuple[Rep, Rep]:
    """(submodule, quotient) representations for an invariant subspace ``w``."""
    f = rep.field
    m = w.dim
    rows = la.complete_basis(f, w.basis)
    p = rows.T.copy()
    pinv = la.inverse(f, p)
    tn = la.matprod(f, pinv, rep.matT, p)
    sn = la.matprod(f, pinv, rep.matS1, p)
    if tn[m:, :m].any() or sn[m:, :m].any():
        raise InputError("subspace is not invariant")
    sub = rep_make(f, tn[:m, :m].copy(), sn[:m, :m].copy())
    quo = rep_make(f, tn[m:, m:].copy(), sn[m:, m:].copy())
    return sub, quo


def minimal_submodules(rep: Rep) -> list[Subspace]:
    subs = proper_submodules(rep)
    f = rep.field
    return [s for s in subs
            if not any(t.dim < s.dim and contains(f, s, t) for t in subs)]


def is_irreducible(rep: Rep) -> bool:
    return not proper_submodules(rep)


def complementary_pairs(rep: Rep) -> list[tuple[Subspace, Subspace]]:
    f, n = rep.field, rep.dim
    subs = proper_submodules(rep)
    out = []
    for i, a in enumerate(subs):
        for b in subs[i + 1:]:
            if a.dim + b.dim == n and subspace_sum(f, a, b).dim == n:
                out.append((a, b))
    return out


# --- isomorphism -------------------------------------------------------------

def intertwiners(a: Rep, b: Rep) -> np.ndarray:
    """Basis (rows, flattened row-major) of {X : X A = B X for T and S1}."""
    f = a.field
    n, m = b.dim, a.dim
    blocks = []
    for ma, mb in ((a.matT, b.matT), (a.matS1, b.matS1)):
        left = np.kron(np.eye(n, dtype=la.DTYPE), ma.T)
        right = np.kron(mb, np.eye(m, dtype=la.DTYPE))
        blocks.append(f.vsub(left, right))
    return la.nullspace(f, np.vstack(blocks))


def iso(a: Rep, b: Rep) -> Optional[np.ndarray]:
    """An invertible X with X A = B X (for T and S1), or None."""
    if a.field != b.field:
        raise InputError("representations over different fields")
    if a.dim != b.dim:
        return None
    f, n = a.field, a.dim
    basis = intertwiners(a, b)
    d = basis.shape[0]
    if d == 0:
        return None
    q = f.order
    if (q ** d - 1) // (q - 1) > ISO_SEARCH_LIMIT:
        raise TooLarge(f"intertwiner space of dimension {d} is too large to search")
    coeffs = projective_points(f, d)
    xs = la.matmul(f, coeffs, basis).reshape(-1, n, n)
    ranks = la.rank(f, xs)
    hit = np.nonzero(ranks == n)[0]
    if not len(hit):
        return None
    x = xs[hit[0]]
    assert np.array_equal(la.matmul(f, x, a.matT), la.matmul(f, b.matT, x))
    assert np.array_equal(la.matmul(f, x, a.matS1), la.matmul(f, b.matS1, x))
    return x


# --- identification ------------------------------------------------------------

def _trace(rep: Rep) -> int:
    f = rep.field
    acc = 0
    for i in range(rep.dim):
        acc = f.add(acc, int(rep.matS1[i, i]))
    return acc


def candidate_labels(rep: Rep) -> list[SimpleLabel]:
    """Simple labels whose parameters are forced by the central character of ``rep``."""
    try:
        z, c1, c2 = central_scalars(rep)
    except NotScalar:
        return []
    specs: list[tuple[str, tuple]] = []
    if rep.dim == 1:
        y = rep.field(int(rep.matT[0, 0]))
        specs = [("M1_0", (y,)), ("M1_-1", (y,))]
    elif rep.dim == 2:
        specs = [("M2", (c1,)), ("M2~", (c1,))]
    elif rep.dim == 3:
        if c1 and c2:
            t = c2 / c1
            specs = [("M3", (z, t)), ("M3~", (z, t)), ("N3", (z, c1)), ("N3~", (z, c1))]
        elif not c1 and not c2:
            specs = [("P3", (z,)), ("P3~", (z,))]
    elif rep.dim == 6:
        if c1 and not c2:
            specs = [("L6", (z, c1))]
        elif c2 and not c1:
            specs = [("L6~", (z, c2))]
        elif c1 and c2:
            specs = [("K6", (z, c1, c2))]
    out = []
    for kind, params in specs:
        try:
            lab = SimpleLabel(kind, params)
        except BadParams:
            continue
        if expected_irreducible(lab).irreducible:
            out.append(lab)
    return out


def matching_labels(rep: Rep) -> list[SimpleLabel]:
    """Every candidate label isomorphic to ``rep``."""
    cs = central_scalars(rep)
    tr = _trace(rep)
    out = []
    for lab in candidate_labels(rep):
        model = make_module(lab)
        if central_scalars(model) != cs or _trace(model) != tr:
            continue
        if iso(model, rep) is not None:
            out.append(lab)
    return out


def identify(rep: Rep) -> SimpleLabel:
    try:
        found = matching_labels(rep)
    except NotScalar as exc:
        raise IdentifyFailed(f"no central character: {exc}") from exc
    if not found:
        raise IdentifyFailed(f"no named module matches this {rep.dim}-dimensional simple")
    if len(found) > 1:
        raise AmbiguousMatch(", ".join(map(str, found)))
    return found[0]


# --- composition series --------------------------------------------------------

@dataclass
class DecompReport:
    series: list[SimpleLabel]
    structure: Structure
    lattice_counts: dict[int, int]
    decomposable: bool
    sub: Optional[SimpleLabel] = None
    quotient: Optional[SimpleLabel] = None
    socle_layers: list[list[SimpleLabel]] = dc_field(default_factory=list)

    @property
    def factors(self) -> list[tuple[SimpleLabel, int]]:
        counts = Counter(self.series)
        return sorted(counts.items(), key=lambda kv: kv[0].sort_key())

    def multiset(self) -> Counter:
        return Counter(self.series)

    @property
    def length(self) -> int:
        return len(self.series)

    def to_json(self) -> dict:
        return {
            "factors": [{**lab.to_json(), "multiplicity": m} for lab, m in self.factors],
            "series": [str(x) for x in self.series],
            "structure": self.structure.value,
            "length": self.length,
            "decomposable": self.decomposable,
            "lattice_counts": {str(k): v for k, v in sorted(self.lattice_counts.items())},
            "sub": self.sub.to_json() if self.sub else None,
            "quotient": self.quotient.to_json() if self.quotient else None,
            "socle_layers": [[str(x) for x in layer] for layer in self.socle_layers],
        }


def series_factors(rep: Rep, reverse_ties: bool = False) -> list[Rep]:
    """Composition factors bottom-up, peeling off a minimal submodule each time."""
    out = []
    cur = rep
    while True:
        subs = proper_submodules(cur)
        if not subs:
            out.append(cur)
            return out
        dmin = subs[0].dim
        smallest = [s for s in subs if s.dim == dmin]
        w = smallest[-1] if reverse_ties else smallest[0]
        sub, cur = split(cur, w)
        out.append(sub)


def socle(rep: Rep) -> Subspace:
    f = rep.field
    mins = minimal_submodules(rep)
    if not mins:
        return Subspace(np.eye(rep.dim, dtype=la.DTYPE), rep.dim)
    acc = mins[0]
    for m in mins[1:]:
        acc = subspace_sum(f, acc, m)
    return acc


def socle_layers(rep: Rep) -> list[list[SimpleLabel]]:
    layers = []
    cur = rep
    while True:
        s = socle(cur)
        if s.dim == cur.dim:
            layers.append(sorted((identify(x) for x in series_factors(cur)), key=SimpleLabel.sort_key))
            return layers
        sub, cur = split(cur, s)
        layers.append(sorted((identify(x) for x in series_factors(sub)), key=SimpleLabel.sort_key))


def composition_series(rep: Rep, reverse_ties: bool = False, with_socle: bool = False) -> DecompReport:
    check_bounds(rep)
    subs = proper_submodules(rep)
    series = [identify(x) for x in series_factors(rep, reverse_ties)]
    pairs = complementary_pairs(rep)
    length = len(series)
    sub = quo = None
    if length == 1:
        structure = Structure.IRREDUCIBLE
    elif length == 2 and len(subs) == 1:
        structure = Structure.UNISERIAL2
        s, q = split(rep, subs[0])
        sub, quo = identify(s), identify(q)
    elif length == 2 and pairs:
        structure = Structure.DIRECTSUM2
    elif length == 4 and not pairs:
        structure = Structure.LENGTH4
    else:
        structure = Structure.OTHER
    counts = Counter(s.dim for s in subs)
    report = DecompReport(series, structure, dict(counts), bool(pairs), sub, quo)
    if with_socle:
        report.socle_layers = socle_layers(rep)
    return report
