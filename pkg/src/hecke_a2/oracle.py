"""Characteristic-zero check of the lattice matrices and the central words.

Builds the 6-dimensional standard module over the rationals from the same
q(w, y) table and matrix layout used for the reduction, with a generic
rational q, and verifies exactly (sympy rationals):

* the defining relations with generic q,
* that e1 is an eigenvector of the Bernstein elements Y1, Y2, Y3 (computed
  with genuine matrix inverses) with eigenvalues y1, y2, y3,
* the basis identities T Phi = Phi_{s2 s1}, T^2 Phi = Phi_{s1 s2},
  Phi_{s1} = q(s1) S1 Phi, T Phi_{s1} = Phi_{s2}, T^2 Phi_{s1} = Phi_{s1 s2 s1},
* that the word combinations in ``CENTRAL_WORDS`` equal
  q*(y1+y2+y3), q*(y1y2+y1y3+y2y3) and y1y2y3 times the identity, and agree
  with the same quantities computed from the Y matrices.
"""
from __future__ import annotations

import random
from fractions import Fraction

import sympy as sp

from .repcore import CENTRAL_WORDS, specialize


def q_table(q, y1, y2, y3, branch: str) -> dict[str, object]:
    """The q(w, y) numbers; ``branch`` is 'y2inv' (y2^-1 integral) or 'y2'."""
    if branch == "y2inv":
        s1, s2, s121 = sp.Integer(1), y2, y1 * y2 / q
    elif branch == "y2":
        s1, s2, s121 = 1 / y2, sp.Integer(1), y1 / q
    else:
        raise ValueError(branch)
    return {"1": sp.Integer(1), "s1": s1, "s2": s2, "s1s2": y1 * y2 / q,
            "s2s1": y1 / q, "s1s2s1": s121}


def lattice_matrices(q, y1, y2, y3, branch: str = "y2inv"):
    """(T, S1) in the basis (Phi, T Phi, T^2 Phi, Phi_s1, T Phi_s1, T^2 Phi_s1)."""
    qt = q_table(q, y1, y2, y3, branch)
    z = y1 * y2 * y3
    a = 1 / qt["s1"]
    b = qt["s2s1"] / qt["s1s2s1"]
    c = qt["s2"] / qt["s1s2"]
    a_, b_, c_ = q / a, q / b, q / c
    S1 = sp.Matrix([
        [0, 0, 0, a_, 0, 0],
        [0, 0, 0, 0, 0, b_],
        [0, 0, q - 1, 0, c, 0],
        [a, 0, 0, q - 1, 0, 0],
        [0, 0, c_, 0, 0, 0],
        [0, b, 0, 0, 0, q - 1],
    ])
    T = sp.Matrix([
        [0, 0, z, 0, 0, 0],
        [1, 0, 0, 0, 0, 0],
        [0, 1, 0, 0, 0, 0],
        [0, 0, 0, 0, 0, z],
        [0, 0, 0, 1, 0, 0],
        [0, 0, 0, 0, 1, 0],
    ])
    return T, S1


def _eval(terms, q, gens):
    acc = sp.zeros(6, 6)
    for c, w in specialize(terms, q):
        m = sp.eye(6)
        for letter in w:
            m = m * gens[letter]
        acc += c * m
    return acc


def check_instance(q, y1, y2, y3, branch: str = "y2inv") -> dict[str, bool]:
    q, y1, y2, y3 = (sp.Rational(x) if not isinstance(x, sp.Basic) else x
                     for x in (q, y1, y2, y3))
    T, S1 = lattice_matrices(q, y1, y2, y3, branch)
    Ti = T.inv()
    S2 = Ti * S1 * T
    I = sp.eye(6)
    gens = {"T": T, "Tinv": Ti, "S1": S1, "S2": S2}
    res: dict[str, bool] = {}
    res["quadratic"] = (S1 + I) * (S1 - q * I) == sp.zeros(6, 6)
    res["braid"] = S1 * S2 * S1 == S2 * S1 * S2
    res["T3-central"] = T ** 3 * S1 == S1 * T ** 3

    S1i, S2i = S1.inv(), S2.inv()
    Y1 = q * S1i * S2i * T
    Y2 = S2i * T * S1
    Y3 = T * S1 * S2 / q
    e1 = sp.Matrix([1, 0, 0, 0, 0, 0])
    res["eigen-Y"] = all(Y * e1 == y * e1 for Y, y in ((Y1, y1), (Y2, y2), (Y3, y3)))
    res["Y-commute"] = Y1 * Y2 == Y2 * Y1 and Y2 * Y3 == Y3 * Y2

    qt = q_table(q, y1, y2, y3, branch)
    e4 = sp.Matrix([0, 0, 0, 1, 0, 0])
    res["basis"] = (
        T * e1 == qt["s2s1"] * S2 * S1 * e1
        and T ** 2 * e1 == qt["s1s2"] * S1 * S2 * e1
        and e4 == qt["s1"] * S1 * e1
        and T * e4 == qt["s2"] * S2 * e1
        and T ** 2 * e4 == qt["s1s2s1"] * S1 * S2 * S1 * e1
    )

    sigma1 = y1 + y2 + y3
    sigma2 = y1 * y2 + y1 * y3 + y2 * y3
    sigma3 = y1 * y2 * y3
    w3 = _eval(CENTRAL_WORDS["sigma3"], q, gens)
    w1 = _eval(CENTRAL_WORDS["q_sigma1"], q, gens)
    w2 = _eval(CENTRAL_WORDS["q_sigma2"], q, gens)
    res["sigma3-word"] = w3 == sigma3 * I and Y1 * Y2 * Y3 == w3
    res["q_sigma1-word"] = w1 == q * sigma1 * I and q * (Y1 + Y2 + Y3) == w1
    res["q_sigma2-word"] = (w2 == q * sigma2 * I
                            and q * (Y1 * Y2 + Y1 * Y3 + Y2 * Y3) == w2)
    return res


def random_instance(rng: random.Random) -> tuple[Fraction, Fraction, Fraction, Fraction, str]:
    def nonzero():
        num = rng.choice([-1, 1]) * rng.randint(1, 30)
        return Fraction(num, rng.randint(1, 30))
    q = Fraction(1)
    while q == 1:
        q = Fraction(rng.randint(2, 25), rng.choice([1, 1, 1, 2, 3]))
    return q, nonzero(), nonzero(), nonzero(), rng.choice(["y2inv", "y2"])


def run_oracle(n: int = 20, seed: int = 0) -> list[tuple[tuple, dict[str, bool]]]:
    rng = random.Random(seed)
    out = [((7, 14, 2, Fraction(3, 7), "y2inv"),
            check_instance(7, 14, 2, Fraction(3, 7), "y2inv"))]
    while len(out) < n:
        inst = random_instance(rng)
        out.append((inst, check_instance(*inst)))
    return out
