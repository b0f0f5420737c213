"""Reduction mod p of the canonical lattice of an ordinary integral character.

The lattice has basis (Phi, T Phi, T^2 Phi, Phi_s1, T Phi_s1, T^2 Phi_s1) with
Phi_w = q(w, y) T_w Phi.  In that basis T is the shift with T^3 = z on both
blocks, and S1 has entries built from a, b, c, a', b', c' and q - 1 on the
diagonal.  Reducing mod p sends q - 1 to -1.
"""
from __future__ import annotations

from dataclasses import dataclass

from . import linalg as la
from .chartool import Character, S3Elem, _require_ordinary, q_factor
from .errors import NotIntegral
from .repcore import Rep, rep_make
from .valnum import VUnit


@dataclass(frozen=True)
class LatticeEntries:
    a: VUnit
    b: VUnit
    c: VUnit
    a_: VUnit
    b_: VUnit
    c_: VUnit
    z: VUnit


def lattice_entries(chi: Character) -> LatticeEntries:
    _require_ordinary(chi)
    q = chi.cfg.q
    qf = {w: q_factor(w, chi) for w in S3Elem}
    a = qf[S3Elem.S1].inv()
    b = qf[S3Elem.S2S1] / qf[S3Elem.S1S2S1]
    c = qf[S3Elem.S2] / qf[S3Elem.S1S2]
    ent = LatticeEntries(a, b, c, q / a, q / b, q / c, chi.y1 * chi.y2 * chi.y3)
    for name in ("a", "b", "c", "a_", "b_", "c_", "z"):
        if getattr(ent, name).v < 0:
            raise NotIntegral(f"lattice entry {name} has negative valuation")
    return ent


def build_reduced_standard(chi: Character) -> Rep:
    ent = lattice_entries(chi)
    f = chi.cfg.field
    a, b, c, a_, b_, c_, z = (x.reduce() for x in
                              (ent.a, ent.b, ent.c, ent.a_, ent.b_, ent.c_, ent.z))
    m1 = -f.one
    o = f.zero
    S1 = [
        [o, o, o, a_, o, o],
        [o, o, o, o, o, b_],
        [o, o, m1, o, c, o],
        [a, o, o, m1, o, o],
        [o, o, c_, o, o, o],
        [o, b, o, o, o, m1],
    ]
    T = [
        [o, o, z, o, o, o],
        [f.one, o, o, o, o, o],
        [o, f.one, o, o, o, o],
        [o, o, o, o, o, z],
        [o, o, o, f.one, o, o],
        [o, o, o, o, f.one, o],
    ]
    return rep_make(f, la.asmat(f, T), la.asmat(f, S1), name=f"L({chi!r})")
