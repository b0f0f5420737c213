import numpy as np
import pytest

from hecke_a2 import linalg as la
from hecke_a2.chartool import central_params, is_ordinary, make_character
from hecke_a2.decomp import composition_series, iso, proper_submodules, split
from hecke_a2.errors import NotOrdinary
from hecke_a2.gf import field_make
from hecke_a2.repcore import central_scalars
from hecke_a2.stdred import build_reduced_standard, lattice_entries
from hecke_a2.valnum import PConfig, VUnit
from hecke_a2.zoo import label, make_module

F5 = field_make(5)


def chi(e, vals, units):
    return make_character(PConfig(F5, e), vals, units)


def vu(v, u):
    return VUnit(v, F5(u))


def test_entries_all_units():
    c = chi(1, (0, 0, 0), (1, 2, 3))
    ent = lattice_entries(c)
    assert ent.a == vu(0, 1)
    assert ent.b == vu(0, F5(2).inv().code)
    assert ent.c == vu(1, 1)
    assert (ent.a_, ent.b_, ent.c_) == (vu(1, 1), vu(1, 2), vu(0, 1))


def test_entries_case_one():
    ent = lattice_entries(chi(2, (1, 1, -2), (1, 2, 3)))
    assert ent.b == vu(0, 1)


def _entries_from_table(c):
    # independent recomputation from the defining rows of q(w, y)
    q = c.cfg.q
    y1, y2 = c.y1, c.y2
    one = VUnit(0, c.cfg.field.one)
    if y2.v <= 0:
        t = {"s1": one, "s2": y2, "s2s1": q.inv() * y1, "s1s2": q.inv() * y1 * y2,
             "s1s2s1": q.inv() * y1 * y2}
    else:
        t = {"s1": y2.inv(), "s2": one, "s2s1": q.inv() * y1, "s1s2": q.inv() * y1 * y2,
             "s1s2s1": q.inv() * y1}
    return t["s1"].inv(), t["s2s1"] / t["s1s2s1"], t["s2"] / t["s1s2"]


def test_entries_against_table():
    from hecke_a2.sweeps import integral_characters
    for e in (1, 2, 3):
        for c in integral_characters(field_make(3), e):
            if not is_ordinary(c):
                continue
            ent = lattice_entries(c)
            assert (ent.a, ent.b, ent.c) == _entries_from_table(c)
            q = c.cfg.q
            assert ent.a * ent.a_ == q and ent.b * ent.b_ == q and ent.c * ent.c_ == q


def test_not_ordinary():
    with pytest.raises(NotOrdinary):
        build_reduced_standard(chi(2, (-2, 1, 1), (1, 1, 1)))


def test_t_matrix_shape():
    c = chi(1, (1, 0, -1), (2, 2, 2))
    rep = build_reduced_standard(c)
    z = central_params(c).z.code
    assert rep.matT[0, 2] == z and rep.matT[3, 5] == z
    assert rep.matT[1, 0] == rep.matT[2, 1] == rep.matT[4, 3] == rep.matT[5, 4] == 1
    assert la.is_invertible(F5, rep.matT)


def test_case_nine_witness():
    c = chi(1, (1, 0, -1), (2, 2, 2))
    rep = build_reduced_standard(c)
    assert central_scalars(rep) == (F5(3), F5(2), F5(4))
    rpt = composition_series(rep, with_socle=True)
    y = F5(2)
    assert rpt.multiset() == {label("M1_0", y): 1, label("M1_-1", y): 1,
                              label("M2", y): 1, label("M2~", y): 1}
    assert rpt.structure.value == "Length4" and not rpt.decomposable
    assert rpt.lattice_counts == {1: 1, 3: 2, 5: 1}
    assert rpt.socle_layers == [[label("M1_0", y)], [label("M2", y), label("M2~", y)],
                                [label("M1_-1", y)]]


def test_case_six_submodule():
    c = chi(1, (0, 0, 0), (1, 2, 4))
    rep = build_reduced_standard(c)
    subs = proper_submodules(rep)
    assert [s.dim for s in subs] == [3]
    sub, quo = split(rep, subs[0])
    z = F5(3)
    assert iso(sub, make_module(label("P3~", z))) is not None
    assert iso(quo, make_module(label("P3", z))) is not None


def test_case_seven_direct_sum():
    c = chi(3, (1, 1, -2), (1, 2, 3))
    subs = [s for s in proper_submodules(build_reduced_standard(c)) if s.dim == 3]
    assert len(subs) >= 2
    stacked = np.vstack([subs[0].basis, subs[1].basis])
    assert la.rank(F5, stacked) == 6
