import numpy as np
import pytest

from hecke_a2 import linalg as la
from hecke_a2.chartool import Structure
from hecke_a2.decomp import (candidate_labels, composition_series, identify, is_invariant, iso,
                             proper_submodules, projective_points, spin)
from hecke_a2.errors import IdentifyFailed, TooLarge, ZeroVector
from hecke_a2.gf import field_make
from hecke_a2.repcore import central_scalars, direct_sum, rep_make
from hecke_a2.zoo import all_labels, label, make_module

F3 = field_make(3)
F5 = field_make(5)


def test_projective_points_count():
    for f, n in ((F3, 3), (F5, 2), (field_make(2), 6)):
        pts = projective_points(f, n)
        assert len(pts) == (f.order ** n - 1) // (f.order - 1)
        assert len({tuple(r) for r in pts}) == len(pts)


def test_spin_examples():
    assert spin(make_module(label("M1_0", F5(2))), [1]).dim == 1
    y = F5(2)
    rep = make_module(label("M3", y ** 3, y))
    # M1(0,y) eigenvector: S1 v = 0 and T v = y v
    v = [y * y, y, F5(1)]
    w = spin(rep, v)
    assert w.dim == 1 and is_invariant(rep, w)
    with pytest.raises(ZeroVector):
        spin(rep, [0, 0, 0])


def test_spin_is_closed():
    rep = make_module(label("K6", F3(1), F3(1), F3(1)))
    rng = np.random.default_rng(0)
    for _ in range(10):
        v = rng.integers(0, 3, size=6)
        if v.any():
            w = spin(rep, v)
            assert is_invariant(rep, w)


def test_p3_irreducible():
    assert proper_submodules(make_module(label("P3", F5(2)))) == []


def test_too_large():
    f = field_make(11)
    rep = make_module(label("M1_0", f(3)))
    with pytest.raises(TooLarge):
        composition_series(rep)


def test_iso_examples():
    y = F5(3)
    x = iso(make_module(label("M2", y)), make_module(label("M2", y)))
    assert x is not None and la.is_scalar(x)
    assert iso(make_module(label("M2", y)), make_module(label("M2~", y))) is None
    assert iso(make_module(label("P3", y)), make_module(label("P3~", y))) is None


def test_iso_after_change_of_basis():
    rep = make_module(label("L6", F5(2), F5(3)))
    p = la.asmat(F5, [[1, 2, 0, 0, 0, 1], [0, 1, 0, 0, 3, 0], [0, 0, 1, 4, 0, 0],
                      [0, 0, 0, 1, 0, 2], [0, 0, 0, 0, 1, 0], [0, 0, 0, 0, 0, 1]])
    pinv = la.inverse(F5, p)
    other = rep_make(F5, la.matprod(F5, pinv, rep.matT, p), la.matprod(F5, pinv, rep.matS1, p))
    assert identify(other) == label("L6", F5(2), F5(3))


def test_identify_examples():
    assert identify(rep_make(F5, [[2]], [[0]])) == label("M1_0", F5(2))
    z = F5(4)
    assert identify(make_module(label("P3", z))) == label("P3", z)
    assert identify(make_module(label("P3~", z))) == label("P3~", z)
    tr = lambda r: sum(int(r.matS1[i, i]) for i in range(3)) % 5
    assert tr(make_module(label("P3", z))) == 4 and tr(make_module(label("P3~", z))) == 3


def test_identify_rejects_reducible():
    rep = direct_sum(make_module(label("P3", F5(1))), make_module(label("P3~", F5(1))))
    with pytest.raises(IdentifyFailed):
        identify(rep)


@pytest.mark.parametrize("f", [field_make(2), F3, F5], ids=repr)
def test_candidates_cover_brute_force(f):
    """Every simple label sharing (dim, central triple, S1 trace) is a candidate."""
    index = {}
    for lab in all_labels(f, simple_only=True):
        rep = make_module(lab)
        index.setdefault((lab.dim, central_scalars(rep)), set()).add(lab)
    for lab in all_labels(f, simple_only=True):
        rep = make_module(lab)
        same = index[(lab.dim, central_scalars(rep))]
        if lab.dim > 1:
            assert same <= set(candidate_labels(rep))
        assert identify(rep) == lab


def test_tie_order_invariance():
    from hecke_a2.stdred import build_reduced_standard
    from hecke_a2.sweeps import integral_characters
    from hecke_a2.chartool import classify
    for e in (1, 2, 3):
        for c in list(integral_characters(F3, e))[::7]:
            _, rep_chi, _ = classify(c)
            rep = build_reduced_standard(rep_chi)
            a = composition_series(rep).multiset()
            b = composition_series(rep, reverse_ties=True).multiset()
            assert a == b
            assert sum(lab.dim * m for lab, m in a.items()) == 6


def test_uniserial_m3():
    y = F5(4)
    rpt = composition_series(make_module(label("M3", y ** 3, y)))
    assert rpt.structure is Structure.UNISERIAL2
    assert rpt.multiset() == {label("M1_0", y): 1, label("M2", y): 1}
    assert rpt.sub == label("M1_0", y)


def test_k6_irreducible():
    rpt = composition_series(make_module(label("K6", F5(1), F5(2), F5(3))))
    assert rpt.structure is Structure.IRREDUCIBLE and rpt.length == 1


def test_direct_sum_tag():
    rep = direct_sum(make_module(label("P3", F5(1))), make_module(label("P3~", F5(1))))
    rpt = composition_series(rep)
    assert rpt.structure is Structure.DIRECTSUM2 and rpt.decomposable
