import pytest

from hecke_a2.decomp import composition_series, is_irreducible, proper_submodules, split, identify
from hecke_a2.errors import BadParams
from hecke_a2.gf import field_make
from hecke_a2.repcore import central_scalars
from hecke_a2.zoo import KINDS, SimpleLabel, all_labels, expected_irreducible, label, make_module

F5 = field_make(5)
F9 = field_make(3, 2, [1, 0, 1])


def test_m1_matrices():
    rep = make_module(label("M1_0", F5(3)))
    assert rep.matT.tolist() == [[3]] and rep.matS1.tolist() == [[0]]
    assert make_module(label("M1_-1", F5(3))).matS1.tolist() == [[4]]


def test_m2_matrices():
    rep = make_module(label("M2", F5(2)))
    # T^2 w = -4 w - 2 T w in the basis (w, Tw)
    assert rep.matT.tolist() == [[0, 1], [1, 3]]
    assert rep.matS1.tolist() == [[4, 0], [0, 0]]


def test_k6_entries():
    z, y, y_ = F5(1), F5(2), F5(3)
    rep = make_module(label("K6", z, y, y_))
    # columns are images: S1(Tv) = (y/y') T^2 w, S1(Tw) = (y'/z) T^2 v
    assert rep.matS1[5, 1] == (y / y_).code
    assert rep.matS1[2, 4] == (y_ / z).code


def test_bad_params():
    with pytest.raises(BadParams):
        label("M3", F5(0), F5(1))
    with pytest.raises(BadParams):
        SimpleLabel("Q9", (F5(1),))
    with pytest.raises(BadParams):
        SimpleLabel("M3", (F5(1),))


def test_label_json_and_str():
    lab = label("K6", F9.gen(), F9(1), F9(2))
    assert SimpleLabel.from_json(F9, lab.to_json()) == lab
    assert str(label("M1_-1", F5(2))) == "M1(-1,2)"


def test_expectations():
    y = F5(2)
    exp = expected_irreducible(label("M3", y ** 3, y))
    assert not exp.irreducible
    assert (exp.sub, exp.quotient) == (label("M1_0", y), label("M2", y))
    exp = expected_irreducible(label("N3~", y ** 3, y))
    assert (exp.sub, exp.quotient) == (label("M2~", y), label("M1_0", y))
    assert not expected_irreducible(label("K6", F5(1), y, y * y)).irreducible
    assert expected_irreducible(label("P3", F5(4))).irreducible


@pytest.mark.parametrize("kind", list(KINDS))
def test_central_scalars_by_kind(kind):
    for lab in all_labels(F5, kinds=[kind]):
        z, c1, c2 = central_scalars(make_module(lab))
        p = dict(zip(KINDS[kind][1], lab.params))
        if kind == "K6":
            assert (z, c1, c2) == (p["z"], p["y"], p["y'"])
        elif kind == "L6":
            assert (z, c1, c2) == (p["z"], p["y"], F5(0))
        elif kind == "L6~":
            assert (z, c1, c2) == (p["z"], F5(0), p["y"])
        elif kind in ("P3", "P3~"):
            assert (z, c1, c2) == (p["z"], F5(0), F5(0))
        elif kind in ("M3", "M3~"):
            # determined by z and y: y' / y recovers the parameter
            assert z == p["z"] and c2 / c1 == p["y"]
        elif kind in ("N3", "N3~"):
            assert (z, c1, c2) == (p["z"], p["y"], p["y"] ** 2)
        else:
            y = p["y"]
            assert (z, c1, c2) == (y ** 3, y, y * y)


def test_m3_reducible_socle():
    y = F5(2)
    rep = make_module(label("M3", y ** 3, y))
    subs = proper_submodules(rep)
    assert [s.dim for s in subs] == [1]
    sub, quo = split(rep, subs[0])
    assert identify(sub) == label("M1_0", y) and identify(quo) == label("M2", y)


def test_n3_socle_is_m1_minus_one():
    y = F5(3)
    rep = make_module(label("N3", y ** 3, y))
    rpt = composition_series(rep)
    assert (rpt.sub, rpt.quotient) == (label("M1_-1", y), label("M2", y))


def test_f9_three_dimensional():
    for lab in all_labels(F9, kinds=["M3", "M3~", "N3", "N3~", "P3", "P3~"]):
        assert is_irreducible(make_module(lab)) == expected_irreducible(lab).irreducible


def test_f9_six_dimensional_spot_checks():
    x = F9.gen()
    reducible = label("K6", F9(1), x, x * x)
    simple = label("L6", x, F9(2))
    assert not is_irreducible(make_module(reducible))
    assert identify(make_module(simple)) == simple
