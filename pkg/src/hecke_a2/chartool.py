"""Characters of the Bernstein torus and their classification.

A character is the triple (y1, y2, y3) of its values on Y1, Y2, Y3, each a
:class:`VUnit`.  This module decides integrality, moves characters around
their S3 orbit, picks ordinary representatives, computes the q(w, y) table,
matches the nine reduction cases and predicts the composition factors of the
reduced standard module.

S3 acts on coordinates: s1 swaps (y1, y2), s2 swaps (y2, y3), and a word acts
by its rightmost letter first.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Optional

from .errors import InconsistentParams, InputError, NoCaseMatched, NotIntegral, NotOrdinary
from .gf import FFElem
from .valnum import PConfig, VUnit
from .zoo import SimpleLabel, label


class S3Elem(enum.Enum):
    ONE = ()
    S1 = ("s1",)
    S2 = ("s2",)
    S1S2 = ("s1", "s2")
    S2S1 = ("s2", "s1")
    S1S2S1 = ("s1", "s2", "s1")

    @property
    def length(self) -> int:
        return len(self.value)

    def __str__(self):
        return "".join(self.value) or "1"

    @classmethod
    def parse(cls, s: str) -> "S3Elem":
        for w in cls:
            if str(w) == s:
                return w
        raise InputError(f"unknown S3 element {s!r}")

    def __mul__(self, other: "S3Elem") -> "S3Elem":
        perm = _perm(self.value + other.value)
        return next(w for w in S3Elem if _perm(w.value) == perm)


S3_ORDER = list(S3Elem)


def _perm(word: tuple[str, ...]) -> tuple[int, int, int]:
    """Index map pi with (w.chi)_i = chi_{pi(i)}."""
    idx = [0, 1, 2]
    for g in reversed(word):
        # applying g to a triple whose entries are chi_{idx[i]}
        if g == "s1":
            idx[0], idx[1] = idx[1], idx[0]
        else:
            idx[1], idx[2] = idx[2], idx[1]
    return tuple(idx)


class Structure(str, enum.Enum):
    IRREDUCIBLE = "Irreducible"
    UNISERIAL2 = "Uniserial2"
    DIRECTSUM2 = "DirectSum2"
    LENGTH4 = "Length4"
    OTHER = "Other"


CASE_STRUCTURE = {1: Structure.IRREDUCIBLE, 2: Structure.IRREDUCIBLE, 3: Structure.IRREDUCIBLE,
                  4: Structure.UNISERIAL2, 5: Structure.UNISERIAL2, 6: Structure.UNISERIAL2,
                  7: Structure.DIRECTSUM2, 8: Structure.DIRECTSUM2, 9: Structure.LENGTH4}


@dataclass(frozen=True)
class CaseLabel:
    case: int
    structure: Structure

    @classmethod
    def of(cls, case: int) -> "CaseLabel":
        return cls(case, CASE_STRUCTURE[case])


@dataclass(frozen=True)
class Character:
    cfg: PConfig
    y1: VUnit
    y2: VUnit
    y3: VUnit

    @property
    def ys(self) -> tuple[VUnit, VUnit, VUnit]:
        return (self.y1, self.y2, self.y3)

    @property
    def vals(self) -> tuple[int, int, int]:
        return tuple(y.v for y in self.ys)

    @property
    def units(self) -> tuple[FFElem, FFElem, FFElem]:
        return tuple(y.u for y in self.ys)

    @property
    def e(self) -> int:
        return self.cfg.e

    def act(self, w: S3Elem) -> "Character":
        pi = _perm(w.value)
        ys = self.ys
        return Character(self.cfg, ys[pi[0]], ys[pi[1]], ys[pi[2]])

    def __repr__(self):
        return f"Character(e={self.e}, y={self.ys})"

    def to_json(self) -> dict:
        return {"e": self.e, "y": [y.to_json() for y in self.ys]}

    @classmethod
    def from_json(cls, field, data: dict) -> "Character":
        cfg = PConfig(field, int(data["e"]))
        ys = data["y"]
        if len(ys) != 3:
            raise InputError("a character has exactly three values")
        return cls(cfg, *(VUnit.from_json(field, y) for y in ys))


def make_character(cfg: PConfig, vals, units) -> Character:
    return Character(cfg, *(VUnit(int(v), cfg.field(u)) for v, u in zip(vals, units)))


def s3_act(w: S3Elem, chi: Character) -> Character:
    return chi.act(w)


def is_integral(chi: Character) -> bool:
    """(y1y2y3)^{+-1}, q(yiyj)^{+-1}, q yi^{+-1} all integral, in valuations."""
    v, e = chi.vals, chi.e
    if sum(v) != 0:
        return False
    if any(abs(x) > e for x in v):
        return False
    return all(abs(v[i] + v[j]) <= e for i in range(3) for j in range(i + 1, 3))


def is_ordinary(chi: Character) -> bool:
    return chi.y1.v >= 0 and chi.y3.v <= 0


def ordinarize(chi: Character) -> tuple[S3Elem, Character]:
    """Shortest w (first in enumeration order) with w.chi ordinary."""
    if not is_integral(chi):
        raise NotIntegral(repr(chi))
    for w in S3_ORDER:
        c = chi.act(w)
        if is_ordinary(c):
            return w, c
    raise AssertionError("unreachable: integral characters have an ordinary conjugate")


def _require_ordinary(chi: Character):
    if not is_integral(chi):
        raise NotIntegral(repr(chi))
    if not is_ordinary(chi):
        raise NotOrdinary(repr(chi))


def q_factor(w: S3Elem, chi: Character) -> VUnit:
    """The rescaling q(w, y); when val(y2) = 0 the 'y2^-1 integral' rows are used."""
    _require_ordinary(chi)
    q = chi.cfg.q
    one = VUnit(0, chi.cfg.field.one)
    y1, y2 = chi.y1, chi.y2
    y2inv_branch = y2.v <= 0
    if w is S3Elem.ONE:
        return one
    if w is S3Elem.S1:
        return one if y2inv_branch else y2.inv()
    if w is S3Elem.S2:
        return y2 if y2inv_branch else one
    if w is S3Elem.S1S2:
        return q.inv() * y1 * y2
    if w is S3Elem.S2S1:
        return q.inv() * y1
    return q.inv() * y1 * y2 if y2inv_branch else q.inv() * y1


def matching_cases(chi: Character) -> list[int]:
    """All case numbers whose hypotheses hold for an ordinary integral character."""
    if not (is_integral(chi) and is_ordinary(chi)):
        return []
    e = chi.e
    v1, v2, v3 = chi.vals
    q = chi.cfg.q
    y1, y2, y3 = chi.ys
    out = []
    if 0 < v2 < e and v3 == -e:
        out.append(1)
    if -e < v2 < 0 and v1 == e:
        out.append(2)
    if (v1, v2, v3) == (e, 0, -e):
        c32 = (q * y3).congruent(y2)
        c21 = (q * y2).congruent(y1)
        out.append({(False, False): 3, (False, True): 4,
                    (True, False): 5, (True, True): 9}[(c32, c21)])
    if (v1, v2, v3) == (0, 0, 0):
        out.append(6)
    if 0 < v2 <= -v3 < e:
        out.append(7)
    if -e < -v1 <= v2 < 0:
        out.append(8)
    return sorted(out)


def classify(chi: Character) -> tuple[CaseLabel, Character, S3Elem]:
    """First orbit member (enumeration order) that is ordinary and matches a case."""
    if not is_integral(chi):
        raise NotIntegral(repr(chi))
    for w in S3_ORDER:
        c = chi.act(w)
        cases = matching_cases(c)
        if cases:
            return CaseLabel.of(cases[0]), c, w
    raise NoCaseMatched(repr(chi))


def classify_all(chi: Character) -> list[tuple[CaseLabel, Character, S3Elem]]:
    """Every (case, member, w) over the orbit; used by ``--all-cases``."""
    if not is_integral(chi):
        raise NotIntegral(repr(chi))
    out = []
    for w in S3_ORDER:
        c = chi.act(w)
        out.extend((CaseLabel.of(n), c, w) for n in matching_cases(c))
    return out


@dataclass(frozen=True)
class CentralParams:
    z: FFElem
    y: FFElem
    y_: FFElem

    def __post_init__(self):
        if not self.z:
            raise InputError("z must be nonzero")

    @property
    def stratum(self) -> str:
        if self.y and self.y_:
            return "regular"
        if self.y or self.y_:
            return "singular"
        return "supersingular"

    def as_tuple(self) -> tuple[FFElem, FFElem, FFElem]:
        return (self.z, self.y, self.y_)

    def to_json(self) -> dict:
        return {"z": self.z.to_json(), "y": self.y.to_json(), "y'": self.y_.to_json(),
                "stratum": self.stratum}


def central_params(chi: Character) -> CentralParams:
    if not is_integral(chi):
        raise NotIntegral(repr(chi))
    q = chi.cfg.q
    y1, y2, y3 = chi.ys
    return CentralParams((y1 * y2 * y3).reduce(), (q * y3).reduce(), (q * y2 * y3).reduce())


@dataclass(frozen=True)
class Prediction:
    case: CaseLabel
    factors: tuple[SimpleLabel, ...]
    sub: Optional[SimpleLabel] = None
    quotient: Optional[SimpleLabel] = None

    @property
    def structure(self) -> Structure:
        return self.case.structure

    def to_json(self) -> dict:
        return {"case": self.case.case, "structure": self.structure.value,
                "factors": [f.to_json() for f in self.factors],
                "sub": self.sub.to_json() if self.sub else None,
                "quotient": self.quotient.to_json() if self.quotient else None}


def predicted_factors(case: CaseLabel, cp: CentralParams) -> Prediction:
    z, y, y_ = cp.as_tuple()
    n = case.case

    def need(cond: bool, what: str):
        if not cond:
            raise InconsistentParams(f"case {n}: expected {what}, got (z,y,y')=({z},{y},{y_})")

    if n == 1:
        need(bool(y) and not y_, "y != 0, y' = 0")
        return Prediction(case, (label("L6", z, y),))
    if n == 2:
        need(not y and bool(y_), "y = 0, y' != 0")
        return Prediction(case, (label("L6~", z, y_),))
    if n in (6, 7, 8):
        need(not y and not y_, "y = y' = 0")
        sub, quo = label("P3~", z), label("P3", z)
        if n == 6:
            return Prediction(case, (sub, quo), sub, quo)
        return Prediction(case, (sub, quo))
    need(bool(y) and bool(y_), "y y' != 0")
    if n == 3:
        need(y * y != y_ and y_ * y_ != z * y, "y^2 != y', y'^2 != z y")
        return Prediction(case, (label("K6", z, y, y_),))
    if n == 4:
        need(y_ * y_ == z * y and y * y != y_, "y'^2 = z y, y^2 != y'")
        t = y_ / y
        sub, quo = label("M3", z, t), label("M3~", z, t)
        return Prediction(case, (sub, quo), sub, quo)
    if n == 5:
        need(y_ == y * y and y_ * y_ != z * y, "y' = y^2, y'^2 != z y")
        t = y_ / y
        sub, quo = label("N3~", z, t), label("N3", z, t)
        return Prediction(case, (sub, quo), sub, quo)
    need(y * y == y_ and y_ * y_ == z * y, "y^2 = y', y'^2 = z y")
    return Prediction(case, (label("M1_0", y), label("M1_-1", y), label("M2", y), label("M2~", y)))
