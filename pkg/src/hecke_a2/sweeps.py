"""Exhaustive and randomised verification sweeps.

Each sweep returns a :class:`SweepResult`; an empty counterexample list means
every checked instance agreed with the classification.
"""
from __future__ import annotations

import random
from collections import Counter, defaultdict
from dataclasses import dataclass, field as dc_field
from itertools import product

from .chartool import (Character, S3_ORDER, Structure, central_params, classify, is_integral,
                       make_character, ordinarize, predicted_factors)
from .decomp import composition_series, identify, iso, proper_submodules, split
from .errors import AmbiguousMatch, HeckeError, IdentifyFailed, NoCaseMatched
from .gf import FieldSpec
from .oracle import run_oracle
from .repcore import central_scalars, check_relations
from .stdred import build_reduced_standard
from .valnum import PConfig
from .zoo import SimpleLabel, all_labels, expected_irreducible, make_module


@dataclass
class SweepResult:
    scope: str
    field: str
    checked: int = 0
    counterexamples: list[dict] = dc_field(default_factory=list)
    stats: Counter = dc_field(default_factory=Counter)

    @property
    def passed(self) -> int:
        return self.checked - len(self.counterexamples)

    @property
    def ok(self) -> bool:
        return not self.counterexamples

    def fail(self, **info):
        self.counterexamples.append({k: (str(v) if not isinstance(v, (int, bool, list, dict, type(None))) else v)
                                     for k, v in info.items()})

    def to_json(self) -> dict:
        return {"scope": self.scope, "field": self.field, "checked": self.checked,
                "passed": self.passed, "counterexamples": self.counterexamples[:50],
                "counterexample_count": len(self.counterexamples),
                "stats": dict(sorted(self.stats.items()))}


# --- characters ----------------------------------------------------------------

def valuation_triples(e: int) -> list[tuple[int, int, int]]:
    return [(a, b, -a - b) for a in range(-e, e + 1) for b in range(-e, e + 1)
            if abs(a + b) <= e]


def integral_characters(field: FieldSpec, e: int):
    cfg = PConfig(field, e)
    units = field.nonzero()
    for vals in valuation_triples(e):
        for us in product(units, repeat=3):
            yield make_character(cfg, vals, us)


def random_integral_character(field: FieldSpec, rng: random.Random, e_max: int = 3) -> Character:
    e = rng.randint(1, e_max)
    vals = rng.choice(valuation_triples(e))
    units = field.nonzero()
    return make_character(PConfig(field, e), vals, [rng.choice(units) for _ in range(3)])


class _Identifier:
    """identify() with failure bookkeeping for criterion-8 style accounting."""

    def __init__(self, result: SweepResult):
        self.result = result

    def __call__(self, rep, where: str):
        try:
            lab = identify(rep)
            self.result.stats["identified"] += 1
            return lab
        except AmbiguousMatch as exc:
            self.result.stats["AmbiguousMatch"] += 1
            self.result.fail(kind="AmbiguousMatch", where=where, detail=exc)
        except IdentifyFailed as exc:
            self.result.stats["IdentifyFailed"] += 1
            self.result.fail(kind="IdentifyFailed", where=where, detail=exc)
        return None


def _safe_series(rep, res: SweepResult, where: str, **kw):
    try:
        report = composition_series(rep, **kw)
        res.stats["identified"] += report.length + (2 if report.sub else 0)
        return report
    except (IdentifyFailed, AmbiguousMatch) as exc:
        res.stats[type(exc).__name__] += 1
        res.fail(kind=type(exc).__name__, where=where, detail=exc)
        return None


# --- relation suite --------------------------------------------------------------

def sweep_relations(field: FieldSpec, random_labels: int = 0, seed: int = 0,
                    witnesses_e=(1, 2, 3)) -> SweepResult:
    """Defining relations for every zoo module and every reduced standard module."""
    res = SweepResult("relations", repr(field))
    labels = all_labels(field)
    if random_labels:
        rng = random.Random(seed)
        labels = [rng.choice(labels) for _ in range(random_labels)]
    for lab in labels:
        res.checked += 1
        try:
            bad = check_relations(make_module(lab))
        except HeckeError as exc:
            bad = [str(exc)]
        if bad:
            res.fail(module=str(lab), violated=bad)
    for e in witnesses_e:
        for chi in integral_characters(field, e):
            _, rep_chi = ordinarize(chi)
            res.checked += 1
            try:
                bad = check_relations(build_reduced_standard(rep_chi))
            except HeckeError as exc:
                bad = [str(exc)]
            if bad:
                res.fail(character=repr(rep_chi), violated=bad)
    return res


# --- irreducibility criteria -----------------------------------------------------

def sweep_irreducibility(field: FieldSpec, kinds=None) -> SweepResult:
    res = SweepResult("irreducibility", repr(field))
    ident = _Identifier(res)
    for lab in all_labels(field, kinds):
        res.checked += 1
        rep = make_module(lab)
        exp = expected_irreducible(lab)
        subs = proper_submodules(rep)
        irreducible = not subs
        res.stats[f"{lab.kind}:{'irr' if irreducible else 'red'}"] += 1
        if irreducible != exp.irreducible:
            res.fail(module=str(lab), expected_irreducible=exp.irreducible,
                     found_submodule_dims=[s.dim for s in subs])
            continue
        if irreducible:
            got = ident(rep, str(lab))
            if got is not None and got != lab:
                res.fail(module=str(lab), identified_as=str(got))
            continue
        if exp.sub is None:
            continue
        if len(subs) != 1:
            res.fail(module=str(lab), expected="unique submodule",
                     found_submodule_dims=[s.dim for s in subs])
            continue
        sub, quo = split(rep, subs[0])
        got_sub, got_quo = ident(sub, f"sub of {lab}"), ident(quo, f"quotient of {lab}")
        if (got_sub, got_quo) != (exp.sub, exp.quotient):
            res.fail(module=str(lab), expected_sub=str(exp.sub), expected_quotient=str(exp.quotient),
                     found_sub=str(got_sub), found_quotient=str(got_quo))
    return res


# --- classification ---------------------------------------------------------------

def check_standard(chi: Character, res: SweepResult, cache: dict, all_ties: bool = False):
    """Classify, build, decompose and compare against the predicted factors."""
    res.checked += 1
    try:
        case, rep_chi, w = classify(chi)
    except NoCaseMatched:
        res.stats["NoCaseMatched"] += 1
        res.fail(character=repr(chi), kind="NoCaseMatched")
        return None
    res.stats[f"case {case.case}"] += 1
    cp = central_params(rep_chi)
    pred = predicted_factors(case, cp)
    rep = build_reduced_standard(rep_chi)
    key = rep.key()
    if key not in cache:
        cache[key] = _safe_series(rep, res, repr(rep_chi))
        if all_ties and cache[key] is not None:
            rev = _safe_series(rep, res, repr(rep_chi), reverse_ties=True)
            if rev is not None and rev.multiset() != cache[key].multiset():
                res.fail(character=repr(rep_chi), kind="tie-order dependence")
    report = cache[key]
    if report is None:
        return None
    problems = []
    if report.multiset() != Counter(pred.factors):
        problems.append("factors")
    if report.structure != pred.structure:
        problems.append("structure")
    if pred.structure is Structure.UNISERIAL2 and (report.sub, report.quotient) != (pred.sub, pred.quotient):
        problems.append("sub/quotient")
    if problems:
        res.fail(character=repr(rep_chi), case=case.case, problems=problems,
                 predicted=[str(x) for x in pred.factors], found=[str(x) for x in report.series],
                 predicted_structure=pred.structure.value, found_structure=report.structure.value)
    return case, rep_chi, rep, report, cp


def sweep_classification(field: FieldSpec, e_values=(1, 2, 3), all_ties: bool = False) -> SweepResult:
    res = SweepResult("classification", repr(field))
    for k in ("NoCaseMatched", "IdentifyFailed", "AmbiguousMatch"):
        res.stats[k] = 0
    cache: dict = {}
    for e in e_values:
        for chi in integral_characters(field, e):
            check_standard(chi, res, cache, all_ties)
    res.stats["distinct modules"] = len(cache)
    return res


def sweep_central(field: FieldSpec, e_values=(1, 2, 3)) -> SweepResult:
    """Central character of each reduced standard module, its factors, and its stratum."""
    res = SweepResult("central-characters", repr(field))
    cache: dict = {}
    scratch = SweepResult("scratch", repr(field))
    strata = {1: "singular", 2: "singular", 3: "regular", 4: "regular", 5: "regular",
              6: "supersingular", 7: "supersingular", 8: "supersingular", 9: "regular"}
    for e in e_values:
        for chi in integral_characters(field, e):
            out = check_standard(chi, scratch, cache)
            res.checked += 1
            if out is None:
                res.fail(character=repr(chi), kind="classification failed")
                continue
            case, rep_chi, rep, report, cp = out
            triple = cp.as_tuple()
            if tuple(central_scalars(rep)) != triple:
                res.fail(character=repr(rep_chi), kind="module central character",
                         expected=list(map(str, triple)), found=list(map(str, central_scalars(rep))))
            for lab in set(report.series):
                if tuple(central_scalars(make_module(lab))) != triple:
                    res.fail(character=repr(rep_chi), kind="factor central character", factor=str(lab))
            if cp.stratum != strata[case.case]:
                res.fail(character=repr(rep_chi), case=case.case, kind="stratum",
                         expected=strata[case.case], found=cp.stratum)
            res.stats[cp.stratum] += 1
    for k in ("identified", "IdentifyFailed", "AmbiguousMatch"):
        res.stats[k] += scratch.stats[k]
    res.counterexamples.extend(c for c in scratch.counterexamples
                               if c.get("kind") in ("IdentifyFailed", "AmbiguousMatch"))
    return res


# --- S3 invariance ----------------------------------------------------------------

def sweep_s3_invariance(field: FieldSpec, samples: int = 500, seed: int = 0,
                        e_max: int = 3) -> SweepResult:
    res = SweepResult("s3-invariance", repr(field))
    rng = random.Random(seed)
    cache: dict = {}

    def factors(chi):
        _, ordi = ordinarize(chi)
        rep = build_reduced_standard(ordi)
        key = rep.key()
        if key not in cache:
            cache[key] = _safe_series(rep, res, repr(ordi))
        rpt = cache[key]
        return None if rpt is None else rpt.multiset()

    for _ in range(samples):
        chi = random_integral_character(field, rng, e_max)
        assert is_integral(chi)
        base = factors(chi)
        for w in S3_ORDER:
            res.checked += 1
            other = factors(chi.act(w))
            if base is None or other != base:
                res.fail(character=repr(chi), w=str(w),
                         base=sorted(map(str, base or [])), other=sorted(map(str, other or [])))
    res.stats["distinct modules"] = len(cache)
    return res


# --- non-isomorphism ----------------------------------------------------------------

def sweep_nonisomorphism(field: FieldSpec) -> SweepResult:
    res = SweepResult("non-isomorphism", repr(field))
    groups: dict[tuple, list[SimpleLabel]] = defaultdict(list)
    for lab in all_labels(field, simple_only=True):
        rep = make_module(lab)
        groups[(lab.dim, tuple(central_scalars(rep)))].append(lab)
    for (dim, triple), labs in groups.items():
        for i, a in enumerate(labs):
            for b in labs[i + 1:]:
                res.checked += 1
                res.stats[f"dim {dim} pairs"] += 1
                if iso(make_module(a), make_module(b)) is not None:
                    res.fail(a=str(a), b=str(b), central=list(map(str, triple)))
    for y in field.nonzero():
        res.checked += 1
        a, b = SimpleLabel("M2", (y,)), SimpleLabel("M2~", (y,))
        if iso(make_module(a), make_module(b)) is not None:
            res.fail(a=str(a), b=str(b))
    return res


def sweep_oracle(n: int = 20, seed: int = 0) -> SweepResult:
    res = SweepResult("central-word-oracle", "Q")
    for inst, checks in run_oracle(n, seed):
        res.checked += 1
        bad = [k for k, v in checks.items() if not v]
        if bad:
            res.fail(instance=list(map(str, inst)), failed=bad)
    return res


SCOPES = {
    "irreducibility": sweep_irreducibility,
    "classification": sweep_classification,
    "s3-invariance": sweep_s3_invariance,
    "central-characters": sweep_central,
    "non-isomorphism": sweep_nonisomorphism,
    "relations": sweep_relations,
}

__all__ = ["SweepResult", "SCOPES"] + [f.__name__ for f in SCOPES.values()]
