"""Command-line interface.

Exit codes: 0 success, 1 bad input, 2 a computation contradicted the
classification, 3 an enumeration bound was exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from typing import Any

from .chartool import Character, central_params, classify, classify_all, predicted_factors
from .decomp import composition_series
from .errors import Falsification, HeckeError, InputError, TooLarge
from .gf import FieldSpec, field_make
from .repcore import Rep, central_scalars, check_relations
from .stdred import build_reduced_standard
from .sweeps import SCOPES, sweep_oracle, sweep_relations
from .zoo import SimpleLabel, expected_irreducible, make_module

EXIT_OK, EXIT_INPUT, EXIT_FALSIFIED, EXIT_BOUND = 0, 1, 2, 3


def _json_arg(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"--{what}: invalid JSON ({exc})") from exc


def _field(args) -> FieldSpec:
    if args.field:
        return FieldSpec.from_json(_json_arg(args.field, "field"))
    return field_make(5)


def _character(args, field: FieldSpec) -> Character:
    if not args.char:
        raise InputError("--char is required")
    data = _json_arg(args.char, "char")
    if args.e is not None:
        data.setdefault("e", args.e)
    if "e" not in data:
        raise InputError("character JSON needs 'e' (or pass --e)")
    return Character.from_json(field, data)


def _label(args, field: FieldSpec) -> SimpleLabel:
    if not args.label:
        raise InputError("--label is required")
    return SimpleLabel.from_json(field, _json_arg(args.label, "label"))


def _classification(chi: Character, all_cases: bool) -> dict:
    case, rep_chi, w = classify(chi)
    cp = central_params(rep_chi)
    pred = predicted_factors(case, cp)
    out = {
        "case": case.case,
        "structure": case.structure.value,
        "w": str(w),
        "representative": rep_chi.to_json(),
        "central_params": cp.to_json(),
        "factors": [f.kind for f in pred.factors],
        "predicted_factors": pred.to_json(),
    }
    if all_cases:
        out["all_cases"] = [{"case": c.case, "w": str(x), "representative": r.to_json()}
                            for c, r, x in classify_all(chi)]
    return out


def cmd_classify(args) -> tuple[dict, int]:
    field = _field(args)
    chi = _character(args, field)
    return _classification(chi, args.all_cases), EXIT_OK


def cmd_standard(args) -> tuple[dict, int]:
    field = _field(args)
    chi = _character(args, field)
    out = _classification(chi, args.all_cases)
    rep_chi = Character.from_json(field, out["representative"])
    rep = build_reduced_standard(rep_chi)
    out["rep"] = rep.to_json()
    out["central_scalars"] = [x.to_json() for x in central_scalars(rep)]
    return out, EXIT_OK


def cmd_zoo(args) -> tuple[dict, int]:
    field = _field(args)
    lab = _label(args, field)
    rep = make_module(lab)
    exp = expected_irreducible(lab)
    out = {
        "label": lab.to_json(),
        "rep": rep.to_json(),
        "relations_violated": check_relations(rep),
        "central_scalars": [x.to_json() for x in central_scalars(rep)],
        "expected_irreducible": exp.irreducible,
        "expected_sub": exp.sub.to_json() if exp.sub else None,
        "expected_quotient": exp.quotient.to_json() if exp.quotient else None,
    }
    if args.check:
        rpt = composition_series(rep)
        out["decomposition"] = rpt.to_json()
        out["agreement"] = ((rpt.length == 1) == exp.irreducible
                            and (exp.sub is None or (rpt.sub, rpt.quotient) == (exp.sub, exp.quotient)))
        return out, EXIT_OK if out["agreement"] else EXIT_FALSIFIED
    return out, EXIT_OK


def cmd_decompose(args) -> tuple[dict, int]:
    field = _field(args)
    sources = [x for x in (args.char, args.label, args.rep) if x]
    if len(sources) != 1:
        raise InputError("give exactly one of --char, --label, --rep")
    out: dict[str, Any] = {}
    prediction = None
    if args.char:
        chi = _character(args, field)
        case, rep_chi, w = classify(chi)
        prediction = predicted_factors(case, central_params(rep_chi))
        rep = build_reduced_standard(rep_chi)
        out["source"] = {"standard": rep_chi.to_json(), "case": case.case, "w": str(w)}
    elif args.label:
        lab = _label(args, field)
        rep = make_module(lab)
        out["source"] = {"zoo": lab.to_json()}
    else:
        rep = Rep.from_json(_json_arg(args.rep, "rep"), field)
        out["source"] = {"inline": rep.to_json()}
    rpt = composition_series(rep, with_socle=args.socle)
    out["report"] = rpt.to_json()
    code = EXIT_OK
    if prediction is not None:
        agree = (sorted(map(str, rpt.series)) == sorted(map(str, prediction.factors))
                 and rpt.structure == prediction.structure
                 and (prediction.sub is None or (rpt.sub, rpt.quotient) == (prediction.sub, prediction.quotient)))
        out["predicted"] = prediction.to_json()
        out["agreement"] = agree
        code = EXIT_OK if agree else EXIT_FALSIFIED
    return out, code


def cmd_sweep(args) -> tuple[dict, int]:
    field = _field(args)
    fn = SCOPES[args.scope]
    if args.scope in ("classification", "central-characters"):
        e_values = tuple(range(1, args.e_max + 1)) if args.e is None else (args.e,)
        res = fn(field, e_values)
    elif args.scope == "s3-invariance":
        res = fn(field, samples=args.samples, seed=args.seed)
    elif args.scope == "relations":
        res = fn(field, random_labels=args.samples if args.random else 0, seed=args.seed)
    else:
        res = fn(field)
    return res.to_json(), EXIT_OK if res.ok else EXIT_FALSIFIED


def cmd_selftest(args) -> tuple[dict, int]:
    field = _field(args)
    oracle = sweep_oracle(args.samples, args.seed)
    rel = sweep_relations(field, witnesses_e=(1, 2))
    ok = oracle.ok and rel.ok
    return {"oracle": oracle.to_json(), "relations": rel.to_json(), "ok": ok}, \
        EXIT_OK if ok else EXIT_FALSIFIED


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--field", help='field descriptor, e.g. \'{"p":5,"k":1,"modulus":[0,1]}\' '
                                        '(modulus optional for p in 2,3,5,7 and k <= 3)')
    common.add_argument("--e", type=int, help="valuation of q")
    common.add_argument("--out", help="write JSON here instead of stdout")
    common.add_argument("--pretty", action="store_true", help="indent JSON output")
    common.add_argument("--seed", type=int, default=0)

    p = argparse.ArgumentParser(prog="hecke-a2", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    for name, helptext in (("classify", "classify an integral character"),
                           ("standard", "build the reduced standard module of a character")):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.add_argument("--char", required=True, help='{"e":1,"y":[{"v":1,"u":[2]},...]}')
        sp.add_argument("--all-cases", action="store_true", help="report every matching orbit member")

    sp = sub.add_parser("zoo", parents=[common], help="construct a named module")
    sp.add_argument("--label", required=True, help='{"kind":"M3","params":{"z":[1],"y":[2]}}')
    sp.add_argument("--check", action="store_true", help="also decompose and compare")

    sp = sub.add_parser("decompose", parents=[common], help="composition series of a module")
    sp.add_argument("--char")
    sp.add_argument("--label")
    sp.add_argument("--rep", help='{"T":[[...]],"S1":[[...]]} with entries as coordinate lists or ints')
    sp.add_argument("--socle", action="store_true", help="include socle layers")

    sp = sub.add_parser("sweep", parents=[common], help="exhaustive verification sweep")
    sp.add_argument("scope", choices=sorted(SCOPES))
    sp.add_argument("--e-max", type=int, default=3)
    sp.add_argument("--samples", type=int, default=500)
    sp.add_argument("--random", action="store_true", help="relations: sample zoo labels at random")

    sp = sub.add_parser("selftest", parents=[common], help="char-0 oracle plus relation suite")
    sp.add_argument("--samples", type=int, default=20)
    return p


COMMANDS = {"classify": cmd_classify, "standard": cmd_standard, "zoo": cmd_zoo,
            "decompose": cmd_decompose, "sweep": cmd_sweep, "selftest": cmd_selftest}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        out, code = COMMANDS[args.command](args)
    except TooLarge as exc:
        out, code = {"error": "TooLarge", "detail": str(exc)}, EXIT_BOUND
    except Falsification as exc:
        out, code = {"error": type(exc).__name__, "detail": str(exc)}, EXIT_FALSIFIED
    except (HeckeError, KeyError, TypeError, ValueError) as exc:
        out, code = {"error": type(exc).__name__, "detail": str(exc)}, EXIT_INPUT
    text = json.dumps(out, indent=2 if args.pretty else None, sort_keys=False)
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    if code and "error" in out:
        print(f"error: {out['error']}: {out['detail']}", file=sys.stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
