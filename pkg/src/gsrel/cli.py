"""Command-line front end.

Subcommands:
  check-semiring SPEC           semiring axioms and derived property flags
  classify SPEC --variant V     dual-oracle monad flags + Kleisli flags
  eval TERMFILE INTERP          evaluate a diagram term to a weighted relation
  eq TERMFILE TERMFILE INTERP   decide equality of two diagram terms
  taxonomy                      the full law suite over the catalog

Exit codes: 0 pass, 1 refutation / oracle disagreement / term inequality,
2 usage or file-format errors.  Structured output is deterministic under a
fixed seed, so the suite doubles as a CI gate and its reports diff cleanly.

SPEC is a catalog name (see check-semiring --list) or a path to a JSON
table file.  GSREL_BUDGET and GSREL_SEED override the built-in defaults;
explicit flags override both.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .diagram import (
    DiagramError,
    check_term_equality,
    evaluate_term,
    load_interpretation,
    parse_term_file,
    print_term,
)
from .report import DEFAULT_BUDGET
from .semiring import (
    CATALOG,
    TableFormatError,
    check_semiring_laws,
    classify_semiring,
    load_semiring,
)
from .taxonomy import (
    DEFAULT_OPS,
    classify_kleisli,
    classify_monad,
    entries_to_jsonl,
    entries_to_table,
    run_theorem_suite,
    suite_failures,
    _json_safe,
)
from .weightmap import VARIANTS, WeightMapError, word_labels
from .wrel import BoundaryError, WRelFormatError, wrel_to_doc


class UsageError(ValueError):
    """Bad configuration or malformed input file; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    sizes: tuple = (0, 1, 2)
    budget: int = DEFAULT_BUDGET
    seed: int = 0
    samples: int | None = None
    fmt: str = "human"
    out: str | None = None


def _env_int(name: str):
    raw = os.environ.get(name)
    if raw is None:
        return None
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{name} must be an integer, got {raw!r}") from None


def _parse_sizes(raw: str) -> tuple:
    try:
        sizes = tuple(int(part) for part in raw.split(",") if part.strip() != "")
    except ValueError:
        raise UsageError(f"--sizes expects comma-separated integers, got {raw!r}") from None
    if not sizes or any(s < 0 for s in sizes):
        raise UsageError(f"--sizes expects nonnegative entries, got {raw!r}")
    return sizes


def _config(args) -> RunConfig:
    budget = args.budget if args.budget is not None else _env_int("GSREL_BUDGET")
    seed = args.seed if args.seed is not None else _env_int("GSREL_SEED")
    cfg = RunConfig(
        sizes=_parse_sizes(args.sizes) if getattr(args, "sizes", None) else (0, 1, 2),
        budget=budget if budget is not None else DEFAULT_BUDGET,
        seed=seed if seed is not None else 0,
        samples=getattr(args, "samples", None),
        fmt=args.format,
        out=args.out,
    )
    if cfg.budget <= 0:
        raise UsageError("--budget must be positive")
    return cfg


def _load_semiring_arg(spec: str):
    try:
        if os.path.exists(spec):
            with open(spec, "r", encoding="utf-8") as fh:
                doc = json.load(fh)
            return load_semiring(doc)
        return load_semiring(spec)
    except json.JSONDecodeError as e:
        raise UsageError(f"{spec}: invalid JSON at line {e.lineno}, column {e.colno}") from None
    except (TableFormatError, ValueError) as e:
        raise UsageError(str(e)) from None


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _read_text(path: str) -> str:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None


def _read_json(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as e:
        raise UsageError(f"{path}: {e.strerror}") from None
    except json.JSONDecodeError as e:
        raise UsageError(f"{path}: invalid JSON at line {e.lineno}, column {e.colno}") from None


# ---------------------------------------------------------------------------
# subcommands


def cmd_check_semiring(args) -> int:
    cfg = _config(args)
    sr = _load_semiring_arg(args.semiring)
    reports = check_semiring_laws(sr, budget=cfg.budget, seed=cfg.seed)
    profile = classify_semiring(sr, budget=cfg.budget, seed=cfg.seed)
    flags = {
        "mult_idempotent": profile.mult_idempotent,
        "absorptive": profile.absorptive,
        "distributive_lattice": profile.distributive_lattice,
        "semifield": profile.semifield,
    }
    if cfg.fmt == "structured":
        doc = {
            "semiring": sr.name,
            "laws": [
                {
                    "law": r.law,
                    "status": r.status,
                    "witness": _json_safe(r.witness),
                    "checks_performed": r.checks_performed,
                }
                for r in reports
            ],
            "profile": {
                name: {
                    "value": value,
                    "status": profile.reports[name].status,
                    "witness": _json_safe(profile.reports[name].witness),
                }
                for name, value in flags.items()
            },
        }
        _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
    else:
        lines = [f"semiring: {sr.name}"]
        for r in reports:
            lines.append(f"  {r.brief()}")
        lines.append("profile:")
        for name, value in flags.items():
            rep = profile.reports[name]
            extra = ""
            if rep.witness is not None:
                extra = f"  witness: {_json_safe(rep.witness)}"
            lines.append(f"  {name}: {str(value).lower()} [{rep.status}]{extra}")
        _emit("\n".join(lines) + "\n", cfg.out)
    return 0 if all(r.passed for r in reports) else 1


def cmd_classify(args) -> int:
    cfg = _config(args)
    sr = _load_semiring_arg(args.semiring)
    variant = args.variant
    if variant not in VARIANTS:
        raise UsageError(f"--variant must be one of {', '.join(VARIANTS)}; got {variant!r}")
    kwargs = {"sizes": cfg.sizes, "budget": cfg.budget, "seed": cfg.seed}
    if cfg.samples is not None:
        kwargs["samples"] = cfg.samples
    ops = getattr(args, "_ops", None) or DEFAULT_OPS
    mc = classify_monad(variant, sr, ops=ops, **kwargs)
    kc = classify_kleisli(variant, sr, **kwargs)
    disagreements = [f for f, fv in mc.flags.items() if not fv.consistent]
    if cfg.fmt == "structured":
        doc = {
            "semiring": sr.name,
            "variant": variant,
            "monad_flags": {
                name: {
                    "value": fv.value,
                    "pointwise": fv.pointwise.passed,
                    "diagram": fv.diagram.passed,
                    "well_posed": fv.well_posed,
                    "consistent": fv.consistent,
                }
                for name, fv in mc.flags.items()
            },
            "closure": {
                name: {"status": r.status, "witness": _json_safe(r.witness)}
                for name, r in mc.closure.items()
            },
            "kleisli_flags": {
                name: kc.flags[name] for name in kc.flags
            },
            "kleisli_witnesses": {
                name: _json_safe(r.witness)
                for name, r in kc.reports.items()
                if r.witness is not None
            },
            "oracle_disagreements": disagreements,
        }
        _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
    else:
        lines = [f"semiring: {sr.name}", f"variant: {variant}", "monad flags:"]
        for name, fv in mc.flags.items():
            mark = "" if fv.consistent else "  ORACLE DISAGREEMENT"
            gate = "" if fv.well_posed else " (not well-posed: closure failed)"
            lines.append(
                f"  {name}: {str(fv.value).lower()}"
                f" [pointwise={str(fv.pointwise.passed).lower()}"
                f" diagram={str(fv.diagram.passed).lower()}]{gate}{mark}"
            )
        lines.append("closure:")
        for name, r in mc.closure.items():
            lines.append(f"  {name}: {r.status}")
            if r.witness is not None:
                lines.append(f"    witness: {_json_safe(r.witness)}")
        lines.append("kleisli flags:")
        for name, value in kc.flags.items():
            rep = kc.reports.get(name)
            lines.append(f"  {name}: {str(value).lower()}")
            if rep is not None and rep.witness is not None:
                lines.append(f"    witness: {_json_safe(rep.witness)}")
        if disagreements:
            lines.append(f"oracle disagreements: {', '.join(disagreements)}")
        _emit("\n".join(lines) + "\n", cfg.out)
    return 1 if disagreements else 0


def _select_term(terms: dict, path: str, requested: str | None):
    if requested is not None:
        if requested not in terms:
            raise UsageError(
                f"{path}: no term named {requested!r}; available: {', '.join(sorted(terms))}"
            )
        return terms[requested]
    if "main" in terms:
        return terms["main"]
    if len(terms) == 1:
        return next(iter(terms.values()))
    raise UsageError(
        f"{path}: multiple terms and no 'main'; pick one with --term "
        f"(available: {', '.join(sorted(terms))})"
    )


def cmd_eval(args) -> int:
    cfg = _config(args)
    terms = parse_term_file(_read_text(args.termfile))
    interp = load_interpretation(_read_json(args.interp))
    term = _select_term(terms, args.termfile, args.term)
    arrow = evaluate_term(term, interp)
    if cfg.fmt == "structured":
        doc = {
            "term": print_term(term),
            "semiring": interp.semiring.name,
            "arrow": wrel_to_doc(interp.semiring, arrow),
        }
        _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
    else:
        sr = interp.semiring
        lines = [f"term: {print_term(term)}"]
        dom, cod = arrow.boundary()
        lines.append(f"boundary: {_word_str(dom)} -> {_word_str(cod)}")
        if not arrow.rows:
            lines.append("  (zero arrow)")
        for x, row in arrow.rows:
            for y, v in row.entries:
                lines.append(
                    f"  {_key_str(dom, x)} -> {_key_str(cod, y)} : {sr.label(v)}"
                )
        _emit("\n".join(lines) + "\n", cfg.out)
    return 0


def _word_str(word) -> str:
    return "[" + ",".join(s.name for s in word) + "]"


def _key_str(word, key) -> str:
    return "(" + ",".join(word_labels(word, key)) + ")"


def cmd_eq(args) -> int:
    cfg = _config(args)
    left_terms = parse_term_file(_read_text(args.left))
    right_terms = parse_term_file(_read_text(args.right))
    interp = load_interpretation(_read_json(args.interp))
    t1 = _select_term(left_terms, args.left, args.left_term)
    t2 = _select_term(right_terms, args.right, args.right_term)
    report = check_term_equality(t1, t2, interp, law="cmd/eq")
    if cfg.fmt == "structured":
        doc = {
            "left": print_term(t1),
            "right": print_term(t2),
            "semiring": interp.semiring.name,
            "status": report.status,
            "witness": _json_safe(report.witness),
            "checks_performed": report.checks_performed,
        }
        _emit(json.dumps(doc, indent=2) + "\n", cfg.out)
    else:
        lines = [f"left:  {print_term(t1)}", f"right: {print_term(t2)}"]
        if report.passed:
            lines.append(f"equal ({report.status}, {report.checks_performed} entries compared)")
        else:
            w = report.witness
            lines.append(
                f"NOT EQUAL at row {w['row']}, column {w['col']}: "
                f"left={w['left']} right={w['right']}"
            )
        _emit("\n".join(lines) + "\n", cfg.out)
    return 0 if report.passed else 1


def cmd_taxonomy(args) -> int:
    cfg = _config(args)
    semirings = args.semiring if args.semiring else list(CATALOG)
    loaded = [_load_semiring_arg(s) for s in semirings]
    variants = args.variant if args.variant else list(VARIANTS)
    for v in variants:
        if v not in VARIANTS:
            raise UsageError(f"--variant must be one of {', '.join(VARIANTS)}; got {v!r}")
    kwargs = {"sizes": cfg.sizes, "budget": cfg.budget, "seed": cfg.seed}
    if cfg.samples is not None:
        kwargs["samples"] = cfg.samples
    ops = getattr(args, "_ops", None) or DEFAULT_OPS
    entries = run_theorem_suite(
        loaded, variants, ops=ops, include_monad_laws=True, **kwargs
    )
    if cfg.fmt == "structured":
        _emit(entries_to_jsonl(entries), cfg.out)
    else:
        _emit(entries_to_table(entries), cfg.out)
    return 1 if suite_failures(entries) else 0


# ---------------------------------------------------------------------------
# parser


def _add_common(p, sizes=True, samples=True):
    p.add_argument("--budget", type=int, default=None, help="max checks per law")
    p.add_argument("--seed", type=int, default=None, help="base seed for sampled checks")
    if sizes:
        p.add_argument("--sizes", default=None, help="comma-separated set sizes, default 0,1,2")
    if samples:
        p.add_argument("--samples", type=int, default=None, help="sampled cases per law")
    p.add_argument(
        "--format", choices=("human", "structured"), default="human", help="output format"
    )
    p.add_argument("--out", default=None, help="write the report to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gsrel",
        description="Semiring-weighted relations: law checking, classification, diagram evaluation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check-semiring", help="check semiring axioms and derived flags")
    p.add_argument("semiring", help=f"catalog name ({', '.join(CATALOG)}) or JSON table path")
    _add_common(p, sizes=False, samples=False)
    p.set_defaults(func=cmd_check_semiring)

    p = sub.add_parser("classify", help="dual-oracle classification of a variant over a semiring")
    p.add_argument("semiring", help="catalog name or JSON table path")
    p.add_argument("--variant", default="M", help=f"one of {', '.join(VARIANTS)}")
    _add_common(p)
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("eval", help="evaluate a diagram term file under an interpretation")
    p.add_argument("termfile", help="diagram term file")
    p.add_argument("interp", help="interpretation JSON file")
    p.add_argument("--term", default=None, help="binding to evaluate (default: main)")
    _add_common(p, sizes=False, samples=False)
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("eq", help="decide equality of two diagram term files")
    p.add_argument("left", help="first term file")
    p.add_argument("right", help="second term file")
    p.add_argument("interp", help="interpretation JSON file")
    p.add_argument("--left-term", default=None, help="binding in the first file")
    p.add_argument("--right-term", default=None, help="binding in the second file")
    _add_common(p, sizes=False, samples=False)
    p.set_defaults(func=cmd_eq)

    p = sub.add_parser("taxonomy", help="run the full law suite over the catalog")
    p.add_argument(
        "--semiring",
        action="append",
        default=None,
        help="restrict to this semiring (repeatable)",
    )
    p.add_argument(
        "--variant", action="append", default=None, help="restrict to this variant (repeatable)"
    )
    _add_common(p)
    p.set_defaults(func=cmd_taxonomy)
    return parser


def main(argv=None, _ops_override=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if _ops_override is not None:
        args._ops = _ops_override
    try:
        return args.func(args)
    except UsageError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except (DiagramError, TableFormatError, WRelFormatError, BoundaryError, WeightMapError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
