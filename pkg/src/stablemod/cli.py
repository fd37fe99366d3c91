"""Command-line interface.

Exit codes: 0 on success (including a computed false verdict), 1 when a
property suite finds a counterexample, 2 on invalid input, 3 when an
internal cross-check fails.  Results go to stdout; errors are JSON on stderr.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path
from typing import Any, Optional, Sequence

from . import __version__
from .errors import InputError, InternalAssertion, InvalidQuiver, NoneExists, StableModError
from .exactfield import DEFAULT_PRIME, PrimeField
from .normality import bimorphism_witness, is_normal_epi, non_normal_mono_witness, normal_mono_certificate
from .quiver import Quiver, an_quiver
from .rep import Morphism, Representation, an_indecomposables, is_projective
from .sampling import GENERATOR
from .serialize import dumps, encode, field_header, morphism_from_json, rep_from_json
from .stablecat import (
    CriterionReport,
    epi_representative,
    epi_witness,
    is_stable_epi,
    is_stable_iso,
    is_stable_mono,
    is_stable_split_epi,
    is_stable_split_mono,
    is_stably_zero,
    stable_hom,
)
from .suites import SUITES, SuiteReport, run_suite
from .torsion import canonical_split
from .verdict import Verdict, census, classify, equivalence_table


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(f"{self.prog}: {message}")


# ------------------------------------------------------------------ inputs


def _read_json(arg: str) -> Any:
    """Inline JSON, ``-`` for stdin, or a path."""
    text = arg
    if arg == "-":
        text = sys.stdin.read()
    elif not arg.lstrip().startswith(("{", "[")):
        try:
            text = Path(arg).read_text()
        except OSError as exc:
            raise InputError(f"cannot read {arg!r}: {exc.strerror}") from exc
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"invalid JSON in {arg!r}: {exc}") from exc


def _quiver(args, required: bool = True) -> Optional[Quiver]:
    if args.quiver is not None:
        return Quiver.from_json(_read_json(args.quiver))
    if args.an is not None:
        return an_quiver(args.an, args.orientation)
    if required:
        raise InputError("a quiver is required: pass --quiver FILE or --an N [--orientation STR]")
    return None


def _reps(args) -> list[Representation]:
    if not args.rep:
        raise InputError("pass at least one --rep FILE")
    q = _quiver(args, required=False)
    out = []
    for r in args.rep:
        doc = _read_json(r)
        if not isinstance(doc, dict):
            raise InputError("representation JSON must be an object")
        if q is None and "quiver" not in doc:
            raise InputError("representation has no quiver; pass --quiver or --an")
        out.append(rep_from_json(doc, args.field, None if "quiver" in doc else q))
    return out


def _morphism(args) -> Morphism:
    if args.morphism is None:
        raise InputError("pass --morphism FILE")
    doc = _read_json(args.morphism)
    if not isinstance(doc, dict):
        raise InputError("morphism JSON must be an object")
    if "quiver" not in doc and "quiver" not in doc.get("source", {}):
        q = _quiver(args, required=False)
        if q is None:
            raise InputError("morphism has no quiver; pass --quiver or --an")
        doc = dict(doc, quiver=q.to_json())
    return morphism_from_json(doc, args.field)


def _oracle(args) -> Optional[bool]:
    return False if args.no_oracle else None


# ---------------------------------------------------------------- renderers


def _criterion(rep: CriterionReport) -> dict:
    return {"verdict": rep.verdict, "method": rep.method, "checks": rep.checks, "witness": encode(rep.witness)}


def _witness_json(w) -> dict:
    return {
        "vertex": w.vertex,
        "projective": encode(w.projective),
        "envelope": encode(w.envelope),
        "morphism": encode(w.morphism),
        "flags": {"mono": w.mono, "epi": w.epi, "iso": w.iso},
        "methods": {k: r.method for k, r in w.reports.items()},
    }


def _verdict_json(v: Verdict) -> dict:
    return {
        "quiver": v.quiver.to_json(),
        "abelian": v.abelian,
        "envelope_projective": v.envelope_projective,
        "envelope_of_ring": encode(v.envelope_of_ring),
        "reasons": v.reasons,
        "witness": _witness_json(v.witness) if v.witness is not None else None,
    }


def _text(doc: Any, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    if isinstance(doc, dict):
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and not _flat_list(v):
                lines.append(f"{pad}{k}:")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(doc, list):
        for v in doc:
            if isinstance(v, (dict, list)) and not _flat_list(v):
                lines.append(f"{pad}-")
                lines.extend(_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(f"{pad}{_scalar(doc)}")
    return lines


def _flat_list(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if isinstance(v, (list, dict)):
        return json.dumps(v, sort_keys=True)
    return str(v)


def _emit(args, doc: dict) -> None:
    doc = dict(doc)
    doc["field"] = field_header(args.field)
    doc = encode(doc)
    if args.format == "text":
        sys.stdout.write("\n".join(_text(json.loads(json.dumps(doc, sort_keys=True)))) + "\n")
    else:
        sys.stdout.write(dumps(doc))


# ----------------------------------------------------------------- commands


def cmd_classify(args) -> int:
    _emit(args, {"command": "classify", **_verdict_json(classify(_quiver(args), args.field))})
    return 0


def cmd_census(args) -> int:
    n = args.an if args.an is not None else args.n
    if n is None:
        raise InputError("census needs --an N")
    rows = census(n, args.field)
    _emit(
        args,
        {
            "command": "census",
            "n": n,
            "rows": [encode(r) for r in rows],
            "all_agree": all(r.agree for r in rows),
        },
    )
    return 0


def _equivalence_json(r) -> dict:
    return {
        "n": r.n,
        "stable_objects": r.stable_objects,
        "target_objects": r.target_objects,
        "stable_table": r.stable_table,
        "target_table": r.target_table,
        "count": len(r.stable_objects),
        "count_expected": r.count_expected,
        "count_matches": r.count_matches,
        "bijection": r.bijection,
        "matches": r.matches,
    }


def cmd_equivalence(args) -> int:
    n = args.n if args.n is not None else args.an
    if n is None:
        raise InputError("equivalence needs --n N")
    _emit(args, {"command": "equivalence", **_equivalence_json(equivalence_table(n, args.field))})
    return 0


def _suite_names(name: str) -> list[str]:
    return sorted(SUITES) if name == "all" else [name]


def cmd_verify(args) -> int:
    q = _quiver(args, required=False)
    quivers = [q] if q is not None else None
    reports = [run_suite(n, args.trials, args.seed, quivers, args.field) for n in _suite_names(args.suite)]
    if len(reports) == 1:
        _emit(args, {"command": "verify", **reports[0].to_json()})
    else:
        _emit(args, {"command": "verify", "passed": all(r.passed for r in reports), "suites": [r.to_json() for r in reports]})
    return 0 if all(r.passed for r in reports) else 1


def cmd_stable_hom(args) -> int:
    if args.rep:
        reps = _reps(args)
        if len(reps) != 2:
            raise InputError("stable-hom takes exactly two --rep arguments (source, target)")
        sh = stable_hom(reps[0], reps[1])
        doc = {
            "source": encode(reps[0]),
            "target": encode(reps[1]),
            "hom_dim": sh.hom.dim,
            "stable_dim": sh.quotient_dim,
            "representatives": encode(list(sh.representatives)),
        }
    else:
        q = _quiver(args)
        if q.an_orientation() is None:
            raise InputError("the stable-hom table needs an A_n quiver; otherwise pass two --rep arguments")
        objs = an_indecomposables(q, args.field)
        doc = {
            "quiver": q.to_json(),
            "objects": [list(m.dims) for m in objs],
            "table": [[stable_hom(x, y).quotient_dim for y in objs] for x in objs],
        }
    _emit(args, {"command": "stable-hom", **doc})
    return 0


def cmd_is_zero(args) -> int:
    if args.morphism is not None:
        rep = is_stably_zero(_morphism(args))
        _emit(args, {"command": "is-zero", "kind": "morphism", **_criterion(rep)})
    else:
        (m,) = _reps(args)[:1]
        _emit(args, {"command": "is-zero", "kind": "object", "verdict": is_projective(m), "method": "fast-path"})
    return 0


def _criterion_cmd(name: str, fn):
    def run(args) -> int:
        f = _morphism(args)
        rep = fn(f, _oracle(args))
        doc = {"command": name, **_criterion(rep)}
        if name == "is-epi" and not rep.verdict:
            doc["epi_witness"] = encode(epi_witness(f, _oracle(args)))
        _emit(args, doc)
        return 0

    return run


def cmd_torsion(args) -> int:
    (m,) = _reps(args)[:1]
    split = canonical_split(m)
    _emit(
        args,
        {
            "command": "torsion",
            "module": encode(m),
            "torsion": encode(split.torsion),
            "torsion_module": encode(split.torsion_module),
            "sharp": encode(split.sharp),
            "sharp_projective": is_projective(split.sharp),
        },
    )
    return 0


def cmd_sharp(args) -> int:
    (m,) = _reps(args)[:1]
    split = canonical_split(m)
    _emit(args, {"command": "sharp", "sharp": encode(split.sharp), "projection": encode(split.projection), "section": encode(split.section)})
    return 0


def cmd_normal_epi(args) -> int:
    f = _morphism(args)
    replaced = not f.is_surjective()
    used = epi_representative(f)[0] if replaced else f
    rep = is_normal_epi(used, _oracle(args))
    _emit(args, {"command": "normal-epi", "representative_used": replaced, **_criterion(rep)})
    return 0


def cmd_normal_mono_cert(args) -> int:
    cert = normal_mono_certificate(_morphism(args), _oracle(args))
    _emit(
        args,
        {
            "command": "normal-mono-cert",
            "p": encode(cert.p),
            "injection": encode(cert.injection),
            "envelope": encode(cert.envelope),
            "extension": encode(cert.extension),
            "fprime": encode(cert.fprime),
            "validated": cert.validated,
        },
    )
    return 0


def cmd_witness(args) -> int:
    q = _quiver(args)
    doc: dict[str, Any] = {"command": "witness", "quiver": q.to_json()}
    try:
        doc["bimorphism"] = _witness_json(bimorphism_witness(q, args.field, _oracle(args)))
        doc["factorization_system"] = "Epi and Mono do not form a factorization system: a bimorphism is not an iso"
    except NoneExists as exc:
        doc["bimorphism"] = None
        doc["reason"] = str(exc)
    try:
        w = non_normal_mono_witness(q, args.field, _oracle(args))
        doc["non_normal_mono"] = {k: encode(v) for k, v in w.items()}
    except NoneExists:
        doc["non_normal_mono"] = None
    _emit(args, doc)
    return 0


def cmd_report(args) -> int:
    from . import plotting

    out = Path(args.out)
    try:
        out.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        raise InputError(f"cannot create {out}: {exc.strerror}") from exc
    files = []

    rows_by_n = {n: census(n, args.field) for n in (2, 3, 4)}
    with open(out / "census.tsv", "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["n", "orientation", "monotone", "abelian", "envelope_projective", "agree"])
        for n, rows in rows_by_n.items():
            for r in rows:
                w.writerow([n, r.orientation, int(r.monotone), int(r.abelian), int(r.envelope_projective), int(r.agree)])
    files.append("census.tsv")
    files.append(plotting.census_figure(rows_by_n, out / "census.png").name)

    eq_summary = []
    with open(out / "equivalence.tsv", "w", newline="") as fh:
        w = csv.writer(fh, delimiter="\t", lineterminator="\n")
        w.writerow(["n", "stable_objects", "expected", "bijection_found"])
        for n in (2, 3, 4):
            r = equivalence_table(n, args.field)
            w.writerow([n, len(r.stable_objects), r.count_expected, int(r.bijection is not None)])
            files.append(plotting.equivalence_figure(r, out / f"equivalence_n{n}.png").name)
            eq_summary.append({"n": n, "matches": r.matches})
    files.append("equivalence.tsv")

    reports: list[SuiteReport] = [run_suite(n, args.trials, args.seed, None, args.field) for n in sorted(SUITES)]
    with open(out / "suites.csv", "w", newline="") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["suite", "trials", "seed", "prime", "failures", "findings", "passed"])
        for r in reports:
            w.writerow([r.name, r.trials, r.seed, args.field, len(r.failures), len(r.findings), int(r.passed)])
    files.append("suites.csv")
    files.append(plotting.suites_figure(reports, out / "suites.png").name)

    passed = all(r.passed for r in reports)
    _emit(
        args,
        {
            "command": "report",
            "files": sorted(files),
            "seed": args.seed,
            "trials": args.trials,
            "generator": GENERATOR,
            "equivalence": eq_summary,
            "suites_passed": passed,
        },
    )
    return 0 if passed else 1


# ------------------------------------------------------------------ parser


def _common() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--field", type=int, default=DEFAULT_PRIME, help="prime p of the ground field GF(p)")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--trials", type=int, default=200)
    common.add_argument("--format", choices=("json", "text"), default="json")
    common.add_argument("--quiver", help="quiver JSON (path, inline, or - for stdin)")
    common.add_argument("--rep", action="append", default=[], help="representation JSON; may repeat")
    common.add_argument("--morphism", help="morphism JSON")
    common.add_argument("--an", type=int, help="use the A_n quiver")
    common.add_argument("--orientation", help="A_n orientation, one of '<' '>' per arrow (default all '>')")
    common.add_argument("--no-oracle", action="store_true", help="skip the interval-module cross-check")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="stablemod", description="Stable module categories of path algebras over GF(p).")
    parser.add_argument("--version", action="version", version=f"stablemod {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, fn, help_, **extra):
        p = sub.add_parser(name, parents=[common], help=help_)
        for flag, kw in extra.items():
            p.add_argument(flag, **kw)
        p.set_defaults(func=fn)
        return p

    add("classify", cmd_classify, "decide whether the stable category is abelian")
    add("census", cmd_census, "classify every orientation of A_n (--an N)", **{"--n": {"type": int}})
    add("equivalence", cmd_equivalence, "compare stable kA_n with kA_{n-1}", **{"--n": {"type": int}})
    add("verify", cmd_verify, "run a property suite", **{"--suite": {"required": True, "help": "suite name or 'all'"}})
    add("stable-hom", cmd_stable_hom, "stable hom between two reps, or the table over an A_n")
    add("is-zero", cmd_is_zero, "zero object / stably zero morphism")
    for name, fn in (
        ("is-mono", is_stable_mono),
        ("is-epi", is_stable_epi),
        ("is-split-mono", is_stable_split_mono),
        ("is-split-epi", is_stable_split_epi),
        ("is-iso", is_stable_iso),
    ):
        add(name, _criterion_cmd(name, fn), f"{name.replace('is-', '')} test modulo projectives")
    add("torsion", cmd_torsion, "torsion submodule and torsionfree quotient")
    add("sharp", cmd_sharp, "M^sharp with projection and section")
    add("normal-epi", cmd_normal_epi, "normal epimorphism test")
    add("normal-mono-cert", cmd_normal_mono_cert, "kernel certificate for a mono (abelian case)")
    add("witness", cmd_witness, "bimorphism and non-normal mono witnesses")
    add("report", cmd_report, "write TSV/CSV tables and PNG figures", **{"--out": {"required": True}})
    return parser


def _error(exc: Exception, code: int) -> int:
    doc = {"error": type(exc).__name__, "message": str(exc), "exit_code": code}
    if isinstance(exc, InvalidQuiver):
        doc["problems"] = [{"kind": k, "message": m} for k, m in exc.errors]
    sys.stderr.write(json.dumps(doc, sort_keys=True) + "\n")
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.seed < 0 or args.trials < 0:
            raise InputError("--seed and --trials must be nonnegative")
        args.field = PrimeField(args.field).p
        return args.func(args)
    except InternalAssertion as exc:
        return _error(exc, 3)
    except StableModError as exc:
        return _error(exc, 2)


if __name__ == "__main__":
    sys.exit(main())
