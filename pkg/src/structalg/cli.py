"""Command-line front end.

Algebras are given as ``registry://<label>``, a JSON file path, or ``-`` for
standard input.  Exit codes: 0 success, 1 a verification came out negative,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import io
from . import linalg as la
from .analysis import (
    WORDS,
    MatrixTemplate,
    derivation_algebra,
    enumerate_subalgebras,
    family_samples,
    functional_identity_space,
    subspace_checks,
)
from .constructions import F0NotClosed, ak_construct, allison_hein
from .fixtures import load_fixture
from .lie import analysis_report
from .registry import (
    FieldExtensionRequired,
    NotStructurable,
    Params12,
    Params21,
    UnknownLabel,
    canonical_algebra,
    classify_12,
    classify_21,
    isomorphism_failures,
)

REGISTRY = "registry://"


class UsageError(Exception):
    pass


def _read_doc(source: str) -> dict:
    try:
        if source == "-":
            text = sys.stdin.read()
        else:
            with open(source, encoding="utf-8") as fh:
                text = fh.read()
        return json.loads(text)
    except OSError as exc:
        raise UsageError(f"cannot read {source}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise UsageError(f"{source} is not valid JSON: {exc}") from exc


def load_algebra(source: str):
    if source.startswith(REGISTRY):
        try:
            return canonical_algebra(source[len(REGISTRY):])
        except UnknownLabel as exc:
            raise UsageError(f"unknown registry label {source[len(REGISTRY):]!r}") from exc
    try:
        return io.algebra_from_json(_read_doc(source))
    except io.FormatError as exc:
        raise UsageError(f"{source}: {exc}") from exc


def load_lie(source: str):
    try:
        return io.lie_from_json(_read_doc(source))
    except io.FormatError as exc:
        raise UsageError(f"{source}: {exc}") from exc


def _rows(space) -> list:
    return space.to_json()


def _matrices(space, n) -> list:
    return [[[str(x) for x in row] for row in la.unflatten(v, n)] for v in space.basis]


# -- subcommands ------------------------------------------------------------------

def cmd_verify(args):
    a = load_algebra(args.algebra)
    problems = a.problems()
    failures = [] if problems else a.structurable_failures(limit=5)
    out = {"structurable": not problems and not failures}
    if problems:
        out["problems"] = problems
    if failures:
        out["id_failures"] = [[f"e{i + 1}" for i in q] for q, _ in failures]
    return out, 0 if out["structurable"] else 1


def cmd_classify(args):
    try:
        raw = json.loads(args.params)
    except json.JSONDecodeError as exc:
        raise UsageError(f"--params is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise UsageError("--params must be a JSON object")
    cls, fn = (Params21, classify_21) if args.type == "21" else (Params12, classify_12)
    try:
        p = cls(**raw)
    except (TypeError, ValueError) as exc:
        raise UsageError(f"bad parameters: {exc}") from exc
    try:
        return fn(p).to_json(), 0
    except NotStructurable as exc:
        return {"structurable": False, "violated": exc.violated}, 1
    except FieldExtensionRequired as exc:
        return {"structurable": True, "error": str(exc)}, 1


def cmd_derivations(args):
    a = load_algebra(args.algebra)
    space = derivation_algebra(a, args.bar)
    return {"bar": args.bar, "dim": space.dim, "basis": _matrices(space, a.dim)}, 0


def cmd_automorphisms(args):
    a = load_algebra(args.algebra)
    if args.family:
        try:
            rows = json.loads(args.family)
        except json.JSONDecodeError as exc:
            raise UsageError(f"--family is not valid JSON: {exc}") from exc
    elif args.algebra.startswith(REGISTRY):
        label = args.algebra[len(REGISTRY):]
        fams = load_fixture("automorphisms/Aut")["algebras"]
        if label not in fams:
            raise UsageError(f"no automorphism family on record for {label}; pass --family")
        rows = fams[label]["bar_aut" if args.bar else "aut"]
    else:
        raise UsageError("--family is required for algebras outside the registry")
    tpl = MatrixTemplate.parse(rows)
    samples = family_samples(tpl)
    out = {"family": [list(r) for r in tpl.entries], "bar": args.bar, "samples": len(samples)}
    for vals in samples:
        fails = isomorphism_failures(a, a, tpl.evaluate(vals), check_involution=args.bar)
        if fails:
            out["ok"] = False
            out["counterexample"] = {k: str(v) for k, v in vals.items()}
            out["reason"] = fails[0]
            return out, 1
    out["ok"] = True
    return out, 0


def cmd_identities(args):
    a = load_algebra(args.algebra)
    space = functional_identity_space(a)
    return {"words": list(WORDS), "dim": space.dim, "basis": _rows(space)}, 0


def cmd_subalgebras(args):
    a = load_algebra(args.algebra)
    if not 1 <= args.dim <= a.dim or args.bound < 1:
        raise UsageError("need 1 <= --dim <= algebra dimension and --bound >= 1")
    found = enumerate_subalgebras(a, args.dim, args.bound)
    subs = [{"basis": _rows(s), **subspace_checks(a, s).to_json()} for s in found]
    return {"dim": args.dim, "bound": args.bound, "count": len(subs), "subspaces": subs}, 0


def cmd_allison_hein(args):
    a = load_algebra(args.algebra)
    c = allison_hein(a)
    der = derivation_algebra(c.as_algebra(), False)
    table = [[[str(x) for x in v] for v in row] for row in c.table]
    return {"dim": c.dim, "table": table, "der_dim": der.dim, "der_basis": _matrices(der, c.dim)}, 0


def cmd_ak_build(args):
    a = load_algebra(args.algebra)
    try:
        lie = ak_construct(a)
    except F0NotClosed as exc:
        return {"error": f"construction failed: {exc}"}, 1
    doc = io.lie_to_json(lie)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(io.dumps(doc))
        return {"dim": lie.dim, "written": args.output}, 0
    return doc, 0


def cmd_analyze_lie(args):
    report = analysis_report(load_lie(args.lie))
    return report, 0 if report["jacobi"] == "pass" else 1


def cmd_reproduce(args):
    from .reproduce import CHECKS, run_all

    unknown = [n for n in args.only or () if n not in CHECKS]
    if unknown:
        raise UsageError(f"unknown check area(s): {', '.join(unknown)}; choose from {', '.join(CHECKS)}")
    results = run_all(args.only)
    findings = [f for r in results for f in r.findings]
    out = {
        "ok": not findings,
        "areas": {r.area: {"checked": r.checked, "mismatches": len(r.findings)} for r in results},
        "findings": [f.to_json() for f in findings],
    }
    if args.format == "text":
        lines = [f"{r.area:<14} {r.checked:>5} checked  {len(r.findings)} mismatch(es)" for r in results]
        lines += ["", *(str(f) for f in findings)] if findings else ["", "all results match"]
        return "\n".join(lines) + "\n", 0 if not findings else 1
    for f in findings:
        print(f, file=sys.stderr)
    return out, 0 if not findings else 1


# -- plumbing ---------------------------------------------------------------------

def _text(doc, indent: int = 0) -> str:
    pad = "  " * indent
    if isinstance(doc, dict):
        lines = []
        for k, v in doc.items():
            if isinstance(v, (dict, list)) and v and any(isinstance(x, (dict, list)) for x in
                                                         (v.values() if isinstance(v, dict) else v)):
                lines.append(f"{pad}{k}:")
                lines.append(_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
        return "\n".join(lines)
    if isinstance(doc, list):
        return "\n".join(_text(x, indent) if isinstance(x, dict) else f"{pad}- {_scalar(x)}" for x in doc)
    return f"{pad}{_scalar(doc)}"


def _scalar(v) -> str:
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, (list, dict)):
        return json.dumps(v, ensure_ascii=False)
    return str(v)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "text"), default="json")

    p = argparse.ArgumentParser(prog="structalg",
                                description="Exact computations with structurable algebras over Q(i).")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")

    def add(name, fn, helptext):
        sp = sub.add_parser(name, parents=[common], help=helptext)
        sp.set_defaults(func=fn)
        return sp

    sp = add("verify", cmd_verify, "check the structurable identity")
    sp.add_argument("algebra")
    sp = add("classify", cmd_classify, "classify a point of a parametric family")
    sp.add_argument("--type", choices=("21", "12"), required=True)
    sp.add_argument("--params", required=True, help='JSON object, e.g. {"beta1": "1"}')
    sp = add("derivations", cmd_derivations, "derivation algebra")
    sp.add_argument("algebra")
    sp.add_argument("--bar", action="store_true", help="only derivations commuting with the involution")
    sp = add("automorphisms", cmd_automorphisms, "check a parametric automorphism family")
    sp.add_argument("algebra")
    sp.add_argument("--family", help="JSON matrix of constants and [-]name[^k] entries")
    sp.add_argument("--bar", action="store_true", help="also require commuting with the involution")
    sp = add("identities", cmd_identities, "degree-2 functional identities")
    sp.add_argument("algebra")
    sp = add("subalgebras", cmd_subalgebras, "grid enumeration of subalgebras")
    sp.add_argument("algebra")
    sp.add_argument("--dim", type=int, required=True)
    sp.add_argument("--bound", type=int, default=3)
    sp = add("allison-hein", cmd_allison_hein, "conservative algebra C(A)")
    sp.add_argument("algebra")
    sp = add("ak-build", cmd_ak_build, "graded Lie algebra F(A)")
    sp.add_argument("algebra")
    sp.add_argument("-o", "--output")
    sp = add("analyze-lie", cmd_analyze_lie, "Jacobi, radical and Levi profile")
    sp.add_argument("lie")
    sp = add("reproduce-paper", cmd_reproduce, "recompute every transcribed result and diff")
    sp.add_argument("--only", nargs="+", metavar="AREA")
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except UsageError as exc:
        print(f"structalg {args.command}: {exc}", file=sys.stderr)
        return 2
    if isinstance(out, str):
        sys.stdout.write(out)
    elif args.format == "text":
        sys.stdout.write(_text(out) + "\n")
    else:
        sys.stdout.write(io.dumps(out))
    return code


if __name__ == "__main__":
    sys.exit(main())
