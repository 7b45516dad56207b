"""Command-line front end: ``pd0 <command> ...``.

Exit status: 0 ok / equivalent / reduced, 1 violation / inequivalent,
2 budget exceeded, 3 input error.  Reports go to stdout (``--format
text|json``); json reports are byte-stable for identical inputs.
"""

import argparse
import json
import sys
import time

from . import __version__
from .crt import CRTPentuple, reduce, synthesize_pentuple, validate_crt
from .errors import (ConstraintViolation, ConventionDiscrepancy, InternalInconsistency,
                     InvalidGroupError, ParseError)
from .groups import FiniteGroup, all_z2_homs, make_cyclic, make_dihedral, make_direct_product
from .invariant import (BUDGET_EXCEEDED, DEFAULT_BUDGET, EQUIVALENT, PD0Triple, classify_sector,
                        default_denominator, equiv, is_diagonal, validate_triple,
                        worker_count)
from .io import canonical_json, cochain_to_json, digest, read_bundle, to_json, write_bundle

OK, VIOLATION, BUDGET, INPUT_ERROR = 0, 1, 2, 3


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(INPUT_ERROR, f"{self.prog}: error: {message}\n")


def build_parser():
    p = _Parser(prog="pd0", description="PD0 invariant data: validation, equivalence, classification, CRT reduction.")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--timing", action="store_true", help="include wall-clock time in the report")
    p.add_argument("--version", action="version", version=f"pd0 {__version__}")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    g = sub.add_parser("make-group", help="write a group file")
    src = g.add_mutually_exclusive_group(required=True)
    src.add_argument("--cyclic", type=int, metavar="N")
    src.add_argument("--dihedral", type=int, metavar="N", help="dihedral group of order 2N")
    src.add_argument("--product", nargs=2, metavar=("F1", "F2"))
    g.add_argument("--out")

    v = sub.add_parser("validate-triple", help="check the cocycle conditions of a triple file")
    v.add_argument("path")

    v = sub.add_parser("validate-crt", help="check the constraints of a pentuple file")
    v.add_argument("path")

    r = sub.add_parser("reduce", help="reduce a pentuple to a diagonal triple")
    r.add_argument("--in", dest="inp", required=True)
    r.add_argument("--out")
    r.add_argument("--cert")

    e = sub.add_parser("equiv", help="decide equivalence of two triples")
    e.add_argument("--left", required=True)
    e.add_argument("--right", required=True)
    e.add_argument("--budget", type=int, default=DEFAULT_BUDGET)
    e.add_argument("--cert")

    c = sub.add_parser("classify", help="enumerate classes of triples for one (or every) a")
    c.add_argument("--group", required=True)
    c.add_argument("--a", default="0", help="index into Hom(G, Z2) (sorted), or 'all'")
    c.add_argument("--denominator", type=int)
    c.add_argument("--diagonal-only", action="store_true")
    c.add_argument("--unnormalized", action="store_true")

    s = sub.add_parser("synthesize", help="build a pentuple over a diagonal triple")
    s.add_argument("--triple", required=True)
    s.add_argument("--b", default="zero", help="bit string such as 0110, 'zero', or 'random'")
    s.add_argument("--seed", type=int)
    s.add_argument("--out")
    return p


# command handlers return (status, report-fields)

def _read(path, cls):
    obj = read_bundle(path)
    if not isinstance(obj, cls):
        raise InputError(f"{path}: expected a {cls.__name__} bundle")
    return obj


def _violations(vs):
    return [v.to_json() for v in vs]


def cmd_make_group(args):
    if args.cyclic is not None:
        if args.cyclic < 1:
            raise InputError("--cyclic needs N >= 1")
        G = make_cyclic(args.cyclic)
    elif args.dihedral is not None:
        if args.dihedral < 1:
            raise InputError("--dihedral needs N >= 1")
        G = make_dihedral(args.dihedral)
    else:
        G = make_direct_product(_read(args.product[0], FiniteGroup), _read(args.product[1], FiniteGroup))
    out = {"order": G.order, "homs": len(all_z2_homs(G))}
    if args.out:
        write_bundle(G, args.out)
        out["out"] = args.out
    else:
        out["group"] = G.to_json()
    return OK, out


def cmd_validate_triple(args):
    t = _read(args.path, PD0Triple)
    bad = validate_triple(t)
    return (VIOLATION if bad else OK), {"valid": not bad, "diagonal": is_diagonal(t), "violations": _violations(bad)}


def cmd_validate_crt(args):
    p = _read(args.path, CRTPentuple)
    bad = validate_crt(p)
    return (VIOLATION if bad else OK), {"valid": not bad, "violations": _violations(bad)}


def cmd_reduce(args):
    p = _read(args.inp, CRTPentuple)
    try:
        triple, cert = reduce(p)
    except ConstraintViolation as e:
        return VIOLATION, {"reduced": False, "violations": _violations(e.violations)}
    except InternalInconsistency as e:
        return VIOLATION, {"reduced": False, "violations": _violations([e.violation]),
                           "internal_inconsistency": True}
    if args.out:
        write_bundle(triple, args.out)
    if args.cert:
        write_bundle(cert, args.cert)
    return OK, {"reduced": True, "diagonal": is_diagonal(triple),
                "checks": [{"name": v.name, "passed": v.passed} for v in cert.checks],
                "triple_digest": digest(to_json(triple))}


def cmd_equiv(args):
    t1 = _read(args.left, PD0Triple)
    t2 = _read(args.right, PD0Triple)
    if args.budget < 1:
        raise InputError("--budget must be positive")
    for side, t in (("left", t1), ("right", t2)):
        bad = validate_triple(t)
        if bad:
            return VIOLATION, {"status": "invalid-input", "side": side, "violations": _violations(bad)}
    r = equiv(t1, t2, args.budget)
    out = {"status": r.status, "reason": r.reason, "candidates_tried": r.candidates_tried, "budget": args.budget}
    if r.witness is not None:
        out["witness"] = list(r.witness)
    if r.status == EQUIVALENT:
        out["certificate"] = {"m": cochain_to_json(r.certificate.m), "sigma": cochain_to_json(r.certificate.sigma)}
        if args.cert:
            write_bundle(r.certificate, args.cert)
        return OK, out
    return (BUDGET if r.status == BUDGET_EXCEEDED else VIOLATION), out


def cmd_classify(args):
    G = _read(args.group, FiniteGroup)
    homs = all_z2_homs(G)
    if args.a == "all":
        chosen = homs
    else:
        try:
            idx = int(args.a)
        except ValueError:
            raise InputError("--a must be an integer index or 'all'") from None
        if not 0 <= idx < len(homs):
            raise InputError(f"--a index {idx} out of range (group has {len(homs)} homomorphisms)")
        chosen = [homs[idx]]
    try:
        worker_count()
    except ValueError as e:
        raise InputError(str(e)) from None
    N = default_denominator(G) if args.denominator is None else args.denominator
    if N < 1 or N % 2:
        raise InputError("--denominator must be a positive even integer")
    results = []
    total = 0
    for a in chosen:
        cl = classify_sector(G, a, N, diagonal_only=args.diagonal_only, normalized=not args.unnormalized)
        sectors = []
        for s in cl.sectors:
            sectors.append({
                "kappa_digest": digest(cochain_to_json(s.kappa)),
                "solvable": s.solvable,
                "class_count": s.class_count,
                "representatives": [digest(cochain_to_json(t.c)) for t in s.representatives],
            })
        results.append({"a": list(a.values), "class_count": cl.class_count, "sectors": sectors})
        total += cl.class_count
    return OK, {"order": G.order, "denominator": N, "diagonal_only": args.diagonal_only,
                "normalized": not args.unnormalized, "class_count": total, "by_a": results}


def _parse_b(spec, n, seed):
    if spec == "zero":
        return [0] * n
    if spec == "random":
        if seed is None:
            raise InputError("--b random needs --seed")
        return None
    if len(spec) != n or set(spec) - {"0", "1"}:
        raise InputError(f"--b must be 'zero', 'random' or a string of {n} bits")
    return [int(ch) for ch in spec]


def cmd_synthesize(args):
    t = _read(args.triple, PD0Triple)
    b = _parse_b(args.b, t.group.order, args.seed)
    if not is_diagonal(t) or validate_triple(t):
        return VIOLATION, {"synthesized": False, "reason": "input triple must be valid and diagonal"}
    try:
        p = synthesize_pentuple(t, b, args.seed)
    except ConventionDiscrepancy as e:
        return VIOLATION, {"synthesized": False, "convention_discrepancy": True,
                           "violations": _violations(e.violations)}
    if args.out:
        write_bundle(p, args.out)
    return OK, {"synthesized": True, "b": list(p.b), "pentuple_digest": digest(to_json(p))}


HANDLERS = {
    "make-group": cmd_make_group,
    "validate-triple": cmd_validate_triple,
    "validate-crt": cmd_validate_crt,
    "reduce": cmd_reduce,
    "equiv": cmd_equiv,
    "classify": cmd_classify,
    "synthesize": cmd_synthesize,
}


def run(argv):
    """Parse ``argv``, dispatch, and return ``(report, exit_status)``."""
    args = build_parser().parse_args(argv)
    report = {"command": args.command, "version": __version__,
              "options": {k: v for k, v in sorted(vars(args).items())
                          if k not in ("command", "format", "timing") and v is not None}}
    start = time.perf_counter()
    try:
        status, fields = HANDLERS[args.command](args)
    except (ParseError, InvalidGroupError, InputError) as e:
        status, fields = INPUT_ERROR, {"error": type(e).__name__, "message": str(e)}
    except OSError as e:
        status, fields = INPUT_ERROR, {"error": "OSError", "message": str(e)}
    report.update(fields)
    report["exit_status"] = status
    if args.timing:
        report["timing_seconds"] = f"{time.perf_counter() - start:.3f}"
    return report, status, args.format


def emit_report(report, fmt="json"):
    """Serialize a report; json is canonical (sorted keys), text is an indented outline."""
    if fmt == "json":
        return canonical_json(report).encode("utf-8")
    lines = []
    _outline(report, 0, lines)
    return ("\n".join(lines) + "\n").encode("utf-8")


def _outline(x, depth, lines, key=None):
    pad = "  " * depth
    head = f"{pad}{key}:" if key is not None else None
    if isinstance(x, dict):
        if head:
            lines.append(head)
        for k in sorted(x):
            _outline(x[k], depth + (1 if head else 0), lines, k)
    elif isinstance(x, list) and x and isinstance(x[0], (dict, list)):
        if head:
            lines.append(head)
        for i, item in enumerate(x):
            _outline(item, depth + 1, lines, f"[{i}]")
    else:
        val = json.dumps(x) if isinstance(x, list) else str(x)
        lines.append(f"{head} {val}" if head else f"{pad}{val}")


def main(argv=None):
    report, status, fmt = run(sys.argv[1:] if argv is None else argv)
    sys.stdout.buffer.write(emit_report(report, fmt))
    sys.stdout.flush()
    return status


if __name__ == "__main__":
    sys.exit(main())
