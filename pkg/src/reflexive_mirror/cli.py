"""Command line interface: ``reflexive-mirror <command> ...``."""
from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from .errors import InternalTheoremViolation, NotReflexive, ReflexiveMirrorError
from .hodge import mirror_check_xi, mirror_check_z, x_invariants, y_invariants
from .identities import verify_identities
from .lambda_invariant import p3_derivation
from .normal_form import normal_form
from .pipeline import (_stats_summary, batch_compute, classify, emit_table,
                       format_vertex_file, parse_vertex_file)
from .polytope import is_reflexive, polar_dual

log = logging.getLogger("reflexive_mirror")

EXIT_OK, EXIT_INPUT, EXIT_THEOREM = 0, 1, 2


def _default_jobs():
    try:
        return len(os.sched_getaffinity(0))
    except AttributeError:
        return os.cpu_count() or 1


def _load(path):
    if path == "-":
        return parse_vertex_file(sys.stdin)
    with open(path) as fh:
        return parse_vertex_file(fh)


def _write(args, data):
    if isinstance(data, str):
        data = data.encode()
    if args.output and args.output != "-":
        with open(args.output, "wb") as fh:
            fh.write(data)
    else:
        sys.stdout.buffer.write(data)
        sys.stdout.flush()


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _each_reflexive(args, polytopes):
    """Yield (id, polytope) for reflexive inputs; others abort or are
    reported, depending on --lenient."""
    for i, P in enumerate(polytopes, 1):
        if is_reflexive(P):
            yield i, P
        elif args.lenient:
            log.warning("polytope %d is not reflexive; skipped", i)
        else:
            raise NotReflexive(f"polytope {i} {list(P.vertices)} is not reflexive")


def cmd_check(args):
    out = []
    for i, P in enumerate(_load(args.file), 1):
        entry = {"id": i, "vertices": [list(v) for v in P.vertices],
                 "reflexive": is_reflexive(P)}
        if entry["reflexive"]:
            entry["identities"] = verify_identities(P, i).as_dict()
        elif not args.lenient:
            _write(args, _json(out + [entry]))
            raise NotReflexive(f"polytope {i} is not reflexive")
        out.append(entry)
    _write(args, _json(out))
    if any(e.get("identities", {}).get("passed") is False for e in out):
        raise InternalTheoremViolation("an identity failed")


def cmd_dual(args):
    duals = [polar_dual(P) for _, P in _each_reflexive(args, _load(args.file))]
    _write(args, format_vertex_file(duals))


def cmd_stats(args):
    out = []
    for i, P in enumerate(_load(args.file), 1):
        entry = {"id": i, "reflexive": is_reflexive(P), "polytope": _stats_summary(P)}
        if entry["reflexive"]:
            entry["dual"] = _stats_summary(polar_dual(P))
        out.append(entry)
    _write(args, _json(out))


def _pair(p):
    return {"h11": p.h11, "h12": p.h12}


def cmd_hodge(args):
    records = batch_compute(_load(args.file), jobs=args.jobs, lenient=args.lenient)
    out = []
    for r in records:
        if not r.ok:
            out.append({"id": r.id, "error": r.error})
            continue
        out.append({
            "id": r.id,
            "x": vars(r.x_inv),
            "y_dual": {k: v for k, v in vars(r.y_inv_dual).items() if k != "vertex_genera"},
            "xi_x": _pair(r.hodge_xi_x),
            "xi_y": _pair(r.hodge_xi_y),
            "z": _pair(r.hodge_z),
            "z_dual": _pair(r.hodge_z_dual),
        })
    _write(args, _json(out))


def cmd_mirror(args):
    out = []
    failed = False
    for i, P in _each_reflexive(args, _load(args.file)):
        mx, mz = mirror_check_xi(P), mirror_check_z(P)
        failed |= not (mx.passed and mz.passed)
        out.append({
            "id": i,
            "xi": mx.as_dict(),
            "z": mz.as_dict(),
            "quasi_fano_pair": {"x": vars(x_invariants(P)),
                                "y_dual": {"h2": (y := y_invariants(polar_dual(P))).h2,
                                           "h3": y.h3, "alpha": y.alpha, "k": y.k}},
        })
    _write(args, _json(out))
    if failed:
        raise InternalTheoremViolation("a mirror relation failed")


def cmd_classify(args):
    records = batch_compute(_load(args.file), jobs=args.jobs, lenient=args.lenient)
    _write(args, _json(classify(records).as_dict()))


def cmd_table(args):
    records = batch_compute(_load(args.file), jobs=args.jobs, lenient=args.lenient)
    _write(args, emit_table(records, args.format, args.which))


def cmd_lambda(args):
    _write(args, _json(p3_derivation()))


def cmd_normal_form(args):
    out = [{"id": i, "normal_form": [list(v) for v in normal_form(P)]}
           for i, P in _each_reflexive(args, _load(args.file))]
    _write(args, _json(out))


COMMANDS = {
    "check": (cmd_check, "reflexivity and identity report per block"),
    "dual": (cmd_dual, "polar duals in the same vertex format"),
    "stats": (cmd_stats, "f-vectors, l / l* per face, volumes"),
    "hodge": (cmd_hodge, "Hodge pairs of the four Calabi-Yau families"),
    "mirror": (cmd_mirror, "mirror relation reports"),
    "classify": (cmd_classify, "dedup by normal form and self-dual census"),
    "table": (cmd_table, "emit table 1 or 2 as CSV or JSON"),
    "lambda": (cmd_lambda, "lambda invariant of the P^3 example"),
    "normal-form": (cmd_normal_form, "canonical vertex matrices"),
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--lenient", action="store_true",
                        help="skip or record non-reflexive inputs instead of aborting")
    common.add_argument("--jobs", type=int, default=_default_jobs(),
                        help="worker processes for batch commands")
    common.add_argument("-o", "--output", help="output file (default: stdout)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(
        prog="reflexive-mirror",
        description="Reflexive 3-polytopes, polar duality and Calabi-Yau Hodge numbers.")
    sub = parser.add_subparsers(dest="command", required=True)
    for name, (func, help_text) in COMMANDS.items():
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        if name != "lambda":
            p.add_argument("file", help="vertex file, or - for stdin")
        if name == "table":
            p.add_argument("--which", choices=["1", "2"], required=True)
            p.add_argument("--format", choices=["csv", "json"], default="csv")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s: %(message)s")
    try:
        args.func(args)
    except InternalTheoremViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except (ReflexiveMirrorError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
