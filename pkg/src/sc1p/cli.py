"""Command-line front end.

Every subcommand prints exactly one JSON document on stdout (except gen,
which prints a matrix) with sorted keys and no whitespace, so repeated
runs are byte-identical; human-readable notes and real timings go to
stderr.  Exit codes: 0 yes, 1 no, 2 parse error, 3 unsupported
combination, 4 resource guard.
"""

import argparse
import hashlib
import json
import os
import sys
import time

from .forbidden import find_forbidden
from .generate import gen_instance
from .graphs import Graph, GraphFormatError
from .matrix import (BinaryMatrix, Certificate, MatrixFormatError, ProblemKind,
                     classify, verify_certificate)
from .oracle import OracleGuardError, oracle
from .recognize import has_sc1p
from .reductions import reduce_chain_completion, reduce_chain_editing, reduce_hampath
from .solvers import (SearchStats, approx_solve, solve_22, solve_restricted_sc1p_1e,
                      solve_restricted_sc1s, solve_sc1p_0e, solve_sc1s_c,
                      solve_sc1s_r, solve_sc1s_rc)

EXIT_YES = 0
EXIT_NO = 1
EXIT_PARSE = 2
EXIT_UNSUPPORTED = 3
EXIT_GUARD = 4

_PROBLEMS = [kind.value for kind in ProblemKind]


class UnsupportedCombination(Exception):
    pass


def _read_file(path):
    with open(path, "rb") as fh:
        return fh.read()


def _sha256(data):
    return hashlib.sha256(data).hexdigest()


def _emit(obj):
    sys.stdout.write(json.dumps(obj, sort_keys=True, separators=(",", ":")) + "\n")


def _note(text):
    sys.stderr.write(text + "\n")


def _flip_arrow(source):
    return "0->1" if source == 0 else "1->0"


def _certificate_json(cert):
    if cert is None:
        return None
    flips = sorted((r, c, src) for r, c, src in cert.flips)
    return {
        "cost": cert.cost,
        "deleted_cols": sorted(cert.deleted_cols),
        "deleted_rows": sorted(cert.deleted_rows),
        "flips": [[r, c, _flip_arrow(src)] for r, c, src in flips],
        "from_reduced_graph": cert.from_reduced_graph,
    }


def _parse_certificate(text):
    data = json.loads(text)
    if not isinstance(data, dict):
        raise ValueError("certificate must be a JSON object")
    flips = set()
    for item in data.get("flips", []):
        r, c, arrow = item
        if arrow not in ("0->1", "1->0"):
            raise ValueError(f"bad flip direction {arrow!r}")
        flips.add((r, c, 0 if arrow == "0->1" else 1))
    deleted_rows = frozenset(data.get("deleted_rows", []))
    deleted_cols = frozenset(data.get("deleted_cols", []))
    cost = data.get("cost", len(deleted_rows) + len(deleted_cols) + len(flips))
    return Certificate(deleted_rows=deleted_rows, deleted_cols=deleted_cols,
                       flips=frozenset(flips), cost=cost,
                       from_reduced_graph=bool(data.get("from_reduced_graph", False)))


def _stats_json(stats):
    if stats is None:
        return None
    return {
        "cycle_phase_nodes": stats.cycle_phase_nodes,
        "fixed_phase_nodes": stats.fixed_phase_nodes,
        "nodes_expanded": stats.nodes_expanded,
    }


# ------------------------------------------------------------- subcommands

def cmd_check(args):
    raw = _read_file(args.matrix)
    m = BinaryMatrix.parse(raw.decode("ascii"))
    start = time.perf_counter()
    witness = has_sc1p(m)
    forbidden = None if witness is not None else find_forbidden(m)
    elapsed = (time.perf_counter() - start) * 1000
    out = {
        "answer": "yes" if witness is not None else "no",
        "forbidden": None if forbidden is None else {
            "cols": list(forbidden.col_labels),
            "k": forbidden.pattern.k,
            "kind": forbidden.pattern.kind,
            "rows": list(forbidden.row_labels),
        },
        "input_sha256": _sha256(raw),
        "problem": "recognize",
        "time_ms": None,
        "witness": None if witness is None else {
            "col_order": list(witness.col_order),
            "row_order": list(witness.row_order),
        },
    }
    _emit(out)
    _note(f"check: {m.nrows}x{m.ncols} answer={out['answer']} ({elapsed:.2f} ms)")
    return EXIT_YES if witness is not None else EXIT_NO


_RESTRICTED_TARGET = {
    ProblemKind.SC1S_R: "rows",
    ProblemKind.SC1S_C: "cols",
    ProblemKind.SC1S_RC: "both",
}


def _dispatch_fpt(m, problem, budget, threads):
    """(2,2) polynomial path, then the bounded-class solvers, then general."""
    tag = classify(m).tag
    if tag == "(2,2)":
        return solve_22(m, budget, problem), None
    stats = SearchStats()
    if problem in _RESTRICTED_TARGET:
        if tag in ("(2,*)", "(*,2)"):
            cert = solve_restricted_sc1s(m, budget, _RESTRICTED_TARGET[problem],
                                         stats=stats, threads=threads)
        elif problem is ProblemKind.SC1S_R:
            cert = solve_sc1s_r(m, budget, stats=stats, threads=threads)
        elif problem is ProblemKind.SC1S_C:
            cert = solve_sc1s_c(m, budget, stats=stats, threads=threads)
        else:
            cert = solve_sc1s_rc(m, budget, stats=stats, threads=threads)
        return cert, stats
    if problem is ProblemKind.SC1P_0E:
        return solve_sc1p_0e(m, budget, stats=stats, threads=threads), stats
    if problem is ProblemKind.SC1P_1E and tag in ("(2,*)", "(*,2)"):
        return solve_restricted_sc1p_1e(m, budget, stats=stats, threads=threads), stats
    raise UnsupportedCombination(
        f"no exact solver for {problem} on a {tag} matrix; try --mode oracle")


def cmd_solve(args):
    raw = _read_file(args.matrix)
    m = BinaryMatrix.parse(raw.decode("ascii"))
    problem = ProblemKind.from_string(args.problem)
    budget = args.budget
    start = time.perf_counter()
    stats = None
    if args.mode == "oracle":
        cert = oracle(m, budget, problem, threads=args.threads)
        answer_yes = cert is not None
    elif args.mode == "approx":
        tag = classify(m).tag
        if tag == "(*,*)" or problem not in (*_RESTRICTED_TARGET, ProblemKind.SC1P_1E):
            raise UnsupportedCombination(
                f"approx supports sc1s-r/c/rc and sc1p-1e on bounded classes, "
                f"not {problem} on {tag}; try --mode oracle")
        cert = approx_solve(m, problem)
        answer_yes = cert.cost <= budget
    else:
        cert, stats = _dispatch_fpt(m, problem, budget, args.threads)
        answer_yes = cert is not None
    elapsed = (time.perf_counter() - start) * 1000
    if answer_yes:
        check = verify_certificate(m, cert, problem, budget)
        if not check.ok:
            raise RuntimeError(f"internal: produced certificate fails verification"
                               f" ({check.reason})")
    show_cert = cert if (answer_yes or args.mode == "approx") else None
    out = {
        "answer": "yes" if answer_yes else "no",
        "budget": budget,
        "certificate": _certificate_json(show_cert),
        "input_sha256": _sha256(raw),
        "problem": problem.value,
        "stats": _stats_json(stats),
        "time_ms": None,
    }
    _emit(out)
    _note(f"solve {problem.value} budget={budget} mode={args.mode}: "
          f"answer={out['answer']} ({elapsed:.2f} ms)")
    return EXIT_YES if answer_yes else EXIT_NO


def _parse_parts(text):
    sides = text.split("/")
    if len(sides) != 2:
        raise ValueError("parts must be two comma-separated lists joined by '/'")
    out = []
    for side in sides:
        if side == "":
            out.append(())
            continue
        labels = []
        for token in side.split(","):
            if not token.isdigit():
                raise ValueError(f"bad vertex {token!r} in parts")
            labels.append(int(token))
        out.append(tuple(labels))
    return tuple(out)


def cmd_reduce(args):
    raw = _read_file(args.graph)
    g = Graph.parse(raw.decode("ascii"))
    parts = _parse_parts(args.parts) if args.parts is not None else None
    start = time.perf_counter()
    try:
        if args.kind == "hampath":
            matrix, budget = reduce_hampath(g)
        elif args.kind == "chain-completion":
            matrix, budget = reduce_chain_completion(g, parts), None
        else:
            matrix, budget = reduce_chain_editing(g, parts), None
    except ValueError as exc:
        _note(f"reduce: {exc}")
        return EXIT_UNSUPPORTED
    elapsed = (time.perf_counter() - start) * 1000
    text = matrix.to_text()
    if args.out is not None:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    out = {
        "budget": budget,
        "input_sha256": _sha256(raw),
        "kind": args.kind,
        "matrix": text,
        "time_ms": None,
    }
    _emit(out)
    _note(f"reduce {args.kind}: {matrix.nrows}x{matrix.ncols} matrix "
          f"({elapsed:.2f} ms)")
    return EXIT_YES


def cmd_verify(args):
    raw = _read_file(args.matrix)
    m = BinaryMatrix.parse(raw.decode("ascii"))
    cert_raw = _read_file(args.certificate)
    cert = _parse_certificate(cert_raw.decode("ascii"))
    problem = ProblemKind.from_string(args.problem)
    start = time.perf_counter()
    result = verify_certificate(m, cert, problem, args.budget)
    elapsed = (time.perf_counter() - start) * 1000
    out = {
        "answer": "yes" if result.ok else "no",
        "budget": args.budget,
        "input_sha256": _sha256(raw),
        "problem": problem.value,
        "reason": result.reason,
        "time_ms": None,
    }
    _emit(out)
    _note(f"verify {problem.value} budget={args.budget}: answer={out['answer']}"
          f"{' reason=' + result.reason if result.reason else ''}"
          f" ({elapsed:.2f} ms)")
    return EXIT_YES if result.ok else EXIT_NO


def cmd_gen(args):
    seed = args.seed
    env_seed = os.environ.get("SC1P_SEED")
    if env_seed is not None:
        if not env_seed.isdigit():
            raise ValueError("SC1P_SEED must be an unsigned decimal")
        seed = int(env_seed)
    if not 0 <= seed < 1 << 64:
        raise ValueError("seed must fit in 64 unsigned bits")
    m = gen_instance(args.rows, args.cols, density=args.density,
                     planted_flips=args.planted_flips, seed=seed)
    text = m.to_text()
    if args.out is not None:
        with open(args.out, "w", encoding="ascii") as fh:
            fh.write(text)
    sys.stdout.write(text)
    _note(f"gen: {m.nrows}x{m.ncols} seed={seed}")
    return EXIT_YES


def _build_parser():
    parser = argparse.ArgumentParser(
        prog="sc1p",
        description="Recognize and repair the simultaneous consecutive ones "
                    "property on binary matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="recognize SC1P and report a witness or hit")
    p.add_argument("matrix", help="matrix file")
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("solve", help="decide a deletion/flipping problem")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("--problem", required=True, choices=_PROBLEMS)
    p.add_argument("--budget", required=True, type=int)
    p.add_argument("--mode", default="auto",
                   choices=["auto", "fpt", "oracle", "approx"])
    p.add_argument("--threads", default=1, type=int)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("reduce", help="build a hardness-reduction instance")
    p.add_argument("graph", help="graph file")
    p.add_argument("--kind", required=True,
                   choices=["hampath", "chain-completion", "chain-editing"])
    p.add_argument("--parts", default=None,
                   help="bipartition as two comma lists joined by '/', e.g. 0,2/1,3")
    p.add_argument("--out", default=None, help="also write the matrix to a file")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("verify", help="check a certificate file")
    p.add_argument("matrix", help="matrix file")
    p.add_argument("certificate", help="certificate JSON file")
    p.add_argument("--problem", required=True, choices=_PROBLEMS)
    p.add_argument("--budget", required=True, type=int)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="generate a random instance")
    p.add_argument("--rows", required=True, type=int)
    p.add_argument("--cols", required=True, type=int)
    p.add_argument("--density", default=None, type=float)
    p.add_argument("--planted-flips", dest="planted_flips", default=None, type=int)
    p.add_argument("--seed", default=0, type=int)
    p.add_argument("--out", default=None, help="also write the matrix to a file")
    p.set_defaults(func=cmd_gen)

    return parser


def main(argv=None):
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "threads", 1) < 1:
        _note("error: --threads must be at least 1")
        return EXIT_PARSE
    try:
        return args.func(args)
    except (MatrixFormatError, GraphFormatError) as exc:
        _note(f"error: {exc}")
        return EXIT_PARSE
    except OracleGuardError as exc:
        _note(f"error: {exc}")
        return EXIT_GUARD
    except UnsupportedCombination as exc:
        _note(f"error: {exc}")
        return EXIT_UNSUPPORTED
    except OSError as exc:
        _note(f"error: {exc}")
        return EXIT_PARSE
    except (ValueError, json.JSONDecodeError, UnicodeDecodeError) as exc:
        _note(f"error: {exc}")
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
