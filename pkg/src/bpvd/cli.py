"""Command-line front end: recognition, structure analysis, exact and
approximate solving, brute-force oracle, instance generation, verification.

Exit codes: 0 success/YES, 20 NO (or failed verification), 2 usage or parse
error, 3 contract violation (e.g. analyzing a hole-free graph).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .errors import BpvdError, ContractViolation, ParseError
from .graph import Graph, connected_components, induced_subgraph, parse_graph, serialize_graph
from .instances import GenSpec, generate
from .patterns import find_forbidden_set, find_shortest_hole, is_bpg
from .solver import Instance, Solution, approx9, oracle_solve, solve_fpt
from .structure import build_local_orders, classify_around_hole, verify_structure

EXIT_OK = 0
EXIT_NO = 20
EXIT_USAGE = 2
EXIT_CONTRACT = 3

__all__ = ["RunConfig", "run", "main", "EXIT_OK", "EXIT_NO", "EXIT_USAGE", "EXIT_CONTRACT"]


@dataclass
class RunConfig:
    verb: str
    input_path: str = "-"
    k: int | None = None
    output_json: bool = False
    workers: int = 1
    minimize: bool = False
    verify: bool = True
    max_n: int = 12
    deleted_path: str | None = None
    gen: dict = field(default_factory=dict)
    out_path: str = "-"


def _read_graph(path: str) -> Graph:
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def _emit(cfg: RunConfig, payload: dict, human_lines: list[str]) -> None:
    if cfg.output_json:
        print(json.dumps(payload, sort_keys=True))
    else:
        for line in human_lines:
            print(line)


def _labels(g: Graph, vertices) -> list[int]:
    return sorted(g.label(v) for v in vertices)


def _solution_payload(g: Graph, answer: str, k: int | None, sol: Solution | None, stats) -> dict:
    payload = {
        "answer": answer,
        "k": k,
        "deleted": _labels(g, sol.deleted) if sol else [],
        "branch_deleted": _labels(g, sol.branch_deletions) if sol else [],
        "cut_deleted": _labels(g, sol.cut_deletions) if sol else [],
        "stats": stats.to_json(),
    }
    return payload


def _check_solution(g: Graph, deleted) -> bool:
    keep = [v for v in range(g.n) if v not in set(deleted)]
    sub, _ = induced_subgraph(g, keep)
    return is_bpg(sub)


def _run_recognize(cfg: RunConfig) -> int:
    g = _read_graph(cfg.input_path)
    fs = find_forbidden_set(g)
    if fs is not None:
        payload = {"class": "neither", "witness": fs.to_json(g)}
        lines = [f"neither (forbidden {fs.kind.value}: {fs.to_json(g)['vertices']})"]
    else:
        hole = find_shortest_hole(g)
        if hole is not None:
            payload = {"class": "almost-bpg", "witness": hole.to_json(g)}
            lines = [f"almost bipartite permutation graph (hole of length {hole.m})"]
        else:
            payload = {"class": "bpg", "witness": None}
            lines = ["bipartite permutation graph"]
    _emit(cfg, payload, lines)
    return EXIT_OK


def _run_analyze(cfg: RunConfig) -> int:
    g = _read_graph(cfg.input_path)
    if len(connected_components(g)) != 1:
        raise ContractViolation("analyze requires a connected graph")
    fs = find_forbidden_set(g)
    if fs is not None:
        raise ContractViolation(
            f"analyze requires an almost bipartite permutation graph "
            f"(found {fs.kind.value})"
        )
    hole = find_shortest_hole(g)
    if hole is None:
        raise ContractViolation("analyze requires a graph with a hole")
    p = build_local_orders(g, classify_around_hole(g, hole))
    report = verify_structure(g, p)
    payload = {
        "hole": [g.label(v) for v in hole.cycle],
        "m": p.m,
        "parity": p.parity,
        "classes": {
            "A": [[g.label(v) for v in cls] for cls in p.class_a],
            "B": [[g.label(v) for v in cls] for cls in p.class_b],
        },
        "report": report.to_json(),
    }
    lines = [
        f"hole length {p.m} ({p.parity})",
        f"classes A: {payload['classes']['A']}",
        f"classes B: {payload['classes']['B']}",
        f"verification: {'all checks pass' if report.passed else 'FAILURES: ' + '; '.join(report.failures)}",
    ]
    _emit(cfg, payload, lines)
    return EXIT_OK


def _run_solve(cfg: RunConfig) -> int:
    g = _read_graph(cfg.input_path)
    result = solve_fpt(Instance(g, cfg.k), minimize=cfg.minimize)
    answer = "yes" if result.is_yes else "no"
    payload = _solution_payload(g, answer, cfg.k, result.solution, result.stats)
    if cfg.verify and result.is_yes:
        payload["verified"] = _check_solution(g, result.solution.deleted)
    lines = [f"{answer} (k={cfg.k})"]
    if result.is_yes:
        lines.append(f"deleted: {payload['deleted']}")
    _emit(cfg, payload, lines)
    return EXIT_OK if result.is_yes else EXIT_NO


def _run_approx(cfg: RunConfig) -> int:
    g = _read_graph(cfg.input_path)
    sol = approx9(g)
    payload = {
        "answer": "yes",
        "size": len(sol.deleted),
        "deleted": _labels(g, sol.deleted),
        "branch_deleted": _labels(g, sol.branch_deletions),
        "cut_deleted": _labels(g, sol.cut_deletions),
        "stats": sol.stats.to_json(),
    }
    if cfg.verify:
        payload["verified"] = _check_solution(g, sol.deleted)
    _emit(cfg, payload, [f"deleted {len(sol.deleted)} vertices: {payload['deleted']}"])
    return EXIT_OK


def _run_oracle(cfg: RunConfig) -> int:
    g = _read_graph(cfg.input_path)
    best = oracle_solve(g, max_n=cfg.max_n)
    payload = {"optimum": len(best), "deleted": _labels(g, best)}
    if cfg.verify:
        payload["verified"] = _check_solution(g, best)
    _emit(cfg, payload, [f"optimum {len(best)}: {payload['deleted']}"])
    return EXIT_OK


def _run_verify(cfg: RunConfig) -> int:
    g = _read_graph(cfg.input_path)
    text = Path(cfg.deleted_path).read_text()
    try:
        data = json.loads(text)
        ids = data["deleted"] if isinstance(data, dict) else data
    except json.JSONDecodeError:
        ids = [int(tok) for tok in text.split()]
    label_to_internal = {g.label(v): v for v in range(g.n)}
    try:
        deleted = {label_to_internal[x] for x in ids}
    except KeyError as exc:
        raise ContractViolation(f"unknown vertex id {exc.args[0]} in deletion set") from exc
    valid = _check_solution(g, deleted)
    _emit(cfg, {"valid": valid, "size": len(deleted)},
          [f"{'valid' if valid else 'invalid'} deletion set of size {len(deleted)}"])
    return EXIT_OK if valid else EXIT_NO


_GEN_PARAM_NAMES = {
    "staircase": ("nu", "nw"),
    "cycle": ("m",),
    "thickened_cycle": ("m", "extra_a", "extra_b"),
}


def _family_params(family: str, source: dict) -> dict:
    return {name: source[name] for name in _GEN_PARAM_NAMES[family] if source.get(name) is not None}


def _run_gen(cfg: RunConfig) -> int:
    params = cfg.gen
    family = params["family"]
    if family == "planted":
        base_family = params["base_family"]
        base_seed = params["base_seed"] if params.get("base_seed") is not None else params["seed"]
        base = GenSpec(base_family, _family_params(base_family, params), base_seed)
        spec = GenSpec("planted", {"base": base, "q": params["q"]}, params["seed"])
    else:
        spec = GenSpec(family, _family_params(family, params), params["seed"])
    g, sidecar = generate(spec)
    text = serialize_graph(g)
    if cfg.out_path == "-":
        sys.stdout.write(text)
        print(json.dumps(sidecar, sort_keys=True), file=sys.stderr)
    else:
        Path(cfg.out_path).write_text(text)
        Path(cfg.out_path + ".json").write_text(json.dumps(sidecar, sort_keys=True) + "\n")
    return EXIT_OK


_VERBS = {
    "recognize": _run_recognize,
    "analyze": _run_analyze,
    "solve": _run_solve,
    "approx": _run_approx,
    "oracle": _run_oracle,
    "verify": _run_verify,
    "gen": _run_gen,
}


def run(cfg: RunConfig) -> int:
    """Execute one verb; maps package errors to documented exit codes."""
    if cfg.workers < 1:
        raise ContractViolation("worker count must be >= 1")
    return _VERBS[cfg.verb](cfg)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bpvd",
        description="Vertex deletion to bipartite permutation graphs: "
        "recognition, structure analysis, exact and approximate solving.",
    )
    sub = parser.add_subparsers(dest="verb", required=True)

    def common(p, with_input=True):
        if with_input:
            p.add_argument("input", nargs="?", default="-",
                           help="graph file in 'p edge' format, or - for stdin")
        p.add_argument("--json", action="store_true", help="emit one JSON object")
        p.add_argument("--workers", type=int, default=1,
                       help="worker count (reserved; execution is sequential)")

    common(sub.add_parser("recognize", help="classify the input graph"))
    common(sub.add_parser("analyze", help="dump the shortest-hole structure"))
    p = sub.add_parser("solve", help="exact bounded vertex deletion")
    common(p)
    p.add_argument("--k", type=int, required=True, help="deletion budget (>= 0)")
    p.add_argument("--minimize", action="store_true",
                   help="greedily shrink the returned solution")
    p.add_argument("--no-verify", action="store_true",
                   help="skip the independent re-check of the solution")
    p = sub.add_parser("approx", help="factor-9 approximate deletion")
    common(p)
    p.add_argument("--no-verify", action="store_true")
    p = sub.add_parser("oracle", help="brute-force optimum (small graphs)")
    common(p)
    p.add_argument("--max-n", type=int, default=12, help="refuse larger graphs")
    p.add_argument("--no-verify", action="store_true")
    p = sub.add_parser("verify", help="check a claimed deletion set")
    common(p)
    p.add_argument("--deleted", required=True,
                   help="file with the deletion set (JSON with a 'deleted' key, "
                        "or whitespace-separated 1-based ids)")
    p = sub.add_parser("gen", help="generate a seeded instance")
    common(p, with_input=False)
    p.add_argument("--family", required=True,
                   choices=["staircase", "cycle", "thickened_cycle", "planted"])
    p.add_argument("--nu", type=int)
    p.add_argument("--nw", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--extra-a", type=int, default=0)
    p.add_argument("--extra-b", type=int, default=0)
    p.add_argument("--q", type=int)
    p.add_argument("--base-family", choices=["staircase", "cycle", "thickened_cycle"])
    p.add_argument("--base-seed", type=int)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--out", default="-",
                   help="output path (sidecar goes to PATH.json); - for stdout")
    return parser


_GEN_REQUIRED = {
    "staircase": ("nu", "nw"),
    "cycle": ("m",),
    "thickened_cycle": ("m",),
    "planted": ("q", "base_family"),
}


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    cfg = RunConfig(verb=args.verb)
    cfg.output_json = getattr(args, "json", False)
    cfg.workers = getattr(args, "workers", 1)
    cfg.input_path = getattr(args, "input", "-")
    cfg.k = getattr(args, "k", None)
    cfg.minimize = getattr(args, "minimize", False)
    cfg.verify = not getattr(args, "no_verify", False)
    cfg.max_n = getattr(args, "max_n", 12)
    cfg.deleted_path = getattr(args, "deleted", None)
    if args.verb == "solve" and cfg.k < 0:
        parser.error("--k must be >= 0")
    if cfg.workers < 1:
        parser.error("--workers must be >= 1")
    if args.verb == "gen":
        for name in _GEN_REQUIRED[args.family]:
            if getattr(args, name) is None:
                parser.error(f"--family {args.family} requires --{name.replace('_', '-')}")
        if args.base_family in ("staircase",) and (args.nu is None or args.nw is None):
            parser.error("--base-family staircase requires --nu and --nw")
        if args.base_family in ("cycle", "thickened_cycle") and args.m is None:
            parser.error(f"--base-family {args.base_family} requires --m")
        cfg.gen = {
            "family": args.family,
            "nu": args.nu,
            "nw": args.nw,
            "m": args.m,
            "extra_a": args.extra_a,
            "extra_b": args.extra_b,
            "q": args.q,
            "base_family": args.base_family,
            "base_seed": args.base_seed,
            "seed": args.seed,
        }
        cfg.out_path = args.out
    try:
        return run(cfg)
    except ParseError as exc:
        print(f"bpvd: parse error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except FileNotFoundError as exc:
        print(f"bpvd: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except BpvdError as exc:
        print(f"bpvd: {exc}", file=sys.stderr)
        return EXIT_CONTRACT


if __name__ == "__main__":
    sys.exit(main())
