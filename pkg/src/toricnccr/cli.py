"""Command line interface: ``toricnccr {analyze,cliques,mutate,graph,check}``.

Exit codes: 0 ok, 2 input error, 3 hypothesis violation, 4 falsified
invariant, 5 search budget exceeded.
"""
from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import __version__
from .cliques import enumerate_maximal_cliques, format_clique, parse_clique
from .cm_general import check_hypotheses, cm_verdicts
from .errors import BudgetExceeded, ConfigError, Falsification, HypothesisViolated
from .mutation import check_tilting_certificate, mutation_graph, normalize_to_standard
from .semigroup import build_rank1, cm_set
from .suite import all_passed, check_config, random_rank1_suite
from .weights import config_from_document, profile, sigma_zonotope

SCHEMA_VERSION = 1

EXIT_OK, EXIT_INPUT, EXIT_HYPOTHESIS, EXIT_FALSIFIED, EXIT_BUDGET = 0, 2, 3, 4, 5


class _HypothesisExit(Exception):
    """A report was produced but a required predicate failed."""


def _read_config(path):
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read {path}: {exc}") from exc
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"cannot parse {path}: {exc}") from exc
    return config_from_document(doc), doc


def _parse_mu(text: str, rank: int) -> tuple:
    try:
        mu = tuple(int(tok) for tok in text.split(","))
    except ValueError as exc:
        raise ConfigError(f"bad character {text!r}") from exc
    if len(mu) != rank:
        raise ConfigError(f"dimension mismatch: character {text!r} has length {len(mu)}, rank is {rank}")
    return mu


def _emit(doc, path, out):
    text = json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if path == "-":
        out.write(text)
    elif path:
        Path(path).write_text(text)


def _clique_str(c) -> str:
    return "{" + format_clique(c) + "}"


def cmd_analyze(args, out):
    config, raw = _read_config(args.config)
    prof = profile(config)
    zono = sigma_zonotope(config)
    doc = {"schema_version": SCHEMA_VERSION, "command": "analyze", "input": raw,
           "profile": prof.as_document(), "sigma": zono.describe()}
    print(f"config: rank {config.rank}, weights {config}", file=out)
    for key, val in prof.as_document().items():
        print(f"{key}: {str(val).lower() if isinstance(val, bool) else val}", file=out)
    print(f"sigma: {zono.describe()}", file=out)

    failed = check_hypotheses(config)
    violated = False
    if config.rank == 1:
        try:
            data = build_rank1(config)
        except ConfigError as exc:
            data = None
            doc["rank1_error"] = str(exc)
            print(f"rank-one data unavailable: {exc}", file=out)
        if data is not None:
            doc.update({"N": data.N, "frobenius": data.F, "B": data.B})
            print(f"N: {data.N}\nfrobenius: {data.F}\nB: {data.B}", file=out)
            if not failed:
                cms = cm_set(data)
                doc["cm_set"] = cms
                print(f"cm_set: {_clique_str(cms)}", file=out)
    if args.mu:
        mus = [_parse_mu(m, config.rank) for m in args.mu]
        if failed:
            violated = True
        else:
            verdicts = cm_verdicts(config, mus)
            doc["cm_verdicts"] = {",".join(map(str, mu)): v for mu, v in verdicts.items()}
            for mu, v in verdicts.items():
                print(f"mu=({','.join(map(str, mu))}): {'CM' if v else 'not CM'}", file=out)
    if failed and (args.mu or config.rank == 1):
        violated = True
    if violated:
        msg = "; ".join(f"{p}: false" for p in failed) + "; CM criterion unavailable"
        doc["hypothesis_violated"] = failed
        print(msg, file=out)
    _emit(doc, args.json, out)
    if violated:
        raise _HypothesisExit(msg)


def _rank1(args):
    config, raw = _read_config(args.config)
    if config.rank != 1:
        raise ConfigError("clique and mutation commands need a rank-one configuration")
    failed = check_hypotheses(config)
    if failed:
        raise HypothesisViolated(failed)
    return config, raw, build_rank1(config)


def cmd_cliques(args, out):
    config, raw, data = _rank1(args)
    cliques = enumerate_maximal_cliques(data, args.algorithm)
    sizes = sorted({len(c) for c in cliques})
    print(f"config: {config}\nN: {data.N}\nalgorithm: {args.algorithm}\ncount: {len(cliques)}", file=out)
    print(f"sizes: {','.join(map(str, sizes))}", file=out)
    if not args.count_only:
        for c in cliques:
            print(_clique_str(c), file=out)
    doc = {"schema_version": SCHEMA_VERSION, "command": "cliques", "input": raw, "N": data.N,
           "algorithm": args.algorithm, "count": len(cliques), "sizes": sizes}
    if not args.count_only:
        doc["cliques"] = [list(c) for c in cliques]
    _emit(doc, args.json, out)


def cmd_mutate(args, out):
    config, raw, data = _rank1(args)
    clique = parse_clique(args.clique)
    path = normalize_to_standard(data, clique)
    print(f"config: {config}\nN: {data.N}\ninput: {_clique_str(clique)}\nstart: {_clique_str(path.start)}",
          file=out)
    steps = []
    for k, st in enumerate(path.steps, 1):
        rep = check_tilting_certificate(data, st)
        print(f"step {k}: {_clique_str(st.before)} remove {st.removed} add {st.added} "
              f"-> {_clique_str(st.after_raw)} shift {st.translation:+d} -> {_clique_str(st.after)} "
              f"[certificate {'ok' if rep.ok else 'FAILED'}]", file=out)
        steps.append({"before": list(st.before), "removed": st.removed, "added": st.added,
                      "after_raw": list(st.after_raw), "translation": st.translation,
                      "after": list(st.after), "certificate_ok": rep.ok})
    print(f"end: {_clique_str(path.end)}\nsteps: {len(path)}", file=out)
    _emit({"schema_version": SCHEMA_VERSION, "command": "mutate", "input": raw,
           "clique": list(clique), "start": list(path.start), "end": list(path.end),
           "steps": steps}, args.json, out)


def graph_to_dot(graph, config) -> str:
    lines = ["digraph mutation {",
             f'  label="mutation graph for weights {config}";',
             "  node [shape=box];"]
    for node in graph.nodes:
        key = format_clique(node)
        extra = ", style=bold" if node == graph.standard else ""
        lines.append(f'  "{key}" [label="{{{key}}}"{extra}];')
    for node in graph.nodes:
        lines.append(f'  "{format_clique(node)}" -> "{format_clique(graph.edges[node])}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_graph(args, out):
    config, raw, data = _rank1(args)
    graph = mutation_graph(data)
    if args.format == "dot":
        text = graph_to_dot(graph, config)
    else:
        text = json.dumps({"schema_version": SCHEMA_VERSION, "command": "graph", "input": raw,
                           "N": data.N, "standard": list(graph.standard),
                           "nodes": [list(n) for n in graph.nodes],
                           "edges": [[list(n), list(graph.edges[n])] for n in graph.nodes]},
                          indent=2, sort_keys=True) + "\n"
    if args.output:
        Path(args.output).write_text(text)
    else:
        out.write(text)


def cmd_check(args, out):
    if args.config:
        config, raw = _read_config(args.config)
        configs, inputs = [config], [raw]
    elif args.random:
        configs = random_rank1_suite(args.random, args.seed, max_weight=args.max_weight,
                                     max_d=args.max_d)
        inputs = [c.as_document() for c in configs]
    else:
        raise ConfigError("check needs a config file or --random N")
    ok = True
    reports = []
    for config, raw in zip(configs, inputs):
        results = check_config(config)
        passed = all_passed(results)
        ok = ok and passed
        print(f"{'PASS' if passed else 'FAIL'} {config}", file=out)
        for r in results:
            print(f"  {r.line()}", file=out)
            if not r.passed and r.witness:
                print(f"    witness: {json.dumps(r.witness, default=list)}", file=out)
        reports.append({"input": raw, "passed": passed,
                        "checks": [{"name": r.name, "passed": r.passed, "detail": r.detail}
                                   for r in results]})
    print(f"{'ALL PASS' if ok else 'FAILURES'}: {len(configs)} config(s)", file=out)
    _emit({"schema_version": SCHEMA_VERSION, "command": "check", "seed": args.seed,
           "random": args.random, "passed": ok, "reports": reports}, args.json, out)
    if not ok:
        raise Falsification("oracle cross-validation disagreed")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="toricnccr", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=__version__)
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="profile a configuration and list its CM weights")
    a.add_argument("config")
    a.add_argument("--mu", action="append", default=[], help="character to test, e.g. -3,-1 (repeatable)")
    a.add_argument("--json", help="write the report document here ('-' for stdout)")
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("cliques", help="enumerate maximal CM cliques (rank one)")
    c.add_argument("config")
    c.add_argument("--count-only", action="store_true")
    c.add_argument("--algorithm", choices=["backtrack", "bronkerbosch"], default="backtrack")
    c.add_argument("--json")
    c.set_defaults(func=cmd_cliques)

    m = sub.add_parser("mutate", help="mutate a maximal clique down to the standard one")
    m.add_argument("config")
    m.add_argument("--clique", required=True, help="comma-separated integers, e.g. --clique=-4,-2,0")
    m.add_argument("--json")
    m.set_defaults(func=cmd_mutate)

    g = sub.add_parser("graph", help="export the mutation graph")
    g.add_argument("config")
    g.add_argument("--format", choices=["dot", "doc"], default="dot")
    g.add_argument("--output")
    g.set_defaults(func=cmd_graph)

    k = sub.add_parser("check", help="cross-validate fast paths against brute-force oracles")
    k.add_argument("config", nargs="?")
    k.add_argument("--random", type=int, default=0)
    k.add_argument("--max-weight", type=int, default=9)
    k.add_argument("--max-d", type=int, default=8)
    k.add_argument("--seed", type=int, default=0)
    k.add_argument("--json")
    k.set_defaults(func=cmd_check)
    return p


def _glue_negative_values(argv):
    # "--clique -4,-2" would otherwise be read as an unknown option
    out = []
    it = iter(argv)
    for tok in it:
        if tok in ("--clique", "--mu"):
            nxt = next(it, None)
            out.append(tok if nxt is None else f"{tok}={nxt}")
        else:
            out.append(tok)
    return out


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    argv = _glue_negative_values(sys.argv[1:] if argv is None else list(argv))
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        args.func(args, out)
    except _HypothesisExit:
        return EXIT_HYPOTHESIS
    except HypothesisViolated as exc:
        print(f"error: {exc}", file=out)
        return EXIT_HYPOTHESIS
    except Falsification as exc:
        print(f"error: {exc}", file=out)
        if exc.witness:
            print(f"witness: {json.dumps(exc.witness, default=list)}", file=out)
        return EXIT_FALSIFIED
    except BudgetExceeded as exc:
        print(f"error: {exc}", file=out)
        return EXIT_BUDGET
    except (ConfigError, ValueError) as exc:
        print(f"error: {exc}", file=out)
        return EXIT_INPUT
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
