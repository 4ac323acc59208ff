"""Command-line entry point: ``bei <subcommand> [input] [options]``.

Graph commands read ``{"n": .., "edges": [[i, j], ..]}`` or an ``i j`` edge
list; spec commands read ``{"dims": [..], "statements": [..]}`` or
``{"dims": [..], "hamming_k": k}``.  The input is a file path, ``-`` for
stdin, or an inline JSON object.

Exit status: 0 success, 1 unparsable input or usage, 2 domain error,
3 resource bound exceeded, 4 oracle verification failed.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import bounds, ci, edge_ideal, graph, primes
from .errors import DomainError, ParseError, ResourceError
from .verify import run_oracle_suite

EXIT_OK, EXIT_PARSE, EXIT_DOMAIN, EXIT_RESOURCE, EXIT_ORACLE = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_PARSE, f"{self.prog}: error: {message}\n")


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    if source.lstrip().startswith("{"):
        return source
    try:
        with open(source) as fh:
            return fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read {source}: {exc.strerror}") from None


def _load_graph(args) -> graph.LabeledGraph:
    return graph.parse_graph(_read_input(args.input))


def _load_spec(args):
    return ci.parse_spec(_read_input(args.input))


def _edge(e):
    return list(e)


def cmd_check_closed(args):
    G = _load_graph(args)
    res = graph.is_closed_labeling(G)
    out = {"closed": res.closed, "witness": None}
    if res.witness:
        e1, e2, missing = res.witness
        out["witness"] = {"edges": [_edge(e1), _edge(e2)], "missing": _edge(missing)}
    return out


def cmd_find_labeling(args):
    G = _load_graph(args)
    sigma = graph.find_closed_labeling(G)
    return {
        "labeling": list(sigma) if sigma else None,
        "relabeled": graph.graph_to_dict(graph.relabel(G, sigma)) if sigma else None,
    }


def cmd_closure(args):
    G = _load_graph(args)
    H = graph.closure(G)
    return {"closure": graph.graph_to_dict(H), "added": [_edge(e) for e in sorted(H.edges - G.edges)]}


def cmd_groebner(args):
    G = _load_graph(args)
    basis = edge_ideal.theoretical_groebner(G)
    ini = edge_ideal.initial_ideal(G)
    paths = edge_ideal.all_admissible_paths(G)
    return {
        "basis": [p.to_text() for p in basis.polynomials],
        "initial_ideal": [edge_ideal.monomial_text(G.n, m) for m in ini.monomials],
        "squarefree": ini.squarefree,
        "quadratic": edge_ideal.has_quadratic_gb(G),
        "admissible_paths": {f"{i},{j}": [list(p.vertices) for p in ps] for (i, j), ps in sorted(paths.items())},
    }


def _decomposition(G):
    dec = primes.minimal_primes(G)
    return {
        "minimal_primes": [
            {"S": list(p.S), "blocks": [list(b) for b in p.blocks], "height": p.height, "dim": p.dimension}
            for p in dec.components
        ],
        "dimension": dec.dimension,
        "prime": primes.is_prime_ideal(G),
        "unmixed": len({p.height for p in dec.components}) == 1,
    }


def cmd_decompose(args):
    return _decomposition(_load_graph(args))


def cmd_dimension(args):
    return {"dimension": primes.krull_dimension(_load_graph(args))}


def cmd_classify(args):
    G = _load_graph(args)
    chordal, claw_free = graph.closed_necessary_conditions(G)
    out = {
        "closed": graph.is_closed_labeling(G).closed,
        "chordal": chordal,
        "claw_free": claw_free,
        "connected": graph.is_connected(G),
        "prime": primes.is_prime_ideal(G),
        "unmixed": primes.is_unmixed(G),
        "dimension": primes.krull_dimension(G),
        "quadratic": edge_ideal.has_quadratic_gb(G),
        "cm_sufficient": primes.cm_sufficient(G) if graph.is_connected(G) else None,
    }
    try:
        sigma = graph.find_closed_labeling(G)
        out["closed_labeling"] = list(sigma) if sigma else None
    except ResourceError:
        out["closed_labeling"] = "skipped: n above search bound"
    return out


def _states_table(space):
    return {str(space.label(x)): list(x) for x in space.states()}


def cmd_ci_compile(args):
    spec, space = _load_spec(args)
    G = ci.spec_to_graph(spec, space)
    gens = ci.ci_generators(spec, space)
    out = {
        "spec": ci.spec_to_dict(spec, space),
        "states": _states_table(space),
        "graph": graph.graph_to_dict(G),
        "generators": [g.to_text(space) for g in gens],
        "radical": edge_ideal.initial_ideal(G).squarefree if G.n <= bounds.get("MAX_PATH_N") else None,
    }
    if spec.statements:
        imp = ci.full_support_implication(spec)
        out["full_support_implication"] = {
            "S": sorted(imp.S), "T": sorted(imp.T), "unconditional": imp.unconditional, "statement": str(imp),
        }
    return out


def cmd_ci_decompose(args):
    spec, space = _load_spec(args)
    comps = ci.decompose_spec(spec, space)
    return {
        "spec": ci.spec_to_dict(spec, space),
        "states": _states_table(space),
        "components": [ci.component_to_dict(c) for c in comps],
        "narrative": "\n\n".join(c.narrative() for c in comps),
    }


def cmd_cycle_report(args):
    rep = primes.cycle_report(args.n)
    return {"n": rep.n, "prime": rep.prime, "unmixed": rep.unmixed, "cm_equivalent": rep.cm_equivalent}


def cmd_oracle_verify(args):
    rep = run_oracle_suite(args.max_n)
    out = {"max_n": rep.max_n, "graphs_checked": rep.graphs_checked, "failures": rep.failures, "passed": rep.passed}
    return out, (EXIT_OK if rep.passed else EXIT_ORACLE)


COMMANDS = {
    "check-closed": (cmd_check_closed, "test the closed-labeling condition", "graph"),
    "find-labeling": (cmd_find_labeling, "search for a closed relabeling", "graph"),
    "closure": (cmd_closure, "closure under the closed-labeling condition", "graph"),
    "groebner": (cmd_groebner, "closed-form reduced Groebner basis of J_G", "graph"),
    "decompose": (cmd_decompose, "minimal primes of J_G", "graph"),
    "dimension": (cmd_dimension, "Krull dimension of S/J_G", "graph"),
    "classify": (cmd_classify, "structural and algebraic classification", "graph"),
    "ci-compile": (cmd_ci_compile, "compile a robustness specification", "spec"),
    "ci-decompose": (cmd_ci_decompose, "components of a robustness specification", "spec"),
    "cycle-report": (cmd_cycle_report, "primality and unmixedness of the n-cycle", None),
    "oracle-verify": (cmd_oracle_verify, "check the closed-form basis against Buchberger", None),
}


def _parse_bound(text):
    name, sep, value = text.partition("=")
    name = name.upper().removeprefix("BEI_")
    if not sep or name not in bounds.DEFAULTS:
        raise argparse.ArgumentTypeError(f"expected NAME=INT with NAME in {sorted(bounds.DEFAULTS)}")
    try:
        return name, int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"bound {name} needs an integer value") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="bei", description="Binomial edge ideals of labeled graphs and CI robustness specifications.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, (_, help_text, kind) in COMMANDS.items():
        p = sub.add_parser(name, help=help_text, description=help_text)
        if kind is not None:
            p.add_argument("input", help=f"{kind} file, '-' for stdin, or inline JSON")
        if name == "cycle-report":
            p.add_argument("--n", type=int, required=True, help="cycle length (>= 3)")
        if name == "oracle-verify":
            p.add_argument("--max-n", type=int, default=5, help="largest vertex count to enumerate (default 5)")
        p.add_argument("--format", choices=("json", "text"), default="json")
        p.add_argument("--bound", action="append", type=_parse_bound, default=[], metavar="NAME=INT",
                       help="override a size bound, e.g. MAX_LABELING_N=11 (repeatable)")
    return parser


def _render_text(command, result) -> str:
    if command == "ci-decompose":
        return result["narrative"] + "\n"
    lines = []
    for key in sorted(result):
        value = result[key]
        if isinstance(value, (list, dict)):
            value = json.dumps(value, sort_keys=True)
        elif isinstance(value, bool):
            value = str(value).lower()
        lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def render(command, result, fmt="json") -> str:
    if fmt == "text":
        return _render_text(command, result)
    return json.dumps(result, sort_keys=True, indent=2) + "\n"


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    func = COMMANDS[args.command][0]
    try:
        with bounds.overridden(**dict(args.bound)):
            result = func(args)
    except ParseError as exc:
        print(f"bei {args.command}: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except DomainError as exc:
        print(f"bei {args.command}: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except ResourceError as exc:
        print(f"bei {args.command}: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    status = EXIT_OK
    if isinstance(result, tuple):
        result, status = result
    sys.stdout.write(render(args.command, result, args.format))
    return status


if __name__ == "__main__":
    sys.exit(main())
