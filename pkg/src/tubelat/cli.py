"""
Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage or input error,
3 capacity guard. Output is JSON unless stated otherwise and is ordered
canonically, so identical invocations print identical bytes.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from .errors import ArgumentError, CapacityError, InvariantError
from .graph import parse_graph, require_filled_connected
from .perm import evaluate, format_word, hyperplane_walk, inversion_count, is_permutation, parse_word
from .qsym import BASES, chain_function_fg, expand_in_basis, lmf, stanley_f
from .shortest import chain_to_cycles, enumerate_smb, lift_smb, psi, varsigma, varsigma_inverse, w_mn
from .shuffle import shuf
from .tableau import eg_insert, eg_reverse, longest_p, shape_of, staircase, tableau_from_json, tableau_to_json, word_to_balanced
from .tubing import (
    build_lattice, chain_length, g_balanced_tableau, intra_class_hyperplanes, lattice_to_dot,
    lattice_to_json, longest_chains, maximal_chains, reduced_walk, shortest_chains,
)
from .verify import SUITES, run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_CAPACITY = 0, 1, 2, 3


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2) + "\n")


def _graph(text: str):
    g = parse_graph(text)
    require_filled_connected(g)
    return g


def _perm(text: str) -> tuple[int, ...]:
    w = parse_word(text)
    if not is_permutation(w):
        raise ArgumentError(f"{text!r} is not a permutation in one-line notation")
    return w


def cmd_lattice(args) -> int:
    lat = build_lattice(_graph(args.graph))
    if args.format == "dot":
        sys.stdout.write(lattice_to_dot(lat))
    else:
        _emit(lattice_to_json(lat))
    return EXIT_OK


def cmd_chains(args) -> int:
    lat = build_lattice(_graph(args.graph))
    chains = {"all": maximal_chains, "longest": longest_chains, "shortest": shortest_chains}[args.filter](lat)
    if args.count:
        print(len(chains))
        return EXIT_OK
    out = []
    for c in chains:
        gamma = chain_to_cycles(lat, c)
        out.append({
            "length": chain_length(c),
            "elements": [list(lat.elements[i]) for i in c],
            "cycles": str(gamma),
        })
    _emit(out)
    return EXIT_OK


def cmd_eg(args) -> int:
    if args.inverse:
        with open(args.inverse, encoding="utf-8") as fh:
            obj = json.load(fh)
        q = tableau_from_json(obj["Q"]) if "Q" in obj else tableau_from_json(obj)
        if "P" in obj:
            p = tableau_from_json(obj["P"])
        else:
            # without P the word must belong to the longest element
            shape = shape_of(q)
            size = len(shape) + 1
            if shape != staircase(size):
                raise ArgumentError("a Q tableau alone must have staircase shape; supply P as well")
            p = longest_p(size)
        print(format_word(eg_reverse(p, q)))
        return EXIT_OK
    if args.word is None:
        raise ArgumentError("give a reduced word or --inverse FILE")
    word = parse_word(args.word)
    n = args.n or max(word, default=0) + 1
    p, q = eg_insert(word, n)
    _emit({"word": list(word), "n": n, "P": tableau_to_json(p), "Q": tableau_to_json(q)})
    return EXIT_OK


def cmd_walk(args) -> int:
    word = parse_word(args.word)
    n = args.n or max(word, default=0) + 1
    if args.graph:
        g = _graph(args.graph)
        n = g.n
    walk = hyperplane_walk(word, n)
    obj: dict = {"word": list(word), "n": n, "walk": [list(h) for h in walk]}
    if evaluate(word, n) == tuple(range(n, 0, -1)):
        obj["balanced"] = tableau_to_json(word_to_balanced(word, n))
    if args.graph:
        if "balanced" not in obj:
            raise ArgumentError("graph reductions need a reduced word of the longest element")
        obj["intra_class"] = sorted(intra_class_hyperplanes(g, word))
        obj["reduced_walk"] = [list(h) for h in reduced_walk(g, word)]
        obj["g_balanced"] = tableau_to_json(g_balanced_tableau(g, word))
    _emit(obj)
    return EXIT_OK


def cmd_shuffles(args) -> int:
    result = shuf(args.m, args.n, tagged=args.tagged)
    if args.count:
        print(len(result))
    elif args.tagged:
        _emit([t.to_json() for t in sorted(result)])
    else:
        print("\n".join(format_word(w) for w in sorted(result)))
    return EXIT_OK


def _lmf_graph(tokens: Sequence[str]) -> str:
    # "L 1 3" and "L1,3" both name the lollipop L_{1,3}
    text = " ".join(tokens)
    parts = text.replace(",", " ").split()
    if len(parts) == 3 and parts[0].upper() == "L":
        return f"L{parts[1]},{parts[2]}"
    return "".join(tokens)


def cmd_qsym(args) -> int:
    chosen = [x for x in (args.lmf, args.fg, args.stanley) if x]
    if len(chosen) != 1:
        raise ArgumentError("choose exactly one of --lmf, --fg, --stanley")
    if args.lmf:
        expr = lmf(_graph(_lmf_graph(args.lmf)))
    elif args.fg:
        expr = chain_function_fg(_graph(args.fg))
    else:
        w = _perm(args.stanley)
        expr = stanley_f(w)
    if args.degree is not None:
        expr = expr.degree_slice(args.degree)
    if args.expand:
        expansion = expand_in_basis(expr, args.expand)
        _emit(expansion.to_json())
        return EXIT_OK if expansion.exact else EXIT_FAIL
    _emit(expr.to_json())
    return EXIT_OK


def _smc_record(b, m: int, n: int) -> dict:
    sigma = varsigma(b, m, n)
    gamma = psi(sigma, m, n)
    return {
        "B": tableau_to_json(b),
        "lift": tableau_to_json(lift_smb(b, m, n)),
        "sigma": list(sigma),
        "gamma": gamma.to_json(),
        "gamma_text": str(gamma),
        "descents": sorted(gamma.descents()),
    }


def cmd_smc(args) -> int:
    m, n = args.m, args.n
    if args.word:
        b = varsigma_inverse(parse_word(args.word), m, n)
        _emit(_smc_record(b, m, n))
        return EXIT_OK
    records = [_smc_record(b, m, n) for b in enumerate_smb(m, n)]
    if args.count:
        print(len(records))
    else:
        _emit({"m": m, "n": n, "w": list(w_mn(m, n)), "inversions": inversion_count(w_mn(m, n)),
               "tableaux": records})
    return EXIT_OK


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = 0
    for check in run_suites(names, args.max_size):
        print(check.line(), flush=True)
        failed += not check.passed
    print(f"{'FAIL' if failed else 'PASS'} summary: {failed} failing check(s)")
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tubelat", description="Tubing lattices, their maximal chains and tableaux.")
    parser.add_argument("--threads", type=int, default=os.cpu_count() or 1,
                        help="parallelism cap (computations are single-threaded and deterministic)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lattice", help="build L(G)")
    p.add_argument("graph", help='K4, P4, "L3,2", an edge list or @file.json')
    p.add_argument("--format", choices=("json", "dot"), default="json")
    p.set_defaults(func=cmd_lattice)

    p = sub.add_parser("chains", help="maximal chains of L(G)")
    p.add_argument("graph")
    p.add_argument("--filter", choices=("all", "longest", "shortest"), default="all")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_chains)

    p = sub.add_parser("eg", help="Edelman-Greene insertion and its inverse")
    p.add_argument("word", nargs="?")
    p.add_argument("--n", type=int, help="ambient S_n (default: largest letter + 1)")
    p.add_argument("--inverse", metavar="FILE", help='JSON with "Q" (and optionally "P")')
    p.set_defaults(func=cmd_eg)

    p = sub.add_parser("walk", help="hyperplane walk and balanced tableau of a reduced word")
    p.add_argument("word")
    p.add_argument("--n", type=int)
    p.add_argument("--graph", help="also delete the intra-class hyperplanes of this graph")
    p.set_defaults(func=cmd_walk)

    p = sub.add_parser("shuffles", help="Shuf(m, n)")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--tagged", action="store_true")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_shuffles)

    p = sub.add_parser("qsym", help="quasisymmetric chain functions")
    p.add_argument("--lmf", nargs="+", metavar="G", help='graph, e.g. "L 1 3" or P4')
    p.add_argument("--fg", metavar="GRAPH")
    p.add_argument("--stanley", metavar="PERM")
    p.add_argument("--degree", type=int, help="keep one homogeneous slice")
    p.add_argument("--expand", choices=BASES)
    p.set_defaults(func=cmd_qsym)

    p = sub.add_parser("smc", help="shortest maximal chains of L(L_{m,n})")
    p.add_argument("m", type=int)
    p.add_argument("n", type=int)
    p.add_argument("--word", help="run the pipeline for one reduced word of w_{m,n}")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_smc)

    p = sub.add_parser("verify", help="run the exhaustive verification suites")
    p.add_argument("--suite", choices=(*SUITES, "all"), default="all")
    p.add_argument("--max-size", type=int, default=5)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except (ArgumentError, OSError, json.JSONDecodeError, KeyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except InvariantError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
