"""Command-line surface: reduce, meaning, vectors, verify, demo.

Exit codes are uniform across subcommands: 0 success, 1 domain failure
(no parse, unknown word, unreadable corpus), 2 usage or config error.
Stdout carries data only; diagnostics go to stderr.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from importlib import resources

from . import linalg, monotone, oracle
from .corpus import (ContextConfig, LexiconFormatError, export_vectors_tsv,
                     load_lexicon, tokenize)
from .functor import (NoParseError, UnknownWordError, enumerate_analyses,
                      preller_obstruction, sentence_meaning)
from .pregroup import (BasicType, CompoundType, ReductionDiagram, SimpleType,
                       TypeSyntaxError, enumerate_reductions, parse_type_expr)

EXIT_OK = 0
EXIT_DOMAIN = 1
EXIT_USAGE = 2


def default_lexicon_path() -> str:
    return str(resources.files("gramsem").joinpath("data/toy_lexicon.json"))


def render_reduction(d: ReductionDiagram) -> str:
    """Underbrace-style ASCII picture: cups as |___| brackets (nested cups
    stacked), residual wires as plain verticals."""
    tokens = [str(t) for t in d.source]
    if not tokens:
        return "(unit)"
    starts, col = [], 0
    for tok in tokens:
        starts.append(col)
        col += len(tok) + 1
    width = col - 1
    centers = [starts[p] + (len(tokens[p]) - 1) // 2 for p in range(len(tokens))]
    cups = list(d.sorted_cups)
    by_span = sorted(cups, key=lambda c: c[1] - c[0])
    depth = {}
    for c in by_span:
        inner = [depth[c2] for c2 in by_span
                 if c2 != c and c[0] < c2[0] and c2[1] < c[1]]
        depth[c] = max(inner, default=-1) + 1
    nrows = max(depth.values(), default=-1) + 1
    matched = {p for c in cups for p in c}
    grid = [[" "] * width for _ in range(nrows)]
    for (i, j), r in depth.items():
        for row in range(r):
            grid[row][centers[i]] = grid[row][centers[j]] = "|"
        grid[r][centers[i]] = grid[r][centers[j]] = "|"
        for cc in range(centers[i] + 1, centers[j]):
            if grid[r][cc] == " ":
                grid[r][cc] = "_"
    for p in range(len(tokens)):
        if p not in matched:
            for row in range(nrows):
                grid[row][centers[p]] = "|"
    lines = ["".join(row).rstrip() for row in grid]
    return "\n".join([" ".join(tokens)] + lines)


def _print_syntax_error(exc: TypeSyntaxError, stream):
    print(f"syntax error: {exc}", file=stream)
    print("  " + exc.text, file=stream)
    print("  " + " " * exc.position + "^", file=stream)


def _parse_expr_or_exit(text: str) -> CompoundType:
    try:
        return parse_type_expr(text)
    except TypeSyntaxError as exc:
        _print_syntax_error(exc, sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _parse_range(text: str) -> range:
    """'3' -> range(3, 4); '1..8' -> range(1, 9)."""
    if ".." in text:
        lo, hi = text.split("..", 1)
        return range(int(lo), int(hi) + 1)
    v = int(text)
    return range(v, v + 1)


def cmd_reduce(args) -> int:
    source = _parse_expr_or_exit(args.type_expr)
    target = _parse_expr_or_exit(args.target)
    diagrams = enumerate_reductions(source, target)
    if args.json:
        doc = {
            "source": str(source),
            "target": str(target),
            "reductions": [
                {"cups": [list(c) for c in d.sorted_cups],
                 "residual": str(d.residual)}
                for d in diagrams
            ],
        }
        print(json.dumps(doc, indent=2))
    else:
        if not diagrams:
            print(f"no reduction from '{source}' to '{target or '1'}'")
        for k, d in enumerate(diagrams):
            cups = ", ".join(f"({i},{j})" for i, j in d.sorted_cups) or "(none)"
            print(f"reduction {k}: cups {cups}")
            print(render_reduction(d))
    return EXIT_OK if diagrams else EXIT_DOMAIN


def _tensor_literal(t: linalg.Tensor) -> dict:
    return {"dims": list(t.dims),
            "data": [int(x) if float(x).is_integer() else float(x)
                     for x in t.flat]}


def cmd_meaning(args) -> int:
    try:
        lexicon = load_lexicon(args.lexicon)
    except OSError as exc:
        print(f"cannot read lexicon: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except LexiconFormatError as exc:
        print(f"bad lexicon: {exc}", file=sys.stderr)
        return EXIT_USAGE
    target = _parse_expr_or_exit(args.target)
    assignment = lexicon.functor_assignment()
    try:
        if args.list_parses:
            analyses = enumerate_analyses(args.words, lexicon, assignment, target)
            if not analyses:
                print(f"no parse of {' '.join(args.words)!r} as "
                      f"'{target or '1'}'", file=sys.stderr)
                return EXIT_DOMAIN
            for k, a in enumerate(analyses):
                types = " . ".join(str(e.gtype) for e in a.words)
                cups = ", ".join(f"({i},{j})" for i, j in a.chosen.sorted_cups)
                print(f"parse {k}: types [{types}] cups [{cups}] "
                      f"meaning {a.meaning.flat}")
            return EXIT_OK
        analysis = sentence_meaning(args.words, lexicon, assignment,
                                    parse_index=args.parse_index,
                                    target=target)
    except UnknownWordError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN
    except NoParseError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN
    except IndexError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_DOMAIN
    if args.json:
        doc = {"parse": [list(c) for c in analysis.chosen.sorted_cups],
               "meaning": _tensor_literal(analysis.meaning)}
        print(json.dumps(doc, indent=2))
        return EXIT_OK
    print(render_reduction(analysis.chosen))
    meaning = analysis.meaning
    if meaning.rank == 1 and meaning.spaces[0].dim == 1:
        value = meaning.item()
        gloss = "true" if value > 0 else ("false" if value == 0 else "anti-true")
        print(f"meaning: {value:g} (scalar sentence space; reads {gloss}, "
              f"larger magnitude = stronger)")
    else:
        print(f"meaning: spaces ({', '.join(map(str, meaning.spaces))}) "
              f"data {meaning.flat}")
    return EXIT_OK


def cmd_vectors(args) -> int:
    try:
        with open(args.contexts, "r", encoding="utf-8") as fh:
            context_words = [line.strip() for line in fh if line.strip()]
    except OSError as exc:
        print(f"cannot read context file: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    if len(set(context_words)) != len(context_words):
        print("duplicate context words in context file", file=sys.stderr)
        return EXIT_USAGE
    if not context_words:
        print("context file is empty", file=sys.stderr)
        return EXIT_USAGE
    try:
        cfg = ContextConfig(tuple(context_words), window=args.window)
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE
    try:
        with open(args.corpus, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        print(f"cannot read corpus: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    export_vectors_tsv(tokenize(text, cfg), cfg, sys.stdout)
    return EXIT_OK


def seeded_monotone_maps(count: int, seed: int) -> list[monotone.MonotoneMap]:
    """Reproducible monotone unbounded staircase maps m -> a*(m//d) + b."""
    rng = random.Random(seed)
    maps = []
    for k in range(count):
        a = rng.randint(1, 5)
        d = rng.randint(1, 4)
        b = rng.randint(-20, 20)
        maps.append(monotone.MonotoneMap(
            lambda m, a=a, b=b, d=d: a * (m // d) + b,
            name=f"stair(a={a}, d={d}, b={b})"))
    return maps


def _report(rows) -> int:
    ok = True
    for label, passed in rows:
        print(f"{'PASS' if passed else 'FAIL'}  {label}")
        ok = ok and passed
    print("all checks passed" if ok else "some checks FAILED")
    return EXIT_OK if ok else EXIT_DOMAIN


def cmd_verify(args) -> int:
    if args.suite == "yanking":
        dims = _parse_range(args.dims or "1..16")
        rows = [(f"yanking dim={d}", linalg.yanking_check(d, tol=0.0))
                for d in dims]
        return _report(rows)

    if args.suite == "preller":
        dims = _parse_range(args.dims or "1..8")
        rows = []
        for d in dims:
            w = preller_obstruction(d)
            if d == 1:
                rows.append((f"preller dim=1 lift is identity", w.is_identity))
            else:
                good = (not w.is_identity) and w.zero_witness == (0, 1, 0)
                rows.append(
                    (f"preller dim={d} lift non-identity, kills "
                     f"e1*e2*e1", good))
        return _report(rows)

    if args.suite == "galois":
        window = args.window_range or "-100..100"
        rng = _parse_range(window)
        win = (rng.start, rng.stop - 1)
        double = monotone.MonotoneMap(lambda m: 2 * m, name="double")
        rows = []
        closed = all(
            monotone.monotone_left_dual(double, n) == (n + 1) // 2
            and monotone.monotone_right_dual(double, n) == n // 2
            for n in range(win[0], win[1] + 1))
        rows.append(("double: duals match floor((n+1)/2), floor(n/2)", closed))
        rows.append(("double: adjunction biconditionals",
                     monotone.galois_check(double, win)))
        for f in seeded_monotone_maps(5, args.seed):
            rows.append((f"{f.name}: adjunction biconditionals",
                         monotone.galois_check(f, win)))
        return _report(rows)

    if args.suite == "oracle":
        rows = []
        bases = (BasicType("a"), BasicType("b"))
        alphabet = [SimpleType(b, z) for b in bases for z in (-1, 0, 1)]
        rng = random.Random(args.seed)
        full_max = min(5, args.max_len)
        for length in range(0, args.max_len + 1):
            if length <= full_max:
                sources = _all_sources(alphabet, length)
                label = f"oracle len={length} (all {len(sources)} sources)"
            else:
                sources = [
                    CompoundType(rng.choice(alphabet) for _ in range(length))
                    for _ in range(args.samples)]
                label = f"oracle len={length} ({len(sources)} seeded sources)"
            rows.append((label, _oracle_agrees(sources)))
        return _report(rows)

    print(f"unknown suite {args.suite!r}", file=sys.stderr)
    return EXIT_USAGE


def _all_sources(alphabet, length):
    sources = [CompoundType()]
    for _ in range(length):
        sources = [CompoundType(tuple(s) + (t,))
                   for s in sources for t in alphabet]
    return sources


def _oracle_agrees(sources) -> bool:
    """Group brute-force matchings by residual and compare each group with
    the search path; also probe one unreachable target."""
    impossible = CompoundType((SimpleType(BasicType("q"), 0),))
    for source in sources:
        groups: dict[CompoundType, list] = {}
        for pairs in oracle.all_partial_matchings(len(source)):
            if not oracle.matching_is_valid(source, pairs):
                continue
            matched = {p for pr in pairs for p in pr}
            residual = CompoundType(
                t for p, t in enumerate(source) if p not in matched)
            groups.setdefault(residual, []).append(pairs)
        for residual, expected in groups.items():
            got = [d.sorted_cups for d in enumerate_reductions(source, residual)]
            if got != sorted(expected):
                return False
        if enumerate_reductions(source, impossible):
            return False
    return True


def cmd_demo(args) -> int:
    lexicon = load_lexicon(default_lexicon_path())
    assignment = lexicon.functor_assignment()
    words = ["bananas", "are", "fruit"]
    print("A worked example: the meaning of 'bananas are fruit'\n")

    print("step 1 - grammar types from the lexicon:")
    entries = [lexicon.entries_for(w)[0] for w in words]
    for e in entries:
        print(f"  {e.word:8s} :: {e.gtype}")

    print("\nstep 2 - spaces assigned to the basic types:")
    for name, space in sorted(lexicon.spaces.items()):
        basis = f" basis={list(space.basis_labels)}" if space.basis_labels else ""
        print(f"  {name} -> dim {space.dim}{basis}")

    print("\nstep 3 - word states:")
    for e in entries:
        print(f"  {e.word:8s} dims {list(e.state.dims)} data {e.state.flat}")

    concat = CompoundType()
    for e in entries:
        concat = concat + e.gtype
    diagrams = enumerate_reductions(concat, parse_type_expr("s"))
    print(f"\nstep 4 - type reductions of '{concat}' to 's': "
          f"{len(diagrams)} found")
    print(render_reduction(diagrams[0]))

    analysis = sentence_meaning(words, lexicon, assignment)
    value = analysis.meaning.item()
    print(f"\nstep 5 - contract the word states along the cups: {value:g}")
    if value != 1074.0:
        print("self-check FAILED: expected 1074", file=sys.stderr)
        return EXIT_DOMAIN
    print("self-check passed: 21*43 + 9*19 + 0*0 = 1074")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gramsem",
        description="pregroup grammar reductions lifted to tensor contractions")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("reduce", help="enumerate type reductions")
    p.add_argument("type_expr", help="source compound type, e.g. 'n n^r s n^l n'")
    p.add_argument("target", help="target compound type, e.g. 's'")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_reduce)

    p = sub.add_parser("meaning", help="compute a sentence meaning tensor")
    p.add_argument("words", nargs="+", help="sentence words, in order")
    p.add_argument("--lexicon", default=default_lexicon_path(),
                   help="lexicon JSON path (default: bundled toy lexicon)")
    p.add_argument("--target", default="s", help="target type (default: s)")
    p.add_argument("--parse-index", type=int, default=0, dest="parse_index",
                   help="which parse to use when several exist")
    p.add_argument("--list-parses", action="store_true",
                   help="list every (reading, reduction) pair with meanings")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.set_defaults(func=cmd_meaning)

    p = sub.add_parser("vectors", help="co-occurrence count vectors as TSV")
    p.add_argument("corpus", help="text file to count over")
    p.add_argument("--contexts", required=True,
                   help="file with one context word per line")
    p.add_argument("--window", type=int, default=3,
                   help="co-occurrence window radius (default: 3)")
    p.set_defaults(func=cmd_vectors)

    p = sub.add_parser("verify", help="run a self-verification suite")
    p.add_argument("suite", choices=["yanking", "preller", "galois", "oracle"])
    p.add_argument("--dims", help="dimension range, e.g. 1..16")
    p.add_argument("--window", dest="window_range",
                   help="integer window, e.g. -100..100 (galois)")
    p.add_argument("--max-len", type=int, default=8, dest="max_len",
                   help="max compound type length (oracle)")
    p.add_argument("--samples", type=int, default=3500,
                   help="seeded sources per length above full coverage (oracle)")
    p.add_argument("--seed", type=int, default=0, help="sampling seed")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("demo", help="the worked toy example, step by step")
    p.set_defaults(func=cmd_demo)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ValueError as exc:
        print(str(exc), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
