"""Command-line interface: subdivide, decompose, check-we, homology, selftest.

Exit codes: 0 ok/preserving, 1 failure/not preserving, 2 parse error,
3 limit violation, 4 malformed input.  Output for a fixed invocation is
byte-identical across runs.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from .duality import duality_selftest
from .homology import (
    IntegerMatrix,
    chain_complex,
    euler_characteristic,
    homology,
    rank_fraction_free,
    smith_normal_form,
    verdict,
)
from .ordinals import OrdinalMap, ordinal_maps
from .simplicial import (
    gamma_check,
    phi_map,
    psi_map,
    skeleton,
    standard_simplex,
    subdivide,
)
from .words import (
    C0,
    GeneratorAction,
    ID,
    MalformedActionError,
    OP,
    Word,
    WordParseError,
    _compose_with_rule,
    compose_words,
    decompose,
    eval_map,
    generator_action,
    is_we_preserving,
    iter_words,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_LIMITS = 3
EXIT_MALFORMED = 4

MAX_SIMPLEX = 3
MAX_DIM = 4


def _write(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _parse_word(text: str) -> Word:
    return Word.parse(text)


def _check_limits(args) -> str | None:
    if getattr(args, "unsafe_limits", False):
        return None
    simplex = getattr(args, "simplex", None)
    if simplex is not None and simplex > MAX_SIMPLEX:
        return f"--simplex {simplex} exceeds the limit {MAX_SIMPLEX} (use --unsafe-limits to override)"
    max_dim = getattr(args, "max_dim", None)
    if max_dim is not None and max_dim > MAX_DIM:
        return f"--max-dim {max_dim} exceeds the limit {MAX_DIM} (use --unsafe-limits to override)"
    return None


def _dot_output(graph) -> str:
    lines = ["digraph subdivision {"]
    for vertex in graph.vertices:
        lines.append(f'  "{vertex}";')
    for _, initial, terminal in graph.edges:
        lines.append(f'  "{initial}" -> "{terminal}";')
    if graph.triangles:
        lines.append("  // triangles (vertex triples of nondegenerate 2-simplices):")
        for _, corners in graph.triangles:
            lines.append(f"  // {corners[0]} {corners[1]} {corners[2]}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_subdivide(args) -> int:
    try:
        word = _parse_word(args.word)
    except WordParseError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PARSE
    limit_problem = _check_limits(args)
    if limit_problem:
        print(f"error: {limit_problem}", file=sys.stderr)
        return EXIT_LIMITS
    view = subdivide(word, args.simplex, dim_bound=args.max_dim)
    if args.format == "json":
        text = json.dumps(view.materialize(), indent=2, sort_keys=True) + "\n"
    elif args.format == "dot":
        text = _dot_output(skeleton(view))
    else:
        graph = skeleton(view)
        lines = [
            f"word: {word}",
            f"simplex: {args.simplex}",
            f"vertices ({graph.vertex_count}): " + " ".join(graph.vertices),
            f"edges ({graph.edge_count}): "
            + " ".join(f"{i}->{t}" for i, t in graph.arrows()),
            f"triangles: {graph.triangle_count}",
            f"euler characteristic: {graph.euler_characteristic}",
        ]
        text = "\n".join(lines) + "\n"
    _write(text, args.out)
    return EXIT_OK


def action_to_dict(action: GeneratorAction) -> dict:
    return {
        "obj0": action.obj0,
        "obj1": action.obj1,
        "face0": list(action.face0.values),
        "face1": list(action.face1.values),
        "degeneracy": list(action.degeneracy.values),
    }


def action_from_dict(data: dict) -> GeneratorAction:
    try:
        obj0 = data["obj0"]
        obj1 = data["obj1"]
        if not isinstance(obj0, int) or not isinstance(obj1, int):
            raise MalformedActionError("obj0 and obj1 must be integers")
        return GeneratorAction(
            obj0=obj0,
            obj1=obj1,
            face0=OrdinalMap(obj0, obj1, tuple(data["face0"])),
            face1=OrdinalMap(obj0, obj1, tuple(data["face1"])),
            degeneracy=OrdinalMap(obj1, obj0, tuple(data["degeneracy"])),
        )
    except MalformedActionError:
        raise
    except (KeyError, TypeError, ValueError) as error:
        raise MalformedActionError(str(error)) from error


def cmd_decompose(args) -> int:
    if args.word is None and args.action is None:
        print("error: provide an action file or --word", file=sys.stderr)
        return EXIT_PARSE
    if args.word is not None:
        try:
            word = _parse_word(args.word)
        except WordParseError as error:
            print(f"error: {error}", file=sys.stderr)
            return EXIT_PARSE
        action = generator_action(word)
        recovered = decompose(action)
        if args.roundtrip:
            if recovered != word:
                print(f"roundtrip failed: {word} decomposed to {recovered}")
                return EXIT_FAIL
            _write(f"roundtrip ok: {recovered}\n", args.out)
            return EXIT_OK
        _write(f"{recovered}\n", args.out)
        return EXIT_OK
    try:
        if args.action == "-":
            data = json.load(sys.stdin)
        else:
            with open(args.action, "r", encoding="utf-8") as handle:
                data = json.load(handle)
        action = action_from_dict(data)
        recovered = decompose(action)
    except (OSError, json.JSONDecodeError, MalformedActionError) as error:
        print(f"error: malformed action input: {error}", file=sys.stderr)
        return EXIT_MALFORMED
    _write(f"{recovered}\n", args.out)
    return EXIT_OK


def _group_text(betti: int, torsion: tuple[int, ...]) -> str:
    parts = []
    if betti == 1:
        parts.append("Z")
    elif betti > 1:
        parts.append(f"Z^{betti}")
    parts.extend(f"Z/{d}" for d in torsion)
    return " + ".join(parts) if parts else "0"


def cmd_check_we(args) -> int:
    try:
        word = _parse_word(args.word)
    except WordParseError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PARSE
    if args.max_n > MAX_SIMPLEX and not args.unsafe_limits:
        print(
            f"error: --max-n {args.max_n} exceeds the limit {MAX_SIMPLEX} "
            "(use --unsafe-limits to override)",
            file=sys.stderr,
        )
        return EXIT_LIMITS
    result = verdict(word, max_n=args.max_n)
    if args.format == "json":
        payload = {
            "word": str(word),
            "preserving": result.preserving,
            "gaps": list(result.gaps),
            "connected": result.connected,
            "homology": [
                {
                    "simplex": e.simplex,
                    "reduced_betti": list(e.reduced_betti),
                    "torsion": [list(t) for t in e.torsion],
                    "vanishes": e.vanishes,
                }
                for e in result.evidence
            ],
            "consistent": result.consistent,
        }
        _write(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    else:
        lines = [
            f"word: {word}",
            f"C0-free: {'yes' if result.preserving else 'no'}",
            f"interval gaps: {' '.join(result.gaps)}"
            + (" (connected)" if result.connected else " (disconnected)"),
        ]
        for e in result.evidence:
            groups = ", ".join(
                f"H~{k}={_group_text(e.reduced_betti[k], e.torsion[k])}"
                for k in range(len(e.reduced_betti))
            )
            lines.append(f"simplex {e.simplex}: {groups}")
        lines.append(f"consistent: {'yes' if result.consistent else 'no'}")
        lines.append(
            "verdict: "
            + (
                "weak-equivalence preserving"
                if result.preserving
                else "not weak-equivalence preserving"
            )
        )
        _write("\n".join(lines) + "\n", args.out)
    if not result.consistent:
        return EXIT_FAIL
    return EXIT_OK if result.preserving else EXIT_FAIL


def cmd_homology(args) -> int:
    try:
        word = _parse_word(args.word)
    except WordParseError as error:
        print(f"error: {error}", file=sys.stderr)
        return EXIT_PARSE
    limit_problem = _check_limits(args)
    if limit_problem:
        print(f"error: {limit_problem}", file=sys.stderr)
        return EXIT_LIMITS
    view = subdivide(word, args.simplex, dim_bound=args.max_dim)
    complex_ = chain_complex(view, args.max_dim)
    report = homology(complex_, reduced=args.reduced)
    if args.format == "json":
        payload = {
            "word": str(word),
            "simplex": args.simplex,
            "max_dim": args.max_dim,
            "cells": list(complex_.dimensions()),
            "betti": list(report.betti),
            "torsion": [list(t) for t in report.torsion],
            "reduced": report.reduced,
            "euler": euler_characteristic(complex_),
        }
        _write(json.dumps(payload, indent=2, sort_keys=True) + "\n", args.out)
    else:
        prefix = "H~" if args.reduced else "H"
        lines = [
            f"word: {word}",
            f"simplex: {args.simplex}",
            "cells: " + " ".join(str(d) for d in complex_.dimensions()),
        ]
        for k in range(len(report.betti)):
            lines.append(f"{prefix}_{k} = {_group_text(report.betti[k], report.torsion[k])}")
        lines.append(f"euler characteristic: {euler_characteristic(complex_)}")
        _write("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _selftest_checks(max_n: int, seed: int, inject_fault: bool):
    """Run every check; yield (name, scope, passed, detail) rows."""
    report = duality_selftest(4)
    yield (
        "duality round-trip",
        "objects <= 4",
        report.passed,
        report.counterexample or "",
    )

    failure = ""
    for word in iter_words(4):
        if decompose(generator_action(word)) != word:
            failure = f"word {word}"
            break
    yield ("decompose round-trip", "words of length <= 4", not failure, failure)

    # The fault deliberately breaks the Op-after-Op rule so the harness
    # demonstrably catches a wrong composition table.
    faulty_flip = {ID: OP, OP: OP, C0: C0}
    failure = ""
    maps = [f for a in range(3) for b in range(3) for f in ordinal_maps(a, b)]
    for outer in iter_words(2):
        for inner in iter_words(2):
            if inject_fault:
                composed = _compose_with_rule(outer, inner, faulty_flip)
            else:
                composed = compose_words(outer, inner)
            for f in maps:
                if eval_map(composed, f) != eval_map(outer, eval_map(inner, f)):
                    failure = (
                        f"outer={outer} inner={inner} map {f.values}: "
                        f"word {composed} does not match the pointwise composite"
                    )
                    break
            if failure:
                break
        if failure:
            break
    yield (
        "word composition brute force",
        "lengths <= 2, maps on objects <= 2",
        not failure,
        failure,
    )

    failure = ""
    for n in range(1, 4):
        view = standard_simplex(n, 3)
        for k in range(4):
            for sigma in view.level(k):
                if psi_map(n, phi_map(n, sigma)) != sigma:
                    failure = f"n={n} level {k} simplex {sigma}"
                    break
            if failure:
                break
        if failure:
            break
    yield ("cube retraction", "n <= 3, levels <= 3", not failure, failure)

    failure = ""
    for n in range(1, 7):
        report = gamma_check(n)
        if not report.passed:
            failure = f"n={n}: {report.counterexample}"
            break
    yield ("collapse comparison", "n <= 6", not failure, failure)

    failure = ""
    for word in iter_words(3):
        if not is_we_preserving(word):
            continue
        view = subdivide(word, 2, dim_bound=3)
        graph = skeleton(view)
        complex_ = chain_complex(view, 3)
        if graph.euler_characteristic != 1 or euler_characteristic(complex_) != 1:
            failure = f"word {word}"
            break
    yield ("euler characteristic", "C0-free words of length <= 3", not failure, failure)

    failure = ""
    for word in iter_words(2):
        for n in range(1, max_n + 1):
            view = subdivide(word, n, dim_bound=n + 1)
            report = homology(chain_complex(view, n + 1), reduced=True)
            if report.trivial_through(n) != is_we_preserving(word):
                failure = f"word {word} on simplex {n}"
                break
        if failure:
            break
    yield (
        "reduced homology sweep",
        f"words of length <= 2, simplices <= {max_n}",
        not failure,
        failure,
    )

    rng = random.Random(seed)
    failure = ""
    for trial in range(20):
        rows = rng.randint(1, 5)
        cols = rng.randint(1, 5)
        entries = tuple(
            tuple(rng.randint(-4, 4) for _ in range(cols)) for _ in range(rows)
        )
        matrix = IntegerMatrix(rows, cols, entries)
        _, snf_rank = smith_normal_form(matrix)
        if snf_rank != rank_fraction_free(matrix):
            failure = f"trial {trial}: {entries}"
            break
    yield (
        "smith rank vs fraction-free rank",
        "20 random matrices",
        not failure,
        failure,
    )


def cmd_selftest(args) -> int:
    rows = []
    failed = False
    for name, scope, passed, detail in _selftest_checks(
        args.max_n, args.seed, args.inject_fault
    ):
        rows.append((name, scope, passed, detail))
        failed = failed or not passed
    name_width = max(len(r[0]) for r in rows)
    scope_width = max(len(r[1]) for r in rows)
    lines = []
    for name, scope, passed, detail in rows:
        status = "pass" if passed else "FAIL"
        line = f"{name:<{name_width}}  {scope:<{scope_width}}  {status}"
        if detail and not passed:
            line += f"  ({detail})"
        lines.append(line)
    lines.append("result: " + ("all checks passed" if not failed else "FAILURES"))
    _write("\n".join(lines) + "\n", args.out)
    return EXIT_FAIL if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="edgewise",
        description="Subdivide simplices by endofunctor words and verify "
        "weak-equivalence preservation.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("subdivide", help="subdivide a standard simplex by a word")
    p.add_argument("--word", required=True, help='word text, e.g. "Op+Id"')
    p.add_argument("--simplex", type=int, default=1, help="target simplex dimension")
    p.add_argument("--max-dim", type=int, default=2, dest="max_dim",
                   help="materialization depth")
    p.add_argument("--format", choices=("dot", "json", "text"), default="dot")
    p.add_argument("--out", default=None, help="output path (default stdout)")
    p.add_argument("--unsafe-limits", action="store_true", dest="unsafe_limits")
    p.set_defaults(func=cmd_subdivide)

    p = sub.add_parser("decompose", help="recover a word from generator data")
    p.add_argument("action", nargs="?", default=None,
                   help="path to a generator-action JSON file, or - for stdin")
    p.add_argument("--word", default=None, help="derive the data from this word")
    p.add_argument("--roundtrip", action="store_true",
                   help="with --word, verify the decomposition recovers it")
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("check-we", help="weak-equivalence preservation verdict")
    p.add_argument("--word", required=True)
    p.add_argument("--max-n", type=int, default=2, dest="max_n",
                   help="largest simplex dimension for homology evidence")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--unsafe-limits", action="store_true", dest="unsafe_limits")
    p.set_defaults(func=cmd_check_we)

    p = sub.add_parser("homology", help="integral homology of a subdivided simplex")
    p.add_argument("--word", required=True)
    p.add_argument("--simplex", type=int, default=1)
    p.add_argument("--max-dim", type=int, default=2, dest="max_dim")
    p.add_argument("--reduced", action="store_true")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.add_argument("--out", default=None)
    p.add_argument("--unsafe-limits", action="store_true", dest="unsafe_limits")
    p.set_defaults(func=cmd_homology)

    p = sub.add_parser("selftest", help="run the built-in verification sweeps")
    p.add_argument("--max-n", type=int, default=2, dest="max_n")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--inject-fault", action="store_true", dest="inject_fault",
                   help=argparse.SUPPRESS)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_selftest)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


def run() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    run()
