"""Command-line entry point.

Exit codes: 0 success, 1 domain error, 2 usage error, 3 guard exceeded.
Payloads go to stdout only after they are fully computed; diagnostics go to
stderr as a single ``error: <kind>: <message>`` line.
"""
from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path

from .construct import (
    DEFAULT_CEILING,
    AssignmentError,
    DiagonalPattern,
    GuardExceeded,
    complete,
    enumerate_all,
    random_free,
    random_solution,
)
from .count import brute_force_count, closed_form_count, count_table, table_csv
from .infinite import LazyTriangular, periodic_pattern, seeded_free_source
from .matrix import (
    MatrixError,
    first_nonzero,
    is_solution,
    parse_matrix_document,
    quadratic_residual,
)
from .quad import (
    QuadraticError,
    QuadraticSpec,
    idempotent_spec,
    involution_spec,
    parse_roots,
    quad_from_roots,
)
from .ring import FiniteRing, RingError

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3

SELFCHECK_GRID = [
    ("zmod:2", "0,1", 1),
    ("zmod:2", "0,1", 2),
    ("zmod:2", "0,1", 3),
    ("zmod:3", "0,1", 3),
    ("zmod:5", "1,4", 2),
    ("zmod:5", "1,4", 3),
    ("zmod:6", "3,4", 2),
    ("zmod:6", "0,1", 3),
    ("gaussian:3", "[0,0],[1,0]", 2),
    ("gaussian:5", "[0,1],[0,4]", 1),
    ("quaternion:3", "[0,0,0,0],[1,0,0,0]", 1),
    ("quaternion:3", "[1,0,0,0],[2,0,0,0]", 2),
]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def make_spec(ring: FiniteRing, roots: str) -> QuadraticSpec:
    if roots == "idempotent":
        return idempotent_spec(ring)
    if roots == "involution":
        return involution_spec(ring)
    a, b = parse_roots(ring, roots)
    return quad_from_roots(ring, a, b)


def _ring_and_spec(args) -> tuple[FiniteRing, QuadraticSpec]:
    ring = FiniteRing.from_descriptor(args.ring)
    return ring, make_spec(ring, args.roots)


def parse_range(text: str) -> list[int]:
    if ".." in text:
        lo, hi = text.split("..", 1)
        return list(range(int(lo), int(hi) + 1))
    return [int(x) for x in text.split(",") if x]


def parse_free_file(text: str, ring: FiniteRing) -> dict:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise AssignmentError(f"free assignment is not valid JSON: {exc}") from exc
    if not isinstance(raw, dict):
        raise AssignmentError("free assignment must be a JSON object")
    free = {}
    for key, coords in raw.items():
        try:
            i, j = (int(x) for x in key.split(","))
        except ValueError as exc:
            raise AssignmentError(f"bad position key {key!r}, expected \"i,j\"") from exc
        free[(i, j)] = ring.from_list(coords)
    return free


def cmd_count(args) -> str:
    report = closed_form_count(args.n, args.q)
    lines = [str(report.total)]
    if args.splits:
        for t in report.per_split:
            lines.append(f"{t.n1} {t.n2} {t.multinomial} {t.weight} {t.value}")
    return "\n".join(lines) + "\n"


def cmd_count_table(args) -> str:
    text = table_csv(count_table(parse_range(args.n), parse_range(args.q)))
    if args.csv:
        Path(args.csv).write_text(text)
        return ""
    return text


def cmd_brute_count(args) -> str:
    _, spec = _ring_and_spec(args)
    total = brute_force_count(
        args.n, spec, ceiling=args.ceiling, diagonal_filter=not args.no_diagonal_filter
    )
    return f"{total}\n"


def cmd_enumerate(args) -> str:
    _, spec = _ring_and_spec(args)
    lines = [m.to_json() + "\n" for m in enumerate_all(args.n, spec, ceiling=args.ceiling)]
    text = "".join(lines)
    if args.out:
        Path(args.out).write_text(text)
        return ""
    return text


def cmd_construct(args) -> str:
    ring, spec = _ring_and_spec(args)
    pattern = DiagonalPattern.from_string(args.pattern)
    if args.random:
        free = random_free(pattern, ring, random.Random(args.seed))
    elif args.free:
        free = parse_free_file(Path(args.free).read_text(), ring)
    elif len(pattern) == 1 or len(set(pattern.tags)) == 1:
        free = {}
    else:
        raise UsageError("construct needs --free FILE or --random --seed S")
    return complete(pattern, spec, free).to_json() + "\n"


def cmd_random(args) -> str:
    _, spec = _ring_and_spec(args)
    return random_solution(args.n, spec, args.seed).to_json() + "\n"


def cmd_verify(args) -> str:
    source = sys.stdin.read() if args.doc == "-" else Path(args.doc).read_text()
    matrix = parse_matrix_document(source)
    ring = matrix.ring
    if args.ring and FiniteRing.from_descriptor(args.ring) != ring:
        raise MatrixError(f"document ring {ring} differs from --ring {args.ring}")
    spec = make_spec(ring, args.roots)
    if is_solution(matrix, spec):
        return "solution: true\n"
    i, j = first_nonzero(quadratic_residual(matrix, spec))
    return f"solution: false\nresidual: ({i},{j})\n"


def cmd_truncate(args) -> str:
    _, spec = _ring_and_spec(args)
    lazy = LazyTriangular(spec, periodic_pattern(args.pattern_rule), seeded_free_source(spec, args.seed))
    return lazy.truncate(args.n).to_json() + "\n"


def selfcheck(ceiling: int = DEFAULT_CEILING) -> tuple[bool, str]:
    lines, ok = [], True
    for desc, roots, n in SELFCHECK_GRID:
        ring = FiniteRing.from_descriptor(desc)
        spec = make_spec(ring, roots)
        closed = closed_form_count(n, ring.cardinality).total
        brute = brute_force_count(n, spec, ceiling=ceiling)
        enum = sum(1 for _ in enumerate_all(n, spec, ceiling=ceiling))
        agree = closed == brute == enum
        ok = ok and agree
        status = "ok" if agree else "MISMATCH"
        lines.append(f"{status} {desc} roots={roots} n={n} closed={closed} brute={brute} enum={enum}")
    return ok, "\n".join(lines) + "\n"


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="triquad", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def with_spec(p):
        p.add_argument("--ring", required=True, help="zmod:<m> | gaussian:<p> | quaternion:<p>")
        p.add_argument(
            "--roots", required=True, help="a,b as residues or coordinate arrays; or idempotent/involution"
        )

    p = sub.add_parser("count", help="closed-form solution count")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--splits", action="store_true")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("count-table", help="closed-form counts as CSV")
    p.add_argument("--n", required=True, help="range like 1..6 or list 1,2,3")
    p.add_argument("--q", required=True, help="list like 2,3,5")
    p.add_argument("--csv", help="output path (default stdout)")
    p.set_defaults(func=cmd_count_table)

    p = sub.add_parser("brute-count", help="exhaustive solution count")
    with_spec(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--no-diagonal-filter", action="store_true")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.set_defaults(func=cmd_brute_count)

    p = sub.add_parser("enumerate", help="every solution, one document per line")
    with_spec(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", help="output path (default stdout)")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("construct", help="complete a pattern and free entries")
    with_spec(p)
    p.add_argument("--pattern", required=True, help="string over {A,B}")
    p.add_argument("--free", help="JSON object mapping \"i,j\" to element arrays")
    p.add_argument("--random", action="store_true")
    p.add_argument("--seed", type=int, default=0)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("random", help="seeded random solution")
    with_spec(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("verify", help="check a matrix document")
    p.add_argument("--doc", required=True, help="path to a matrix document, or - for stdin")
    p.add_argument("--roots", required=True)
    p.add_argument("--ring", help="optional; must match the document")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("truncate", help="leading block of an infinite solution")
    with_spec(p)
    p.add_argument("--pattern-rule", required=True, help="periodic string over {A,B}")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.set_defaults(func=cmd_truncate)

    p = sub.add_parser("selfcheck", help="closed form = brute force = enumeration on a built-in grid")
    p.add_argument("--ceiling", type=int, default=DEFAULT_CEILING)
    p.set_defaults(func=None)
    return parser


def _fail(kind: str, exc: BaseException) -> None:
    message = " ".join(str(exc).split())
    print(f"error: {kind}: {message}", file=sys.stderr)


def run(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command == "selfcheck":
            ok, text = selfcheck(args.ceiling)
            sys.stdout.write(text)
            return EXIT_OK if ok else EXIT_DOMAIN
        payload = args.func(args)
    except UsageError as exc:
        _fail("usage", exc)
        return EXIT_USAGE
    except GuardExceeded as exc:
        _fail("guard", exc)
        return EXIT_GUARD
    except QuadraticError as exc:
        _fail(exc.reason, exc)
        return EXIT_DOMAIN
    except (RingError, MatrixError, AssignmentError, ValueError, OSError) as exc:
        _fail("domain", exc)
        return EXIT_DOMAIN
    sys.stdout.write(payload)
    return EXIT_OK


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
