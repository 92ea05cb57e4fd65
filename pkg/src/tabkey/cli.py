"""``tabkey`` command-line interface.

Every subcommand reads its input (one object, or two for meet/join/leq)
from ``--in PATH`` or standard input and writes to standard output.
Input format is detected: JSON, the tableau text format (``n=5: 4,2,1 |
5,2 | 5``), or a matrix as spaced integers or ``.+-`` characters.

Exit status: 0 success, 2 unparseable input, 3 input violating an
invariant, 4 failed verification.
"""
from __future__ import annotations

import argparse
import json
import sys
import time

from . import asm as A
from . import enumeration as E
from . import plactic as P
from . import signmatrix as S
from . import verify as V
from .kernels import BACKEND
from .tableau import (ParseError, TableauError, YoungTableau, complement,
                      format_tableau, parse_tableau, tableau_from_json,
                      tableau_to_json)

EXIT_PARSE, EXIT_INVALID, EXIT_VERIFY = 2, 3, 4


# -- input --------------------------------------------------------------------

def _from_json_obj(obj):
    if isinstance(obj, dict) and "alphabet" in obj:
        return tableau_from_json(obj)
    if isinstance(obj, dict) and "entries" in obj:
        return S.matrix_from_json(obj)
    raise ParseError("JSON object is neither a tableau nor a matrix")


def read_objects(text: str) -> list:
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input")
    if stripped[0] in "{[":
        try:
            data = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad JSON: {exc.msg}", exc.pos) from None
        items = data if isinstance(data, list) else [data]
        return [_from_json_obj(x) for x in items]
    objects, block = [], []

    def flush():
        if block:
            objects.append(S.parse_matrix("\n".join(block)))
            block.clear()

    for line in stripped.splitlines():
        s = line.strip()
        if s.startswith("n="):
            flush()
            objects.append(parse_tableau(s))
        elif not s:
            flush()
        else:
            block.append(s)
    flush()
    return objects


def _read(args, count: int = 1) -> list:
    if args.infile:
        with open(args.infile) as fh:
            text = fh.read()
    else:
        text = sys.stdin.read()
    objs = read_objects(text)
    if len(objs) != count:
        raise ParseError(f"expected {count} object(s), found {len(objs)}")
    return objs


def _as_tableau(obj) -> YoungTableau:
    return S.to_tableau(obj) if isinstance(obj, S.SignMatrix) else obj


def _as_matrix(obj) -> S.SignMatrix:
    return S.from_tableau(obj) if isinstance(obj, YoungTableau) else obj


# -- output -------------------------------------------------------------------

def render(obj, fmt: str) -> str:
    if isinstance(obj, YoungTableau):
        return json.dumps(tableau_to_json(obj)) if fmt == "json" else format_tableau(obj)
    if isinstance(obj, S.SignMatrix):
        if fmt == "json":
            return json.dumps(S.matrix_to_json(obj))
        return S.format_compact(obj) if fmt == "compact" else S.format_matrix(obj)
    return json.dumps(obj) if fmt == "json" else str(obj)


def _same_kind(result: YoungTableau, like):
    return S.from_tableau(result) if isinstance(like, S.SignMatrix) else result


# -- subcommands --------------------------------------------------------------

def cmd_convert(args):
    obj, = _read(args)
    if isinstance(obj, YoungTableau):
        return S.from_tableau(obj)
    return S.to_tableau(obj)


def cmd_leftkey(args):
    obj, = _read(args)
    t = _as_tableau(obj)
    key = (S.left_key_elimination(t) if args.method == "elimination"
           else P.left_key_classical(t))
    return _same_kind(key, obj)


def cmd_rightkey(args):
    obj, = _read(args)
    t = _as_tableau(obj)
    key = (S.right_key_via_complement(t) if args.method == "elimination"
           else P.right_key_classical(t))
    return _same_kind(key, obj)


def cmd_pseudokey(args):
    obj, = _read(args)
    pk = S.pseudo_key(_as_matrix(obj))
    return S.to_tableau(pk) if isinstance(obj, YoungTableau) else pk


def cmd_complement(args):
    obj, = _read(args)
    return _same_kind(complement(_as_tableau(obj)), obj)


def cmd_asm2mt(args):
    obj, = _read(args)
    tri = A.asm_to_monotone(_as_matrix(obj))
    if args.render:
        return "# non-canonical French rendering\n" + A.render_triangle(tri)
    return tri


def cmd_mt2asm(args):
    obj, = _read(args)
    return A.monotone_to_asm(_as_tableau(obj))


def cmd_keyasm(args):
    obj, = _read(args)
    m = A.validate_asm(_as_matrix(obj))
    if args.method == "elimination":
        key = A.key_of_asm(m)
    else:
        key = A.monotone_to_asm(P.left_key_classical(A.asm_to_monotone(m)))
    if args.permutation:
        return " ".join(map(str, A.permutation_of(key)))
    return key


def _pair(args):
    x, y = _read(args, 2)
    if isinstance(x, S.SignMatrix) and isinstance(y, S.SignMatrix):
        return A.asm_to_monotone(x), A.asm_to_monotone(y), True
    return A.validate_monotone(_as_tableau(x)), A.validate_monotone(_as_tableau(y)), False


def cmd_meet(args):
    x, y, as_asm = _pair(args)
    out = A.mt_inf(x, y)
    return A.monotone_to_asm(out) if as_asm else out


def cmd_join(args):
    x, y, as_asm = _pair(args)
    out = A.mt_sup(x, y)
    return A.monotone_to_asm(out) if as_asm else out


def cmd_leq(args):
    x, y, _ = _pair(args)
    return "true" if A.mt_leq(x, y) else "false"


def cmd_census(args):
    c = E.census(args.size, jobs=args.jobs)
    if args.format == "csv":
        return c.to_csv()
    return json.dumps(c.to_json())


def cmd_patterns132(args):
    n = args.size
    data = {"n": n, "closed_form": E.count_132(n),
            "brute_force": E.count_132_bruteforce(n)}
    if n <= 7:
        data["asms_with_one_minus_one"] = E.census(n).counts.get(1, 0)
    return json.dumps(data)


def cmd_verify(args):
    start = time.perf_counter()
    results = V.run_all(max_size=args.max_size, tableau_alphabet=args.tableau_alphabet,
                        jobs=args.jobs)
    if args.slow:
        results.append(V.check_census(7, jobs=args.jobs))
    lines = [r.line() for r in results]
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} checks passed "
                 f"in {time.perf_counter() - start:.1f}s (kernels: {BACKEND})")
    args.exit_code = EXIT_VERIFY if failed else 0
    return "\n".join(lines)


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tabkey", description="Keys of Young tableaux and alternating sign matrices.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, help_, method=False):
        p = sub.add_parser(name, help=help_)
        p.add_argument("--in", dest="infile", metavar="PATH",
                       help="read input from PATH instead of standard input")
        p.add_argument("--format", choices=["text", "json", "compact"], default="text")
        if method:
            p.add_argument("--method", choices=["elimination", "classical"],
                           default="elimination")
        p.set_defaults(func=func)
        return p

    add("convert", cmd_convert, "tableau <-> sign matrix")
    add("leftkey", cmd_leftkey, "left key of a tableau", method=True)
    add("rightkey", cmd_rightkey, "right key of a tableau", method=True)
    add("pseudokey", cmd_pseudokey, "pseudo-key of a sign matrix")
    add("complement", cmd_complement, "complement of a tableau")
    add("asm2mt", cmd_asm2mt, "ASM -> monotone triangle").add_argument(
        "--render", action="store_true", help="print rows French-style (not parseable)")
    add("mt2asm", cmd_mt2asm, "monotone triangle -> ASM")
    add("keyasm", cmd_keyasm, "key of an ASM", method=True).add_argument(
        "--permutation", action="store_true", help="print the permutation one-line")
    add("meet", cmd_meet, "box-wise min of two triangles (or ASMs)")
    add("join", cmd_join, "box-wise max of two triangles (or ASMs)")
    add("leq", cmd_leq, "lattice comparison of two triangles (or ASMs)")

    jobs_default = E.default_jobs()
    p = sub.add_parser("census", help="ASMs of a size counted by number of -1 entries")
    p.add_argument("--size", type=int, required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--jobs", type=int, default=jobs_default)
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("patterns132", help="total 132 occurrences over S_n")
    p.add_argument("--size", type=int, required=True)
    p.set_defaults(func=cmd_patterns132)

    p = sub.add_parser("verify", help="run the identity checks")
    p.add_argument("--max-size", type=int, default=5, help="ASM sweep bound")
    p.add_argument("--tableau-alphabet", type=int, default=4, help="tableau corpus bound")
    p.add_argument("--jobs", type=int, default=jobs_default)
    p.add_argument("--slow", action="store_true", help="also sweep size-7 ASMs")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    args.exit_code = 0
    fmt = getattr(args, "format", "text")
    try:
        out = args.func(args)
    except ParseError as exc:
        print(f"tabkey: parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (TableauError, S.SignMatrixError, A.AsmError) as exc:
        print(f"tabkey: invalid input: {exc}", file=sys.stderr)
        return EXIT_INVALID
    print(render(out, fmt) if not isinstance(out, str) else out)
    return args.exit_code


if __name__ == "__main__":
    sys.exit(main())
