"""Command-line front end.

Every subcommand builds one report dict; ``--json`` prints it as sorted JSON
and the text mode prints the same dict as indented ``key: value`` lines.
Exit codes: 0 on success or holds=true, 1 on holds=false, 2 on input error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from math import gcd
from typing import Callable, Optional

from . import degrees as dg
from .classify import (
    bresinsky_bounds,
    bresinsky_extension_has_sifre,
    bresinsky_extension_m,
    bresinsky_semigroup,
    extension_m_values,
    herzog_data,
    no_sifre_extension_reason,
    sifre_extension_coefficients,
)
from .criteria import (
    extension_conditions,
    extension_has_sifre,
    gluing_has_sifre,
    gluing_unique_presentation,
    is_sifre,
    is_sifre_symmetric,
)
from .errors import SifreError
from .gluing import ci_family, extend, glue_numerical
from .resolution import betti_multiplicity, betti_table
from .search import ell_note, search_extensions, search_gluings
from .semigroup import (
    AffineSemigroup,
    NumericalSemigroup,
    SymmetryClass,
    parse_affine_generators,
    parse_generators,
)

EXIT_OK, EXIT_FALSE, EXIT_INPUT = 0, 1, 2


class UsageError(SifreError):
    pass


# -- argument helpers -----------------------------------------------------------

def _numerical(text: Optional[str], args, flag: str = "--gens") -> NumericalSemigroup:
    if not text:
        raise UsageError(f"{flag} is required, e.g. {flag} 31,37,41")
    # the user's list is the presentation; --strict-minimal rejects redundant generators
    return NumericalSemigroup(parse_generators(text), strict=args.strict_minimal, minimize=False)


def _affine(args) -> AffineSemigroup:
    return AffineSemigroup(parse_affine_generators(args.affine_gens), strict=args.strict_minimal)


def _ints(text: str, count: Optional[int], flag: str) -> list[int]:
    values = parse_generators(text)
    if count is not None and len(values) != count:
        raise UsageError(f"{flag} needs exactly {count} comma-separated integers, got {len(values)}")
    return values


def _content_one(S: NumericalSemigroup) -> NumericalSemigroup:
    if S.content != 1:
        raise UsageError(f"generators {list(S.generators)} have gcd {S.content}; divide it out first")
    return S


def _verdict_code(holds: bool) -> int:
    return EXIT_OK if holds else EXIT_FALSE


# -- subcommands ------------------------------------------------------------------

def cmd_info(args):
    if args.affine_gens:
        A = _affine(args)
        return {
            "kind": "affine",
            "generators": [list(g) for g in A.generators],
            "dimension": A.ambient_dim,
            "embedding_dimension": len(A.generators),
        }, EXIT_OK
    S = _numerical(args.gens, args)
    report = {
        "kind": "numerical",
        "generators": list(S.generators),
        "content": S.content,
        "minimal": S.is_minimal,
        "embedding_dimension": S.embedding_dimension,
    }
    if S.content == 1:
        gd = S.gap_data
        report.update(
            frobenius=gd.frobenius,
            genus=gd.genus,
            gaps=list(gd.gaps),
            pseudo_frobenius=list(gd.pseudo_frobenius),
            symmetry=S.symmetry_class.value,
            apery=list(S.apery_set()),
        )
    return report, EXIT_OK


def cmd_betti(args):
    if args.affine_gens:
        A = _affine(args)
        if not args.degree:
            raise UsageError("affine Betti data is computed one degree at a time; pass --degree, e.g. --degree 4,4")
        d = tuple(_ints(args.degree, A.ambient_dim, "--degree"))
        mult = {str(i): betti_multiplicity(A, d, i) for i in range(len(A.generators) + 1)}
        return {"generators": [list(g) for g in A.generators], "degree": list(d), "multiplicity": mult}, EXIT_OK
    S = _content_one(_numerical(args.gens, args))
    table = betti_table(S)
    return {"generators": list(S.generators), "betti": table.to_json()}, EXIT_OK


def cmd_sifre(args):
    S = _content_one(_numerical(args.gens, args))
    table = betti_table(S)
    verdict = is_sifre(table, S)
    report = {"generators": list(S.generators), "betti": table.to_json(), "verdict": verdict.to_json()}
    if S.is_minimal and S.symmetry_class is SymmetryClass.SYMMETRIC:
        report["half_range_verdict"] = is_sifre_symmetric(table, S).to_json()
    return report, _verdict_code(verdict.holds)


def cmd_glue(args):
    s1 = _content_one(_numerical(args.s1, args, "--s1"))
    s2 = _content_one(_numerical(args.s2, args, "--s2"))
    if args.a is None or args.b is None:
        raise UsageError("--a and --b are required")
    g = glue_numerical(s1, s2, args.a, args.b)
    t1, t2 = betti_table(s1), betti_table(s2)
    report = {"gluing": g.to_json(), "betti": g.betti(t1, t2).to_json()}
    if args.check == "none":
        return report, EXIT_OK
    verdict = gluing_has_sifre(g, t1, t2) if args.check == "sifre" else gluing_unique_presentation(g, t1, t2)
    report["check"] = args.check
    report["verdict"] = verdict.to_json()
    return report, _verdict_code(verdict.holds)


def _default_ell(m: int) -> int:
    ell = 2
    while gcd(ell, m) != 1:
        ell += 1
    return ell


def cmd_extend(args):
    S = _content_one(_numerical(args.gens, args))
    if args.m is None:
        raise UsageError("--m is required")
    ell = args.ell if args.ell is not None else _default_ell(args.m)
    e = extend(S, args.m, ell)
    table = betti_table(S)
    verdict = extension_has_sifre(e, table)
    return {
        "extension": e.to_json(),
        "betti": e.betti(table).to_json(),
        "ell_note": ell_note(args.m),
        "verdict": verdict.to_json(),
    }, _verdict_code(verdict.holds)


def cmd_herzog(args):
    S = _content_one(_numerical(args.gens, args))
    h = herzog_data(S)
    reason = no_sifre_extension_reason(h)
    return {
        "herzog": h.to_json(),
        "sifre_extension_coefficients": [list(u) for u in sifre_extension_coefficients(h)],
        "sifre_extension_m": extension_m_values(h),
        "no_sifre_extension": reason is not None,
        "reason": f"no SIFRE extension ({reason})" if reason else None,
    }, EXIT_OK


def cmd_bresinsky(args):
    if not args.cross:
        raise UsageError("--cross needs the eight entries a21,a31,a32,a42,a13,a43,a14,a24")
    b = bresinsky_semigroup(_ints(args.cross, 8, "--cross"))
    report = {
        "bresinsky": b.to_json(),
        "generators": list(b.semigroup.generators),
        "bounds": list(bresinsky_bounds(b)),
    }
    if not args.u:
        return report, EXIT_OK
    u = _ints(args.u, 4, "--u")
    m = bresinsky_extension_m(b, u)
    predicted = bresinsky_extension_has_sifre(b, u)
    S = b.semigroup
    direct = extension_conditions(S, betti_table(S), m)
    report.update(u=u, m=m, predicted=predicted, verdict=direct.to_json())
    return report, _verdict_code(direct.holds)


def cmd_ci_family(args):
    if args.n is None or not args.u:
        raise UsageError("--n and --u are required, e.g. --n 2 --u 1,1")
    steps = ci_family(args.n, _ints(args.u, args.n, "--u"), args.depth)
    out, ok = [], True
    for st in steps:
        verdict = is_sifre(st.table, st.semigroup)
        ok = ok and verdict.holds
        out.append({
            "j": st.j,
            "generators": [list(g) for g in st.semigroup.generators],
            "a": list(st.a_j),
            "betti": st.table.to_json(),
            "verdict": verdict.to_json(),
        })
    return {"n": args.n, "u": [int(x) for x in parse_generators(args.u)], "steps": out}, _verdict_code(ok)


def cmd_search_extensions(args):
    S = _content_one(_numerical(args.gens, args))
    return search_extensions(S, args.m_max).to_json(), EXIT_OK


def cmd_search_gluings(args):
    s1 = _content_one(_numerical(args.s1 or args.gens, args, "--s1"))
    s2 = _content_one(_numerical(args.s2, args, "--s2")) if args.s2 else None
    return search_gluings(s1, s2, args.a_max, args.b_max).to_json(), EXIT_OK


COMMANDS: dict[str, Callable] = {
    "info": cmd_info,
    "betti": cmd_betti,
    "sifre": cmd_sifre,
    "glue": cmd_glue,
    "extend": cmd_extend,
    "herzog": cmd_herzog,
    "bresinsky": cmd_bresinsky,
    "ci-family": cmd_ci_family,
    "search-extensions": cmd_search_extensions,
    "search-gluings": cmd_search_gluings,
}


# -- output -------------------------------------------------------------------------

def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True)


def _text_lines(value, indent: int = 0) -> list[str]:
    pad = "  " * indent
    lines = []
    for key in sorted(value):
        v = value[key]
        if isinstance(v, dict) and v:
            lines.append(f"{pad}{key}:")
            lines.extend(_text_lines(v, indent + 1))
        elif isinstance(v, list) and v and all(isinstance(x, dict) for x in v):
            lines.append(f"{pad}{key}:")
            for k, item in enumerate(v):
                lines.append(f"{pad}  - [{k}]")
                lines.extend(_text_lines(item, indent + 2))
        else:
            lines.append(f"{pad}{key}: {json.dumps(v)}")
    return lines


def render_text(report: dict) -> str:
    return "\n".join(_text_lines(report))


def input_key(command: str, args) -> str:
    """Canonical hash of a command and the arguments that affect its result."""
    skip = {"json", "out", "command", "func"}
    payload = {k: v for k, v in sorted(vars(args).items()) if k not in skip}
    blob = json.dumps({"command": command, "args": payload}, sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


def _lookup(path: str, key: str) -> Optional[dict]:
    if not os.path.exists(path):
        return None
    with open(path) as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                rec = json.loads(line)
            except json.JSONDecodeError:
                continue  # a torn last line from an interrupted run
            if rec.get("key") == key:
                return rec
    return None


def _append(path: str, record: dict) -> None:
    with open(path, "a") as fh:
        fh.write(json.dumps(record, sort_keys=True) + "\n")


# -- entry point --------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--gens", help="numerical generators, e.g. 31,37,41")
    common.add_argument("--affine-gens", help="affine generators, e.g. 2,0;0,2;1,1")
    common.add_argument("--json", action="store_true", help="print JSON instead of text")
    common.add_argument("--out", metavar="FILE", help="NDJSON results file; reruns with the same input are skipped")
    common.add_argument("--strict-minimal", action="store_true", help="reject non-minimal generator lists")

    parser = argparse.ArgumentParser(prog="sifre", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    p = {name: sub.add_parser(name, parents=[common]) for name in COMMANDS}

    p["betti"].add_argument("--degree", help="affine degree, e.g. 4,4")
    for name in ("glue", "search-gluings"):
        p[name].add_argument("--s1")
        p[name].add_argument("--s2")
    p["glue"].add_argument("--a", type=int)
    p["glue"].add_argument("--b", type=int)
    p["glue"].add_argument("--check", choices=("sifre", "unique", "none"), default="sifre")
    p["extend"].add_argument("--m", type=int)
    p["extend"].add_argument("--ell", type=int, help="defaults to the least l >= 2 coprime to m")
    p["bresinsky"].add_argument("--cross", help="a21,a31,a32,a42,a13,a43,a14,a24")
    p["bresinsky"].add_argument("--u", help="extension coefficients u1,u2,u3,u4")
    p["ci-family"].add_argument("--n", type=int)
    p["ci-family"].add_argument("--u", help="weights u1,...,un")
    p["ci-family"].add_argument("--depth", type=int, default=3)
    p["search-extensions"].add_argument("--m-max", type=int)
    p["search-gluings"].add_argument("--a-max", type=int)
    p["search-gluings"].add_argument("--b-max", type=int)
    return parser


def run(argv: Optional[list[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    key = input_key(args.command, args)
    record = _lookup(args.out, key) if args.out else None
    if record is not None:
        report, code = record["result"], record["exit_code"]
    else:
        try:
            report, code = COMMANDS[args.command](args)
        except (SifreError, ValueError) as exc:
            print(f"sifre {args.command}: {exc}", file=stderr)
            return EXIT_INPUT
        if args.out:
            _append(args.out, {"key": key, "command": args.command, "result": report, "exit_code": code})
    print(render_json(report) if args.json else render_text(report), file=stdout)
    return code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
