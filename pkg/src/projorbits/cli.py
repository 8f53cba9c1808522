"""Command-line interface: ``projorbits classify|repr|census|hasse|verify|openfinite``."""

from __future__ import annotations

import argparse
import json
import re
import sys
from fractions import Fraction

from . import classify34 as c34
from .census import census_by_group_action, census_by_label
from .errors import BadLabel, ParseError, ProjOrbitsError, UnsupportedShape
from .hasse import mod_s4_nodes, to_dot
from .linalg import GF, QQ, Configuration
from .matroid import compute_pi, compute_varpi, embed, stabilizer_dim
from .openfinite import (
    has_open_orbit, infinite_family_witness, is_finite_type, open_orbit_witness, orbit_dimension,
)
from .verify import run_suites

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


def _column_lines(text):
    """Line number on which each inner array of "columns" starts."""
    start = text.find('"columns"')
    if start < 0:
        return []
    lines, depth, line = [], 0, text.count("\n", 0, start) + 1
    for ch in text[start:]:
        if ch == "\n":
            line += 1
        elif ch == "[":
            depth += 1
            if depth == 2:
                lines.append(line)
        elif ch == "]":
            depth -= 1
            if depth == 0:
                break
    return lines


def _parse_field(spec):
    if spec == "rational" or spec == {"kind": "rational"}:
        return QQ
    if isinstance(spec, dict):
        if spec.get("kind") == "prime" and "q" in spec:
            return GF(_as_int(spec["q"], "q"))
        if set(spec) == {"prime"}:
            return GF(_as_int(spec["prime"], "q"))
    raise ParseError(f"unrecognised field {spec!r}; expected \"rational\" or {{\"kind\": \"prime\", \"q\": q}}")


def _as_int(x, what):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ParseError(f"{what} must be an integer, got {x!r}")
    try:
        return int(x)
    except ValueError:
        raise ParseError(f"{what} must be an integer, got {x!r}") from None


def _entry(x, F):
    if isinstance(x, bool) or not isinstance(x, (int, str)):
        raise ValueError(f"entry {x!r} is not an integer or an \"a/b\" string")
    if F.is_rational:
        return Fraction(x)
    return _as_int(x, "prime-field entry") % F.q


def parse_config(text, source="<stdin>"):
    """Parse a ConfigFile; errors carry ``source:line``."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None
    if not isinstance(data, dict):
        raise ParseError(f"{source}:1: expected a JSON object")
    for key in ("field", "n", "m", "columns"):
        if key not in data:
            raise ParseError(f"{source}:1: missing key {key!r}")
    try:
        F = _parse_field(data["field"])
    except ParseError as exc:
        raise ParseError(f"{source}: {exc}") from None
    n, m = _as_int(data["n"], "n"), _as_int(data["m"], "m")
    cols = data["columns"]
    lines = _column_lines(text)
    where = lambda k: f"{source}:{lines[k] if k < len(lines) else 1}"
    if not isinstance(cols, list) or len(cols) != m:
        raise ParseError(f"{where(0)}: expected {m} columns")
    parsed = []
    for k, col in enumerate(cols):
        if not isinstance(col, list) or len(col) != n:
            raise ParseError(f"{where(k)}: column {k + 1} must have {n} entries")
        try:
            vec = tuple(_entry(x, F) for x in col)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"{where(k)}: column {k + 1}: {exc}") from None
        if not any(vec):
            raise ParseError(f"{where(k)}: column {k + 1} is the zero vector")
        parsed.append(vec)
    return Configuration(F, tuple(parsed))


def config_to_dict(v):
    F = v.field
    field = {"kind": "rational"} if F.is_rational else {"kind": "prime", "q": F.q}
    fmt = str if F.is_rational else int
    return {"field": field, "n": v.n, "m": v.m,
            "columns": [[fmt(x) for x in c.coords] for c in v.columns]}


_LABEL_RE = re.compile(r"phi\[(\d)(?:;(\d)(?:,(\d))?)?\]")


def dump_config(v):
    """ConfigFile text with one column per line."""
    d = config_to_dict(v)
    cols = ",\n".join("    " + json.dumps(c) for c in d["columns"])
    return (f'{{\n  "field": {json.dumps(d["field"])},\n  "n": {d["n"]},\n  "m": {d["m"]},\n'
            f'  "columns": [\n{cols}\n  ]\n}}\n')


def _affine_param(text, field):
    try:
        return c34.ProjParam.affine(Fraction(text), field)
    except (ValueError, ZeroDivisionError):
        raise BadLabel(f"bad affine parameter {text!r} over {field}") from None


def parse_label(s, field=QQ):
    """Label grammar: phi[2], phi[4;i], phi[4;i,j], phi[5;i,j], phi[6;k,l], phi[7;i], phi[8], O5@a."""
    s = s.strip()
    if s.startswith("O5@"):
        return c34.o5(_affine_param(s[3:], field))
    match = _LABEL_RE.fullmatch(s)
    if not match:
        raise BadLabel(f"cannot parse label {s!r}")
    k = int(match.group(1))
    idx = tuple(int(g) for g in match.groups()[1:] if g is not None)
    if any(not 1 <= i <= 4 for i in idx) or len(set(idx)) != len(idx):
        raise BadLabel(f"indices in {s!r} must be distinct and between 1 and 4")
    makers = {(2, 0): c34.phi2, (4, 1): c34.phi4, (4, 2): c34.phi4pair, (5, 2): c34.phi5,
              (6, 2): c34.phi6pair, (7, 1): c34.phi7, (8, 0): c34.phi8}
    if (k, len(idx)) not in makers:
        raise BadLabel(f"no label of the form {s!r}")
    return makers[k, len(idx)](*idx)


def parse_affine(s, field=QQ):
    """A primed parameter from its affine coordinate; BadParameter for 0, 1."""
    p = _affine_param(s, field)
    c34.o5(p)
    return p


def _set_name(I):
    return "{" + ",".join(map(str, I)) + "}"


def classify_report(v):
    L = c34.classify(v)
    plane = embed(v, 3) if v.n == 2 else v
    rep = c34.representative(L, field=v.field)
    return {
        "label": L.name,
        "dim": c34.orbit_dim(L),
        "p": str(L.param.a) if L.param is not None else None,
        "rank_function": {_set_name(I): r for I, r in compute_pi(v).table()},
        "splitting": str(compute_varpi(plane)),
        "stabilizer_dim": stabilizer_dim(plane),
        "representative": config_to_dict(rep),
    }


def cmd_classify(args):
    if args.path in (None, "-"):
        text, source = sys.stdin.read(), "<stdin>"
    else:
        with open(args.path, encoding="utf-8") as fh:
            text, source = fh.read(), args.path
    v = parse_config(text, source)
    if (v.n, v.m) not in ((3, 4), (2, 4)):
        raise UnsupportedShape(f"only (n, m) = (3, 4) or (2, 4) can be classified, got ({v.n}, {v.m})")
    report = classify_report(v)
    if args.json:
        print(json.dumps(report, indent=2))
        return EXIT_OK
    print(f"{report['label']}, dim {report['dim']}")
    if report["p"] is not None:
        print(f"p = {report['p']}")
    print("rank function:")
    for I, r in report["rank_function"].items():
        print(f"  {I}: {r}")
    print(f"splitting: {report['splitting']}")
    print(f"representative: {c34.representative(c34.classify(v), field=v.field)}")
    return EXIT_OK


def cmd_repr(args):
    field = GF(args.q) if args.q else QQ
    L = parse_label(args.label, field)
    text = dump_config(c34.representative(L, field=field))
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def cmd_census(args):
    n, m = args.nm
    if args.method == "label":
        if (n, m) != (3, 4):
            raise UnsupportedShape("the label census only covers (n, m) = (3, 4); use --method group")
        report = census_by_label(args.q)
    else:
        report = census_by_group_action(args.q, n, m)
    print(report.to_json() if args.json else report.to_text(), end="" if not args.json else "\n")
    problems = report.problems()
    for msg in problems:
        print(f"check failed: {msg}", file=sys.stderr)
    return EXIT_FAIL if problems else EXIT_OK


def cmd_hasse(args):
    p = parse_affine(args.p)
    dot = to_dot(p, mod_s4=args.mod_s4)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(dot)
        nodes = len(mod_s4_nodes(p)) if args.mod_s4 else len(c34.all_labels(p))
        print(f"wrote {args.dot} ({nodes} nodes)")
    else:
        print(dot, end="")
    return EXIT_OK


def cmd_verify(args):
    results = run_suites(trials=args.trials, seed=args.seed, only=args.suite)
    failed = 0
    for name, ok, bad in results:
        print(f"{name}: {ok} passed, {bad} failed")
        failed += bad
    print("all suites pass" if not failed else f"{failed} failures")
    return EXIT_FAIL if failed else EXIT_OK


def openfinite_summary(n, m):
    """One-line verdict plus detail lines; the witness dimensions are recomputed, not assumed."""
    is_open, finite = has_open_orbit(n, m), is_finite_type(n, m)
    details, verified = [], True
    if is_open:
        w = open_orbit_witness(n, m)
        d = orbit_dimension(w)
        verified = d == (n - 1) * m
        details.append(f"witness {w}: orbit dim {d}, ambient dim {(n - 1) * m}")
    if not finite:
        fam = [infinite_family_witness(n, m, c34.ProjParam.affine(a)) for a in (2, 3)]
        details.append(f"family v(p), e.g. {fam[0]} and {fam[1]}")
    open_txt = "yes" if is_open else "no"
    if is_open and not finite:
        open_txt += f" (dim {(n - 1) * m} witness {'verified' if verified else 'FAILED'})"
    finite_txt = "yes" if finite else "no"
    if is_open and not finite:
        finite_txt += " (family v(p))"
    return f"open: {open_txt}; finite: {finite_txt}", details, verified


def cmd_openfinite(args):
    line, details, verified = openfinite_summary(args.n, args.m)
    print(line)
    for d in details:
        print(f"  {d}")
    return EXIT_OK if verified else EXIT_FAIL


def _nm(s):
    try:
        n, m = (int(x) for x in s.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected n,m, got {s!r}") from None
    return n, m


def build_parser():
    parser = argparse.ArgumentParser(prog="projorbits",
                                     description="GL_n orbits on m-tuples of projective points.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="label a configuration file (JSON)")
    p.add_argument("path", nargs="?", help="ConfigFile path; '-' or omitted reads stdin")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("repr", help="representative configuration of a label")
    p.add_argument("label", help="phi[8], phi[7;1], phi[4;1,2], O5@2, ...")
    p.add_argument("--q", type=int, help="write over GF(q) instead of QQ")
    p.add_argument("--out", help="write the ConfigFile here instead of stdout")
    p.set_defaults(func=cmd_repr)

    p = sub.add_parser("census", help="exhaustive orbit census over GF(q)")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--method", choices=("label", "group"), default="label")
    p.add_argument("--nm", type=_nm, default=(3, 4), help="n,m (group method only for other shapes)")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_census)

    p = sub.add_parser("hasse", help="DOT Hasse diagram of the closure order")
    p.add_argument("--p", required=True, help="affine parameter of the O(5;p) stratum")
    p.add_argument("--dot", help="output path")
    p.add_argument("--mod-s4", action="store_true", help="quotient by column permutations")
    p.set_defaults(func=cmd_hasse)

    p = sub.add_parser("verify", help="run the seeded invariant suites")
    p.add_argument("--trials", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--suite", action="append", help="restrict to a suite (repeatable)")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("openfinite", help="open-orbit and finite-type verdicts")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.set_defaults(func=cmd_openfinite)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ProjOrbitsError, OSError) as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
