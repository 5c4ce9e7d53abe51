"""Command line interface: ``macq E | gch | verify | dot``."""
from __future__ import annotations

import argparse
import json
import re
import sys

from .charmod import e_t_infinity, gch_demazure
from .errors import (ArgumentError, ConfigurationError, InternalConsistencyError, MacqError,
                     VerificationError)
from .qbg import build_qbg
from .rootdata import Weight, parse_type


class UsageError(Exception):
    pass


def parse_weight(text, datum):
    try:
        coords = [int(t) for t in text.split(",")]
    except ValueError:
        raise UsageError(f"cannot parse weight {text!r}")
    if len(coords) != datum.rank or any(c < 0 for c in coords):
        raise UsageError(f"weight needs {datum.rank} nonnegative entries")
    if not any(coords):
        raise UsageError("weight must be nonzero")
    return Weight(coords)


def parse_word(text, datum, S=frozenset()):
    """Letters of a word given as s<i> tokens, or the names e, w0, w0S."""
    W = datum.weyl
    letters = []
    for tok in re.split(r"[\s*]+", text.strip()):
        if not tok or tok == "e":
            continue
        if tok == "w0":
            letters.extend(W.w0.word)
        elif tok == "w0S":
            letters.extend(W.longest(S).word)
        elif re.fullmatch(r"s\d+", tok) and 1 <= int(tok[1:]) <= datum.rank:
            letters.append(int(tok[1:]))
        else:
            raise UsageError(f"bad word token {tok!r}")
    return tuple(letters)


def parse_subset(text, datum):
    if not text:
        return frozenset()
    try:
        S = frozenset(int(t) for t in re.split(r"[\s,]+", text.strip()) if t)
    except ValueError:
        raise UsageError(f"cannot parse subset {text!r}")
    if not S <= set(datum.index_set):
        raise UsageError(f"subset {sorted(S)} is not inside the index set")
    return S


def _emit(text, out):
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _render(poly, fmt, denominator=()):
    if fmt == "json":
        return poly.to_json(denominator) + "\n"
    if fmt == "latex":
        return poly.to_latex() + "\n"
    return poly.to_text() + "\n"


def cmd_E(args):
    datum = parse_type(args.type)
    lam = parse_weight(args.weight, datum)
    S = datum.stabilizer(lam)
    mu = datum.weyl.from_word(parse_word(args.mu, datum, S)).act(lam)
    word = parse_word(args.seed_word, datum, S) if args.seed_word else None
    poly = e_t_infinity(mu, lam, datum, args.backend, word)
    _emit(_render(poly, args.format), args.out)
    return 0


def cmd_gch(args):
    datum = parse_type(args.type)
    lam = parse_weight(args.weight, datum)
    S = datum.stabilizer(lam)
    W = datum.weyl
    x = W.from_word(parse_word(args.x, datum, S))
    if not W.is_min_rep(x, S):
        y = W.floor(x, S)
        print(f"warning: {x} projected to the coset representative {y}", file=sys.stderr)
        x = y
    series = gch_demazure(x, lam, datum)
    if args.quotient:
        _emit(_render(series.numerator, args.format), args.out)
        return 0
    if args.format == "json":
        obj = json.loads(series.numerator.to_json(series.denominator))
        if args.truncate:
            obj["expansion"] = {"order": args.truncate,
                                "terms": series.expand(args.truncate).to_json_obj()}
        text = json.dumps(obj) + "\n"
    elif args.format == "latex":
        den = "".join(f"(1-q^{{-{r}}})" for r in series.denominator) or "1"
        text = f"\\frac{{{series.numerator.to_latex()}}}{{{den}}}\n"
    else:
        text = f"numerator: {series.numerator.to_text()}\ndenominator: {series.denominator_text()}\n"
        if args.truncate:
            text += f"expansion to q^-{args.truncate}: {series.expand(args.truncate).to_text()}\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args):
    from .verify import run_all

    datum = parse_type(args.type)
    lam = parse_weight(args.weight, datum)
    checks = run_all(datum, lam)
    width = max(len(c.name) for c in checks)
    lines = [f"{'check':<{width}}  status  cases"]
    for c in checks:
        lines.append(f"{c.name:<{width}}  {'pass' if c.ok else 'FAIL':<6}  {c.cases}")
        lines.extend(f"  note: {n}" for n in c.notes)
    failed = [c for c in checks if not c.ok]
    if failed:
        lines.append("first counterexample: " + json.dumps({failed[0].name: failed[0].failure}))
    _emit("\n".join(lines) + "\n", args.out)
    return 1 if failed else 0


def cmd_dot(args):
    datum = parse_type(args.type)
    S = parse_subset(args.S, datum)
    _emit(build_qbg(datum, S).to_dot(), args.out)
    return 0


def build_parser():
    p = argparse.ArgumentParser(prog="macq", description=(
        "E_mu(q, t=infinity) via quantum alcove walks and quantum LS paths, "
        "and graded characters of level-zero Demazure modules."))
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, weight=True):
        sp.add_argument("--type", required=True, help="e.g. A2, B3, G2")
        if weight:
            sp.add_argument("--weight", required=True, help="m1,...,mn in fundamental weights")
        sp.add_argument("--out", help="write to a file instead of stdout")

    e = sub.add_parser("E", help="E_mu(q, infinity)")
    common(e)
    e.add_argument("--mu", default="w0", help="Weyl word applied to the weight, or w0 / e")
    e.add_argument("--backend", choices=["os", "qls", "both"], default="both")
    e.add_argument("--format", choices=["text", "json", "latex"], default="text")
    e.add_argument("--seed-word", help="reduced word for v(lambda_-) used to order the walk roots")
    e.set_defaults(func=cmd_E)

    g = sub.add_parser("gch", help="graded character of a Demazure module or its quotient")
    common(g)
    g.add_argument("--x", default="w0", help="Weyl word for x")
    g.add_argument("--quotient", action="store_true", help="print only the quotient character")
    g.add_argument("--truncate", type=int, default=0, help="also expand the series down to q^-N")
    g.add_argument("--format", choices=["text", "json", "latex"], default="text")
    g.set_defaults(func=cmd_gch)

    v = sub.add_parser("verify", help="run every cross-check for one weight")
    common(v)
    v.set_defaults(func=cmd_verify)

    d = sub.add_parser("dot", help="quantum Bruhat graph in DOT format")
    common(d, weight=False)
    d.add_argument("--S", default="", help="parabolic subset, e.g. 2 or 1,3")
    d.set_defaults(func=cmd_dot)
    return p


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "truncate", 0) < 0:
        parser.error("--truncate must be nonnegative")
    try:
        return args.func(args)
    except VerificationError as exc:
        print(str(exc), file=sys.stderr)
        return 3
    except (UsageError, ArgumentError, ConfigurationError) as exc:
        print(f"macq: error: {exc}", file=sys.stderr)
        return 2
    except InternalConsistencyError as exc:
        print(f"macq: consistency failure: {exc}", file=sys.stderr)
        return 1
    except MacqError as exc:
        print(f"macq: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
