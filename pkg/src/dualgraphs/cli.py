"""Command-line front end.

Exit codes: 0 success, 1 an identity failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
from pathlib import Path

from . import emit
from .comblab import DEFAULT_CAP, Composition, EnumerationCapError
from .dgg import build_graphs, check_duality, fomin_check
from .hopf import SKELETON_NAMES, check_twisted_compatibility, get_skeleton, qsym_q_product
from .qpoly import check_qbinom_identity
from .towers import classify_hecke, parse_rational

DEFAULT_HEIGHT = {"mr": 5}
FALLBACK_HEIGHT = 6
PRODUCT_CAP = 10


class UsageError(Exception):
    pass


def _instance_name(name: str, quantized: bool) -> str:
    if not quantized or name.endswith("-q"):
        return name
    if name in ("nilcoxeter", "zero-hecke"):
        return name + "-q"
    raise UsageError(f"{name} has no quantized version")


def _height(args) -> int:
    h = args.height if args.height is not None else DEFAULT_HEIGHT.get(args.instance, FALLBACK_HEIGHT)
    if h < 0:
        raise UsageError("height must be >= 0")
    return h


def _write(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _graph_text(G) -> str:
    lines = [f"# {G.name}"]
    for h, level in enumerate(G.levels):
        lines.append(f"height {h}: " + " ".join(str(v) for v in level))
    for v, u, m in G.edges():
        lines.append(f"{v} -> {u}  {m}")
    return "\n".join(lines) + "\n"


def cmd_graph(args) -> int:
    name = _instance_name(args.instance, args.quantized)
    sk = get_skeleton(name, cap=args.cap)
    gamma, gamma_prime = build_graphs(sk, _height(args))
    graphs = {"gamma": [gamma], "gamma-prime": [gamma_prime], "both": [gamma, gamma_prime]}[args.which]
    if args.format == "dot":
        text = "".join(emit.to_dot(g) for g in graphs)
    elif args.format == "json":
        text = emit.to_json(graphs[0] if len(graphs) == 1 else graphs)
    else:
        text = "".join(_graph_text(g) for g in graphs)
    _write(text, args.out)
    return 0


def _verify_pair(gamma, gamma_prime, quantized: bool, height: int) -> tuple[bool, list[str]]:
    lines = []
    dual = check_duality(gamma, gamma_prime, quantized, height)
    if not dual.verified:
        lines.append(dual.summary())
        return False, lines
    fact = "[n]!" if quantized else "n!"
    r = dual.r_observed
    for n in range(height + 1):
        rep = fomin_check(gamma, gamma_prime, n, quantized, r)
        if not rep.ok:
            lines.append(f"duality r={r} OK; " + rep.summary())
            return False, lines
    lines.append(f"duality r={r} OK; fomin {fact} OK for n <= {height}")
    return True, lines


def cmd_verify(args) -> int:
    if args.gamma or args.gamma_prime:
        if not (args.gamma and args.gamma_prime):
            raise UsageError("--gamma and --gamma-prime must be given together")
        gamma = emit.from_json(Path(args.gamma).read_text(encoding="utf-8"))
        gamma_prime = emit.from_json(Path(args.gamma_prime).read_text(encoding="utf-8"))
        quantized = args.quantized or gamma.quantized
        height = args.height if args.height is not None else gamma.max_height - 1
        label = gamma.name
    else:
        if args.instance is None:
            raise UsageError("give an instance name or --gamma/--gamma-prime files")
        name = _instance_name(args.instance, args.quantized)
        sk = get_skeleton(name, cap=args.cap)
        height = _height(args)
        gamma, gamma_prime = build_graphs(sk, height + 1)
        quantized = sk.quantized
        label = name
    if height + 1 > min(gamma.max_height, gamma_prime.max_height):
        raise UsageError("graphs are too short for the requested height")
    ok, lines = _verify_pair(gamma, gamma_prime, quantized, height)
    for line in lines:
        print(f"{label}: {line}")
    return 0 if ok else 1


def _parse_composition(text: str) -> Composition:
    s = text.strip().strip("()[] ")
    if not s:
        return Composition()
    try:
        return Composition(int(p) for p in s.split(","))
    except ValueError:
        raise UsageError(f"not a composition: {text!r}") from None


def format_expansion(expansion) -> str:
    """``F(2) + q·F(1,1)``; terms in reverse lexicographic order of compositions."""
    terms = []
    for comp in sorted(expansion, reverse=True):
        c = expansion[comp]
        basis = f"F{comp}"
        if c == 1:
            terms.append(basis)
        elif len([x for x in c.coeffs if x]) == 1:
            terms.append(f"{c}·{basis}")
        else:
            terms.append(f"({c})·{basis}")
    return " + ".join(terms) if terms else "0"


def cmd_product(args) -> int:
    left, right = _parse_composition(args.left), _parse_composition(args.right)
    if left.size + right.size > PRODUCT_CAP:
        raise UsageError(f"|I| + |J| must be at most {PRODUCT_CAP}")
    expansion = qsym_q_product(left, right)
    if args.format == "json":
        payload = {
            "left": str(left),
            "right": str(right),
            "terms": [
                {"composition": str(c), "coeff": str(expansion[c])}
                for c in sorted(expansion, reverse=True)
            ],
        }
        text = json.dumps(payload, indent=2, ensure_ascii=False) + "\n"
    else:
        text = format_expansion(expansion) + "\n"
    _write(text, args.out)
    return 0


def cmd_classify(args) -> int:
    try:
        a, b = parse_rational(args.a), parse_rational(args.b)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    cls = classify_hecke(a, b)
    print(cls.verdict())
    print(f"q: {cls.q_description}")
    return 0


def cmd_qbinom_check(args) -> int:
    count, bad = check_qbinom_identity(args.max_m)
    if bad:
        print(f"q-binomial identity FAILED at (m, n, r) = {bad}")
        return 1
    print(f"q-binomial identity OK for all 1 <= r <= n <= m <= {args.max_m} ({count} cases)")
    return 0


def cmd_twisted_check(args) -> int:
    if args.maxdeg > 6:
        raise UsageError("--maxdeg is limited to 6")
    ok = True
    for rep in check_twisted_compatibility(args.maxdeg):
        if rep.ok:
            print(f"{rep.algebra}: q-twisted coproduct OK to degree {rep.maxdeg} ({rep.pairs_checked} pairs)")
        else:
            ok = False
            a, b = rep.counterexample
            print(f"{rep.algebra}: FAILED for ({a}, {b})")
    return 0 if ok else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="dualgraphs", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def instance_opts(p, optional=False):
        p.add_argument("instance", choices=SKELETON_NAMES, nargs="?" if optional else None)
        p.add_argument("--height", type=int)
        p.add_argument("--quantized", action="store_true")
        p.add_argument("--cap", type=int, default=DEFAULT_CAP, help="permutation enumeration cap")

    g = sub.add_parser("graph", help="emit Gamma and/or Gamma'")
    instance_opts(g)
    g.add_argument("--format", choices=("dot", "json", "text"), default="dot")
    g.add_argument("--which", choices=("gamma", "gamma-prime", "both"), default="both")
    g.add_argument("--out")
    g.set_defaults(func=cmd_graph)

    v = sub.add_parser("verify", help="check duality and the path-count identity")
    instance_opts(v, optional=True)
    v.add_argument("--gamma", help="JSON file for Gamma (instead of an instance)")
    v.add_argument("--gamma-prime", help="JSON file for Gamma'")
    v.set_defaults(func=cmd_verify)

    p = sub.add_parser("product", help="quantum shuffle product F_I * F_J")
    p.add_argument("left")
    p.add_argument("right")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--out")
    p.set_defaults(func=cmd_product)

    c = sub.add_parser("classify", help="classify the Hecke algebra T^2 = aT + b")
    c.add_argument("a")
    c.add_argument("b")
    c.set_defaults(func=cmd_classify)

    qb = sub.add_parser("qbinom-check", help="sweep the q-binomial convolution identity")
    qb.add_argument("--max-m", type=int, default=10)
    qb.set_defaults(func=cmd_qbinom_check)

    tw = sub.add_parser("twisted-check", help="sweep q-twisted coproduct compatibility")
    tw.add_argument("--maxdeg", type=int, default=6)
    tw.set_defaults(func=cmd_twisted_check)
    return parser


_NEG_FRACTION = re.compile(r"^-\d+/\d+$")


def _protect_negative_fractions(argv: list[str]) -> list[str]:
    # argparse only recognises "-3" style negatives, not "-1/4"
    if "--" in argv:
        return argv
    for i, tok in enumerate(argv):
        if _NEG_FRACTION.match(tok):
            return argv[:i] + ["--"] + argv[i:]
    return argv


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_protect_negative_fractions(argv))
    try:
        return args.func(args)
    except (UsageError, EnumerationCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
