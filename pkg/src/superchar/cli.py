"""Command-line front end.

Exit status: 0 on success, 1 on domain errors (atypical or non-dominant
input and the like), 2 on usage errors.
"""
from __future__ import annotations

import argparse
import json
import sys
import warnings

from . import borel_chain, charring, gl11, jantzen
from .errors import ContextError, SupercharError, WeightSyntaxError
from .root_data import GLContext, Weight, odd_root, parse_weight


class UsageError(Exception):
    def __init__(self, message, code="E_USAGE"):
        super().__init__(message)
        self.code = code


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _yes(flag: bool) -> str:
    return "yes" if flag else "no"


def _ctx(args, need_p=False) -> GLContext:
    try:
        ctx = GLContext(args.m, args.n, args.p)
    except ContextError as exc:
        raise UsageError(str(exc), exc.code) from exc
    if need_p and ctx.p is None:
        raise UsageError("--p is required for this subcommand")
    return ctx


def _weight(text: str, ctx: GLContext) -> Weight:
    try:
        return parse_weight(text, ctx)
    except (WeightSyntaxError, ContextError) as exc:
        raise UsageError(str(exc), exc.code) from exc


# --- subcommands ------------------------------------------------------------


def cmd_typicality(args):
    ctx = _ctx(args)
    lam = _weight(args.lam, ctx)
    typ = borel_chain.is_typical(ctx, lam)
    obj = {
        "m": ctx.m,
        "n": ctx.n,
        "lambda": str(lam),
        "typical": typ.typical,
        "firstFailure": typ.first_failure,
        "pairings": list(typ.pairings),
    }
    text = f"typical: {_yes(typ.typical)}"
    if ctx.p is not None:
        ptyp = borel_chain.is_p_typical(ctx, lam)
        obj["p"] = ctx.p
        obj["pTypical"] = ptyp.typical
        text += f"; p-typical: {_yes(ptyp.typical)}"
    text += f"; pairings: {list(typ.pairings)}"
    return obj, text + "\n"


def cmd_borel_chain(args):
    ctx = _ctx(args)
    mn = ctx.m * ctx.n
    upto = mn if args.upto is None else args.upto
    if not 0 <= upto <= mn:
        raise UsageError(f"--upto must lie in 0..{mn}")
    systems = []
    blocks = []
    for i in range(upto + 1):
        sys_i = borel_chain.simple_system(ctx, i)
        along = None if i == 0 else str(odd_root(ctx, i))
        systems.append({"index": i, "reflectedAlong": along, "roots": [str(a) for a in sys_i]})
        head = f"Pi[{i}]" + ("" if along is None else f" (after {along})")
        blocks.append(f"{head}\n  {sys_i}")
    obj = {"m": ctx.m, "n": ctx.n, "systems": systems}
    return obj, "\n\n".join(blocks) + "\n"


def cmd_char(args):
    ctx = _ctx(args)
    lam = _weight(args.lam, ctx)
    kind = args.kind
    extra = {}
    if args.chain_index is not None and kind != "h0":
        raise UsageError("--chain-index applies to 'char h0' only")
    if kind == "h0":
        ch = charring.ch_h0(ctx, lam) if args.chain_index is None else charring.ch_h0_chain(ctx, args.chain_index, lam)
    elif kind == "weyl":
        ch = charring.ch_weyl(ctx, lam)
    elif kind == "total":
        with warnings.catch_warnings(record=True) as caught:
            warnings.simplefilter("always")
            ch = charring.ch_total(ctx, lam)
        if caught:
            extra["warning"] = str(caught[0].message)
    elif kind == "kac":
        if args.even_char:
            with open(args.even_char) as fh:
                even = charring.Character.from_json(json.load(fh))
            extra["evenIrreducibilityAssumed"] = False
        else:
            even = charring.schur_even(ctx, lam)
            extra["evenIrreducibilityAssumed"] = True
        ch = charring.ch_kac(ctx, lam, even)
    else:
        ch = charring.euler_chi(ctx, lam)
    obj = ch.to_json(ctx.m, ctx.n)
    obj.update(extra)
    notes = ""
    if extra.get("evenIrreducibilityAssumed"):
        notes = "# even character taken to be W(lambda)\n"
    if "warning" in extra:
        notes += f"# warning: {extra['warning']}\n"
    return obj, notes + ch.to_text() + "\n"


def _jantzen_text(rep: jantzen.JantzenReport) -> str:
    lines = [
        f"lambda: {rep.lam}; p: {rep.p}; mode: {rep.mode.value}; multiplicity: {'on' if rep.multiplicity else 'off'}",
        f"typical: yes; pairings: {list(rep.pairings)}",
        f"head: gamma = {rep.head_gamma}; label = {rep.head_label}",
    ]
    if not rep.even_terms:
        lines.append("even terms: none")
    for t in rep.even_terms:
        lines.append(f"even term alpha={t.alpha} mp={t.mp} valuation={t.valuation} reflected={t.reflected}")
        lines.extend("  " + s for s in t.term.to_text().splitlines())
    if not rep.odd_terms:
        lines.append("odd terms: none")
    for t in rep.odd_terms:
        lines.append(
            f"odd term i={t.index} pairing={t.pairing} valuation={t.valuation} "
            f"k={t.k_range[0]}..{t.k_range[1]} window=[{t.window[0]}, {t.window[1]}]"
        )
        lines.extend("  " + s for s in t.term.to_text().splitlines())
    lines.append("total:")
    lines.append(rep.total.to_text())
    return "\n".join(lines) + "\n"


def cmd_jantzen(args):
    ctx = _ctx(args, need_p=True)
    lam = _weight(args.lam, ctx)
    rep = jantzen.jantzen_sum(ctx, lam, args.mode, args.multiplicity == "on")
    obj = {"m": ctx.m, "n": ctx.n, **rep.to_json(ctx)}
    return obj, _jantzen_text(rep)


def cmd_steinberg(args):
    ctx = _ctx(args, need_p=True)
    mu = _weight(args.mu, ctx)
    red = jantzen.steinberg_reduce(ctx, mu)
    obj = {"m": ctx.m, "n": ctx.n, "p": ctx.p, "mu": str(mu), **red.to_json()}
    text = (
        f"lambda: {red.lam}\nvarpi: {red.varpi}\nl: {red.l}\n"
        f"digits: [{', '.join(map(str, red.digits))}]\n"
    )
    if red.fallback:
        text += "note: determinant added to varpi\n"
    return obj, text


def _parse_11(text: str) -> tuple[int, int]:
    try:
        w = parse_weight(text)
    except WeightSyntaxError as exc:
        raise UsageError(str(exc), exc.code) from exc
    if w.m != 1 or w.n != 1:
        raise UsageError(f"{text!r} is not a GL(1|1) weight")
    return w.delta[0], w.eps[0]


def _matrix_text(name, lm: gl11.LinearMap) -> str:
    rows = "; ".join(" ".join(str(x) for x in r) for r in lm.matrix)
    src = ",".join(lm.source.labels)
    tgt = ",".join(lm.target.labels)
    return f"{name}: {lm.source} -> {lm.target}  ({src} -> {tgt})  [{rows}]"


def _map_json(lm: gl11.LinearMap) -> dict:
    return {"source": str(lm.source), "target": str(lm.target), "matrix": [list(r) for r in lm.matrix]}


def cmd_gl11(args):
    i, j = _parse_11(args.lam)
    p = args.p
    if p is not None:
        try:
            GLContext(1, 1, p)
        except ContextError as exc:
            raise UsageError(str(exc), exc.code) from exc
    if args.action == "oracle":
        if p is None:
            raise UsageError("--p is required for 'gl11 oracle'")
        ch = gl11.jantzen_oracle(i, j, p)
        return ch.to_json(1, 1), ch.to_text() + "\n"
    if args.action == "analyze":
        if p is None:
            raise UsageError("--p is required for 'gl11 analyze'")
        rep = gl11.composition_analysis(i, j, p, 1 if args.orientation == "+" else -1)
        text = f"{rep['module']} over GF({p}): pairing {rep['pairing']}, "
        if rep["irreducible"]:
            text += "irreducible, dim 2\n"
        else:
            text += f"socle {rep['socle']['basis']} weight {rep['socle']['weight']}; "
            text += f"head {rep['head']['basis']} weight {rep['head']['weight']}\n"
        return rep, text
    if args.action == "maps":
        t, tp = gl11.map_T(i, j), gl11.map_Tprime(i, j)
        maps = {"T": t, "Tprime": tp, "Tprime*T": tp @ t, "T*Tprime": t @ tp}
        if p is not None and (i + j) % p == 0:
            maps["Upsilon"] = gl11.map_Upsilon(i, j, args.k, p)
        obj = {"lambda": f"{i}|{j}", **{k: _map_json(v) for k, v in maps.items()}}
        return obj, "\n".join(_matrix_text(k, v) for k, v in maps.items()) + "\n"
    # act
    ring = gl11.BaseRing.mod(p) if p is not None else gl11.BaseRing.rationals()
    r = args.r
    one = gl11.GrassmannNumber.scalar(1, r, ring)
    a, b = one * args.a, one * args.b
    xi = gl11.GrassmannNumber.generator(1, r, ring)
    if args.family == "diagonal":
        g = gl11.diagonal(a, b)
    elif args.family == "upper":
        g = gl11.upper(a, xi, b)
    else:
        g = gl11.lower(a, xi, b)
    mod = gl11.InducedGL11(1 if args.orientation == "+" else -1, i, j)
    images = {}
    lines = []
    for label, e in zip(mod.labels, mod.basis(one)):
        img = gl11.act(g, e)
        images[label] = {lab: str(c) for lab, c in zip(mod.labels, img.coeffs)}
        lines.append(f"g.{label} = {img}")
    obj = {
        "module": str(mod),
        "ring": str(ring),
        "family": args.family,
        "a": args.a,
        "b": args.b,
        "images": images,
    }
    return obj, "\n".join(lines) + "\n"


def _selftest_cases():
    yield "gl11 sweep", _sweep
    yield "typicality fixture", lambda: list(
        borel_chain.is_typical(GLContext(2, 1, 3), parse_weight("1,1|0")).pairings
    ) == [1, 2]
    yield "h0 fixture", lambda: charring.ch_h0(GLContext(1, 1), parse_weight("2|1")).to_text() == (
        "1 * e[2|1]\n1 * e[1|2]"
    )
    yield "even term fixture", lambda: jantzen.jantzen_sum(
        GLContext(2, 1, 3), parse_weight("3,0|1")
    ).total == charring.ch_h0(GLContext(2, 1, 3), parse_weight("2,1|1"))
    yield "longest element", lambda: all(
        borel_chain.super_longest_check(GLContext(m, n)) for m in range(1, 4) for n in range(1, 4)
    )


def _sweep():
    for p in (3, 5, 7):
        ctx = GLContext(1, 1, p)
        for i in range(-10, 11):
            for j in range(-10, 11):
                if i + j == 0:
                    continue
                lam = Weight((i,), (j,))
                if jantzen.jantzen_sum(ctx, lam).total != gl11.jantzen_oracle(i, j, p):
                    return False
    return True


def cmd_selftest(args):
    results = []
    for name, fn in _selftest_cases():
        try:
            ok = bool(fn())
        except Exception as exc:  # a crash counts as a failure
            ok = False
            name = f"{name} ({type(exc).__name__}: {exc})"
        results.append((name, ok))
    passed = sum(ok for _, ok in results)
    failed = len(results) - passed
    obj = {"passed": passed, "failed": failed, "cases": [{"name": n, "ok": ok} for n, ok in results]}
    text = "".join(f"{'PASS' if ok else 'FAIL'} {n}\n" for n, ok in results)
    text += f"selftest: {passed} passed, {failed} failed\n"
    return obj, text, (0 if failed == 0 else 1)


# --- parser -----------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    out = _Parser(add_help=False)
    out.add_argument("--format", choices=("text", "json"), default="text")
    out.add_argument("--out", help="write output to this file instead of stdout")

    ctx = _Parser(add_help=False)
    ctx.add_argument("--m", type=int, required=True)
    ctx.add_argument("--n", type=int, required=True)
    ctx.add_argument("--p", type=int)

    parser = _Parser(prog="superchar", description="GL(m|n) weight, character and Jantzen sum computations")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("typicality", parents=[ctx, out], help="typicality and p-typicality of a weight")
    s.add_argument("--lambda", dest="lam", required=True)
    s.set_defaults(func=cmd_typicality)

    s = sub.add_parser("borel-chain", parents=[ctx, out], help="simple systems along the odd reflection chain")
    s.add_argument("--upto", type=int)
    s.set_defaults(func=cmd_borel_chain)

    s = sub.add_parser("char", parents=[ctx, out], help="formal characters")
    s.add_argument("kind", choices=("h0", "weyl", "total", "kac", "chi"))
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--chain-index", type=int)
    s.add_argument("--even-char", help="JSON file with the even character for 'kac'")
    s.set_defaults(func=cmd_char)

    s = sub.add_parser("jantzen", parents=[ctx, out], help="Jantzen sum of a typical weight")
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--mode", choices=("corollary", "strict-paper"), default="corollary")
    s.add_argument("--multiplicity", choices=("on", "off"), default="on")
    s.set_defaults(func=cmd_jantzen)

    s = sub.add_parser("steinberg", parents=[ctx, out], help="twist an atypical weight to a typical one")
    s.add_argument("--mu", required=True)
    s.set_defaults(func=cmd_steinberg)

    s = sub.add_parser("gl11", parents=[out], help="explicit GL(1|1) modules")
    s.add_argument("action", choices=("act", "maps", "analyze", "oracle"))
    s.add_argument("--lambda", dest="lam", required=True)
    s.add_argument("--p", type=int)
    s.add_argument("--orientation", choices=("+", "-"), default="+")
    s.add_argument("--family", choices=("diagonal", "upper", "lower"), default="upper")
    s.add_argument("--a", type=int, default=1)
    s.add_argument("--b", type=int, default=1)
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--k", type=int, default=1, help="level for the Upsilon map")
    s.set_defaults(func=cmd_gl11)

    s = sub.add_parser("selftest", parents=[out], help="oracle sweep and fixtures")
    s.set_defaults(func=cmd_selftest)
    return parser


def _emit(args, body: str):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(body)
    else:
        sys.stdout.write(body)


def run(argv=None) -> int:
    parser = build_parser()
    argv = list(sys.argv[1:] if argv is None else argv)
    # known before parsing so that usage errors can be rendered as JSON too
    fmt = "json" if "--format=json" in argv or any(
        a == "--format" and b == "json" for a, b in zip(argv, argv[1:])
    ) else "text"
    try:
        args = parser.parse_args(argv)
        fmt = args.format
        result = args.func(args)
        status = 0
        if len(result) == 3:
            obj, text, status = result
        else:
            obj, text = result
        _emit(args, _dump(obj) if fmt == "json" else text)
        return status
    except UsageError as exc:
        if fmt == "json":
            sys.stdout.write(_dump({"error": {"code": exc.code, "message": str(exc), "details": {}}}))
        else:
            sys.stderr.write(f"superchar: error: {exc}\n")
        return 2
    except SupercharError as exc:
        if fmt == "json":
            sys.stdout.write(_dump({"error": exc.to_dict()}))
        else:
            sys.stderr.write(f"superchar: {exc.code}: {exc}\n")
        return 1


def main():
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
