"""Command-line front end: `fockjack <subcommand> [flags]`.

Exit status 0 when every certificate passes, 1 when one fails, 2 on bad
usage.  Progress goes to stderr; stdout only carries results.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Callable

from .jack import jacks_of_degree, norm_check
from .certificate import Certificate
from .errors import FockJackError
from .fock import l0_eigenvalue, model, virasoro_apply
from .partitions import enumerate_partitions
from .scalars import scalar_to_json
from .screening import MAX_PROPORTIONALITY_SIZE, proportionality, singular_vector, struct_const, struct_const_range
from .virchar import felder_euler, kernel_image_check, kx_characters, minimal_character, solve_simple_characters
from .walgebra import _reduce_f2, census_count, g_polys, kac_table, omega_poly, rep_check, simple_census, zhu_table


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _kappa(text: str) -> Fraction:
    try:
        k = Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"--kappa expects p/q, got {text!r}") from exc
    if k <= 0:
        raise argparse.ArgumentTypeError("--kappa must be positive")
    return k


def _add_model(p: argparse.ArgumentParser, default=(2, 3)):
    p.add_argument("--pp", type=int, default=default[0], help="p_+ (default %(default)s)")
    p.add_argument("--pm", type=int, default=default[1], help="p_- (default %(default)s)")


def _add_format(p: argparse.ArgumentParser):
    g = p.add_mutually_exclusive_group()
    g.add_argument("--json", dest="fmt", action="store_const", const="json")
    g.add_argument("--text", dest="fmt", action="store_const", const="text")
    p.set_defaults(fmt="text")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fockjack", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)

    p = sub.add_parser("jack", help="Jack pairs (P, Q, b) of one degree")
    p.add_argument("--deg", type=int, required=True)
    p.add_argument("--kappa", type=_kappa, default=None, help="rational specialization p/q")
    _add_format(p)

    p = sub.add_parser("singvec", help="screening singular vector and its checks")
    _add_model(p)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--sign", choices=["+", "-"], default="+")
    _add_format(p)

    for name, help_ in (("kac", "Kac table"), ("gpoly", "g_0, g_1, g_2 with root certificates")):
        p = sub.add_parser(name, help=help_)
        _add_model(p)
        _add_format(p)

    p = sub.add_parser("omega", help="zero-mode eigenvalue polynomial omega_n(beta)")
    _add_model(p)
    p.add_argument("--n", type=int, default=0)
    _add_format(p)

    p = sub.add_parser("census", help="simple modules of the zero-mode algebra")
    _add_model(p)
    p.add_argument("--count-only", action="store_true")
    _add_format(p)

    p = sub.add_parser("structconst", help="structure constants a_{n,k}, b_{n,k}")
    _add_model(p)
    p.add_argument("--kind", choices=["a", "b"], default="a")
    p.add_argument("--n", type=int, default=None)
    p.add_argument("--k", type=int, default=None)
    _add_format(p)

    p = sub.add_parser("characters", help="solved simple characters ch L(h_{r,s})")
    _add_model(p)
    p.add_argument("--cutoff", type=int, default=20)
    _add_format(p)

    p = sub.add_parser("felder", help="Euler characteristic of a Felder complex")
    _add_model(p)
    p.add_argument("--r", type=int, default=1)
    p.add_argument("--s", type=int, default=1)
    p.add_argument("--screening", choices=["+", "-"], default="+")
    p.add_argument("--cutoff", type=int, default=20)
    _add_format(p)

    p = sub.add_parser("verify-all", help="run every certificate family for one model")
    _add_model(p)
    p.add_argument("--cutoff", type=int, default=20)
    _add_format(p)
    return parser


# ---------------------------------------------------------------------------
# commands: each returns (payload for --json, text lines, certificates)
# ---------------------------------------------------------------------------


def _s(x) -> str:
    enc = scalar_to_json(x)
    return enc if isinstance(enc, str) else json.dumps(enc, sort_keys=True)


def cmd_jack(a):
    pairs = jacks_of_degree(a.deg, a.kappa, method="gram_schmidt")
    payload = {"degree": a.deg, "kappa": "generic" if a.kappa is None else str(a.kappa), "pairs": [p.to_json() for p in pairs]}
    lines = []
    for p in pairs:
        lines.append(f"P{list(p.lam)}  b = {_s(p.b)}")
        for mu, c in sorted(p.P.terms.items(), reverse=True):
            lines.append(f"    m{list(mu)}: {_s(c)}")
    return payload, lines, []


def cmd_singvec(a):
    m = model(a.pp, a.pm)
    v = singular_vector(m, a.sign, a.r, a.s)
    killed = all(virasoro_apply(v, k).is_zero() for k in (1, 2))
    ev = l0_eigenvalue(v)
    want = m.h(a.r, a.s) + a.r * a.s
    certs = [
        Certificate("annihilated by L_1, L_2", killed, True, killed),
        Certificate("L_0 eigenvalue", ev, want, ev == want),
    ]
    if a.r * a.s <= MAX_PROPORTIONALITY_SIZE:
        certs.append(proportionality(m, a.r, a.s))
    lines = [f"singular vector ({a.sign}) r={a.r} s={a.s} in F_{{-{a.r},-{a.s}}} at {m}:"]
    for lam, c in sorted(v.terms.items(), reverse=True):
        lines.append(f"    b{[-x for x in lam]}: {_s(c)}")
    return {"vector": v.to_json()}, lines, certs


def cmd_kac(a):
    t = kac_table(model(a.pp, a.pm))
    lines = [f"[{c.rs[0]},{c.rs[1]}]  reps {list(c.reps)}  delta = {c.delta}" for c in t.classes]
    return t.to_json(), lines, []


def cmd_omega(a):
    m = model(a.pp, a.pm)
    res = omega_poly(m, a.n)
    cert = res.certificate()
    lines = [f"omega_{a.n}(beta) at {m}, degree {res.poly.degree}:", f"    {res.poly}"]
    return {"poly": res.poly.to_json(), "certificate": cert.to_json()}, lines, [cert]


def cmd_gpoly(a):
    m = model(a.pp, a.pm)
    gs = g_polys(m, strict=False)
    payload, lines = {}, []
    for i, (g, cert) in enumerate(zip(gs, gs.certificates)):
        payload[f"g{i}"] = {"poly": g.to_json(), "certificate": cert.to_json()}
        roots = ", ".join(f"{r}^{k}" for r, k in cert.lhs.items())
        lines.append(f"g{i}: degree {g.degree}  roots {roots}  {'ok' if cert.passed else 'MISMATCH'}")
    return payload, lines, list(gs.certificates)


def cmd_census(a):
    m = model(a.pp, a.pm)
    cen = simple_census(m)
    if a.count_only:
        return len(cen), [str(len(cen))], []
    lines = [f"{d.kind:8s} {str(list(d.rs)):8s} dim {d.dim}  delta = {d.delta}" for d in cen]
    return {"count": len(cen), "modules": [d.to_json() for d in cen]}, lines, []


def cmd_structconst(a):
    m = model(a.pp, a.pm)
    if a.n is not None and a.k is not None:
        items = [struct_const(m, a.kind, a.n, a.k)]
    elif a.n is None and a.k is None:
        items = struct_const_range(m, a.kind)
    else:
        raise UsageError("give both --n and --k, or neither")
    certs = [sc.certificate() for sc in items]
    lines = [
        f"{sc.kind}_{{{sc.n},{sc.k}}} = {sc.value}   partition {list(sc.partition)}  "
        + ("two routes agree" if sc.two_route and cert.passed else "single route" if not sc.two_route else "ROUTES DIFFER")
        for sc, cert in zip(items, certs)
    ]
    payload = [dict(c.to_json(), value=str(sc.value)) for sc, c in zip(items, certs)]
    return payload, lines, certs


def cmd_characters(a):
    m = model(a.pp, a.pm)
    sc = solve_simple_characters(m, a.cutoff, n_max=0)
    payload, lines = {}, [f"window top {sc.top}, {sc.verified} socle equations verified"]
    seen = set()
    for r in range(1, m.p_plus + 1):
        for s in range(1, m.p_minus + 1):
            h = m.h(r, s)
            if h in seen:
                continue
            seen.add(h)
            ch = sc[h].window(h, h + a.cutoff)
            payload[f"{r},{s}"] = ch.to_json()
            lines.append(f"L(h_{{{r},{s}}} = {h}): {' '.join(map(str, ch.coeffs))}")
    return payload, lines, []


def cmd_felder(a):
    m = model(a.pp, a.pm)
    ch = felder_euler(m, a.r, a.s, a.cutoff, a.screening)
    exact = (a.screening == "+" and a.s == m.p_minus) or (a.screening == "-" and a.r == m.p_plus)
    if exact:
        want = "0"
        cert = Certificate("felder euler = 0", ch.to_json(), 0, ch.is_zero())
    else:
        sc = solve_simple_characters(m, a.cutoff, n_max=0)
        ref = sc[m.h(a.r, a.s)].window(ch.offset, ch.top)
        want = f"ch L({m.h(a.r, a.s)})"
        cert = Certificate("felder euler = simple", ch.to_json(), ref.to_json(), ch == ref)
    lines = [f"Euler characteristic ({a.screening}) r={a.r} s={a.s}: {' '.join(map(str, ch.coeffs))}", f"expected {want}"]
    return {"euler": ch.to_json(), "certificate": cert.to_json()}, lines, [cert]


def _families(m, cutoff: int) -> list[tuple[str, Callable[[], list[Certificate]]]]:
    pp, pm = m.p_plus, m.p_minus
    rs8 = [(r, s) for r in range(1, 9) for s in range(1, 9) if r * s <= 8]

    def singular():
        out = []
        for r, s in rs8:
            v = singular_vector(m, "+", r, s)
            ok = all(virasoro_apply(v, k).is_zero() for k in range(1, 6)) and l0_eigenvalue(v) == m.h(r, s) + r * s
            out.append(Certificate(f"singvec({r},{s})", ok, True, ok))
        return out

    def characters():
        sc = solve_simple_characters(m, cutoff)
        out = [Certificate("socle equations", sc.verified, len(sc.labels), sc.verified == len(sc.labels))]
        for c in kac_table(m).classes:
            rc = minimal_character(m, *c.rs, cutoff)
            out.append(Certificate(f"minimal{list(c.rs)}", rc.to_json(), sc[c.delta].window(rc.offset, rc.top).to_json(), rc == sc[c.delta]))
        for r in range(1, pp + 1):
            for s in range(1, pm + 1):
                for sign in "+-":
                    out.append(kx_characters(m, r, s, sign, cutoff, sc))
                if r < pp and s < pm:
                    out.extend(kernel_image_check(m, r, s, n, cutoff, sc) for n in range(-2, 3))
                if r < pp:
                    fe = felder_euler(m, r, s, cutoff)
                    ok = fe.is_zero() if s == pm else fe == sc[m.h(r, s)]
                    out.append(Certificate(f"felder+({r},{s})", fe.to_json(), None, ok))
        return out

    def zhu():
        t = zhu_table(m)
        return [
            Certificate(f"associator{x}{y}{z}", elt, {}, all(not _reduce_f2(c) for c in d.values()))
            for (x, y, z), d in t.probes.items()
            for elt in [{b: str(c) for b, c in d.items()}]
        ]

    return [
        ("jack norms |lam| <= 6", lambda: [norm_check(l) for d in range(1, 7) for l in enumerate_partitions(d)]),
        ("singular vectors rs <= 8", singular),
        ("proportionality rs <= 8", lambda: [proportionality(m, r, s) for r, s in rs8]),
        ("omega_0 two routes", lambda: [omega_poly(m, 0).certificate()]),
        ("g-polynomial root patterns", lambda: list(g_polys(m, strict=False).certificates)),
        ("structure constants", lambda: [c.certificate() for kind in "ab" for c in struct_const_range(m, kind)]),
        (
            "census and zero-mode representations",
            lambda: [Certificate("census size", len(simple_census(m)), census_count(m), len(simple_census(m)) == census_count(m))]
            + [rep_check(m, d) for d in simple_census(m)],
        ),
        ("zero-mode table associativity", zhu),
        ("characters", characters),
    ]


def cmd_verify_all(a):
    m = model(a.pp, a.pm)
    payload, lines, certs = [], [], []
    for name, fn in _families(m, a.cutoff):
        print(f"[fockjack] {name} ...", file=a.err, flush=True)
        try:
            got = fn()
        except FockJackError as exc:
            got = [Certificate(name, type(exc).__name__, str(exc), False)]
        ok = all(c.passed for c in got)
        payload.append({"family": name, "count": len(got), "pass": ok, "failed": [c.to_json() for c in got if not c.passed]})
        lines.append(f"{'PASS' if ok else 'FAIL'}  {name}  ({len(got)} certificates)")
        certs.extend(got)
    return {"model": [m.p_plus, m.p_minus], "families": payload}, lines, certs


COMMANDS = {
    "jack": cmd_jack,
    "singvec": cmd_singvec,
    "kac": cmd_kac,
    "omega": cmd_omega,
    "gpoly": cmd_gpoly,
    "census": cmd_census,
    "structconst": cmd_structconst,
    "characters": cmd_characters,
    "felder": cmd_felder,
    "verify-all": cmd_verify_all,
}


def run(argv: list[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
        if a.command is None:
            raise UsageError("a subcommand is required")
        if hasattr(a, "pp"):
            model(a.pp, a.pm)
        if getattr(a, "cutoff", 0) is not None and not 0 <= getattr(a, "cutoff", 0) <= 40:
            raise UsageError("--cutoff must lie in [0, 40]")
        a.err = err
        payload, lines, certs = COMMANDS[a.command](a)
    except (UsageError, FockJackError, ValueError) as exc:
        if isinstance(exc, FockJackError) and not isinstance(exc, ValueError):
            print(f"fockjack: error: {exc}", file=err)
            return 1
        parser.print_usage(err)
        print(f"fockjack: error: {exc}", file=err)
        return 2
    if a.fmt == "json":
        print(json.dumps(payload, separators=(",", ":")), file=out)
    else:
        print("\n".join(lines), file=out)
    failed = [c for c in certs if not c.passed]
    for c in failed:
        print(f"FAILED {c.name}: {json.dumps(c.to_json(), sort_keys=True)}", file=err)
    return 1 if failed else 0


def main(argv: list[str] | None = None) -> int:
    return run(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
