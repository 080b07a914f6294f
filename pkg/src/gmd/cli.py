"""Command-line interface: ``gmd <command> FILE [options]``."""

from __future__ import annotations

import argparse
import json
import shlex
import sys
from pathlib import Path

from . import __version__
from .checks import ci_probe, property_checks
from .groebner import find_regular_linear_form
from .invariants import GMD, KINDS, METHODS, InfiniteFieldError, InvariantMatrix
from .parsing import ParseError, parse_ideal_file
from .points import (BudgetExceeded, code, cross_check, generalized_hamming_weight, parse_points,
                     vanishing_ideal, weight_hierarchy)
from .report import Report, flag_lines, hilbert_lines, matrix_csv, matrix_lines, ring_banner
from .vnumber import BoundExceeded, NoRegularForm, cayley_bacharach, socle_degree, v_number

EXIT_OK, EXIT_ERROR, EXIT_COUNTEREXAMPLE = 0, 1, 2


class UsageError(Exception):
    pass


# ------------------------------------------------------------------ inputs

class Loaded:
    """An ideal read from an ideal file or built from a points file."""

    def __init__(self, ideal, primes=None, points=None):
        self.ideal = ideal
        self.primes = primes
        self.points = points

    @property
    def ring(self):
        return self.ideal.ring


def _order_ring(ring, spec):
    if not spec:
        return ring
    kind, _, perm = spec.partition(":")
    perm_idx = None
    if perm:
        names = [v.strip() for v in perm.split(",")]
        if sorted(names) != sorted(ring.variables):
            raise UsageError("--order permutation must list every variable exactly once")
        perm_idx = [ring.variables.index(v) for v in names]
    try:
        return ring.with_order(kind.strip(), perm_idx)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def load_input(path: str, args) -> Loaded:
    text = Path(path).read_text(encoding="utf-8")
    first = next((ln.split("--")[0].strip() for ln in text.splitlines()
                  if ln.split("--")[0].strip()), "")
    flags = {}
    for name in ("unmixed", "radical", "ci"):
        if getattr(args, f"assert_{name}", False):
            flags[name] = True
    if first.startswith("points"):
        X = parse_points(text)
        ring = _order_ring(X.default_ring(), getattr(args, "order", None))
        return Loaded(vanishing_ideal(X, ring), points=X)
    F = parse_ideal_file(text)
    order = getattr(args, "order", None)
    if order:
        F = F.with_ring(_order_ring(F.ring, order))
    primes = F.prime_ideals() or None
    return Loaded(F.ideal(**flags), primes=primes)


def _budget(args):
    return getattr(args, "budget", None)


def _emit(rep: Report, args, csv_text: str | None = None):
    if getattr(args, "json", False):
        sys.stdout.write(rep.json())
    elif getattr(args, "csv", False) and csv_text is not None:
        sys.stdout.write(csv_text)
    else:
        sys.stdout.write(rep.text())


def _ideal_lines(I) -> list:
    return [f"generators: {', '.join(str(g) for g in I.generators)}"]


# ---------------------------------------------------------------- commands

def cmd_invariants(args) -> int:
    src = load_input(args.file, args)
    I = src.ideal
    rep = Report(args.echo, ring_banner(I.ring))
    rep.section("ideal", _ideal_lines(I) + flag_lines(I.describe_flags()))
    data = {"flags": I.describe_flags()}
    if I.is_unit():
        rep.section("hilbert", ["the unit ideal has an empty quotient"])
        rep.data = data
        _emit(rep, args)
        return EXIT_OK
    hd = I.hilbert_data()
    rep.section("hilbert", hilbert_lines(hd))
    data["hilbert"] = hd.as_dict()

    primes = src.primes if src.primes is not None else I.associated_primes()
    vlines = []
    vn = None
    if primes is None:
        vlines.append("v-number: n/a (associated primes unknown; list them under 'primes:')")
    elif not I.unmixed().holds():
        vlines.append("v-number: n/a (unmixed not established)")
    else:
        try:
            vn = v_number(I, primes, args.bound)
        except BoundExceeded as exc:
            vlines.append(f"v-number: {exc}")
    if vn is not None:
        linear = all(P.is_prime_linear() for P in primes)
        vlines.append(f"v-number: {vn.v}")
        for P, vp in vn.locals:
            vlines.append(f"  v_p = {vp} for p = {P}")
        data["v_number"] = vn.v
        data["local_v_numbers"] = [{"prime": str(P), "v": vp} for P, vp in vn.locals]
        if linear:
            reg_delta = 1 if I.is_prime_linear() and I.dim > 0 else vn.v
            vlines.append(f"reg(delta): {reg_delta}")
            data["reg_delta"] = reg_delta
    rep.section("v-number", vlines)

    slines = []
    if I.dim > 1:
        slines.append("socle degree: n/a (dimension > 1 unsupported)")
    else:
        try:
            s = socle_degree(I)
            slines.append(f"socle degree: {s}")
            data["socle_degree"] = s
        except NoRegularForm as exc:
            slines.append(f"socle degree: n/a ({exc})")
    geramita = (vn is not None and I.dim == 1 and all(P.is_prime_linear() for P in primes))
    if geramita and hd.cm_regularity is not None and not I.is_prime_linear():
        cb = cayley_bacharach(I, primes, vn)
        slines.append(f"Cayley-Bacharach: {'yes' if cb else 'no'} (reg = {hd.cm_regularity})")
        data["cayley_bacharach"] = cb
    else:
        slines.append("Cayley-Bacharach: n/a (needs a non-prime Geramita ideal with known regularity)")
    rep.section("socle", slines)
    rep.data = data
    _emit(rep, args)
    return EXIT_OK


def cmd_matrix(args) -> int:
    src = load_input(args.file, args)
    I = src.ideal
    g = GMD(I, budget=_budget(args), method=args.method, primes=src.primes, threads=args.threads)
    try:
        m = g.matrix(args.kind, args.dmax, args.rmax)
    except InfiniteFieldError as exc:
        raise UsageError(str(exc)) from None
    rep = Report(args.echo, ring_banner(I.ring))
    rep.section("ideal", _ideal_lines(I) + [f"degree: {I.degree}"]
                + [f"H({d}) = {g.H(d)}" for d in range(1, args.dmax + 1)])
    rep.section(f"{args.kind} matrix", matrix_lines(m))
    wl = []
    for (d, r), e in sorted(m.entries.items()):
        if e.witness and args.kind in ("delta", "fp", "hyp"):
            wl.append(f"({d},{r}): {', '.join(str(w) for w in e.witness)}")
    if wl:
        rep.section("witnesses", wl)
    skipped = [k for k, e in m.entries.items() if e.skipped]
    if skipped:
        rep.warn(f"{len(skipped)} cells over the enumeration budget ({g.budget})")
    rep.data = {"matrix": m.to_json(), "degree": I.degree}
    _emit(rep, args, matrix_csv(m))
    return EXIT_OK


def cmd_render(args) -> int:
    data = json.loads(Path(args.file).read_text(encoding="utf-8"))
    m = InvariantMatrix.from_json(data.get("matrix", data))
    sys.stdout.write(matrix_csv(m) if args.csv else m.table() + "\n")
    return EXIT_OK


def cmd_code(args) -> int:
    src = load_input(args.file, args)
    X = src.points
    if X is None:
        raise UsageError("the code command needs a points file")
    I = src.ideal
    C = code(X, args.d, I)
    rep = Report(args.echo, ring_banner(I.ring))
    lines = [f"points: {len(X)} in P^{X.s - 1} over GF({X.p})", f"degree d: {args.d}",
             f"length n: {C.length}", f"dimension k: {C.dimension}"]
    data = {"d": args.d, "length": C.length, "dimension": C.dimension}
    if args.hierarchy:
        wh = weight_hierarchy(X, args.d, _budget(args), I)
        lines.append("weight hierarchy: (" + ", ".join("skip" if w is None else str(w) for w in wh) + ")")
        data["hierarchy"] = wh
        rs = range(1, C.dimension + 1)
    else:
        r = args.r or 1
        if r > C.dimension:
            raise UsageError(f"r = {r} exceeds the code dimension {C.dimension}")
        try:
            w = generalized_hamming_weight(C, r, _budget(args))
        except BudgetExceeded as exc:
            w = None
            rep.warn(str(exc))
        lines.append(f"delta_{r}: {'skip' if w is None else w}")
        data["r"] = r
        data["weight"] = w
        rs = [r]
    rep.section("code", lines)
    if args.crosscheck:
        cl = []
        reports = [cross_check(X, args.d, r, _budget(args), I) for r in rs]
        for c in reports:
            if c["status"] == "skipped":
                cl.append(f"r={c['r']}: skipped ({c['reason']})")
            else:
                cl.append(f"r={c['r']}: code {c['code']}, ideal {c['ideal']} -> {c['status']}")
        rep.section("cross-check", cl)
        data["crosscheck"] = reports
        if any(c["status"] == "fail" for c in reports):
            rep.data = data
            _emit(rep, args)
            return EXIT_COUNTEREXAMPLE
    rep.data = data
    _emit(rep, args)
    return EXIT_OK


def cmd_vanishing_ideal(args) -> int:
    src = load_input(args.file, args)
    if src.points is None:
        raise UsageError("the vanishing-ideal command needs a points file")
    I = src.ideal
    hd = I.hilbert_data()
    rep = Report(args.echo, ring_banner(I.ring))
    gb = I.groebner_basis()
    rep.section("reduced groebner basis", [str(g) for g in gb])
    rep.section("hilbert", hilbert_lines(hd, hd.reg_index + 1))
    h, tried = find_regular_linear_form(I)
    rep.section("regular linear form", [str(h) if h is not None else f"none ({tried} forms tried)"])
    rep.data = {"basis": [str(g) for g in gb], "hilbert": hd.as_dict(),
                "regular_linear_form": str(h) if h is not None else None}
    _emit(rep, args)
    return EXIT_OK


def cmd_check(args) -> int:
    src = load_input(args.file, args)
    I = src.ideal
    res = property_checks(I, args.dmax, args.rmax, _budget(args), src.primes)
    rep = Report(args.echo, ring_banner(I.ring))
    rep.section("hypotheses", flag_lines(res.hypotheses))
    width = max(len(r.name) for r in res.results)
    lines = []
    for r in res.results:
        tag = "" if r.verified or r.status == "skipped" else " [hypotheses asserted]"
        lines.append(f"{r.name.ljust(width)}  {r.status.upper():7}  {r.detail}{tag}")
    rep.section("checks", lines)
    for r in res.failures:
        if r.verified:
            rep.warn(f"COUNTEREXAMPLE: '{r.name}' fails under verified hypotheses")
        else:
            rep.warn(f"'{r.name}' fails; an asserted hypothesis is probably false")
    rep.data = res.to_json()
    _emit(rep, args)
    return EXIT_COUNTEREXAMPLE if res.counterexamples else EXIT_OK


def cmd_ci_probe(args) -> int:
    src = load_input(args.file, args)
    I = src.ideal
    res = ci_probe(I, _budget(args), src.primes)
    rep = Report(args.echo, ring_banner(I.ring))
    rep.section("complete intersection", [f"height c: {res.c}", f"generator degrees: {tuple(res.degrees)}",
                                          f"complete intersection: {res.ci}"] + res.notes)
    lines = []
    for row in res.rows:
        val = "-" if row.value is None else row.value
        lines.append(f"{row.kind:10}  {row.name:44}  value {val!s:>4}  bound {row.bound:>4}  {row.status}"
                     + (" (would be a counterexample)" if row.status == "violated" else ""))
    rep.section("bounds", lines or ["none applicable"])
    for row in res.counterexamples:
        rep.warn(f"COUNTEREXAMPLE: {row.name} at d={row.d}")
    rep.data = res.to_json()
    _emit(rep, args)
    return EXIT_COUNTEREXAMPLE if res.counterexamples else EXIT_OK


# ------------------------------------------------------------------ parser

def _common(p, order=True):
    p.add_argument("file", help="ideal file or points file")
    if order:
        p.add_argument("--order", help="lex | grlex | grevlex, optionally kind:v1,v2,... (largest first)")
    p.add_argument("--json", action="store_true", help="machine-readable output")
    p.add_argument("--assert-unmixed", action="store_true")
    p.add_argument("--assert-radical", action="store_true")
    p.add_argument("--assert-ci", action="store_true")


def _budget_opts(p):
    p.add_argument("--budget", type=lambda x: int(float(x)), default=None,
                   help="maximum candidates per cell (default 1e7 or $GMD_BUDGET)")
    p.add_argument("--threads", type=int, default=1)


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="gmd", description="generalized minimum distance functions, "
                                 "v-numbers and Reed-Muller-type codes")
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("invariants", help="Hilbert data, v-number, socle degree")
    _common(p)
    p.add_argument("--bound", type=int, default=None, help="search cap for v-numbers")
    p.set_defaults(func=cmd_invariants)

    p = sub.add_parser("matrix", help="delta / fp / hyp / vasconcelos matrix")
    _common(p)
    _budget_opts(p)
    p.add_argument("--kind", choices=KINDS, default="delta")
    p.add_argument("--method", choices=METHODS, default="auto")
    p.add_argument("--dmax", type=int, default=1)
    p.add_argument("--rmax", type=int, default=1)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_matrix)

    p = sub.add_parser("render", help="re-print a matrix saved with --json")
    p.add_argument("file")
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("code", help="parameters of the evaluation code of a point set")
    _common(p)
    _budget_opts(p)
    p.add_argument("--d", type=int, default=1)
    grp = p.add_mutually_exclusive_group()
    grp.add_argument("--r", type=int, default=None)
    grp.add_argument("--hierarchy", action="store_true")
    p.add_argument("--crosscheck", action="store_true", help="compare with delta of the vanishing ideal")
    p.set_defaults(func=cmd_code)

    p = sub.add_parser("vanishing-ideal", help="vanishing ideal of a point set")
    _common(p)
    p.set_defaults(func=cmd_vanishing_ideal)

    p = sub.add_parser("check", help="run the property suite")
    _common(p)
    _budget_opts(p)
    p.add_argument("--dmax", type=int, default=2)
    p.add_argument("--rmax", type=int, default=2)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("ci-probe", help="bounds and conjectures for complete intersections")
    _common(p)
    _budget_opts(p)
    p.set_defaults(func=cmd_ci_probe)
    return ap


def main(argv=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    ap = build_parser()
    args = ap.parse_args(argv)
    args.echo = "gmd " + " ".join(shlex.quote(a) for a in argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"{args.file}: {exc}", file=sys.stderr)
    except (UsageError, InfiniteFieldError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
