"""Command-line surface: ``block``, ``restrict`` and ``verify``.

Every command assembles a ``Report`` (metadata, labelled matrices, records)
and emits it as JSON, TSV or an aligned text table.  Exit status is 0 on
success, 1 when a verification fails and 2 on a usage error.
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__

SCHEMA = "greenblocks.report/1"
EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# -- reports -----------------------------------------------------------------
def fmt(v) -> str:
    if isinstance(v, Fraction):
        return str(v.numerator) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"
    if isinstance(v, bool):
        return "true" if v else "false"
    if v is None:
        return ""
    return repr(v) if not isinstance(v, str) else v


def enc(v):
    """JSON form: polynomials as sparse [[exponent, coefficient], ...], rationals as "p/q"."""
    from .exactalg import scalar_to_json
    if hasattr(v, "to_json"):
        return v.to_json()
    if isinstance(v, (bool, str)) or v is None:
        return v
    if isinstance(v, (list, tuple)):
        return [enc(x) for x in v]
    return scalar_to_json(v)


@dataclass
class Matrix:
    name: str
    rows: list
    cols: list
    cells: list

    def to_json(self):
        return {"rows": list(self.rows), "cols": list(self.cols),
                "cells": [[enc(x) for x in r] for r in self.cells]}


@dataclass
class Report:
    command: str
    meta: dict = field(default_factory=dict)
    matrices: list = field(default_factory=list)
    records: dict = field(default_factory=dict)      # name -> list of flat dicts
    ok: bool = True

    def matrix(self, name, rows, cols, cells):
        self.matrices.append(Matrix(name, list(rows), list(cols), cells))

    def to_json(self) -> dict:
        return {"schema": SCHEMA, "command": self.command, "ok": self.ok, "meta": {k: enc(v) for k, v in self.meta.items()},
                "matrices": {m.name: m.to_json() for m in self.matrices},
                "records": {k: [{a: (b if isinstance(b, float) else enc(b)) for a, b in r.items()} for r in v]
                            for k, v in self.records.items()}}

    def to_tsv(self) -> str:
        lines = [f"#schema\t{SCHEMA}", f"#command\t{self.command}", f"#ok\t{fmt(self.ok)}"]
        lines += [f"#{k}\t{_flat(v)}" for k, v in self.meta.items()]
        for m in self.matrices:
            for r, row in zip(m.rows, m.cells):
                for c, x in zip(m.cols, row):
                    lines.append(f"{m.name}\t{r}\t{c}\t{fmt(x)}")
        for name, recs in self.records.items():
            for r in recs:
                lines.append("\t".join([name] + [f"{k}={_flat(v)}" for k, v in r.items()]))
        return "\n".join(lines) + "\n"

    def to_table(self) -> str:
        out = [f"{self.command}: {'ok' if self.ok else 'FAILED'}"]
        out += [f"  {k}: {_flat(v)}" for k, v in self.meta.items()]
        for m in self.matrices:
            out.append("")
            out.append(f"[{m.name}]")
            grid = [[""] + list(m.cols)] + [[r] + [fmt(x) for x in row] for r, row in zip(m.rows, m.cells)]
            widths = [max(len(g[j]) for g in grid) for j in range(len(grid[0]))]
            out += ["  ".join(s.rjust(w) for s, w in zip(g, widths)) for g in grid]
        for name, recs in self.records.items():
            out.append("")
            out.append(f"[{name}]")
            out += ["  " + "  ".join(f"{k}={_flat(v)}" for k, v in r.items()) for r in recs]
        return "\n".join(out) + "\n"

    def emit(self, form: str) -> str:
        if form == "json":
            return json.dumps(self.to_json(), indent=2) + "\n"
        return self.to_tsv() if form == "tsv" else self.to_table()


def _flat(v):
    if isinstance(v, (list, tuple)):
        return ",".join(_flat(x) for x in v)
    if isinstance(v, dict):
        return ";".join(f"{k}:{_flat(x)}" for k, x in v.items())
    return fmt(v)


# -- block sources -----------------------------------------------------------
def _block(args):
    from .blocks import BlockValidationError, gl_principal_block, load_block, sl_block
    chosen = [x for x in (args.gl, args.sl, args.load) if x is not None]
    if len(chosen) != 1:
        raise UsageError("give exactly one of --gl N, --sl N --d D, --load FILE")
    if args.d is not None and args.sl is None:
        raise UsageError("--d only applies to --sl")
    try:
        if args.load is not None:
            try:
                text = Path(args.load).read_text()
            except OSError as exc:
                raise UsageError(f"cannot read {args.load}: {exc.strerror}")
            return load_block(text)
        if args.gl is not None:
            return gl_principal_block(args.gl)
        d = 1 if args.d is None else args.d
        if d < 1 or args.sl % d:
            raise UsageError(f"d = {d} does not divide n = {args.sl}")
        return sl_block(args.sl, d, y_table=True)
    except (BlockValidationError, ValueError) as exc:
        raise UsageError(str(exc))


# -- commands ----------------------------------------------------------------
def cmd_block(args) -> Report:
    from .lusztig import factorize
    b = _block(args)
    t = factorize(b, route=args.route)
    ids, W = list(b.ids), b.W
    rep = Report("block", meta={"block": b.name, "pairs": len(ids), "W": str(b.coxeter),
                                "route": args.route, "xi_denominator": t.xi_den})
    rep.records["pairs"] = [{"id": p.id, "support": p.support, "phi": p.phi, "c": p.c, "a": p.a}
                            for p in b.pairs]
    rep.matrix("Omega", ids, ids, t.omega)
    rep.matrix("Xi_numerator", ids, ids, t.xi_num)
    rep.matrix("P~", ids, ids, t.ptilde)
    rep.matrix("Lambda~", ids, ids, t.lam)
    rep.matrix("Q~", ids, W.class_names, [f.values for f in t.qtilde])
    if args.ggg:
        _ggg_sections(rep, t)
    return rep


def _ggg_sections(rep, t):
    from .ggg import gamma_tilde, ggg_orthogonality_u
    b = t.block
    ids = list(b.ids)
    exps = [gamma_tilde(t, i) for i in range(b.size)]
    rep.matrix("Gamma~ on X~", ids, ids, [e.x for e in exps])
    rep.matrix("Gamma~ on Y~", ids, ids, [e.y for e in exps])
    fam = dict(b.group).get("family")
    if fam not in ("GL", "SL") or "levi" in dict(b.group):
        rep.meta["orthogonality"] = "available for GL_n and SL_n blocks"
        return
    tables = [t]
    if fam == "SL":
        from .blocks import sl_all_blocks
        from .lusztig import factorize
        tables = [factorize(x) for x in sl_all_blocks(dict(b.group)["n"])]
    units = []
    for s in b.supports:
        labels = b.y_table.classes_of(s)[0] if b.y_table is not None else ("1",)
        units += [(s, a) for a in range(len(labels))]
    recs = []
    for u in units:
        for v in units:
            lhs, rhs = ggg_orthogonality_u(tables, u, v)
            recs.append({"u": _unit(u), "v": _unit(v), "lhs": lhs, "rhs": rhs, "equal": lhs == rhs})
            rep.ok &= lhs == rhs
    rep.records["orthogonality"] = recs


def _unit(u):
    return u[0] if u[1] == 0 else f"{u[0]}[{u[1]}]"


def _composition(text, n):
    try:
        comp = tuple(int(x) for x in text.split(","))
    except ValueError:
        raise UsageError(f"bad composition {text!r}")
    if any(c < 1 for c in comp) or sum(comp) != n:
        raise UsageError(f"{text} is not a composition of {n}")
    return comp


def cmd_restrict(args) -> Report:
    from .restriction import (gl_levi_embedding, r_matrix, restrict_ggg, subregular_restriction,
                              subregular_restriction_ggg, pipeline_subregular_row)
    if args.gl is None or args.levi is None:
        raise UsageError("restrict needs --gl N and --levi n1,n2,...")
    if args.gl < 1:
        raise UsageError("n must be positive")
    try:
        e = gl_levi_embedding(args.gl, _composition(args.levi, args.gl))
    except ValueError as exc:
        raise UsageError(str(exc))
    d = r_matrix(e)
    gi, mi = list(e.ambient.ids), list(e.sub.ids)
    rep = Report("restrict", meta={"embedding": e.label, "eps_I(M)": e.eps})
    rep.matrix("ResMat", mi, gi, d.resmat)
    rep.matrix("R", gi, mi, d.R)
    rep.matrix("R*", gi, mi, d.R_star)
    if args.ggg is not None:
        if args.ggg not in gi:
            raise UsageError(f"no pair {args.ggg!r}; pairs are {', '.join(gi)}")
        rep.records["ggg"] = [{"pair": args.ggg, "target": k, "coefficient": v}
                              for k, v in restrict_ggg(e, args.ggg, d).items()]
    if args.subregular:
        if args.gl < 2:
            raise UsageError("GL_1 has no subregular class")
        closed, pipe = subregular_restriction(e), pipeline_subregular_row(e, d)
        keys = sorted(set(closed) | set(pipe), key=e.sub.index)
        recs = []
        for k in keys:
            a, p = closed.get(k, _zero()), pipe.get(k, _zero())
            recs.append({"target": k, "closed_form": a, "pipeline": p, "equal": a == p})
        rep.ok = all(r["equal"] for r in recs)
        rep.records["subregular"] = recs
        rep.records["subregular_ggg"] = [{"target": k, "coefficient": v}
                                         for k, v in subregular_restriction_ggg(e).items()]
    return rep


def _zero():
    from .exactalg import LaurentPolynomial
    return LaurentPolynomial()


def cmd_verify(args) -> Report:
    from .oracle import cache
    from .verify import SUITES, run_suite, suite_params
    if args.suite is None:
        raise UsageError("verify needs --suite")
    if args.suite not in SUITES:
        raise UsageError(f"unknown suite {args.suite!r}; choose from {', '.join(SUITES)}")
    try:
        params = suite_params(args.n, args.q)
    except ValueError as exc:
        raise UsageError(str(exc))
    rep = Report("verify", meta={"suite": args.suite, "cache": "off" if not cache.cache_enabled()
                                 else str(cache.cache_dir())})
    results = run_suite(args.suite, **params)
    rep.records["criteria"] = [{"criterion": r.number, "title": r.title, "ok": r.ok, "checked": r.checked,
                                "seconds": round(r.seconds, 3), "notes": list(r.notes)} for r in results]
    rep.records["failures"] = [{"criterion": r.number, **f} for r in results for f in r.failures]
    rep.ok = all(r.ok for r in results)
    return rep


# -- entry point -------------------------------------------------------------
class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("json", "tsv", "table"), default="json")
    common.add_argument("--no-cache", action="store_true", help="recompute oracle results")
    p = _Parser(prog="greenblocks", description="Generalized Green functions by block factorization.")
    p.add_argument("--version", action="version", version=f"greenblocks {__version__}")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)
    b = sub.add_parser("block", parents=[common], help="P~, Lambda~, Q~ of a block")
    b.add_argument("--gl", type=int, metavar="N", help="principal block of GL_N")
    b.add_argument("--sl", type=int, metavar="N", help="block of SL_N, with --d")
    b.add_argument("--d", type=int, metavar="D", help="divisor of N naming the SL_N block")
    b.add_argument("--load", metavar="FILE", help="block descriptor in JSON")
    b.add_argument("--route", choices=("omega", "xi"), default="omega", help="matrix to factorize")
    b.add_argument("--ggg", action="store_true", help="add Gelfand-Graev expansions and orthogonality")
    r = sub.add_parser("restrict", parents=[common], help="restriction to a Levi of GL_n")
    r.add_argument("--gl", type=int, metavar="N")
    r.add_argument("--levi", metavar="N1,N2,...", help="composition of N")
    r.add_argument("--ggg", metavar="PAIR", help="restrict the Gelfand-Graev expansion of PAIR")
    r.add_argument("--subregular", action="store_true", help="closed form against the general route")
    v = sub.add_parser("verify", parents=[common], help="run an acceptance suite")
    v.add_argument("--suite", metavar="NAME", help="factorization, sln, orthogonality, duality, restriction, ggg, subregular, oracle or all")
    v.add_argument("--n", type=int, help="cap every rank sweep at n")
    v.add_argument("--q", type=int, help="oracle field F_q, q in 2, 3, 5")
    return p


COMMANDS = {"block": cmd_block, "restrict": cmd_restrict, "verify": cmd_verify}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError("choose a command: block, restrict or verify")
        if args.no_cache:
            from .oracle import cache
            cache.set_cache_enabled(False)
        rep = COMMANDS[args.command](args)
    except UsageError as exc:
        print(f"greenblocks: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except SystemExit as exc:        # --help and --version
        return EXIT_OK if not exc.code else EXIT_USAGE
    sys.stdout.write(rep.emit(args.format))
    return EXIT_OK if rep.ok else EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
