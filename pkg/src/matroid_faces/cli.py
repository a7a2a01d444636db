"""Command-line interface.

Exit codes: 0 success, 2 input parse error, 3 axiom-validation failure,
4 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from decimal import Decimal, localcontext
from fractions import Fraction
from pathlib import Path

from . import formulas as fm
from .errors import AxiomError, BudgetExceeded, InputError, NotPolynomialError, ValidationReport
from .fpoly import FPolynomial
from .lattice import GeometricLattice, build_lattice_of_flats, check_geometric, open_star_fpoly
from .matroid import Matroid, matroid_from_document, parse_builtin, validate_flat_axioms
from .oracle import DEFAULT_MAX_LABELS, enumerate_cells, format_label
from .signvectors import CovectorSet, underlying_lattice, validate_covector_axioms

BUDGET_ENV = "MATROID_FACES_MAX_LABELS"

EXIT_OK, EXIT_INPUT, EXIT_AXIOM, EXIT_BUDGET = 0, 2, 3, 4


class AxiomFailure(Exception):
    def __init__(self, report: ValidationReport):
        super().__init__(str(report))
        self.report = report


def _read_json(path: str) -> dict:
    try:
        return json.loads(Path(path).read_text())
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except json.JSONDecodeError as exc:
        raise InputError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from None


def load_matroid(source: str) -> Matroid:
    if source == "fano" or source.startswith("uniform:"):
        return parse_builtin(source)
    return matroid_from_document(_read_json(source))


def load_covectors(path: str) -> CovectorSet:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    return CovectorSet.parse(text)


def _frac(x: Fraction) -> str:
    return f"{x.numerator}/{x.denominator}"


def _decimal(x: Fraction, digits: int = 20) -> str:
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(x.numerator) / Decimal(x.denominator))


def _poly(f: FPolynomial) -> list[str]:
    return f.to_strings()


def _emit(result: dict, fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(result, ensure_ascii=False) + "\n")
    elif fmt == "csv":
        rows = result.get("rows")
        if rows is None:
            coeffs = result.get("coeffs")
            if coeffs is None:
                rows = [["key", "value"]] + [[k, json.dumps(v) if not isinstance(v, str) else v]
                                             for k, v in result.items()]
            else:
                rows = [["i", "coefficient"]] + [[str(i), c] for i, c in enumerate(coeffs)]
        buf = io.StringIO()
        csv.writer(buf, lineterminator="\n").writerows(rows)
        out.write(buf.getvalue())
    else:
        for k, v in result.items():
            if k == "rows":
                for row in v:
                    out.write("  ".join(f"{c:>14}" for c in row) + "\n")
            else:
                out.write(f"{k}: {v}\n")


def _lattice(args) -> tuple[Matroid, GeometricLattice]:
    m = load_matroid(args.matroid)
    return m, build_lattice_of_flats(m)


def _max_labels() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_MAX_LABELS
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None


def cmd_fpoly(args) -> dict:
    m, L = _lattice(args)
    X = fm.parse_complex(args.complex)
    f = fm.engstrom_fpoly(L, X)
    stars = {}
    for p in range(len(L)):
        stars.setdefault(str(L.rk[p]), _poly(open_star_fpoly(L, p)))
    return {"matroid": args.matroid, "rank": m.rank, "n": m.n, "complex": args.complex,
            "coeffs": _poly(f), "total": str(f.total()), "open_stars_by_rank": stars}


def cmd_uniform_fpoly(args) -> dict:
    f = fm.uniform_engstrom_fpoly(args.r, args.n, fm.parse_complex(args.complex))
    return {"r": args.r, "n": args.n, "complex": args.complex,
            "coeffs": _poly(f), "total": str(f.total())}


def cmd_total(args) -> dict:
    if args.matroid:
        _, L = _lattice(args)
        value = fm.engstrom_fpoly(L, fm.parse_complex(args.complex)).total()
        return {"matroid": args.matroid, "complex": args.complex, "total": str(value)}
    if args.r is None or args.n is None:
        raise InputError("total needs --matroid or both --r and --n")
    if args.altcells:
        value = fm.uniform_total_s0_altcells(args.r, args.n)
    else:
        value = fm.uniform_total_s0(args.r, args.n)
    return {"r": args.r, "n": args.n, "total": str(value)}


def cmd_fl(args) -> dict:
    if args.covectors:
        C = load_covectors(args.covectors)
        report = validate_covector_axioms(C)
        if not report:
            raise AxiomFailure(report)
        f = fm.fl_fpoly(underlying_lattice(C))
        return {"covectors": str(len(C)), "coeffs": _poly(f), "total": str(f.total())}
    if not args.matroid:
        raise InputError("fl needs --matroid or --covectors")
    _, L = _lattice(args)
    f = fm.fl_fpoly(L)
    return {"matroid": args.matroid, "coeffs": _poly(f), "total": str(f.total()),
            "note": "lattice-theoretic quantity; Proposition applies to oriented matroids"}


def cmd_fl_total(args) -> dict:
    if args.matroid:
        _, L = _lattice(args)
        return {"matroid": args.matroid, "total": str(fm.fl_fpoly(L).total()),
                "note": "lattice-theoretic quantity; Proposition applies to oriented matroids"}
    if args.r is None or args.n is None:
        raise InputError("fl-total needs --matroid or both --r and --n")
    return {"r": args.r, "n": args.n, "total": str(fm.uniform_fl_total(args.r, args.n))}


def cmd_oracle(args) -> dict:
    _, L = _lattice(args)
    X = fm.parse_complex(args.complex)
    if args.census is not None and args.mode != "star":
        raise InputError("--census is only available in star mode")
    result = enumerate_cells(L, X, args.mode, census=args.census is not None,
                             max_labels=_max_labels())
    formula = fm.engstrom_fpoly(L, X)
    if args.census is not None:
        lines = "".join(format_label(L, lab) + "\n" for lab in result.labels)
        Path(args.census).write_text(lines)
    return {"matroid": args.matroid, "complex": args.complex, "mode": args.mode,
            "coeffs": _poly(result.fpoly), "total": str(result.fpoly.total()),
            "agrees_with_formula": result.fpoly == formula}


def cmd_validate(args) -> dict:
    if args.kind == "covectors":
        C = load_covectors(args.file)
        report = validate_covector_axioms(C)
        if not report:
            raise AxiomFailure(report)
        out = {"kind": "covectors", "ok": True, "covectors": str(len(C))}
        if args.echo:
            out["document"] = C.dumps()
        return out
    doc = _read_json(args.file)
    if "flats" in doc and "n" in doc:
        report = validate_flat_axioms(doc["n"], doc["flats"])
        if not report:
            raise AxiomFailure(report)
    try:
        m = matroid_from_document(doc)
    except AxiomError as exc:
        raise AxiomFailure(exc.report) from None
    lattice_report = check_geometric(build_lattice_of_flats(m))
    if not lattice_report:
        raise AxiomFailure(lattice_report)
    out = {"kind": "flats", "ok": True, "n": m.n, "rank": m.rank, "flats": str(len(m.flat_masks))}
    if args.echo:
        out["document"] = m.to_document()
    return out


def cmd_rho(args) -> dict:
    value = fm.rho(args.r, args.n)
    return {"r": args.r, "n": args.n, "rho": _frac(value), "rho_decimal": _decimal(value)}


def cmd_rho_limit(args) -> dict:
    value = fm.rho_limit(args.r)
    return {"r": args.r, "rho_limit": _frac(value), "rho_limit_decimal": _decimal(value)}


def cmd_asymptotics(args) -> dict:
    rows = [["n", "engstrom_total", "fl_total", "rho_decimal", "rho"]]
    for n in range(max(args.r, 2), args.max_n + 1):
        e, f = fm.uniform_total_s0(args.r, n), fm.uniform_fl_total(args.r, n)
        q = Fraction(e, f)
        rows.append([str(n), str(e), str(f), _decimal(q), _frac(q)])
    return {"rows": rows}


def cmd_bell(args) -> dict:
    rep = fm.bell_report(args.i)
    return {"i": args.i, "ordered_bell": str(rep["ordered_bell"]),
            "estimate": repr(rep["estimate"]), "relative_error": repr(rep["relative_error"])}


def cmd_growth(args) -> dict:
    g = fm.growth_analysis(args.r, args.which)
    return {"r": args.r, "which": args.which, "degree": g.degree, "leading": _frac(g.leading),
            "expected_leading": _frac(g.expected_leading), "matches": g.matches,
            "polynomial": [_frac(c) for c in g.polynomial.coeffs]}


def cmd_hasse(args) -> dict:
    _, L = _lattice(args)
    def show(i: int) -> str:
        return "{" + " ".join(map(str, L.elements[i])) + "}"

    rows = [["lower", "upper"]] + [[show(a), show(b)] for a, b in L.hasse_edges()]
    return {"rows": rows}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="matroid-faces", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, *, matroid=False, complex_=False, rn=False, help=None):
        sp = sub.add_parser(name, help=help)
        sp.set_defaults(func=fn)
        sp.add_argument("--format", choices=("json", "csv", "table"), default="json")
        if matroid:
            sp.add_argument("--matroid", required=matroid == "required",
                            help="JSON file, uniform:R:N or fano")
        if complex_:
            sp.add_argument("--complex", default="s0",
                            help="s0, point, edge, triangle or an f-vector f0,f1,...")
        if rn:
            sp.add_argument("--r", type=int, required=rn == "required")
            sp.add_argument("--n", type=int, required=rn == "required")
        return sp

    add("fpoly", cmd_fpoly, matroid="required", complex_=True, help="Engström f-polynomial")
    add("uniform-fpoly", cmd_uniform_fpoly, complex_=True, rn="required",
        help="closed form for uniform matroids")
    sp = add("total", cmd_total, matroid=True, complex_=True, rn=True, help="total face count")
    sp.add_argument("--altcells", action="store_true",
                    help="uniform S0 count with two cells per sphere dimension")
    sp = add("fl", cmd_fl, matroid=True, help="Folkman-Lawrence f-polynomial via Möbius values")
    sp.add_argument("--covectors", help="covector file (one +-0 string per line)")
    add("fl-total", cmd_fl_total, matroid=True, rn=True, help="Folkman-Lawrence total face count")
    sp = add("oracle", cmd_oracle, matroid="required", complex_=True, help="brute-force cell count")
    sp.add_argument("--mode", choices=("star", "naive"), default="star")
    sp.add_argument("--census", metavar="FILE", help="write one cell label per line")
    sp = add("validate", cmd_validate, help="check flat or covector axioms")
    sp.add_argument("kind", choices=("flats", "covectors"))
    sp.add_argument("file")
    sp.add_argument("--echo", action="store_true", help="include the canonical document")
    add("rho", cmd_rho, rn="required", help="exact Engström/FL ratio for U_{r,n}")
    sp = add("rho-limit", cmd_rho_limit, help="limit of rho(U_{r,n}) as n grows")
    sp.add_argument("--r", type=int, required=True)
    sp = add("asymptotics", cmd_asymptotics, help="CSV sweep of totals and ratios")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True)
    sp.set_defaults(format="csv")
    sp = add("bell", cmd_bell, help="ordered Bell number and its estimate")
    sp.add_argument("--i", type=int, required=True)
    sp = add("growth", cmd_growth, help="fit total counts as polynomials in n")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--which", choices=("engstrom", "fl", "altcells"), default="engstrom")
    add("hasse", cmd_hasse, matroid="required", help="Hasse diagram edge list").set_defaults(format="csv")
    return p


def main(argv: list[str] | None = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        result = args.func(args)
    except (AxiomFailure, AxiomError) as exc:
        stderr.write(json.dumps({"error": "axiom", **exc.report.to_dict()}, ensure_ascii=False) + "\n")
        return EXIT_AXIOM
    except BudgetExceeded as exc:
        stderr.write(f"budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (InputError, NotPolynomialError) as exc:
        stderr.write(f"input error: {exc}\n")
        return EXIT_INPUT
    _emit(result, args.format, stdout)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
