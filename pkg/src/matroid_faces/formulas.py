"""Face-count formulas for Engström and Folkman-Lawrence representations."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial
from typing import Sequence

from .combinatorics import ordered_bell, stirling2, zero_power
from .errors import InputError, NonGeometricLatticeError
from .fpoly import (
    FPolynomial,
    RationalPolynomial,
    fit_polynomial_in_n,
    join_power,
    poly_add,
    poly_div_t,
    poly_mul,
    poly_sub,
)
from .lattice import GeometricLattice, build_lattice_of_flats, check_geometric
from .matroid import uniform_matroid


@dataclass(frozen=True)
class ComplexSummary:
    """An indexing CW complex, known only through its f-polynomial."""

    fpoly: FPolynomial
    name: str = ""

    def __post_init__(self):
        if not self.fpoly.has_empty_face or self.fpoly[1] < 1:
            raise InputError(f"indexing complex must be nonempty, got f = {self.fpoly}")

    @classmethod
    def from_fvector(cls, fvector: Sequence[int], name: str = "") -> "ComplexSummary":
        return cls(FPolynomial.from_fvector(fvector), name)

    @property
    def dim(self) -> int:
        return self.fpoly.degree - 1


POINT = ComplexSummary(FPolynomial((1, 1)), "point")
S0 = ComplexSummary(FPolynomial((1, 2)), "s0")
EDGE = ComplexSummary(FPolynomial((1, 2, 1)), "edge")
TRIANGLE_BOUNDARY = ComplexSummary(FPolynomial((1, 3, 3)), "triangle")
NAMED_COMPLEXES = {c.name: c for c in (POINT, S0, EDGE, TRIANGLE_BOUNDARY)}


def parse_complex(spec: str) -> ComplexSummary:
    """``s0``, ``point``, ``edge``, ``triangle`` or a comma-separated f-vector ``f0,f1,...``."""
    spec = spec.strip().lower()
    if spec in NAMED_COMPLEXES:
        return NAMED_COMPLEXES[spec]
    try:
        fvec = [int(x) for x in spec.strip("[]").split(",")]
    except ValueError:
        raise InputError(f"bad complex spec {spec!r}") from None
    return ComplexSummary.from_fvector(fvec)


def _as_complex(X: ComplexSummary | FPolynomial) -> ComplexSummary:
    return X if isinstance(X, ComplexSummary) else ComplexSummary(X)


def _require_geometric(L: GeometricLattice) -> None:
    report = check_geometric(L)
    if not report:
        raise NonGeometricLatticeError(report)


def engstrom_fpoly(L: GeometricLattice, X: ComplexSummary | FPolynomial) -> FPolynomial:
    """f-polynomial of the Engström representation indexed by ``X``.

    Sums, over lattice elements ``p``, the open star of ``p`` times the
    ``crk(p)``-fold join of ``X``; the top element contributes nothing.
    """
    X = _as_complex(X)
    _require_geometric(L)
    acc: tuple[int, ...] = (1,)
    for p in range(len(L)):
        c = L.crk(p)
        if c == 0:
            continue
        joined = poly_sub(join_power(X.fpoly, c).coeffs, (1,))
        acc = poly_add(acc, poly_div_t(poly_mul(L.chains_ending_at(p), joined)))
    return FPolynomial(acc)


def script_F(i: int) -> FPolynomial:
    """sum_{k=0}^{i} k! S(i+1, k+1) t^k."""
    if i < 0:
        raise InputError("index must be nonnegative")
    return FPolynomial(tuple(factorial(k) * stirling2(i + 1, k + 1) for k in range(i + 1)))


def _check_rn(r: int, n: int) -> None:
    if not 0 <= r <= n:
        raise InputError(f"need 0 <= r <= n, got r={r}, n={n}")


def uniform_engstrom_fpoly(r: int, n: int, X: ComplexSummary | FPolynomial) -> FPolynomial:
    X = _as_complex(X)
    _check_rn(r, n)
    acc: tuple[int, ...] = (1,)
    for i in range(r):
        joined = poly_sub(join_power(X.fpoly, r - i).coeffs, (1,))
        term = poly_mul(script_F(i).coeffs, joined)
        acc = poly_add(acc, tuple(comb(n, i) * c for c in term))
    return FPolynomial(acc)


def uniform_total_s0(r: int, n: int) -> int:
    _check_rn(r, n)
    return 1 + sum(comb(n, i) * (2 * ordered_bell(i) - zero_power(i)) * (3 ** (r - i) - 1)
                   for i in range(r + 1))


def uniform_total_s0_altcells(r: int, n: int) -> int:
    """Total faces when each sphere uses two cells per dimension."""
    _check_rn(r, n)
    return 1 + sum(comb(n, i) * (2 * ordered_bell(i) - zero_power(i)) * 2 * (r - i)
                   for i in range(r + 1))


def bell_identity_check(i: int) -> bool:
    return script_F(i).total() == 2 * ordered_bell(i) - zero_power(i)


def fl_fpoly(L: GeometricLattice) -> FPolynomial:
    """sum over p <= q of |mu(p, q)| t^crk(p), over all of L (bottom included).

    Only the oriented-matroid case is a face count; for other lattices the
    value is a purely lattice-theoretic quantity.
    """
    coeffs = [0] * (L.rank + 1)
    for p in range(len(L)):
        coeffs[L.crk(p)] += sum(abs(v) for v in L.mobius_row(p).values())
    return FPolynomial(tuple(coeffs))


def uniform_fl_total(r: int, n: int) -> int:
    _check_rn(r, n)
    if r < 2:
        return fl_fpoly(build_lattice_of_flats(uniform_matroid(r, n))).total()
    return 1 + 2 * sum(comb(n, i) * comb(n - i - 1, k)
                       for i in range(r) for k in range(r - i))


def rho(r: int, n: int) -> Fraction:
    if r < 2:
        raise InputError("rho needs rank r >= 2")
    return Fraction(uniform_total_s0(r, n), uniform_fl_total(r, n))


def rho_limit(r: int) -> Fraction:
    if r < 1:
        raise InputError("rho_limit needs r >= 1")
    return Fraction(ordered_bell(r - 1)) / Fraction(2) ** (r - 2)


_TOTALS = {"engstrom": uniform_total_s0, "fl": uniform_fl_total, "altcells": uniform_total_s0_altcells}


@dataclass(frozen=True)
class GrowthReport:
    r: int
    which: str
    polynomial: RationalPolynomial
    expected_leading: Fraction

    @property
    def degree(self) -> int:
        return self.polynomial.degree

    @property
    def leading(self) -> Fraction:
        return self.polynomial.leading

    @property
    def matches(self) -> bool:
        return self.degree == self.r - 1 and self.leading == self.expected_leading


def expected_leading(r: int, which: str) -> Fraction:
    if which == "fl":
        return Fraction(2 ** r, factorial(r - 1))
    return Fraction(4 * ordered_bell(r - 1), factorial(r - 1))


def growth_analysis(r: int, which: str = "engstrom") -> GrowthReport:
    """Fit the total face count as a polynomial in n over n = r .. 2r+1.

    Two samples beyond the r needed for degree r-1 are checked exactly, so a
    fit failure raises :class:`NotPolynomialError`.
    """
    if r < 1:
        raise InputError("growth analysis needs r >= 1")
    if which not in _TOTALS:
        raise InputError(f"unknown count {which!r}; expected one of {sorted(_TOTALS)}")
    fn = _TOTALS[which]
    samples = [(n, fn(r, n)) for n in range(r, 2 * r + 2)]
    poly = fit_polynomial_in_n(samples, r - 1)
    return GrowthReport(r, which, poly, expected_leading(r, which))


def bell_approx(i: int) -> float:
    """Barthélemy's estimate i! / (2 (ln 2)^(i+1))."""
    if i < 0:
        raise InputError("index must be nonnegative")
    return math.exp(math.lgamma(i + 1) - math.log(2) - (i + 1) * math.log(math.log(2)))


def bell_report(i: int) -> dict:
    exact = ordered_bell(i)
    est = bell_approx(i)
    return {"i": i, "ordered_bell": exact, "estimate": est, "relative_error": abs(est / exact - 1)}


def approx_ratio_report(r: int) -> dict:
    limit = rho_limit(r)
    approx = factorial(r - 1) / (math.log(2) * math.log(4) ** (r - 1))
    return {
        "r": r,
        "rho_limit": limit,
        "rho_limit_float": float(limit),
        "approximation": approx,
        "relative_error": abs(approx / float(limit) - 1),
        **{k: v for k, v in bell_report(r - 1).items() if k != "i"},
    }
