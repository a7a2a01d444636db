"""Exact f-polynomial arithmetic.

The coefficient of ``t**i`` counts ``(i-1)``-dimensional faces, so ``t**0``
is the empty face.  Coefficients are Python ints and never overflow.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .errors import InputError, NotPolynomialError


def _trim(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


def poly_add(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    n = max(len(a), len(b))
    return _trim((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n))


def poly_sub(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    return poly_add(a, [-x for x in b])


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return _trim(out)


def poly_div_t(a: Sequence[int]) -> tuple[int, ...]:
    if a[0] != 0:
        raise ArithmeticError("division by t is not exact: nonzero constant term")
    return _trim(a[1:]) if len(a) > 1 else (0,)


@dataclass(frozen=True)
class FPolynomial:
    """Face-count generating polynomial with nonnegative integer coefficients."""

    coeffs: tuple[int, ...]

    def __post_init__(self):
        c = _trim(int(x) for x in self.coeffs)
        if any(x < 0 for x in c):
            raise InputError(f"f-polynomial coefficients must be nonnegative: {list(c)}")
        if c[0] not in (0, 1):
            raise InputError(f"empty-face coefficient must be 0 or 1, got {c[0]}")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_fvector(cls, fvector: Sequence[int]) -> "FPolynomial":
        """Build from ``(f_0, f_1, ...)`` of a nonempty complex."""
        return cls((1, *fvector))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def has_empty_face(self) -> bool:
        return self.coeffs[0] == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def total(self) -> int:
        return sum(self.coeffs)

    def to_strings(self) -> list[str]:
        return [str(c) for c in self.coeffs]

    def __str__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0 and len(self.coeffs) > 1:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                coef = "" if c == 1 else str(c)
                terms.append(f"{coef}t" + (f"^{i}" if i > 1 else ""))
        return " + ".join(terms)


ONE = FPolynomial((1,))
POINT = FPolynomial((1, 1))


def _require_empty_face(*fs: FPolynomial) -> None:
    for f in fs:
        if not f.has_empty_face:
            raise InputError(f"f-polynomial {f} lacks the empty face")


def join(f: FPolynomial, g: FPolynomial) -> FPolynomial:
    _require_empty_face(f, g)
    return FPolynomial(poly_mul(f.coeffs, g.coeffs))


def product(f: FPolynomial, g: FPolynomial) -> FPolynomial:
    _require_empty_face(f, g)
    prod = poly_mul(poly_sub(f.coeffs, (1,)), poly_sub(g.coeffs, (1,)))
    return FPolynomial(poly_add(poly_div_t(prod), (1,)))


def disjoint_union(f: FPolynomial, g: FPolynomial) -> FPolynomial:
    return FPolynomial(poly_sub(poly_add(f.coeffs, g.coeffs), (1,)))


def join_power(f: FPolynomial, c: int) -> FPolynomial:
    if c < 0:
        raise InputError("join power must be nonnegative")
    _require_empty_face(f)
    out: tuple[int, ...] = (1,)
    for _ in range(c):
        out = poly_mul(out, f.coeffs)
    return FPolynomial(out)


def total(f: FPolynomial) -> int:
    return f.total()


@dataclass(frozen=True)
class RationalPolynomial:
    """Polynomial in ``n`` with exact rational coefficients, lowest degree first."""

    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = [Fraction(x) for x in self.coeffs]
        while len(c) > 1 and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c) or (Fraction(0),))

    @property
    def degree(self) -> int:
        # the zero polynomial reports degree 0 here
        return len(self.coeffs) - 1

    @property
    def leading(self) -> Fraction:
        return self.coeffs[-1]

    def __call__(self, n) -> Fraction:
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * n + c
        return acc

    def __str__(self) -> str:
        parts = [f"({c})*n^{i}" for i, c in enumerate(self.coeffs) if c]
        return " + ".join(parts) or "0"


def _lagrange(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> list[Fraction]:
    coeffs = [Fraction(0)] * len(xs)
    for j, (xj, yj) in enumerate(zip(xs, ys)):
        basis = [Fraction(1)]
        denom = Fraction(1)
        for m, xm in enumerate(xs):
            if m == j:
                continue
            # basis *= (n - xm)
            basis = [Fraction(0)] + basis
            for k in range(len(basis) - 1):
                basis[k] -= xm * basis[k + 1]
            denom *= xj - xm
        scale = yj / denom
        for k, b in enumerate(basis):
            coeffs[k] += scale * b
    return coeffs


def fit_polynomial_in_n(samples: Sequence[tuple[int, int]], degree_bound: int) -> RationalPolynomial:
    """Interpolate through the first ``degree_bound + 1`` samples, verify the rest.

    Raises :class:`NotPolynomialError` when a verification sample disagrees.
    """
    d = degree_bound
    if d < 0:
        raise InputError("degree bound must be nonnegative")
    xs = [Fraction(x) for x, _ in samples]
    if len(set(xs)) != len(xs):
        raise InputError("sample abscissae must be distinct")
    if len(samples) < d + 2:
        raise InputError(f"need at least {d + 2} samples to fit and verify degree {d}")
    ys = [Fraction(y) for _, y in samples]
    poly = RationalPolynomial(tuple(_lagrange(xs[:d + 1], ys[:d + 1])))
    for x, y in zip(xs[d + 1:], ys[d + 1:]):
        if poly(x) != y:
            raise NotPolynomialError(
                f"sample at n={x} is {y}, fitted value {poly(x)}: not a polynomial of degree <= {d}")
    return poly
