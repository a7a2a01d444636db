"""Matroids presented by their flats.

Subsets of the ground set ``{1..n}`` are held internally as integer bitmasks
(bit ``e - 1`` set when ``e`` is present) and exchanged as sorted lists.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .errors import AxiomError, BudgetExceeded, InputError, ValidationReport

MAX_GROUND_SET = 64
DEFAULT_MAX_FLATS = 100_000


def to_mask(subset: Iterable[int], n: int) -> int:
    mask = 0
    for e in subset:
        if isinstance(e, bool) or not isinstance(e, int):
            raise InputError(f"element {e!r} is not an integer")
        if not 1 <= e <= n:
            raise InputError(f"element {e} outside ground set 1..{n}")
        mask |= 1 << (e - 1)
    return mask


def to_set(mask: int) -> list[int]:
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return out


def _popcount(mask: int) -> int:
    return bin(mask).count("1")


def _check_n(n: int) -> None:
    if isinstance(n, bool) or not isinstance(n, int) or n < 0:
        raise InputError(f"ground-set size must be a nonnegative integer, got {n!r}")
    if n > MAX_GROUND_SET:
        raise InputError(f"ground-set size {n} exceeds the cap of {MAX_GROUND_SET}")


def _masks(n: int, family: Iterable[Iterable[int]]) -> list[int]:
    _check_n(n)
    masks = sorted({to_mask(s, n) for s in family}, key=lambda m: (_popcount(m), m))
    if not masks:
        raise InputError("flat family is empty")
    return masks


def _check_masks(n: int, masks: Sequence[int]) -> ValidationReport:
    full = (1 << n) - 1
    present = set(masks)
    if full not in present:
        return ValidationReport.failed("F1", "ground set is not a flat", missing=to_set(full))
    for a, b in combinations(masks, 2):
        if a & b not in present:
            return ValidationReport.failed(
                "F2", f"{to_set(a)} ∩ {to_set(b)} = {to_set(a & b)} is not a flat",
                X=to_set(a), Y=to_set(b), missing=to_set(a & b))
    for x in masks:
        uppers = [y for y in masks if y != x and y & x == x]
        minimal: list[int] = []
        for y in uppers:  # sorted by size, so any strict subset appears earlier
            if not any(m != y and m & y == m for m in minimal):
                minimal.append(y)
        covered = 0
        for y in minimal:
            diff = y & ~x
            if covered & diff:
                clash = next(m for m in minimal if m != y and (m & ~x) & diff)
                return ValidationReport.failed(
                    "F3", f"covers of {to_set(x)} overlap outside it",
                    X=to_set(x), Y1=to_set(clash), Y2=to_set(y))
            covered |= diff
        if covered != full & ~x:
            return ValidationReport.failed(
                "F3", f"covers of {to_set(x)} miss {to_set(full & ~x & ~covered)}",
                X=to_set(x), uncovered=to_set(full & ~x & ~covered))
    return ValidationReport.passed()


def validate_flat_axioms(n: int, candidate: Iterable[Iterable[int]]) -> ValidationReport:
    """Check (F1)-(F3) for a candidate flat family over ``{1..n}``.

    Out-of-range elements raise :class:`InputError`; axiom failures are
    reported, not raised.
    """
    return _check_masks(n, _masks(n, candidate))


class Matroid:
    """A matroid on ``{1..n}`` given by its (validated) family of flats."""

    def __init__(self, n: int, flats: Iterable[Iterable[int]], *, validate: bool = True):
        masks = _masks(n, flats)
        if validate:
            report = _check_masks(n, masks)
            if not report:
                raise AxiomError(report)
        self.n = n
        self._masks: tuple[int, ...] = tuple(masks)
        self._flat_rank = self._rank_flats()
        self.rank = self._flat_rank[(1 << n) - 1]

    def _rank_flats(self) -> dict[int, int]:
        ranks: dict[int, int] = {}
        for f in self._masks:
            below = [ranks[g] for g in ranks if g != f and g & f == g]
            ranks[f] = 1 + max(below) if below else 0
        return ranks

    @property
    def ground_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def flat_masks(self) -> tuple[int, ...]:
        return self._masks

    @property
    def flats(self) -> list[list[int]]:
        return [to_set(m) for m in self._masks]

    def flat_rank(self, mask: int) -> int:
        return self._flat_rank[mask]

    def closure(self, subset: Iterable[int]) -> list[int]:
        return to_set(self._closure_mask(to_mask(subset, self.n)))

    def _closure_mask(self, s: int) -> int:
        out = self.ground_mask
        for f in self._masks:
            if f & s == s:
                out &= f
        return out

    def rank_of_set(self, subset: Iterable[int]) -> int:
        return self._flat_rank[self._closure_mask(to_mask(subset, self.n))]

    def bases(self) -> list[list[int]]:
        return [list(c) for c in combinations(range(1, self.n + 1), self.rank)
                if self.rank_of_set(c) == self.rank]

    def to_document(self) -> dict:
        return {"n": self.n, "flats": self.flats}

    def __eq__(self, other: object) -> bool:
        return isinstance(other, Matroid) and (self.n, self._masks) == (other.n, other._masks)

    def __hash__(self) -> int:
        return hash((self.n, self._masks))

    def __repr__(self) -> str:
        return f"Matroid(n={self.n}, rank={self.rank}, flats={len(self._masks)})"


def closure(m: Matroid, subset: Iterable[int]) -> list[int]:
    return m.closure(subset)


def rank_of_set(m: Matroid, subset: Iterable[int]) -> int:
    return m.rank_of_set(subset)


def uniform_matroid(r: int, n: int, *, max_flats: int = DEFAULT_MAX_FLATS) -> Matroid:
    """U_{r,n}: every subset of size < r is a flat, plus the ground set."""
    _check_n(n)
    if not 0 <= r <= n:
        raise InputError(f"uniform matroid needs 0 <= r <= n, got r={r}, n={n}")
    from math import comb

    count = sum(comb(n, i) for i in range(r)) + 1
    if count > max_flats:
        raise BudgetExceeded(f"U_{{{r},{n}}} has {count} flats (cap {max_flats})")
    family = [c for i in range(r) for c in combinations(range(1, n + 1), i)]
    family.append(tuple(range(1, n + 1)))
    return Matroid(n, family, validate=False)


FANO_LINES = ((1, 2, 3), (1, 4, 5), (1, 6, 7), (2, 4, 6), (2, 5, 7), (3, 4, 7), (3, 5, 6))


def fano_matroid() -> Matroid:
    family = [(), *((e,) for e in range(1, 8)), *FANO_LINES, tuple(range(1, 8))]
    return Matroid(7, family)


def matroid_from_bases(n: int, bases: Iterable[Iterable[int]], *, max_n: int = 20) -> Matroid:
    """Derive the flat family from a basis family and validate it."""
    _check_n(n)
    basis_masks = sorted({to_mask(b, n) for b in bases})
    if not basis_masks:
        raise InputError("basis family is empty")
    sizes = {_popcount(b) for b in basis_masks}
    if len(sizes) != 1:
        raise InputError(f"bases have differing sizes {sorted(sizes)}")
    if n > max_n:
        raise BudgetExceeded(f"deriving flats from bases enumerates 2^{n} subsets (cap n={max_n})")

    def rank(s: int) -> int:
        return max(_popcount(s & b) for b in basis_masks)

    ranks = [rank(s) for s in range(1 << n)]
    flats = []
    for s in range(1 << n):
        if all(ranks[s | (1 << e)] > ranks[s] for e in range(n) if not s >> e & 1):
            flats.append(to_set(s))
    return Matroid(n, flats)


def matroid_from_document(doc: Mapping) -> Matroid:
    if not isinstance(doc, Mapping) or "n" not in doc:
        raise InputError("matroid document needs an integer field 'n'")
    keys = [k for k in ("flats", "bases") if k in doc]
    if len(keys) != 1:
        raise InputError("matroid document needs exactly one of 'flats' or 'bases'")
    family = doc[keys[0]]
    if not isinstance(family, list):
        raise InputError(f"'{keys[0]}' must be an array of arrays")
    for s in family:
        if not isinstance(s, list) or any(not isinstance(e, int) for e in s):
            raise InputError(f"'{keys[0]}' entries must be arrays of integers")
        if any(a >= b for a, b in zip(s, s[1:])):
            raise InputError(f"subset {s} is not strictly increasing")
    if keys[0] == "flats":
        return Matroid(doc["n"], family)
    return matroid_from_bases(doc["n"], family)


def parse_builtin(name: str) -> Matroid:
    """Resolve ``fano`` or ``uniform:R:N``."""
    if name == "fano":
        return fano_matroid()
    parts = name.split(":")
    if len(parts) == 3 and parts[0] == "uniform":
        try:
            r, n = int(parts[1]), int(parts[2])
        except ValueError:
            raise InputError(f"bad uniform matroid spec {name!r}") from None
        return uniform_matroid(r, n)
    raise InputError(f"unknown builtin matroid {name!r}")
