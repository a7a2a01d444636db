"""Finite posets/lattices, Möbius values, chain counts and geometric checks."""

from __future__ import annotations

import threading
from itertools import combinations
from typing import Hashable, Iterable, Sequence

from .errors import InputError, ValidationReport
from .fpoly import FPolynomial, poly_add
from .matroid import Matroid, to_set


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class GeometricLattice:
    """A finite poset on indexed elements, ordered so that index order is a
    linear extension.  Nothing here assumes the poset actually is geometric;
    :func:`check_geometric` decides that.
    """

    def __init__(self, elements: Sequence[Hashable], below: Sequence[int]):
        # below[i]: bitmask of indices j with elements[j] <= elements[i]
        order = sorted(range(len(elements)), key=lambda i: bin(below[i]).count("1"))
        pos = {old: new for new, old in enumerate(order)}

        def remap(mask: int) -> int:
            return sum(1 << pos[j] for j in _bits(mask))

        self.elements: tuple = tuple(elements[i] for i in order)
        self.below: tuple[int, ...] = tuple(remap(below[i]) for i in order)
        m = len(self.elements)
        above = [0] * m
        for i, b in enumerate(self.below):
            for j in _bits(b):
                above[j] |= 1 << i
        self.above: tuple[int, ...] = tuple(above)
        self._index = {e: i for i, e in enumerate(self.elements)}

        self.lower_covers: list[list[int]] = []
        for i in range(m):
            strict = self.below[i] & ~(1 << i)
            self.lower_covers.append(
                [j for j in _bits(strict) if strict & self.above[j] & ~(1 << j) == 0])
        self.upper_covers: list[list[int]] = [[] for _ in range(m)]
        for i, lows in enumerate(self.lower_covers):
            for j in lows:
                self.upper_covers[j].append(i)

        rk = [0] * m
        for i in range(m):
            rk[i] = max((rk[j] + 1 for j in self.lower_covers[i]), default=0)
        self.rk: tuple[int, ...] = tuple(rk)
        minima = [i for i in range(m) if self.below[i] == 1 << i]
        maxima = [i for i in range(m) if self.above[i] == 1 << i]
        self.bottom: int | None = minima[0] if len(minima) == 1 else None
        self.top: int | None = maxima[0] if len(maxima) == 1 else None
        self.rank = rk[self.top] if self.top is not None else max(rk, default=0)

        self._mu: dict[int, dict[int, int]] = {}
        self._chains: list[tuple[int, ...] | None] = [None] * m
        self._lock = threading.Lock()
        self._geometric: ValidationReport | None = None

    @classmethod
    def from_relation(cls, elements: Sequence[Hashable],
                      relations: Iterable[tuple[Hashable, Hashable]]) -> "GeometricLattice":
        """Poset generated by ``a <= b`` pairs (transitive closure taken)."""
        idx = {e: i for i, e in enumerate(elements)}
        if len(idx) != len(elements):
            raise InputError("duplicate poset elements")
        below = [1 << i for i in range(len(elements))]
        for a, b in relations:
            below[idx[b]] |= 1 << idx[a]
        changed = True
        while changed:
            changed = False
            for i in range(len(below)):
                acc = below[i]
                for j in _bits(below[i]):
                    acc |= below[j]
                if acc != below[i]:
                    below[i] = acc
                    changed = True
        for i in range(len(below)):
            for j in _bits(below[i] & ~(1 << i)):
                if below[j] >> i & 1:
                    raise InputError("relation has a cycle; not a partial order")
        return cls(elements, below)

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, element: Hashable) -> int:
        try:
            return self._index[element]
        except KeyError:
            raise InputError(f"{element!r} is not an element of the lattice") from None

    def _check(self, p: int) -> None:
        if not (isinstance(p, int) and 0 <= p < len(self.elements)):
            raise InputError(f"element index {p!r} out of range")

    def leq(self, p: int, q: int) -> bool:
        return bool(self.below[q] >> p & 1)

    def crk(self, p: int) -> int:
        return self.rank - self.rk[p]

    def atoms(self) -> list[int]:
        return [] if self.bottom is None else list(self.upper_covers[self.bottom])

    def hasse_edges(self) -> list[tuple[int, int]]:
        return [(j, i) for i in range(len(self)) for j in self.lower_covers[i]]

    def rank_profile(self) -> list[int]:
        out = [0] * (max(self.rk, default=0) + 1)
        for r in self.rk:
            out[r] += 1
        return out

    def _join(self, p: int, q: int) -> int | None:
        upper = self.above[p] & self.above[q]
        if not upper:
            return None
        least = (upper & -upper).bit_length() - 1
        return least if upper & ~self.above[least] == 0 else None

    def _meet(self, p: int, q: int) -> int | None:
        lower = self.below[p] & self.below[q]
        if not lower:
            return None
        greatest = lower.bit_length() - 1
        return greatest if lower & ~self.below[greatest] == 0 else None

    def mobius_row(self, p: int) -> dict[int, int]:
        self._check(p)
        row = self._mu.get(p)
        if row is not None:
            return row
        row = {}
        for q in _bits(self.above[p]):  # increasing index = linear extension
            if q == p:
                row[q] = 1
            else:
                interval = self.below[q] & self.above[p] & ~(1 << q)
                row[q] = -sum(row[z] for z in _bits(interval))
        with self._lock:
            return self._mu.setdefault(p, row)

    def chains_ending_at(self, p: int) -> tuple[int, ...]:
        """Coefficient tuple of sum_k (#k-element chains with maximum p) t^k."""
        self._check(p)
        cached = self._chains[p]
        if cached is not None:
            return cached
        acc: tuple[int, ...] = (1,)
        for q in _bits(self.below[p] & ~(1 << p)):
            acc = poly_add(acc, self.chains_ending_at(q))
        result = (0, *acc)
        self._chains[p] = result
        return result

    def __repr__(self) -> str:
        return f"GeometricLattice({len(self)} elements, rank {self.rank})"


def build_lattice_of_flats(m: Matroid) -> GeometricLattice:
    masks = m.flat_masks
    below = [sum(1 << j for j, g in enumerate(masks) if g & f == g) for f in masks]
    return GeometricLattice([tuple(to_set(f)) for f in masks], below)


def boolean_lattice(n: int) -> GeometricLattice:
    subsets = list(range(1 << n))
    below = [sum(1 << t for t in subsets if t & s == t) for s in subsets]
    return GeometricLattice([tuple(to_set(s)) for s in subsets], below)


def check_geometric(L: GeometricLattice) -> ValidationReport:
    if L._geometric is not None:
        return L._geometric
    L._geometric = _check_geometric(L)
    return L._geometric


def _check_geometric(L: GeometricLattice) -> ValidationReport:
    el = L.elements
    if not len(L):
        return ValidationReport.failed("bounded", "empty poset")
    if L.bottom is None or L.top is None:
        return ValidationReport.failed("bounded", "no unique minimum or maximum")
    for i in range(len(L)):
        for j in L.lower_covers[i]:
            if L.rk[i] != L.rk[j] + 1:
                return ValidationReport.failed(
                    "graded", f"{el[j]!r} < {el[i]!r} is a cover spanning ranks {L.rk[j]}->{L.rk[i]}",
                    lower=el[j], upper=el[i])
    pairs = list(combinations(range(len(L)), 2))
    for p, q in pairs:
        join, meet = L._join(p, q), L._meet(p, q)
        if join is None or meet is None:
            return ValidationReport.failed(
                "lattice", f"{el[p]!r} and {el[q]!r} lack a unique join or meet", p=el[p], q=el[q])
        if L.rk[p] + L.rk[q] < L.rk[join] + L.rk[meet]:
            return ValidationReport.failed(
                "semimodular", f"rk({el[p]!r}) + rk({el[q]!r}) < rk(meet) + rk(join)", p=el[p], q=el[q])
    atoms = L.atoms()
    for x in range(len(L)):
        upper = L.above[L.bottom]
        for a in atoms:
            if L.leq(a, x):
                upper &= L.above[a]
        join = (upper & -upper).bit_length() - 1
        if join != x:
            return ValidationReport.failed(
                "atomistic", f"{el[x]!r} is not the join of the atoms below it", element=el[x])
    return ValidationReport.passed()


def moebius(L: GeometricLattice, p: int, q: int) -> int:
    L._check(q)
    if not L.leq(p, q):
        raise InputError(f"moebius needs p <= q; got {L.elements[p]!r}, {L.elements[q]!r}")
    return L.mobius_row(p)[q]


def open_star_fpoly(L: GeometricLattice, p: int) -> FPolynomial:
    """Chains of ``L_{<=p}`` that contain ``p``, plus the empty face."""
    return FPolynomial(poly_add((1,), L.chains_ending_at(p)))


def order_complex_fpoly(L: GeometricLattice, restrict: int | None = None) -> FPolynomial:
    """f-polynomial of the order complex of ``L`` or of the down-set ``L_{<=restrict}``."""
    members = range(len(L)) if restrict is None else _bits(L.below[restrict])
    acc: tuple[int, ...] = (1,)
    for p in members:
        acc = poly_add(acc, L.chains_ending_at(p))
    return FPolynomial(acc)
