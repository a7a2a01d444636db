"""Brute-force cell enumeration of Engström representations.

Cells of the homotopy colimit are products of an open chain simplex with an
open cell of a join power of ``X``.  A join cell is a tuple with one entry per
join coordinate: ``None`` for the empty face of that factor, else
``(d, j)`` naming the ``j``-th ``d``-cell of ``X``.  The all-``None`` tuple is
excluded.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Iterator, Literal

from .errors import BudgetExceeded, InputError, NonGeometricLatticeError
from .formulas import ComplexSummary, _as_complex
from .fpoly import FPolynomial
from .lattice import GeometricLattice, _bits, check_geometric

DEFAULT_MAX_ELEMENTS = 5000
DEFAULT_MAX_LABELS = 10**7

Cell = tuple  # tuple[None | tuple[int, int], ...]


@dataclass(frozen=True)
class CellLabel:
    chain: tuple[int, ...]  # lattice indices, increasing
    joincell: Cell

    @property
    def dim(self) -> int:
        return len(self.chain) - 1 + sum(c[0] + 1 for c in self.joincell if c is not None) - 1


@dataclass
class OracleResult:
    fpoly: FPolynomial
    labels: list[CellLabel] | None = None


def _coordinate_options(X: ComplexSummary) -> list:
    opts: list = [None]
    for d in range(X.fpoly.degree):
        opts.extend((d, j) for j in range(X.fpoly[d + 1]))
    return opts


def join_cells(X: ComplexSummary, c: int) -> Iterator[Cell]:
    """Nonempty cells of the ``c``-fold join of ``X``."""
    for cell in product(_coordinate_options(X), repeat=c):
        if any(x is not None for x in cell):
            yield cell


def _chains_with_max(L: GeometricLattice, p: int) -> Iterator[tuple[int, ...]]:
    def descend(chain: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        yield chain
        low = chain[0]
        for q in _bits(L.below[low] & ~(1 << low)):
            yield from descend((q, *chain))

    return descend((p,))


def _all_chains_below(L: GeometricLattice, p: int) -> Iterator[tuple[int, ...]]:
    for q in _bits(L.below[p]):
        yield from _chains_with_max(L, q)


def _count_chains(L: GeometricLattice, tops) -> int:
    return sum(sum(L.chains_ending_at(q)) for q in tops)


def _tally(dims: Counter) -> FPolynomial:
    top = max(dims, default=-1)
    coeffs = [1] + [0] * (top + 1)
    for d, k in dims.items():
        coeffs[d + 1] += k
    return FPolynomial(tuple(coeffs))


def enumerate_cells(
    L: GeometricLattice,
    X: ComplexSummary,
    mode: Literal["star", "naive"] = "star",
    *,
    census: bool = False,
    max_elements: int = DEFAULT_MAX_ELEMENTS,
    max_labels: int = DEFAULT_MAX_LABELS,
) -> OracleResult:
    X = _as_complex(X)
    report = check_geometric(L)
    if not report:
        raise NonGeometricLatticeError(report)
    if len(L) > max_elements:
        raise BudgetExceeded(f"lattice has {len(L)} elements (budget {max_elements})")
    per_coord = X.fpoly.total()
    if mode == "star":
        need = sum(sum(L.chains_ending_at(p)) * (per_coord ** L.crk(p) - 1) for p in range(len(L)))
    elif mode == "naive":
        need = sum(_count_chains(L, _bits(L.below[p])) * (per_coord ** L.crk(p) - 1)
                   for p in range(len(L)))
    else:
        raise InputError(f"unknown oracle mode {mode!r}")
    if need > max_labels:
        raise BudgetExceeded(f"{mode} enumeration needs {need} labels (budget {max_labels})")
    if mode == "star":
        return _star(L, X, census)
    return _naive(L, X)


def _star(L: GeometricLattice, X: ComplexSummary, census: bool) -> OracleResult:
    dims: Counter = Counter()
    labels: list[CellLabel] | None = [] if census else None
    for p in range(len(L)):
        c = L.crk(p)
        if c == 0:
            continue
        cells = list(join_cells(X, c))
        for chain in _chains_with_max(L, p):
            for cell in cells:
                label = CellLabel(chain, cell)
                dims[label.dim] += 1
                if labels is not None:
                    labels.append(label)
    return OracleResult(_tally(dims), labels)


def _naive(L: GeometricLattice, X: ComplexSummary) -> OracleResult:
    parent: dict = {}

    def find(a):
        root = a
        while parent[root] != root:
            root = parent[root]
        while parent[a] != root:
            parent[a], a = root, parent[a]
        return root

    nodes = []
    for p in range(len(L)):
        c = L.crk(p)
        cells = list(join_cells(X, c))
        for chain in _all_chains_below(L, p):
            for cell in cells:
                node = (p, chain, cell)
                parent[node] = node
                nodes.append(node)

    for p, chain, cell in nodes:
        m = chain[-1]
        if m == p:
            continue
        # (chain, x) in the piece over p is glued to (chain, x padded) over every q in [m, p)
        for q in _bits(L.below[p] & L.above[m] & ~(1 << p)):
            pad = (None,) * (L.crk(q) - L.crk(p))
            ra, rb = find((p, chain, cell)), find((q, chain, cell + pad))
            if ra != rb:
                parent[ra] = rb

    dims: Counter = Counter()
    class_dim: dict = {}
    for node in nodes:
        root = find(node)
        d = CellLabel(node[1], node[2]).dim
        if class_dim.setdefault(root, d) != d:
            raise AssertionError(f"identified cells of different dimension at {node}")
    for d in class_dim.values():
        dims[d] += 1
    return OracleResult(_tally(dims))


def format_label(L: GeometricLattice, label: CellLabel) -> str:
    chain = " < ".join(str(list(L.elements[i])) for i in label.chain)
    cell = ",".join("-" if c is None else f"{c[0]}:{c[1]}" for c in label.joincell)
    return f"{chain} | ({cell})"
