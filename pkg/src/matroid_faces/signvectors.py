"""Sign vectors, the covector axioms, and the underlying lattice of flats."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .errors import AxiomError, InputError, ValidationReport
from .lattice import GeometricLattice, build_lattice_of_flats
from .matroid import Matroid, _check_masks, to_mask

_CHARS = {"+": 1, "-": -1, "0": 0}
_SYMBOLS = {1: "+", -1: "-", 0: "0"}


@dataclass(frozen=True, order=True)
class SignVector:
    """Entries in {+1, 0, -1}; element ``e`` lives at position ``e - 1``."""

    entries: tuple[int, ...]

    def __post_init__(self):
        if any(x not in (-1, 0, 1) for x in self.entries):
            raise InputError(f"sign vector entries must be -1, 0 or 1: {self.entries}")

    @classmethod
    def parse(cls, text: str) -> "SignVector":
        try:
            return cls(tuple(_CHARS[c] for c in text.strip()))
        except KeyError as exc:
            raise InputError(f"bad sign character {exc.args[0]!r} in {text!r}") from None

    @classmethod
    def zero(cls, n: int) -> "SignVector":
        return cls((0,) * n)

    def __len__(self) -> int:
        return len(self.entries)

    def __str__(self) -> str:
        return "".join(_SYMBOLS[x] for x in self.entries)

    def __neg__(self) -> "SignVector":
        return negate(self)


def _same_ground(x: SignVector, y: SignVector) -> None:
    if len(x) != len(y):
        raise InputError(f"ground-set mismatch: {len(x)} vs {len(y)}")


def compose(x: SignVector, y: SignVector) -> SignVector:
    _same_ground(x, y)
    return SignVector(tuple(a if a else b for a, b in zip(x.entries, y.entries)))


def negate(x: SignVector) -> SignVector:
    return SignVector(tuple(-a for a in x.entries))


def zero_set(x: SignVector) -> frozenset[int]:
    return frozenset(e for e, a in enumerate(x.entries, 1) if a == 0)


def support(x: SignVector) -> frozenset[int]:
    return frozenset(e for e, a in enumerate(x.entries, 1) if a != 0)


def separation_set(x: SignVector, y: SignVector) -> frozenset[int]:
    _same_ground(x, y)
    return frozenset(e for e, (a, b) in enumerate(zip(x.entries, y.entries), 1) if a and a == -b)


class CovectorSet:
    """A deduplicated family of sign vectors of common length ``n``."""

    def __init__(self, n: int, vectors: Iterable[SignVector]):
        vecs = sorted(set(vectors))
        for v in vecs:
            if len(v) != n:
                raise InputError(f"sign vector {v} has length {len(v)}, expected {n}")
        self.n = n
        self.vectors: tuple[SignVector, ...] = tuple(vecs)
        self._members = frozenset(vecs)

    @classmethod
    def parse(cls, text: str) -> "CovectorSet":
        """One ``+-0`` string per line; blank lines and ``#`` comments ignored."""
        lines = [ln.strip() for ln in text.splitlines()]
        vecs = [SignVector.parse(ln) for ln in lines if ln and not ln.startswith("#")]
        if not vecs:
            raise InputError("covector file contains no sign vectors")
        return cls(len(vecs[0]), vecs)

    def dumps(self) -> str:
        return "".join(f"{v}\n" for v in self.vectors)

    def __len__(self) -> int:
        return len(self.vectors)

    def __contains__(self, v: SignVector) -> bool:
        return v in self._members

    def without(self, v: SignVector) -> "CovectorSet":
        return CovectorSet(self.n, (w for w in self.vectors if w != v))


def validate_covector_axioms(C: CovectorSet) -> ValidationReport:
    """Brute-force (L0)-(L3); the first failure in sorted order is reported."""
    vecs = C.vectors
    zero = SignVector.zero(C.n)
    if zero not in C:
        return ValidationReport.failed("L0", "zero vector missing", missing=str(zero))
    for x in vecs:
        if -x not in C:
            return ValidationReport.failed("L1", f"-{x} missing", X=str(x), missing=str(-x))
    for x in vecs:
        for y in vecs:
            xy = compose(x, y)
            if xy not in C:
                return ValidationReport.failed(
                    "L2", f"{x} o {y} = {xy} missing", X=str(x), Y=str(y), missing=str(xy))
    for x in vecs:
        for y in vecs:
            sep = separation_set(x, y)
            if not sep:
                continue
            xy = compose(x, y).entries
            keep = [f for f in range(C.n) if f + 1 not in sep]
            for e in sorted(sep):
                if not any(z.entries[e - 1] == 0 and all(z.entries[f] == xy[f] for f in keep)
                           for z in vecs):
                    return ValidationReport.failed(
                        "L3", f"no eliminating covector for {x}, {y} at {e}",
                        X=str(x), Y=str(y), e=e)
    return ValidationReport.passed()


def underlying_matroid(C: CovectorSet) -> Matroid:
    family = [sorted(zero_set(x)) for x in C.vectors]
    masks = sorted({to_mask(s, C.n) for s in family}, key=lambda m: (bin(m).count("1"), m))
    report = _check_masks(C.n, masks)
    if not report:
        raise AxiomError(report)
    return Matroid(C.n, family, validate=False)


def underlying_lattice(C: CovectorSet) -> GeometricLattice:
    """Zero sets of the covectors, ordered by inclusion."""
    return build_lattice_of_flats(underlying_matroid(C))
