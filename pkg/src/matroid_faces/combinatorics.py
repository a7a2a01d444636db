"""Stirling numbers of the second kind and ordered Bell (Fubini) numbers."""

from __future__ import annotations

import threading
from math import factorial

_rows: list[list[int]] = [[1]]  # _rows[i][k] = S(i, k)
_lock = threading.Lock()


def _row(i: int) -> list[int]:
    if i < 0:
        raise ValueError("Stirling row index must be nonnegative")
    if i >= len(_rows):
        with _lock:
            while len(_rows) <= i:
                prev = _rows[-1]
                m = len(prev)
                row = [0] * (m + 1)
                for k in range(1, m + 1):
                    row[k] = k * (prev[k] if k < m else 0) + prev[k - 1]
                _rows.append(row)
    return _rows[i]


def stirling2(i: int, k: int) -> int:
    if k < 0 or k > i:
        return 0
    return _row(i)[k]


def ordered_bell(i: int) -> int:
    """F_i = sum_k k! S(i, k): ordered set partitions of an i-set."""
    return sum(factorial(k) * s for k, s in enumerate(_row(i)))


def zero_power(i: int) -> int:
    """0**i with 0**0 = 1."""
    return 1 if i == 0 else 0
