"""Banded lower Hessenberg storage and symmetrizing diagonal balancing.

The matrix is never held densely: only its four diagonals are stored, so
all operations here are O(n) in time and memory.  Balancing conjugates
H by a diagonal matrix S (never materialized -- its entries grow like a
factorial and overflow double precision near index 170) chosen so that
the superdiagonal equals the first subdiagonal, which collapses the
eigenvalue condition numbers of the catalog matrices by many orders of
magnitude.  Only the first two entries of S survive into the output;
they are exactly what the weight formula downstream consumes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NonPositivePivotError

__all__ = ["BandedHessenberg", "BalancedSystem", "balance"]


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=float)
    a.flags.writeable = False
    return a


@dataclass(frozen=True)
class BandedHessenberg:
    """H_n by diagonals: a (super, n-1), b (main, n), c (sub, n-1), d (sub-sub, n-2)."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "a", _readonly(self.a))
        object.__setattr__(self, "b", _readonly(self.b))
        object.__setattr__(self, "c", _readonly(self.c))
        object.__setattr__(self, "d", _readonly(self.d))
        n = len(self.b)
        if len(self.a) != n - 1 or len(self.c) != n - 1 or len(self.d) != max(n - 2, 0):
            raise ValueError("diagonal lengths must be n-1, n, n-1, n-2")

    @classmethod
    def from_recurrence(cls, rec) -> "BandedHessenberg":
        return cls(a=rec.a, b=rec.b, c=rec.c, d=rec.d)

    @property
    def order(self) -> int:
        return len(self.b)

    def to_dense(self) -> np.ndarray:
        """Dense copy, for tests and the small-n oracle only."""
        n = self.order
        m = np.diag(self.b)
        m += np.diag(self.a, 1) + np.diag(self.c, -1)
        if n > 2:
            m += np.diag(self.d, -2)
        return m


@dataclass(frozen=True)
class BalancedSystem:
    """Diagonals of the balanced matrix plus the scaling scalars s1, s2.

    ``a_hat`` and ``c_hat`` are the same array: balancing makes the
    superdiagonal equal the first subdiagonal by construction.
    """

    a_hat: np.ndarray
    b_hat: np.ndarray
    c_hat: np.ndarray
    d_hat: np.ndarray
    s1: float
    s2: float

    @property
    def order(self) -> int:
        return len(self.b_hat)

    def leading(self, k: int) -> "BalancedSystem":
        """Leading k-by-k principal subsystem (same scaling scalars)."""
        if not 1 <= k <= self.order:
            raise ValueError(f"k must be in 1..{self.order}")
        return BalancedSystem(
            a_hat=self.a_hat[: k - 1],
            b_hat=self.b_hat[:k],
            c_hat=self.c_hat[: k - 1],
            d_hat=self.d_hat[: max(k - 2, 0)],
            s1=self.s1,
            s2=self.s2,
        )

    def to_hessenberg(self) -> BandedHessenberg:
        return BandedHessenberg(a=self.a_hat, b=self.b_hat, c=self.c_hat, d=self.d_hat)


def balance(H: BandedHessenberg, counter=None) -> BalancedSystem:
    """Balance H so that its superdiagonal equals its first subdiagonal.

    One forward sweep:

        a_hat_i = c_hat_{i+1} = sqrt(a_i * c_{i+1}),
        d_hat_i = d_i * sqrt(a_{i-2} * a_{i-1} / (c_{i-1} * c_i)),
        b_hat   = b,    s1 = 1,    s2 = sqrt(c_1 / a_0).

    Exactly similar to H in exact arithmetic.  Raises
    NonPositivePivotError when some a_i * c_{i+1} <= 0, where the square
    roots are undefined (never the case for catalog matrices).
    """
    a, b, c, d = H.a, H.b, H.c, H.d
    n = H.order
    prod = a * c
    if np.any(prod <= 0.0) or not np.all(np.isfinite(prod)):
        bad = int(np.flatnonzero(~(prod > 0.0))[0])
        raise NonPositivePivotError(
            f"balancing needs a_i*c_(i+1) > 0; violated at i={bad} "
            f"(a={a[bad]!r}, c={c[bad]!r})"
        )
    a_hat = np.sqrt(prod)
    # d_hat_k = d_k * t_{k-1} * t_k with t_j = sqrt(a_{j-1}/c_j), built on
    # the original entries only (the sweep never reuses scaled values)
    if n > 2:
        t = np.sqrt(a / c)
        d_hat = d * t[:-1] * t[1:]
    else:
        d_hat = np.empty(0)
    s2 = math.sqrt(c[0] / a[0]) if n > 1 else 1.0
    if counter is not None:
        counter.add(4 * (n - 1) + 2 * max(n - 2, 0) + 2, "balance")
    return BalancedSystem(
        a_hat=_readonly(a_hat),
        b_hat=H.b,
        c_hat=_readonly(a_hat),
        d_hat=_readonly(d_hat),
        s1=1.0,
        s2=s2,
    )
