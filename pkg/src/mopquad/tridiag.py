"""Reduction of the balanced Hessenberg matrix to tridiagonal form.

Two similarity steps feed the initial eigenvalue guesses:

1. ``reduce_to_tridiagonal``: kill the second subdiagonal bottom-up with
   elementary (non-orthogonal) column/row eliminations, chasing each
   created bulge upward two rows at a time.  7/2 n^2 flops, O(n) memory.
2. ``symmetrize``: diagonal scaling replacing the off-diagonal pair
   (sup_i, sub_i) by their geometric mean.  5n flops.

Both are exact similarities in exact arithmetic.  Elementary
eliminations can in principle hit a zero pivot; the catalog matrices
never do in practice, but the condition is checked, retried once with an
epsilon-scaled bump, and raised as ZeroPivotError if it persists.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NegativeProductError, ZeroPivotError
from .hessenberg import BalancedSystem

__all__ = ["Tridiagonal", "reduce_to_tridiagonal", "symmetrize"]


@dataclass(frozen=True)
class Tridiagonal:
    """Tridiagonal matrix by diagonals; ``sup is None`` marks the symmetric case."""

    diag: np.ndarray
    sub: np.ndarray
    sup: np.ndarray | None = None

    @property
    def order(self) -> int:
        return len(self.diag)

    @property
    def is_symmetric(self) -> bool:
        return self.sup is None

    def to_dense(self) -> np.ndarray:
        sup = self.sub if self.sup is None else self.sup
        return np.diag(self.diag) + np.diag(self.sub, -1) + np.diag(sup, 1)


def _reduce_once(a, b, c, d, n, counter) -> None:
    """In-place bottom-up elimination of d; b, c, d are 1-padded lists.

    Entries live at their matrix row (1-based): b[r] on the diagonal,
    c[r] just below, d[r] two below, a[r] above (a is read-only and
    untouched by the transformations).  Raises ZeroPivotError on a
    vanishing pivot.
    """
    flops = 0
    for i in range(n, 2, -1):
        if c[i] == 0.0:
            raise ZeroPivotError(i, f"c[{i}] vanished while eliminating d[{i}]")
        h = d[i] / c[i]
        d[i] = 0.0
        c[i - 1] -= h * b[i - 1]
        b[i - 2] -= h * a[i - 2]
        t = d[i - 2] * h
        d[i - 1] += h * c[i - 2]
        c[i - 1] += h * b[i - 2]
        b[i - 1] += h * a[i - 2]
        flops += 12
        if t == 0.0:
            continue
        for j in range(i - 1, 3, -2):
            if d[j] == 0.0:
                raise ZeroPivotError(j, f"d[{j}] vanished while chasing the bulge")
            h = t / d[j]
            d[j - 1] -= h * c[j - 1]
            c[j - 2] -= h * b[j - 2]
            b[j - 3] -= h * a[j - 3]
            t = d[j - 3] * h
            d[j - 2] += h * c[j - 3]
            c[j - 2] += h * b[j - 3]
            b[j - 2] += h * a[j - 3]
            flops += 12
            if t == 0.0:
                break
    if counter is not None:
        counter.add(flops, "reduce_to_tridiagonal")


def reduce_to_tridiagonal(B: BalancedSystem, counter=None) -> Tridiagonal:
    """Reduce the balanced Hessenberg matrix to a similar tridiagonal one.

    Returns a nonsymmetric Tridiagonal whose superdiagonal is the
    (unchanged) balanced superdiagonal.  For order <= 2 the matrix is
    already tridiagonal and is returned as-is.  A single zero-pivot
    breakdown is retried once with the offending pivot bumped by an
    epsilon-scaled amount; a second breakdown raises ZeroPivotError.
    """
    n = B.order
    if n <= 2:
        return Tridiagonal(
            diag=B.b_hat.copy(), sub=B.c_hat.copy(), sup=B.a_hat.copy()
        )

    # 1-padded working copies indexed by matrix row: b[1..n], c[2..n], d[3..n]
    def workspace():
        a = [0.0] + [float(v) for v in B.a_hat]  # a[r] at (r, r+1), r = 1..n-1
        b = [0.0] + [float(v) for v in B.b_hat]
        c = [0.0, 0.0] + [float(v) for v in B.c_hat]
        d = [0.0, 0.0, 0.0] + [float(v) for v in B.d_hat]
        d += [0.0] * (n + 1 - len(d))
        c += [0.0] * (n + 1 - len(c))
        return a, b, c, d

    a, b, c, d = workspace()
    try:
        _reduce_once(a, b, c, d, n, counter)
    except ZeroPivotError as first:
        a, b, c, d = workspace()
        scale = max(abs(v) for v in b + c + d) or 1.0
        bump = scale * 4.0 * np.finfo(float).eps
        arr = c if "c[" in str(first) else d
        arr[first.index] += bump
        try:
            _reduce_once(a, b, c, d, n, counter)
        except ZeroPivotError as second:
            raise ZeroPivotError(
                second.index,
                f"elementary reduction broke down twice (first at {first.index}, "
                f"again at {second.index} after an epsilon bump)",
            ) from second
    return Tridiagonal(
        diag=np.array(b[1:]), sub=np.array(c[2:]), sup=B.a_hat.copy()
    )


def symmetrize(T: Tridiagonal, counter=None) -> Tridiagonal:
    """Scale a nonsymmetric tridiagonal to a similar symmetric one.

    The diagonal is untouched; each off-diagonal pair is replaced by
    sqrt(sup_i * sub_i).  Raises NegativeProductError when some product
    is not positive (the catalog never produces one, but the claim is
    checked rather than assumed).
    """
    if T.is_symmetric:
        return T
    prod = T.sup * T.sub
    bad = ~(prod > 0.0)
    if np.any(bad):
        raise NegativeProductError(int(np.flatnonzero(bad)[0]))
    if counter is not None:
        counter.add(2 * len(prod), "symmetrize")
    return Tridiagonal(diag=T.diag.copy(), sub=np.sqrt(prod), sup=None)
