"""Eigenvalues and eigenvectors of the balanced banded Hessenberg matrix.

The solver never forms a dense matrix.  A BalancedSystem of order m+1
describes the m-by-(m+1) pencil F(x) = H_{m,m+1} - x [I | 0] whose null
vector stacks the (non-monic) recurrence polynomials evaluated at x:

* ``newton_step`` computes that unit null vector by right-applied Givens
  rotations plus the derivative values from a lower-triangular solve, so
  the Newton correction p_m(x)/p_m'(x) costs O(m) flops per point;
* ``initial_guesses`` reduces the leading m-by-m block to a symmetric
  tridiagonal matrix and runs implicit-shift QL -- in exact arithmetic
  the guesses already are the eigenvalues;
* ``ehrlich_aberth`` refines all guesses simultaneously, Gauss-Seidel
  style, harvesting the right eigenvector from the null vector and the
  left eigenvector from a downward Givens sweep at convergence.

Functions accept ``m`` (the number of eigenvalues) explicitly; it
defaults to ``B.order - 1``, the pipeline convention where the system
carries one trailing row of coefficients for the pencil's last column.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import NoConvergenceError
from .hessenberg import BalancedSystem
from .tridiag import reduce_to_tridiagonal, symmetrize

__all__ = [
    "GivensRotation",
    "EigenEstimate",
    "make_givens",
    "symmetric_tridiag_eigenvalues",
    "newton_step",
    "left_eigenvector",
    "initial_guesses",
    "ehrlich_aberth",
    "MAX_SWEEPS",
    "default_tolerance",
]

MAX_SWEEPS = 30


def default_tolerance(n: int) -> float:
    """Ehrlich-Aberth stopping tolerance, n^2 * machine epsilon."""
    return n * n * float(np.finfo(float).eps)


@dataclass(frozen=True)
class GivensRotation:
    """Rotation [[gamma, sigma], [-sigma, gamma]] with gamma^2 + sigma^2 = 1."""

    gamma: float
    sigma: float


def make_givens(p: float, q: float) -> GivensRotation:
    """Rotation mapping (p, q) to (r, 0), i.e. gamma*q = sigma*p.

    Branches on the larger magnitude so no intermediate can overflow.
    (0, 0) yields the identity.
    """
    if q == 0.0:
        return GivensRotation(1.0, 0.0)
    if abs(q) > abs(p):
        tau = p / q
        sigma = 1.0 / math.sqrt(1.0 + tau * tau)
        return GivensRotation(sigma * tau, sigma)
    tau = q / p
    gamma = 1.0 / math.sqrt(1.0 + tau * tau)
    return GivensRotation(gamma, gamma * tau)


def symmetric_tridiag_eigenvalues(diag, sub, counter=None) -> np.ndarray:
    """All eigenvalues of a symmetric tridiagonal matrix, ascending.

    Implicit-shift QL without eigenvector accumulation, after the
    classic EISPACK imtql1 routine including its 30-iteration budget per
    eigenvalue (NoConvergenceError beyond that).
    """
    d = [float(v) for v in diag]
    e = [float(v) for v in sub] + [0.0]
    n = len(d)
    if len(sub) != n - 1:
        raise ValueError("sub must have length n-1")
    flops = 0
    for l in range(n):
        for it in range(MAX_SWEEPS + 1):
            # locate a negligible subdiagonal element
            m = l
            while m < n - 1:
                tst1 = abs(d[m]) + abs(d[m + 1])
                if tst1 + abs(e[m]) == tst1:
                    break
                m += 1
            if m == l:
                break
            if it == MAX_SWEEPS:
                raise NoConvergenceError(l)
            # Wilkinson shift from the leading 2x2 of the active block
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            flops += 8
            underflow = False
            for i in range(m - 1, l - 1, -1):
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                flops += 16
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
            flops += 1
    if counter is not None:
        counter.add(flops, "ql")
    return np.sort(np.array(d))


def _padded_bands(B: BalancedSystem, m: int, x: float):
    """Math-indexed band lists for the m-by-(m+1) pencil at shift x."""
    a = [float(v) for v in B.a_hat[:m]]
    b = [float(v) - x for v in B.b_hat[:m]]
    c = [0.0] + [float(v) for v in B.c_hat[: m - 1]]
    d = [0.0, 0.0] + [float(v) for v in B.d_hat[: max(m - 2, 0)]]
    return a, b, c, d


def newton_step(B: BalancedSystem, x: float, m: int | None = None, counter=None):
    """Null vector of the pencil at x and the derivative values.

    Returns ``(p, pprime)``: ``p`` (length m+1) is the unit null vector
    of H_{m,m+1} - x [I | 0], proportional to (p_0(x), ..., p_m(x));
    ``pprime`` (length m) solves the lower-triangular system with
    right-hand side p[0:m], proportional to (p_1'(x), ..., p_m'(x)) in
    the same scaling.  The Newton correction is p[m]/pprime[m-1]; a zero
    pprime[m-1] is the caller's degenerate-step signal.
    """
    if m is None:
        m = B.order - 1
    if not 1 <= m <= B.order - 1:
        raise ValueError(f"m must be in 1..{B.order - 1}")
    a, b, c, d = _padded_bands(B, m, x)
    bw = b[:]
    cw = c[:]
    dw = d[:]
    cs_g = [0.0] * m
    cs_s = [0.0] * m
    flops = m  # the diagonal shift
    # right-applied rotations zeroing the superdiagonal of the pencil
    for i in range(m):
        rot = make_givens(bw[i], a[i])
        g, s = rot.gamma, rot.sigma
        cs_g[i] = g
        cs_s[i] = s
        if i + 1 < m:
            u, v = cw[i + 1], bw[i + 1]
            cw[i + 1] = g * u + s * v
            bw[i + 1] = g * v - s * u
            flops += 6
        if i + 2 < m:
            u, v = dw[i + 2], cw[i + 2]
            dw[i + 2] = g * u + s * v
            cw[i + 2] = g * v - s * u
            flops += 6
        if i + 3 < m:
            dw[i + 3] = g * dw[i + 3]
            flops += 1
        flops += 6
    # null vector from the cumulative cosine/sine products
    p = [0.0] * (m + 1)
    p[m] = cs_g[m - 1]
    t = 1.0
    for i in range(m - 1, 0, -1):
        t = -t * cs_s[i]
        p[i] = cs_g[i - 1] * t
        flops += 2
    p[0] = -t * cs_s[0]
    flops += 1
    # derivatives by forward substitution against the unrotated bands
    pp = [0.0] * m
    pp[0] = p[0] / a[0]
    flops += 1
    if m >= 2:
        pp[1] = (p[1] - b[1] * pp[0]) / a[1]
        flops += 3
    if m >= 3:
        pp[2] = (p[2] - c[2] * pp[0] - b[2] * pp[1]) / a[2]
        flops += 5
    for k in range(3, m):
        pp[k] = (p[k] - d[k] * pp[k - 3] - c[k] * pp[k - 2] - b[k] * pp[k - 1]) / a[k]
        flops += 7
    if counter is not None:
        counter.add(flops, "newton_step")
    return np.array(p), np.array(pp)


def left_eigenvector(B: BalancedSystem, x: float, m: int | None = None, counter=None) -> np.ndarray:
    """Unit left eigenvector of the m-by-m balanced matrix at eigenvalue x.

    Applies m-1 left Givens rotations to H_m - x I, bottom-up,
    annihilating the superdiagonal (and, x being an eigenvalue, the
    (1,1) entry); the eigenvector is the cumulative cosine/sine product
    vector (gamma_0, -sigma_0 gamma_1, sigma_0 sigma_1 gamma_2, ...).
    """
    if m is None:
        m = B.order - 1
    if not 1 <= m <= B.order:
        raise ValueError(f"m must be in 1..{B.order}")
    if m == 1:
        return np.array([1.0])
    a, b, c, d = _padded_bands(B, m, x)
    cs_g = [0.0] * (m - 1)
    cs_s = [0.0] * (m - 1)
    flops = m
    for i in range(m - 2, -1, -1):
        rot = make_givens(b[i + 1], a[i])
        g, s = rot.gamma, rot.sigma
        cs_g[i] = g
        cs_s[i] = s
        b[i + 1] = s * a[i] + g * b[i + 1]
        u, v = b[i], c[i + 1]
        b[i] = g * u - s * v
        c[i + 1] = s * u + g * v
        flops += 15
        if i >= 1:
            u, v = c[i], d[i + 1]
            c[i] = g * u - s * v
            d[i + 1] = s * u + g * v
            flops += 6
        if i >= 2:
            d[i] = g * d[i]
            flops += 1
    u = np.empty(m)
    t = 1.0
    for i in range(m - 1):
        u[i] = t * cs_g[i]
        t = -t * cs_s[i]
        flops += 2
    u[m - 1] = t
    if counter is not None:
        counter.add(flops, "left_eigenvector")
    return u


def initial_guesses(B: BalancedSystem, m: int | None = None, counter=None) -> np.ndarray:
    """Eigenvalue guesses from the tridiagonal reduction pipeline.

    Chains reduce_to_tridiagonal -> symmetrize -> QL on the leading
    m-by-m block; in exact arithmetic these already equal the
    eigenvalues.  Propagates ZeroPivotError / NegativeProductError /
    NoConvergenceError from the stages.
    """
    if m is None:
        m = B.order - 1
    T = reduce_to_tridiagonal(B.leading(m), counter=counter)
    S = symmetrize(T, counter=counter)
    return symmetric_tridiag_eigenvalues(S.diag, S.sub, counter=counter)


@dataclass(frozen=True)
class EigenEstimate:
    """One converged eigenvalue with its unit right/left eigenvectors.

    ``residual`` is |p_m(x)| in the unit null-vector scaling;
    ``iterations`` is the Ehrlich-Aberth sweep on which the eigenvalue
    converged.  Vectors are None when a sink consumed them.
    """

    x: float
    v: np.ndarray | None
    u: np.ndarray | None
    residual: float
    iterations: int


def ehrlich_aberth(
    B: BalancedSystem,
    x0,
    tol: float,
    counter=None,
    sink=None,
):
    """Simultaneous refinement of all eigenvalue approximations.

    Gauss-Seidel sweeps of the Aberth-corrected Newton update

        x_j <- x_j - N_j / (1 - N_j * sum_{k != j} 1/(x_j - x_k)),

    with N_j = p_m(x_j)/p_m'(x_j) from :func:`newton_step`.  An entry
    converges when |N_j| <= tol or |p_m(x_j)| <= tol; its eigenvectors
    are harvested at that point.  After 30 sweeps the index of the first
    unconverged entry (1-based) is reported through ``ier`` -- no
    exception, mirroring the GaussMOP contract.

    When ``sink`` is given it is called as ``sink(j, estimate)`` per
    convergence and the returned estimates drop their vectors, keeping
    peak memory O(m).

    Returns ``(estimates, ier)``; ier = 0 means full convergence.
    """
    x = np.array([float(v) for v in x0])
    m = len(x)
    if m == 0:
        return [], 0
    if not np.all(np.isfinite(x)):
        raise ValueError("initial guesses must be finite")
    if not 1 <= m <= B.order - 1:
        raise ValueError(f"need B.order > len(x0); got order {B.order}, m {m}")
    conv = np.zeros(m, dtype=bool)
    estimates: list[EigenEstimate | None] = [None] * m
    for sweep in range(1, MAX_SWEEPS + 1):
        for j in range(m):
            if conv[j]:
                continue
            xj = x[j]
            p, pp = newton_step(B, xj, m, counter=counter)
            pn = float(p[m])
            dpn = float(pp[m - 1])
            if dpn == 0.0:
                # degenerate Newton step: let the other updates move first
                continue
            corr = pn / dpn
            diff = xj - x
            diff[j] = np.inf
            aberth = float(np.sum(1.0 / diff))
            denom = 1.0 - corr * aberth
            x[j] = xj - (corr / denom if denom != 0.0 else corr)
            if counter is not None:
                counter.add(3 * (m - 1) + 4, "aberth")
            if abs(corr) < tol or abs(pn) < tol:
                conv[j] = True
                v = p[:m]
                v = v / np.linalg.norm(v)
                u = left_eigenvector(B, float(x[j]), m, counter=counter)
                u = u / np.linalg.norm(u)
                if counter is not None:
                    counter.add(6 * m + 2, "eigenvector")
                est = EigenEstimate(
                    x=float(x[j]), v=v, u=u, residual=abs(pn), iterations=sweep
                )
                if sink is not None:
                    sink(j, est)
                    est = EigenEstimate(
                        x=est.x, v=None, u=None, residual=est.residual, iterations=sweep
                    )
                estimates[j] = est
        if conv.all():
            return estimates, 0
    ier = int(np.flatnonzero(~conv)[0]) + 1
    return estimates, ier
