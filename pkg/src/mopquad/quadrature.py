"""Simultaneous Gaussian quadrature rules: pipeline and evaluation.

``gauss_mop`` chains catalog -> balance -> tridiagonal initial guesses
-> Ehrlich-Aberth and converts each converged eigentriple into the two
weights

    w1_j = v1 * f11 * u1 / (u . v),
    w2_j = s1 * v1 * (f21 * u1 / s1 + f22 * u2 / s2) / (u . v),

where u, v are the left/right unit eigenvectors of the *balanced*
matrix and s1, s2 are the first two diagonal entries of the balancing
similarity.  The recurrence system is generated one index past n: the
eigensolver's pencil needs the superdiagonal entry of column n+1.

Weights are folded into plain sums as eigenvalues converge, so a full
rule costs O(n^2) flops and O(n) memory.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import eigensolver
from .catalog import MopSpec, class_mop
from .errors import BadNError, RuleNotConvergedError
from .hessenberg import BandedHessenberg, balance
from ._flops import FlopCounter

__all__ = ["QuadratureRule", "gauss_mop", "apply_rule", "exactness_degree"]


@dataclass(frozen=True)
class QuadratureRule:
    """Nodes and both weight vectors of one simultaneous Gaussian rule.

    ``ier`` is 0 on full convergence, otherwise the 1-based index of the
    first node the eigensolver failed to settle within its sweep budget.
    """

    nodes: np.ndarray
    w1: np.ndarray
    w2: np.ndarray
    ier: int
    spec: MopSpec

    @property
    def n(self) -> int:
        return len(self.nodes)


def gauss_mop(spec: MopSpec, tol: float | None = None, counter: FlopCounter | None = None) -> QuadratureRule:
    """Compute the n-point simultaneous Gaussian rule for ``spec``.

    ``tol`` overrides the Ehrlich-Aberth stopping tolerance (default
    n^2 * eps).  Non-convergence is reported through the rule's ``ier``
    field, not raised.
    """
    n = spec.n
    if n < 2:
        raise BadNError(f"rules need n >= 2 nodes, got {n}")
    if tol is None:
        tol = eigensolver.default_tolerance(n)
    rec = class_mop(spec.with_n(n + 1))
    H = BandedHessenberg.from_recurrence(rec)
    B = balance(H, counter=counter)
    x0 = eigensolver.initial_guesses(B, m=n, counter=counter)

    # unconverged entries keep their initial guess and NaN weights
    xs = np.array(x0)
    w1 = np.full(n, np.nan)
    w2 = np.full(n, np.nan)
    f11, f21, f22 = rec.f11, rec.f21, rec.f22
    s1, s2 = B.s1, B.s2

    def fold_weights(j: int, est: eigensolver.EigenEstimate) -> None:
        u, v = est.u, est.v
        uv = float(u @ v)
        xs[j] = est.x
        w1[j] = v[0] * f11 * u[0] / uv
        w2[j] = s1 * v[0] * (f21 * u[0] / s1 + f22 * u[1] / s2) / uv
        if counter is not None:
            counter.add(2 * len(u) + 11, "weights")

    _, ier = eigensolver.ehrlich_aberth(B, x0, tol, counter=counter, sink=fold_weights)
    order = np.argsort(xs, kind="stable")
    return QuadratureRule(
        nodes=xs[order], w1=w1[order], w2=w2[order], ier=ier, spec=spec
    )


def apply_rule(rule: QuadratureRule, f) -> tuple[float, float]:
    """Evaluate both weighted integrals of f with one set of nodes.

    Neumaier-compensated sums; each node is evaluated once and shared by
    the two weight vectors.  Raises RuleNotConvergedError when the rule
    carries ier != 0.
    """
    if rule.ier != 0:
        raise RuleNotConvergedError(
            f"rule for class {rule.spec.class_id} has ier={rule.ier}"
        )
    fx = np.array([float(f(float(x))) for x in rule.nodes])
    return _comp_sum(rule.w1 * fx), _comp_sum(rule.w2 * fx)


def _comp_sum(terms: np.ndarray) -> float:
    total = 0.0
    comp = 0.0
    for t in terms:
        t = float(t)
        s = total + t
        if abs(total) >= abs(t):
            comp += (total - s) + t
        else:
            comp += (t - s) + total
        total = s
    return total + comp


def exactness_degree(spec: MopSpec) -> tuple[int, int]:
    """Maximal exactly-integrated degree against w1 and w2.

    The step-line multi-index (ceil(n/2), floor(n/2)) gives degrees
    n + n_j - 1 per weight.
    """
    n = spec.n
    return n + math.ceil(n / 2) - 1, n + math.floor(n / 2) - 1
