"""Node/weight rules for integrals against the Gaussian weight exp(-a t^2).

Two schemes are offered so that every quadrature-based quantity can be
cross-checked by an independent discretization:

* ``"gauss-hermite"``: Hermite nodes rescaled by ``1/sqrt(a)``; the weight is
  absorbed into the quadrature weights.
* ``"adaptive-interval"``: Gauss-Legendre nodes on ``[-R, R]`` with the weight
  multiplied in explicitly.  ``R`` is ``truncation_radius`` or, if unset, the
  radius beyond which ``exp(-a t^2) < 1e-20``.

Both refine by doubling the node count until two successive results agree.
"""
from __future__ import annotations

from dataclasses import dataclass, replace
from functools import lru_cache
from typing import Callable

import numpy as np
from scipy import special

from .errors import InvalidInput, QuadratureFailure

SCHEMES = ("gauss-hermite", "adaptive-interval")


@dataclass(frozen=True)
class QuadratureSpec:
    scheme: str = "gauss-hermite"
    node_count: int = 128
    abs_tol: float = 1e-14
    rel_tol: float = 1e-10
    truncation_radius: float | None = None
    max_nodes: int = 4096

    def __post_init__(self):
        if self.scheme not in SCHEMES:
            raise InvalidInput(f"unknown quadrature scheme {self.scheme!r}")
        if self.node_count < 16:
            raise InvalidInput("node_count must be >= 16")
        if not (self.abs_tol > 0 and self.rel_tol > 0):
            raise InvalidInput("tolerances must be positive")
        if self.truncation_radius is not None and not self.truncation_radius > 0:
            raise InvalidInput("truncation_radius must be positive")
        if self.max_nodes < self.node_count:
            raise InvalidInput("max_nodes must be >= node_count")

    def with_nodes(self, node_count: int) -> "QuadratureSpec":
        return replace(self, node_count=node_count, max_nodes=max(self.max_nodes, node_count))

    def radius(self, a: float) -> float:
        if self.truncation_radius is not None:
            return self.truncation_radius
        return float(np.sqrt(46.0 / a))

    def nodes_weights(self, a: float, node_count: int | None = None) -> tuple[np.ndarray, np.ndarray]:
        """Nodes ``t_i`` and weights ``w_i`` with ``sum w_i f(t_i) ~ int f(t) exp(-a t^2) dt``."""
        m = self.node_count if node_count is None else node_count
        if self.scheme == "gauss-hermite":
            x, w = _hermite(m)
            s = 1.0 / np.sqrt(a)
            return x * s, w * s
        x, w = _legendre(m)
        r = self.radius(a)
        t = x * r
        return t, w * r * np.exp(-a * t * t)


@lru_cache(maxsize=32)
def _hermite(m: int):
    x, w = special.roots_hermite(m)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


@lru_cache(maxsize=32)
def _legendre(m: int):
    x, w = special.roots_legendre(m)
    x.setflags(write=False)
    w.setflags(write=False)
    return x, w


def refine(
    evaluate: Callable[[int], float | np.ndarray],
    quad: QuadratureSpec,
    what: str = "integral",
):
    """Double the node count until successive evaluations agree.

    ``evaluate(m)`` returns the m-node approximation (scalar or array).  The
    finer of the last two evaluations is returned.
    """
    m = quad.node_count
    prev = np.asarray(evaluate(m), dtype=float)
    change = float("nan")
    while 2 * m <= quad.max_nodes:
        m *= 2
        cur = np.asarray(evaluate(m), dtype=float)
        err = np.abs(cur - prev)
        if np.all(err <= np.maximum(quad.abs_tol, quad.rel_tol * np.abs(cur))):
            return cur if cur.ndim else float(cur)
        change = float(np.max(err))
        prev = cur
    raise QuadratureFailure(
        f"{what}: no convergence up to {quad.max_nodes} nodes (last change {change:.3e})"
    )
