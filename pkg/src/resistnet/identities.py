"""Trigonometric lattice-sum and product identities, and the integrals the
finite-lattice resistances converge to on the infinite square and cubic grids.

The infinite-lattice integrals are reduced analytically over one angle with
the kernel  (1/pi) integral cos(l u) / (cosh v - cos u) du = exp(-l v)/sinh v,
leaving an integrand that is smooth after the arcsinh substitution
sinh(v/2) = sqrt(r/s) sin(phi/2); adaptive quadrature does the rest.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from scipy.integrate import dblquad, quad

from . import lattice
from .errors import OutOfRangeError, ParseError, QuadratureFailureError

QUAD_ABS_TOL_2D = 1e-8
QUAD_ABS_TOL_3D = 1e-6


@dataclass(frozen=True)
class IdentityQuery:
    """Parameters of one damped lattice sum.

    variant 1 uses angles k*pi/N with offsets 0 <= offset < 2N; variant 2
    uses the doubled angles with 0 <= offset < N.  damping >= 0 is the
    hyperbolic parameter; its exp(-damping) appears as the decay factor.
    """

    n_terms: int
    offset: int
    damping: float
    variant: int = 1

    def __post_init__(self) -> None:
        if self.variant not in (1, 2):
            raise OutOfRangeError(f"variant must be 1 or 2, got {self.variant}")
        if self.n_terms < 1:
            raise OutOfRangeError(f"need N >= 1, got {self.n_terms}")
        if self.damping < 0:
            raise OutOfRangeError(f"damping must be >= 0, got {self.damping}")
        limit = 2 * self.n_terms if self.variant == 1 else self.n_terms
        if not 0 <= self.offset < limit:
            raise OutOfRangeError(
                f"offset {self.offset} outside 0..{limit - 1} for variant "
                f"{self.variant}"
            )

    @property
    def decay_factor(self) -> float:
        return math.exp(-self.damping)


def _direct_sum(q: IdentityQuery) -> float:
    if q.damping == 0.0:
        return math.inf
    n, lam, a = q.n_terms, q.damping, q.variant
    ch = math.cosh(lam)
    return math.fsum(
        math.cos(a * q.offset * k * math.pi / n) / (ch - math.cos(a * k * math.pi / n))
        for k in range(n)
    ) / n


def i1_direct(q: IdentityQuery) -> float:
    """Defining N-term sum of the variant-1 identity."""
    if q.variant != 1:
        raise OutOfRangeError("i1 takes a variant-1 query")
    return _direct_sum(q)


def i2_direct(q: IdentityQuery) -> float:
    """Defining N-term sum of the variant-2 identity."""
    if q.variant != 2:
        raise OutOfRangeError("i2 takes a variant-2 query")
    return _direct_sum(q)


def i1_closed(q: IdentityQuery) -> float:
    """Closed form of the variant-1 sum.

    Written with decaying exponentials so large N*damping cannot overflow.
    At damping 0 the sum diverges (its k = 0 term does); the analytic
    limit is +inf, which is what this returns.
    """
    if q.variant != 1:
        raise OutOfRangeError("i1 takes a variant-1 query")
    if q.damping == 0.0:
        return math.inf
    n, ell, lam = q.n_terms, q.offset, q.damping
    k = abs(n - ell)
    main = (
        math.exp((k - n) * lam)
        * (1 + math.exp(-2 * k * lam))
        / ((1 - math.exp(-2 * n * lam)) * math.sinh(lam))
    )
    parity = (1 - (-1) ** ell) / (4 * math.cosh(lam / 2) ** 2)
    return main + (1 / math.sinh(lam) ** 2 + parity) / n


def i2_closed(q: IdentityQuery) -> float:
    """Closed form of the variant-2 sum, overflow-safe like i1_closed."""
    if q.variant != 2:
        raise OutOfRangeError("i2 takes a variant-2 query")
    if q.damping == 0.0:
        return math.inf
    n, ell, lam = q.n_terms, q.offset, q.damping
    k = abs(n / 2 - ell)
    return (
        math.exp((k - n / 2) * lam)
        * (1 + math.exp(-2 * k * lam))
        / ((1 - math.exp(-n * lam)) * math.sinh(lam))
    )


def product_identity_free(n_terms: int, lam: float) -> tuple[float, float]:
    """Product over free-chain angles vs sinh(N lam) tanh(lam/2) / 2^(N-1).

    The 2^(N-1) fixes the integration constant the bare product picks up;
    without it the two sides differ by exactly that power of two.
    """
    if n_terms < 1 or lam <= 0:
        raise OutOfRangeError("need N >= 1 and damping > 0")
    ch = math.cosh(lam)
    lhs = 1.0
    for k in range(n_terms):
        lhs *= ch - math.cos(k * math.pi / n_terms)
    rhs = math.sinh(n_terms * lam) * math.tanh(lam / 2) / 2 ** (n_terms - 1)
    return lhs, rhs


def product_identity_periodic(n_terms: int, lam: float) -> tuple[float, float]:
    """Product over ring angles vs sinh^2(N lam / 2) / 2^(N-2)."""
    if n_terms < 1 or lam <= 0:
        raise OutOfRangeError("need N >= 1 and damping > 0")
    ch = math.cosh(lam)
    lhs = 1.0
    for k in range(n_terms):
        lhs *= ch - math.cos(2 * k * math.pi / n_terms)
    rhs = math.sinh(n_terms * lam / 2) ** 2 * 2 ** (2 - n_terms)
    return lhs, rhs


# ---------------------------------------------------------------------------
# infinite-lattice integrals


def r_infinite_2d(dx: int, dy: int, r: float = 1.0, s: float = 1.0) -> float:
    """Resistance between grid points of the infinite square lattice."""
    dx, dy = abs(int(dx)), abs(int(dy))
    r = float(r)
    s = float(s)
    if dx == 0 and dy == 0:
        return 0.0
    rho = math.sqrt(r / s)

    def integrand(phi: float) -> float:
        sin_half = rho * math.sin(phi / 2)
        if sin_half == 0.0:
            return r * dx
        lam = 2 * math.asinh(sin_half)
        return r * (1 - math.cos(dy * phi) * math.exp(-dx * lam)) / math.sinh(lam)

    value, err = quad(integrand, 0.0, math.pi, epsabs=1e-12, epsrel=1e-12, limit=200)
    if err > QUAD_ABS_TOL_2D:
        raise QuadratureFailureError(f"estimated error {err:g} above {QUAD_ABS_TOL_2D:g}")
    return value / math.pi


def r_infinite_3d(
    dx: int, dy: int, dz: int, r: float = 1.0, s: float = 1.0, t: float = 1.0
) -> float:
    """Resistance between grid points of the infinite cubic lattice."""
    dx, dy, dz = abs(int(dx)), abs(int(dy)), abs(int(dz))
    r, s, t = float(r), float(s), float(t)
    if dx == 0 and dy == 0 and dz == 0:
        return 0.0

    def integrand(phi: float, alpha: float) -> float:
        radial = r * (
            math.sin(phi / 2) ** 2 / s + math.sin(alpha / 2) ** 2 / t
        )
        if radial == 0.0:
            return r * dx
        lam = 2 * math.asinh(math.sqrt(radial))
        return (
            r
            * (1 - math.cos(dy * phi) * math.cos(dz * alpha) * math.exp(-dx * lam))
            / math.sinh(lam)
        )

    value, err = dblquad(
        integrand, 0.0, math.pi, 0.0, math.pi, epsabs=1e-10, epsrel=1e-10
    )
    if err > QUAD_ABS_TOL_3D:
        raise QuadratureFailureError(f"estimated error {err:g} above {QUAD_ABS_TOL_3D:g}")
    return value / math.pi**2


# ---------------------------------------------------------------------------
# finite-size convergence


@dataclass(frozen=True)
class ConvergenceRow:
    size: int
    finite_value: float
    difference: float


def finite_to_infinite_convergence(
    bc: lattice.BoundaryCondition,
    delta: tuple[int, int],
    sizes: Sequence[int],
    r: float = 1.0,
    s: float = 1.0,
) -> tuple[ConvergenceRow, ...]:
    """Finite square-lattice values approaching the infinite-grid integral.

    Periodic and cylindrical grids measure from the origin; the free grid
    measures between nodes near the center, where boundary effects decay.
    """
    dx, dy = abs(delta[0]), abs(delta[1])
    limit = r_infinite_2d(dx, dy, r, s)
    rows = []
    for size in sizes:
        if size <= max(dx, dy) + 1:
            raise OutOfRangeError(f"size {size} too small for offset {delta}")
        center = (size - 1) // 2
        if bc is lattice.BoundaryCondition.PERIODIC_2D:
            value = lattice.r_2d_periodic(size, size, r, s, (0, 0), (dx, dy))
        elif bc is lattice.BoundaryCondition.CYLINDER:
            # x is translation invariant; y must sit far from the free edges
            value = lattice.r_2d_cylinder(
                size, size, r, s, (0, center), (dx, center + dy)
            )
        elif bc is lattice.BoundaryCondition.FREE_2D:
            value = lattice.r_2d_free(
                size, size, r, s, (center, center), (center + dx, center + dy)
            )
        else:
            raise ParseError(f"no convergence family for {bc.value}")
        rows.append(ConvergenceRow(size, value, value - limit))
    return tuple(rows)
