"""Folding maps, k-frames, frame partitions and the explicit subdomain spectra.

Triangle frames are stored as exact segments with endpoints that are rational
multiples of pi (Fraction coordinates in units of pi).  Box frames are unions
of hyperplanes perpendicular to a single axis; a facet is (axis, f) meaning
{x_axis = f * l_axis} with f an exact fraction.  Rasterisation happens only
inside partition_count.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np
from scipy import ndimage

from . import algebra
from .algebra import AlgebraicValue
from .domains import TRIANGLE, Domain, check_point
from .errors import DomainError, FoldParityError, ResolutionError
from .qlattice import QN

FracPoint = tuple[Fraction, Fraction]


# ---------------------------------------------------------------------------
# coordinate maps (floats, radians)


def in_half_domain(domain: Domain, p: tuple[float, ...], tol: float = 1e-9) -> bool:
    if domain.kind == TRIANGLE:
        return p[0] + p[1] <= math.pi + tol
    return p[0] <= math.pi / 2 + tol


def fold_point(domain: Domain, p: tuple[float, ...]) -> tuple[float, ...]:
    """F: half-domain -> domain, scaling lengths up by gamma(Omega)."""
    check_point(domain, p)
    if not in_half_domain(domain, p):
        raise DomainError(f"point {p} outside the half {domain.kind}")
    if domain.kind == TRIANGLE:
        x, y = p
        return (x + y, x - y)
    g = 2.0 ** (1.0 / domain.n)
    return tuple(g * c for c in p[1:] + p[:1])


def unfold_point(domain: Domain, p: tuple[float, ...]) -> tuple[float, ...]:
    """U = F^(-1): domain -> half-domain."""
    check_point(domain, p)
    if domain.kind == TRIANGLE:
        u, v = p
        return ((u + v) / 2, (u - v) / 2)
    g = 2.0 ** (1.0 / domain.n)
    return tuple(c / g for c in p[-1:] + p[:-1])


def reflect(domain: Domain, p: tuple[float, ...]) -> tuple[float, ...]:
    """Reflection across the symmetry cut L; an involution fixing L."""
    if domain.kind == TRIANGLE:
        x, y = p
        return (math.pi - y, math.pi - x)
    return (math.pi - p[0],) + tuple(p[1:])


# ---------------------------------------------------------------------------
# quantum-number maps


def unfold_qn(domain: Domain, m: QN) -> QN:
    if domain.kind == TRIANGLE:
        k, l = m
        return (k + l, k - l)
    return (2 * m[-1],) + m[:-1]


def fold_qn(domain: Domain, m: QN) -> QN:
    """Inverse of unfold_qn; requires the even-parity condition."""
    if domain.kind == TRIANGLE:
        k, l = m
        if (k - l) % 2:
            raise FoldParityError(f"{m} has odd parity and cannot be folded")
        return ((k + l) // 2, (k - l) // 2)
    if m[0] % 2:
        raise FoldParityError(f"{m} has odd first entry and cannot be folded")
    return m[1:] + (m[0] // 2,)


# ---------------------------------------------------------------------------
# k-frames


@dataclass(frozen=True)
class Segment:
    """Triangle facet; endpoints in units of pi."""

    a: FracPoint
    b: FracPoint

    def floats(self) -> tuple[tuple[float, float], tuple[float, float]]:
        return (
            (float(self.a[0]) * math.pi, float(self.a[1]) * math.pi),
            (float(self.b[0]) * math.pi, float(self.b[1]) * math.pi),
        )


@dataclass(frozen=True)
class Slab:
    """Box facet {x_axis = frac * l_axis} (axis 0-based)."""

    axis: int
    frac: Fraction


@dataclass(frozen=True)
class KFrame:
    domain: Domain
    k: int
    facets: tuple


def _u_frac(p: FracPoint) -> FracPoint:
    x, y = p
    return ((x + y) / 2, (x - y) / 2)


def _r_frac(p: FracPoint) -> FracPoint:
    x, y = p
    return (1 - y, 1 - x)


def build_frame(domain: Domain, k: int) -> KFrame:
    """S^(0) = L and S^(k) = U(S^(k-1)), stored exactly."""
    if k < 0:
        raise DomainError("frame index must be >= 0")
    if domain.kind == TRIANGLE:
        segs = [Segment((Fraction(1, 2), Fraction(1, 2)), (Fraction(1), Fraction(0)))]
        for _ in range(k):
            nxt = []
            for s in segs:
                ua, ub = _u_frac(s.a), _u_frac(s.b)
                nxt.append(Segment(ua, ub))
                nxt.append(Segment(_r_frac(ua), _r_frac(ub)))
            segs = nxt
        return KFrame(domain, k, tuple(segs))
    # box: hyperplanes cycle through the axes; wrapping from the last axis to
    # the first splits each plane in two
    slabs = [Slab(0, Fraction(1, 2))]
    for _ in range(k):
        nxt = []
        for s in slabs:
            if s.axis < domain.n - 1:
                nxt.append(Slab(s.axis + 1, s.frac))
            else:
                nxt.append(Slab(0, s.frac / 2))
                nxt.append(Slab(0, 1 - s.frac / 2))
        slabs = nxt
    return KFrame(domain, k, tuple(slabs))


def frame_parent_facet(domain: Domain, facet) -> object:
    """Image of a facet under F (or F o R when it lies in the far half).

    Every facet of S^(k) must land inside a facet of S^(k-1); used as the
    nesting check.  Exact arithmetic throughout.
    """
    def f_frac(p: FracPoint) -> FracPoint:
        return (p[0] + p[1], p[0] - p[1])

    if domain.kind == TRIANGLE:
        a, b = facet.a, facet.b
        if a[0] + a[1] <= 1 and b[0] + b[1] <= 1:
            return Segment(f_frac(a), f_frac(b))
        return Segment(f_frac(_r_frac(a)), f_frac(_r_frac(b)))
    if facet.axis > 0:
        return Slab(facet.axis - 1, facet.frac)
    if facet.frac <= Fraction(1, 2):
        return Slab(domain.n - 1, 2 * facet.frac)
    return Slab(domain.n - 1, 2 * (1 - facet.frac))


def segment_contains(outer: Segment, inner: Segment) -> bool:
    """Exact test that inner lies inside outer (collinear, within range)."""

    def cross(o: FracPoint, p: FracPoint, q: FracPoint) -> Fraction:
        return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])

    if cross(outer.a, outer.b, inner.a) != 0 or cross(outer.a, outer.b, inner.b) != 0:
        return False
    dx = outer.b[0] - outer.a[0]
    dy = outer.b[1] - outer.a[1]

    def param(p: FracPoint) -> Fraction:
        if dx:
            return (p[0] - outer.a[0]) / dx
        return (p[1] - outer.a[1]) / dy

    ta, tb = param(inner.a), param(inner.b)
    return 0 <= min(ta, tb) and max(ta, tb) <= 1


# ---------------------------------------------------------------------------
# partition counting (rasterised flood fill, stability-certified)

_OFFS = (0.4142135623730951, 0.7320508075688772, 0.2360679774997896)  # irrational


def _triangle_component_count(frame: KFrame, cells: int) -> int:
    h = 1.0 / cells  # work in units of pi
    cx = (np.arange(cells) + _OFFS[0]) * h
    cy = (np.arange(cells) + _OFFS[1]) * h
    inside = cy[None, :] < cx[:, None]  # strict interior of the triangle
    alive = inside.copy()

    for seg in frame.facets:
        (ax, ay), (bx, by) = (
            (float(seg.a[0]), float(seg.a[1])),
            (float(seg.b[0]), float(seg.b[1])),
        )
        x0, x1 = sorted((ax, bx))
        y0, y1 = sorted((ay, by))
        i0 = max(0, int(math.floor(x0 / h)) - 1)
        i1 = min(cells - 1, int(math.ceil(x1 / h)))
        j0 = max(0, int(math.floor(y0 / h)) - 1)
        j1 = min(cells - 1, int(math.ceil(y1 / h)))
        if i0 > i1 or j0 > j1:
            continue
        ii = np.arange(i0, i1 + 1)
        jj = np.arange(j0, j1 + 1)
        xlo = ii * h
        xhi = xlo + h
        ylo = jj * h
        yhi = ylo + h
        # the cell square meets the segment iff it meets the supporting line
        # and both bounding-box projections overlap (1-D Helly); frame
        # segments are vertical, horizontal or at 45 degrees, so this is exact
        bbox = ((xlo <= x1) & (xhi >= x0))[:, None] & ((ylo <= y1) & (yhi >= y0))[None, :]
        if ax == bx:  # vertical x = ax
            line = ((xlo <= ax) & (xhi >= ax))[:, None] & np.ones(len(jj), bool)[None, :]
        elif ay == by:  # horizontal
            line = np.ones(len(ii), bool)[:, None] & ((ylo <= ay) & (yhi >= ay))[None, :]
        elif (bx - ax) * (by - ay) > 0:  # slope +1: x - y = c
            c = ax - ay
            line = (xlo[:, None] - yhi[None, :] <= c) & (c <= xhi[:, None] - ylo[None, :])
        else:  # slope -1: x + y = c
            c = ax + ay
            line = (xlo[:, None] + ylo[None, :] <= c) & (c <= xhi[:, None] + yhi[None, :])
        alive[i0 : i1 + 1, j0 : j1 + 1] &= ~(line & bbox)

    _, count = ndimage.label(alive)
    return count


def _box_component_count(frame: KFrame, cells: int, n: int) -> int:
    alive = np.ones((cells,) * n, dtype=bool)
    for slab in frame.facets:
        f = float(slab.frac)
        i = int(f * cells)  # plane falls inside cell i: [i/cells, (i+1)/cells]
        idx = [slice(None)] * n
        lo = max(0, i - (1 if f * cells == i else 0))
        idx[slab.axis] = slice(lo, min(cells, i + 1))
        alive[tuple(idx)] = False
    _, count = ndimage.label(alive)
    return count


def _component_count(domain: Domain, frame: KFrame, cells: int) -> int:
    if domain.kind == TRIANGLE:
        return _triangle_component_count(frame, cells)
    return _box_component_count(frame, cells, domain.n)


@lru_cache(maxsize=None)
def partition_count(domain: Domain, k: int, base_cells: int | None = None) -> int:
    """M(k): connected components of the open domain minus the k-frame.

    Counts by pixel flood fill at two resolutions and requires agreement;
    one escalation is attempted before giving up.
    """
    frame = build_frame(domain, k)
    if base_cells is None:
        if domain.kind == TRIANGLE:
            base_cells = max(64, 16 * 2 ** ((k + 1) // 2))
        else:
            base_cells = max(32, 8 * 2 ** (k // domain.n))
    cells = base_cells
    for _ in range(2):
        c1 = _component_count(domain, frame, cells)
        c2 = _component_count(domain, frame, cells * 2)
        if c1 == c2:
            return c1
        cells *= 2
    raise ResolutionError(
        f"component count unstable for {domain.label()} k={k} at {cells} cells"
    )


def box_partition_formula(n: int, k: int) -> int:
    """Closed-form M(k) for the n-dimensional box."""
    return 2 ** (k // n) + 1


# ---------------------------------------------------------------------------
# explicit subdomain spectra used by the degeneracy rule-out


def square_subdomain_value(p: int, q: int) -> AlgebraicValue:
    """Eigenvalue (2p+1)^2 + (2q+1)^2 of the square piece of the 1-frame
    partition (Dirichlet on the two frame edges, Neumann elsewhere)."""
    if p < 0 or q < 0:
        raise DomainError("square subdomain needs p, q >= 0")
    return algebra.integer_value(1, (2 * p + 1) ** 2 + (2 * q + 1) ** 2)


def rect_subdomain_value(k: int, p: int, q: int) -> AlgebraicValue:
    """Eigenvalue 2^(k-1) (p^2 + q^2) of the rectangular piece of the k-frame
    partition (k >= 2), with p >= 1 and q odd >= 1."""
    if k < 2:
        raise DomainError("rectangular subdomains exist for k >= 2")
    if p < 1 or q < 1 or q % 2 == 0:
        raise DomainError("rect subdomain needs p >= 1 and odd q >= 1")
    return algebra.integer_value(1, 2 ** (k - 1) * (p * p + q * q))
