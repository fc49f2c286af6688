"""Nodal-domain counting and nodal-deficiency bounds.

The closed-form counts cover box basis functions and the two triangle shapes
with straight nodal lines; everything else goes through the grid oracle,
which classifies strict signs on an irrationally offset grid, merges
same-sign orthogonal neighbors, and certifies the count by agreement under
one resolution doubling.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from . import algebra, folding, qlattice
from .algebra import AlgebraicValue
from .domains import DIRICHLET, NEUMANN, TRIANGLE, Domain, check_qn
from .eigenfn import Combo, basis_fn, eval_on_axes, product_terms
from .errors import DomainError, GridInstabilityError
from .qlattice import QN
from .spectrum import SpectrumIndex, odd_core

_GRID_OFFS = (0.4142135623730951, 0.7320508075688772, 0.23606797749978969)


@dataclass(frozen=True)
class NodalCount:
    count: int
    method: str  # "formula" or "grid"
    resolution: int | None = None
    stable: bool = True


def count_formula(domain: Domain, m: QN) -> NodalCount:
    """Closed-form nodal count; raises DomainError where none is available."""
    m = check_qn(domain, m)
    if domain.bc != NEUMANN:
        raise DomainError("closed-form nodal counts cover the Neumann basis only")
    if domain.kind == TRIANGLE:
        a, b = m
        if a == b:
            nu = (a + 1) * (a + 2) // 2  # sum of i+1, i = 0..a
        elif b == 0 and a % 2 == 0:
            half = a // 2
            nu = (half + 1) ** 2  # sum of 2i+1, i = 0..a/2
        else:
            raise DomainError(
                f"no closed-form nodal count for triangle {m}; use count_grid"
            )
        return NodalCount(nu, "formula")
    nu = 1
    for mj in m:
        nu *= mj + 1
    return NodalCount(nu, "formula")


def _max_halfperiods(f: Combo) -> int:
    """Max number of sign half-periods along any axis, rescaled to axis 0."""
    worst = 1.0
    lengths = f.domain.edge_lengths()
    for _, freqs in product_terms(f):
        for w, lj in zip(freqs, lengths):
            # half-period count along the axis is w * l_j / pi; requiring the
            # same physical cell size everywhere rescales by l_0 / l_j
            worst = max(worst, w * lengths[0] / math.pi)
    return int(math.ceil(worst))


def _antisymmetric_wrt_cut(f: Combo) -> bool:
    """True when every eigenfunction of f's eigenvalue is odd across the cut L.

    Neumann functions are odd exactly for odd eigenvalues, Dirichlet functions
    exactly for even ones (the parity correspondence flips).
    """
    p = algebra.parity(f.value)
    return p == ("odd" if f.domain.bc == NEUMANN else "even")


_EDGE_SAMPLES = 8


def _sign_components(sign: np.ndarray, ok_x: np.ndarray, ok_y: np.ndarray) -> int:
    """Components of {sign == +1} and {sign == -1} on the cell grid, joining
    orthogonal neighbors only where the connecting edge is marked clean.

    Encoded as a doubled-resolution image whose odd pixels carry the edge
    states, so a single 4-connectivity labelling realises the constrained
    union.
    """
    nx, ny = sign.shape
    total = 0
    for s in (1, -1):
        img = np.zeros((2 * nx - 1, 2 * ny - 1), dtype=bool)
        img[::2, ::2] = sign == s
        img[1::2, ::2] = (sign[:-1, :] == s) & (sign[1:, :] == s) & ok_x
        img[::2, 1::2] = (sign[:, :-1] == s) & (sign[:, 1:] == s) & ok_y
        _, cnt = ndimage.label(img)
        total += cnt
    return total


def _triangle_grid_count(f: Combo, cells0: int, halve: bool) -> int:
    """Triangle count with edge-verified connectivity.

    Two same-sign neighbors are joined only if the function holds that
    strict sign at interior samples of the segment between their centers;
    a nodal crossing between the centers always forces a sign dip there,
    so diagonal nodal lines cannot silently bridge distinct domains.
    """
    n = max(8, cells0)
    h = math.pi / n
    ax = (np.arange(n) + _GRID_OFFS[0]) * h
    ay = (np.arange(n) + _GRID_OFFS[1]) * h
    vals = eval_on_axes(f, (ax, ay))
    inside = ay[None, :] < ax[:, None]
    if halve:
        inside &= ax[:, None] + ay[None, :] < math.pi
    sign = np.where(inside, np.sign(vals), 0.0)

    ok_x = np.ones((n - 1, n), dtype=bool)
    ok_y = np.ones((n, n - 1), dtype=bool)
    for s in range(1, _EDGE_SAMPLES):
        t = s * h / _EDGE_SAMPLES
        vx = eval_on_axes(f, (ax[:-1] + t, ay))
        ok_x &= np.sign(vx) == sign[:-1, :]
        vy = eval_on_axes(f, (ax, ay[:-1] + t))
        ok_y &= np.sign(vy) == sign[:, :-1]

    count = _sign_components(sign, ok_x, ok_y)
    return 2 * count if halve else count


def _grid_count_once(f: Combo, cells0: int, halve: bool) -> int:
    dom = f.domain
    if dom.kind == TRIANGLE:
        return _triangle_grid_count(f, cells0, halve)
    # box basis functions: nodal sets are axis-perpendicular hyperplanes, so
    # plain strict-sign orthogonal adjacency is already exact
    lengths = dom.edge_lengths()
    axes = []
    for j, lj in enumerate(lengths):
        nj = max(8, int(math.ceil(cells0 * lj / lengths[0])))
        h = lj / nj
        axes.append((np.arange(nj) + _GRID_OFFS[j % 3]) * h)
    vals = eval_on_axes(f, tuple(axes))
    pos = vals > 0.0
    neg = vals < 0.0
    _, npos = ndimage.label(pos)
    _, nneg = ndimage.label(neg)
    return npos + nneg


def count_grid(
    f: Combo, resolution: int | None = None, use_antisymmetry: bool = True
) -> NodalCount:
    """Grid nodal count with a stability certificate.

    resolution is the cell count along the first axis; the default gives at
    least 8 cells per sign half-period of the fastest term.  For combos that
    are antisymmetric across the cut L the count is taken on the open half
    domain and doubled (they vanish on L, so nodal domains come in mirror
    pairs); this keeps the diagonal cut of the triangle off the sampling
    grid.  Pass use_antisymmetry=False to force a full-domain count.
    """
    if resolution is None:
        resolution = max(16, 8 * _max_halfperiods(f))
    if resolution < 16:
        raise DomainError("resolution must be >= 16 cells along the first axis")
    halve = (
        use_antisymmetry
        and f.domain.kind == TRIANGLE
        and _antisymmetric_wrt_cut(f)
    )
    cells = resolution
    for _ in range(3):
        c1 = _grid_count_once(f, cells, halve)
        c2 = _grid_count_once(f, cells * 2, halve)
        if c1 == c2:
            return NodalCount(c1, "grid", resolution=cells, stable=True)
        cells *= 2
    raise GridInstabilityError(
        f"nodal count unstable after 3 doublings (last {c1} vs {c2})"
    )


def count_auto(domain: Domain, m: QN, resolution: int | None = None) -> NodalCount:
    """Formula when available, grid otherwise."""
    try:
        if resolution is None:
            return count_formula(domain, m)
    except DomainError:
        pass
    return count_grid(basis_fn(domain, m), resolution)


# ---------------------------------------------------------------------------
# nodal deficiency


@dataclass(frozen=True)
class DeficiencyReport:
    value: AlgebraicValue
    core: AlgebraicValue
    k: int
    core_multiplicity: int
    partition_size: int  # M(k)
    boundary_even: int  # |right-boundary of Q(core) intersected with E|
    bound_unfolding: int  # (d(core) - 1) * (M(k) - 1)
    bound_boundary: int | None  # |boundary ∩ E| - 1, applicable at k = 0 only
    bound: int

    def as_dict(self) -> dict:
        return {
            "value": self.value.text(),
            "float": float(self.value),
            "core": self.core.text(),
            "k": self.k,
            "core_multiplicity": self.core_multiplicity,
            "partition_size": self.partition_size,
            "boundary_even": self.boundary_even,
            "bound_unfolding": self.bound_unfolding,
            "bound_boundary": self.bound_boundary,
            "bound": self.bound,
        }


def deficiency_bound(si: SpectrumIndex, value: AlgebraicValue) -> DeficiencyReport:
    """Lower bounds for the nodal deficiency of a Neumann eigenvalue."""
    dom = si.domain
    if dom.bc != NEUMANN:
        raise DomainError("deficiency bounds are for the Neumann problem")
    if value.is_zero():
        raise DomainError("the ground state has no deficiency bound")
    level = si.level_of(value)
    if level is None:
        raise DomainError(f"{value.text()} is not in the spectrum below the cutoff")
    oc = odd_core(value)
    d = si.multiplicity_of(oc.core)
    mk = folding.partition_count(dom, oc.k)
    region = qlattice.enumerate_below(dom, oc.core)
    _, even = qlattice.parity_split(
        qlattice.LatticeRegion(dom, oc.core, tuple(qlattice.right_boundary(region)))
    )
    boundary_even = len(even)
    b1 = (d - 1) * (mk - 1)
    b2 = boundary_even - 1 if oc.k == 0 else None
    bound = max(b1, b2 if b2 is not None else 0, 0)
    return DeficiencyReport(
        value=value,
        core=oc.core,
        k=oc.k,
        core_multiplicity=d,
        partition_size=mk,
        boundary_even=boundary_even,
        bound_unfolding=b1,
        bound_boundary=b2,
        bound=bound,
    )


@dataclass(frozen=True)
class DirichletDeficiencyCheck:
    value: AlgebraicValue
    folded: AlgebraicValue
    lhs: int  # delta(value) = N(value) - nu(phi)
    folded_deficiency: int
    boundary_odd: int
    rhs: int  # 2 delta(folded) + |boundary ∩ O| - 1

    def as_dict(self) -> dict:
        return {
            "value": self.value.text(),
            "folded": self.folded.text(),
            "lhs": self.lhs,
            "folded_deficiency": self.folded_deficiency,
            "boundary_odd": self.boundary_odd,
            "rhs": self.rhs,
            "holds": self.lhs == self.rhs,
        }


def _simple_deficiency(si: SpectrumIndex, value: AlgebraicValue) -> int:
    level = si.level_of(value)
    if level is None or level.multiplicity != 1:
        raise DomainError(
            f"{value.text()} must be a simple eigenvalue below the cutoff"
        )
    nu = count_grid(basis_fn(si.domain, level.members[0])).count
    return si.position_of(value) - nu


def dirichlet_deficiency_check(
    si: SpectrumIndex, value: AlgebraicValue
) -> DirichletDeficiencyCheck:
    """Both sides of the deficiency identity for an even Dirichlet eigenvalue.

    Requires the eigenvalue and its folding to be simple, so that the
    deficiency is computable from a single eigenfunction's grid count.
    """
    if si.domain.bc != DIRICHLET:
        raise DomainError("this identity concerns the Dirichlet problem")
    if algebra.parity(value) != "even":
        raise DomainError(f"{value.text()} is odd; the identity needs an even value")
    folded = algebra.scale_gamma2(value, -1)
    lhs = _simple_deficiency(si, value)
    folded_def = _simple_deficiency(si, folded)
    region = qlattice.enumerate_below(si.domain, value)
    odd, _ = qlattice.parity_split(
        qlattice.LatticeRegion(
            si.domain, value, tuple(qlattice.right_boundary(region))
        )
    )
    rhs = 2 * folded_def + len(odd) - 1
    return DirichletDeficiencyCheck(
        value=value,
        folded=folded,
        lhs=lhs,
        folded_deficiency=folded_def,
        boundary_odd=len(odd),
        rhs=rhs,
    )
