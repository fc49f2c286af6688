"""Closed-form eigenfunctions: evaluation, symmetry, folding, frame vanishing.

Basis functions:

  triangle Neumann    cos(m x) cos(n y) + cos(m y) cos(n x)
  triangle Dirichlet  sin(m x) sin(n y) - sin(n x) sin(m y)
  box Neumann         prod_j cos(gamma^(j-1) m_j x_j)
  box Dirichlet       prod_j sin(gamma^(j-1) m_j x_j)

A combo is a finite real linear combination over one eigenspace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import algebra, folding, sampling
from .algebra import AlgebraicValue
from .domains import NEUMANN, TRIANGLE, Domain, check_point, check_qn, eigenvalue
from .errors import DomainError, FoldParityError
from .folding import KFrame
from .qlattice import QN
from .spectrum import odd_core


@dataclass(frozen=True)
class Combo:
    domain: Domain
    terms: tuple[tuple[float, QN], ...]
    value: AlgebraicValue


def combo(domain: Domain, terms) -> Combo:
    """Build a combination, verifying a shared eigenvalue and a nonzero term."""
    terms = tuple((float(c), check_qn(domain, m)) for c, m in terms)
    if not terms or all(c == 0.0 for c, _ in terms):
        raise DomainError("combo needs at least one nonzero coefficient")
    value = eigenvalue(domain, terms[0][1])
    for _, m in terms[1:]:
        if eigenvalue(domain, m).coeffs != value.coeffs:
            raise DomainError(f"terms do not share one eigenvalue: {terms}")
    return Combo(domain, terms, value)


def basis_fn(domain: Domain, m: QN) -> Combo:
    return combo(domain, [(1.0, tuple(m))])


def product_terms(f: Combo) -> list[tuple[float, tuple[float, ...]]]:
    """Expand to a plain sum of trig products: (coefficient, per-axis frequencies)."""
    out: list[tuple[float, tuple[float, ...]]] = []
    if f.domain.kind == TRIANGLE:
        for c, (m, n) in f.terms:
            if f.domain.bc == NEUMANN:
                out.append((c, (float(m), float(n))))
                out.append((c, (float(n), float(m))))
            else:
                out.append((c, (float(m), float(n))))
                out.append((-c, (float(n), float(m))))
    else:
        g = 2.0 ** (1.0 / f.domain.n)
        for c, m in f.terms:
            out.append((c, tuple(g**j * mj for j, mj in enumerate(m))))
    return out


def _trig(f: Combo):
    return np.cos if f.domain.bc == NEUMANN else np.sin


def eval_at(f: Combo, p: tuple[float, ...]) -> float:
    """Pointwise value; p must lie in the closed domain."""
    check_point(f.domain, p)
    trig = math.cos if f.domain.bc == NEUMANN else math.sin
    total = 0.0
    for c, freqs in product_terms(f):
        prod = c
        for w, x in zip(freqs, p):
            prod *= trig(w * x)
        total += prod
    return total


def eval_points(f: Combo, pts: np.ndarray) -> np.ndarray:
    """Vectorised evaluation at an (N, dim) array of points."""
    trig = _trig(f)
    total = np.zeros(len(pts))
    for c, freqs in product_terms(f):
        term = np.full(len(pts), c)
        for j, w in enumerate(freqs):
            term *= trig(w * pts[:, j])
        total += term
    return total


def eval_on_axes(f: Combo, axes: tuple[np.ndarray, ...]) -> np.ndarray:
    """Evaluate on the tensor grid axes[0] x axes[1] x ...; no domain mask."""
    trig = _trig(f)
    dims = len(axes)
    shape = tuple(len(a) for a in axes)
    total = np.zeros(shape)
    for c, freqs in product_terms(f):
        term = np.full(shape, c)
        for j, (w, ax) in enumerate(zip(freqs, axes)):
            vec = trig(w * ax)
            view = [1] * dims
            view[j] = len(ax)
            term = term * vec.reshape(view)
        total += term
    return total


def sup_estimate(f: Combo) -> float:
    """Upper bound on sup |f|: sum of |coefficient| * (basis sup norm)."""
    per_basis = 2.0 if f.domain.kind == TRIANGLE else 1.0
    return sum(abs(c) for c, _ in f.terms) * per_basis


def sample_interior(domain: Domain, count: int, seed: int = 0) -> np.ndarray:
    """count interior points, deterministic for a given seed."""
    u = sampling.kronecker(count, domain.coords, seed)
    if domain.kind == TRIANGLE:
        x = np.maximum(u[:, 0], u[:, 1]) * math.pi
        y = np.minimum(u[:, 0], u[:, 1]) * math.pi
        return np.stack([x, y], axis=1)
    lengths = np.array(domain.edge_lengths())
    return u * lengths


def symmetry_check(f: Combo, samples: int = 256, tol: float = 1e-9) -> str:
    """"even", "odd" or "neither" with respect to the reflection across L."""
    if samples < 1:
        raise DomainError("samples must be >= 1")
    pts = sample_interior(f.domain, samples, seed=11)
    refl = pts.copy()
    if f.domain.kind == TRIANGLE:
        refl[:, 0] = math.pi - pts[:, 1]
        refl[:, 1] = math.pi - pts[:, 0]
    else:
        refl[:, 0] = math.pi - pts[:, 0]
    a = eval_points(f, pts)
    b = eval_points(f, refl)
    scale = max(sup_estimate(f), 1e-300)
    if np.all(np.abs(a - b) <= tol * scale):
        return "even"
    if np.all(np.abs(a + b) <= tol * scale):
        return "odd"
    return "neither"


def unfold_fn(f: Combo) -> Combo:
    """Unfolded combo: quantum numbers mapped, coefficients carried over."""
    if f.domain.bc != NEUMANN:
        raise DomainError("function unfolding is defined for the Neumann problem")
    return combo(f.domain, [(c, folding.unfold_qn(f.domain, m)) for c, m in f.terms])


def fold_fn(f: Combo) -> Combo:
    """Folded combo; requires an even eigenvalue."""
    if f.domain.bc != NEUMANN:
        raise DomainError("function folding is defined for the Neumann problem")
    if algebra.parity(f.value) == "odd":
        raise FoldParityError(f"eigenvalue {f.value.text()} is odd; cannot fold")
    return combo(f.domain, [(c, folding.fold_qn(f.domain, m)) for c, m in f.terms])


def frame_points(frame: KFrame, count: int, seed: int = 0) -> np.ndarray:
    """At least count points spread over all facets of the frame."""
    facets = frame.facets
    per = max(1, -(-count // len(facets)))
    pts = []
    if frame.domain.kind == TRIANGLE:
        for i, seg in enumerate(facets):
            t = sampling.kronecker(per, 1, seed + i)[:, 0]
            (ax, ay), (bx, by) = seg.floats()
            pts.append(
                np.stack([ax + t * (bx - ax), ay + t * (by - ay)], axis=1)
            )
    else:
        lengths = frame.domain.edge_lengths()
        n = frame.domain.n
        for i, slab in enumerate(facets):
            u = sampling.kronecker(per, n - 1, seed + i)
            block = np.empty((per, n))
            col = 0
            for j in range(n):
                if j == slab.axis:
                    block[:, j] = float(slab.frac) * lengths[j]
                else:
                    block[:, j] = u[:, col] * lengths[j]
                    col += 1
            pts.append(block)
    return np.concatenate(pts, axis=0)


def frame_vanishing(f: Combo, frame: KFrame, samples: int = 10_000) -> float:
    """Max |f| over sampled frame points; the eigenvalue's unfolding depth
    must equal the frame index."""
    if f.domain.kind != frame.domain.kind or f.domain.n != frame.domain.n:
        raise DomainError("frame and combo domains differ")
    if odd_core(f.value).k != frame.k:
        raise DomainError(
            f"eigenvalue {f.value.text()} has unfolding depth "
            f"{odd_core(f.value).k}, frame is k={frame.k}"
        )
    pts = frame_points(frame, samples, seed=5)
    return float(np.max(np.abs(eval_points(f, pts))))
