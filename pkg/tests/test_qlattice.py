from __future__ import annotations

import itertools
import math

from foldspec import qlattice
from foldspec.domains import box, eigenvalue, qn_parity, triangle


def brute_triangle_region(cutoff: float, dirichlet: bool = False) -> set:
    """Independent enumeration oracle: scan a safely padded square."""
    bound = int(math.isqrt(int(cutoff)) + 2)
    out = set()
    for m in range(bound + 1):
        for n in range(bound + 1):
            if dirichlet and not (m > n >= 1):
                continue
            if not dirichlet and not (m >= n >= 0):
                continue
            if m * m + n * n < cutoff:
                out.add((m, n))
    return out


def brute_box2_region(cutoff: float, dirichlet: bool = False) -> set:
    lo = 1 if dirichlet else 0
    bound = int(math.isqrt(int(cutoff)) + 2)
    return {
        (a, b)
        for a in range(lo, bound + 1)
        for b in range(lo, bound + 1)
        if a * a + 2 * b * b < cutoff
    }


def test_enumerate_triangle_examples():
    r = qlattice.enumerate_below(triangle(), 9)
    assert set(r.points) == {(0, 0), (1, 0), (1, 1), (2, 0), (2, 1), (2, 2)}
    assert len(r) == 6
    assert len(qlattice.enumerate_below(triangle(), 0)) == 0


def test_enumerate_box2_example():
    r = qlattice.enumerate_below(box(2), 7)
    assert set(r.points) == {(0, 0), (1, 0), (0, 1), (1, 1), (2, 0), (2, 1)}


def test_enumerate_matches_brute_force():
    for cutoff in (1, 2, 17, 50.5, 301):
        got = set(qlattice.enumerate_below(triangle(), cutoff).points)
        assert got == brute_triangle_region(cutoff)
        got = set(qlattice.enumerate_below(box(2), cutoff).points)
        assert got == brute_box2_region(cutoff)
    got = set(qlattice.enumerate_below(triangle("dirichlet"), 100).points)
    assert got == brute_triangle_region(100, dirichlet=True)
    got = set(qlattice.enumerate_below(box(2, "dirichlet"), 100).points)
    assert got == brute_box2_region(100, dirichlet=True)


def test_enumerate_ordering_is_value_then_lex():
    r = qlattice.enumerate_below(triangle(), 60)
    keyed = [(float(eigenvalue(triangle(), m)), m) for m in r.points]
    assert keyed == sorted(keyed)


def test_enumerate_monotone_in_cutoff():
    prev: set = set()
    for cutoff in (5, 10, 20, 40, 80):
        cur = set(qlattice.enumerate_below(triangle(), cutoff).points)
        assert prev <= cur
        prev = cur


def test_parity_split_example():
    r = qlattice.enumerate_below(triangle(), 9)
    odd, even = qlattice.parity_split(r)
    assert set(odd) == {(1, 0), (2, 1)}
    assert set(even) == {(0, 0), (1, 1), (2, 0), (2, 2)}
    assert len(odd) + len(even) == len(r)


def test_parity_rules():
    assert qn_parity(triangle(), (1, 1)) == "even"
    assert qn_parity(box(3), (1, 0, 2)) == "odd"
    assert qn_parity(box(3), (2, 7, 5)) == "even"


def test_right_boundary_examples():
    assert qlattice.right_boundary(qlattice.enumerate_below(triangle(), 5)) == [
        (1, 1),
        (2, 0),
    ]
    assert qlattice.right_boundary(qlattice.enumerate_below(triangle(), 2)) == [(1, 0)]
    r9 = qlattice.enumerate_below(triangle(), 9)
    boundary_even = [
        m for m in qlattice.right_boundary(r9) if qn_parity(triangle(), m) == "even"
    ]
    assert boundary_even == [(2, 0), (2, 2)]


def _bijection_histograms(dom, top: int, boundary_parity: str):
    """Per-cutoff counts |O|, |E| and |right-boundary ∩ parity| for every
    integer cutoff up to top, via interval histograms (a point sits on the
    boundary of Q(lam) exactly for lam in (value, right-neighbor value])."""
    region = qlattice.enumerate_below(dom, top + 1)
    odd = [0] * (top + 2)
    even = [0] * (top + 2)
    boundary = [0] * (top + 2)
    for m in region.points:
        v = m[0] ** 2 + m[1] ** 2
        p = qn_parity(dom, m)
        if v + 1 <= top:
            (odd if p == "odd" else even)[v + 1] += 1
            if p == boundary_parity:
                boundary[v + 1] += 1
                v_right = (m[0] + 1) ** 2 + m[1] ** 2
                if v_right + 1 <= top:
                    boundary[v_right + 1] -= 1
    for arr in (odd, even, boundary):
        for i in range(1, top + 1):
            arr[i] += arr[i - 1]
    return odd, even, boundary


def test_neumann_boundary_bijection():
    # |O(lam)| = |E(lam)| - |boundary(lam) ∩ E| for every lam <= 2000
    odd, even, boundary_even = _bijection_histograms(triangle(), 2000, "even")
    for lam in range(2001):
        assert odd[lam] == even[lam] - boundary_even[lam], lam


def test_dirichlet_boundary_bijection():
    # |O(lam)| = |E(lam)| + |boundary(lam) ∩ O| for every lam <= 2000
    odd, even, boundary_odd = _bijection_histograms(
        triangle("dirichlet"), 2000, "odd"
    )
    for lam in range(2001):
        assert odd[lam] == even[lam] + boundary_odd[lam], lam


def test_reference_set_diagonal():
    assert qlattice.reference_set_diagonal(1) == {(0, 0), (1, 0), (1, 1)}
    assert len(qlattice.reference_set_diagonal(3)) == 10
    assert len(qlattice.reference_set_diagonal(5)) == 21


def test_reference_set_axis():
    assert len(qlattice.reference_set_axis(3)) == 16
    assert qlattice.reference_set_axis(1) == {(1, 1), (0, 0), (1, 0), (2, 0)}
    # sizes are sums of odd numbers
    for m in range(7):
        assert len(qlattice.reference_set_axis(m)) == (m + 1) ** 2


def test_reference_set_box():
    assert len(qlattice.reference_set_box((2, 1))) == 6
    assert qlattice.reference_set_box((0, 0, 0)) == {(0, 0, 0)}
    assert len(qlattice.reference_set_box((4, 3))) == 20


def test_reference_sets_sit_inside_regions():
    # diagonal set for (m, m) fits below 2m^2 (plus the point itself), and for
    # m >= 3 the region holds strictly more points
    dom = triangle()
    for m in range(3, 9):
        value = 2 * m * m
        region = set(qlattice.enumerate_below(dom, value).points)
        ref = qlattice.reference_set_diagonal(m)
        assert ref <= region | {(m, m)}
        assert (m + 1, 0) in region - ref
        axis_val = 4 * m * m
        axis_region = set(qlattice.enumerate_below(dom, axis_val).points)
        axis_ref = qlattice.reference_set_axis(m)
        assert axis_ref <= axis_region | {(2 * m, 0)}
        assert (2 * m - 1, 2) in axis_region - axis_ref


def test_reference_set_box_inside_region():
    dom = box(2)
    for m in itertools.product(range(1, 5), repeat=2):
        value = eigenvalue(dom, m)
        region = set(qlattice.enumerate_below(dom, value).points) | {m}
        assert qlattice.reference_set_box(m) <= region
