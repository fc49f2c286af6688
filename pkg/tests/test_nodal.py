from __future__ import annotations

import pytest

from foldspec import algebra, eigenfn, nodal, spectrum
from foldspec.domains import box, triangle
from foldspec.errors import DomainError, GridInstabilityError


def test_formula_examples():
    assert nodal.count_formula(triangle(), (3, 3)).count == 10
    assert nodal.count_formula(triangle(), (6, 0)).count == 16
    assert nodal.count_formula(box(2), (2, 1)).count == 6
    assert nodal.count_formula(box(3), (0, 0, 0)).count == 1


def test_formula_unsupported_shapes():
    with pytest.raises(DomainError):
        nodal.count_formula(triangle(), (3, 1))
    with pytest.raises(DomainError):
        nodal.count_formula(triangle(), (5, 0))  # odd axis point
    with pytest.raises(DomainError):
        nodal.count_formula(triangle("dirichlet"), (2, 1))


def test_grid_examples():
    assert nodal.count_grid(eigenfn.basis_fn(triangle(), (1, 0))).count == 2
    assert nodal.count_grid(eigenfn.basis_fn(triangle(), (3, 3))).count == 10
    assert nodal.count_grid(eigenfn.basis_fn(box(2), (1, 1))).count == 4
    assert nodal.count_grid(eigenfn.basis_fn(box(2), (2, 1))).count == 6


def test_grid_marks_stability():
    c = nodal.count_grid(eigenfn.basis_fn(triangle(), (4, 2)))
    assert c.method == "grid" and c.stable


def test_grid_resolution_floor():
    with pytest.raises(DomainError):
        nodal.count_grid(eigenfn.basis_fn(triangle(), (1, 0)), resolution=8)


def test_grid_instability_is_reported():
    # this eigenfunction has structure finer than the escalation budget at
    # default resolution; the oracle must refuse rather than guess
    f = eigenfn.basis_fn(triangle(), (16, 4))
    with pytest.raises(GridInstabilityError):
        nodal.count_grid(f, resolution=64)


def test_grid_dirichlet_box():
    # Dirichlet box basis: m_j sign runs per axis
    assert nodal.count_grid(eigenfn.basis_fn(box(2, "dirichlet"), (2, 1))).count == 2
    assert nodal.count_grid(eigenfn.basis_fn(box(2, "dirichlet"), (3, 2))).count == 6


def test_antisymmetric_counts_double_the_half_domain():
    # odd Neumann eigenvalues: the count is even, and at coarse frequencies
    # (where the full-domain grid resolves the cut reliably) it equals the
    # independently computed full-domain count
    dom = triangle()
    si = spectrum.build_index(dom, 200)
    for lv in si.levels:
        if lv.multiplicity != 1 or algebra.parity(lv.value) != "odd":
            continue
        f = eigenfn.basis_fn(dom, lv.members[0])
        halved = nodal.count_grid(f).count
        assert halved % 2 == 0, lv.members[0]
        if float(lv.value) <= 100:
            full = nodal.count_grid(f, use_antisymmetry=False).count
            assert halved == full, lv.members[0]


def test_odd_counts_obey_the_half_domain_courant_bound():
    # nu(phi) <= 2 (|O(lambda)| + 1) for odd eigenvalues: the Courant bound
    # of the mixed problem on the half triangle
    dom = triangle()
    si = spectrum.build_index(dom, 200)
    dnn = spectrum.build_dnn_index(200)
    for lv in si.levels:
        if lv.multiplicity != 1 or algebra.parity(lv.value) != "odd":
            continue
        nu = nodal.count_grid(eigenfn.basis_fn(dom, lv.members[0])).count
        assert nu <= 2 * (dnn.counting(lv.value).below + 1), lv.members[0]


def test_courant_bound_for_basis_functions():
    # nu <= N for every basis eigenfunction, both boundary conditions; a few
    # high eigenvalues have nodal structure finer than the grid escalation
    # budget, and the oracle reports those rather than certifying a guess
    unresolved = []
    for dom in (triangle(), triangle("dirichlet"), box(2), box(2, "dirichlet")):
        si = spectrum.build_index(dom, 300)
        for lv in si.levels:
            n_pos = si.position_of(lv.value)
            for m in lv.members:
                try:
                    nu = nodal.count_grid(eigenfn.basis_fn(dom, m)).count
                except GridInstabilityError:
                    unresolved.append((dom.label(), m, float(lv.value)))
                    continue
                assert nu <= n_pos, (dom.label(), m, nu, n_pos)
    assert len(unresolved) <= 6, unresolved
    assert all(lam > 100 for _, _, lam in unresolved), unresolved


def test_courant_bound_box3():
    dom = box(3)
    si = spectrum.build_index(dom, 120)
    for lv in si.levels:
        n_pos = si.position_of(lv.value)
        for m in lv.members:
            assert nodal.count_grid(eigenfn.basis_fn(dom, m)).count <= n_pos


def test_deficiency_report_for_50():
    si = spectrum.build_index(triangle(), 60)
    rep = nodal.deficiency_bound(si, algebra.integer_value(1, 50))
    assert rep.core.coeffs == (25,) and rep.k == 1
    assert rep.core_multiplicity == 2
    assert rep.partition_size == 3
    assert rep.bound_unfolding == 2
    assert rep.bound >= 1


def test_deficiency_report_for_ground_chain():
    si = spectrum.build_index(triangle(), 60)
    rep = nodal.deficiency_bound(si, algebra.integer_value(1, 1))
    assert rep.core_multiplicity == 1 and rep.k == 0
    assert rep.bound == 0


def test_deficiency_box_example():
    si = spectrum.build_index(box(2), 20)
    rep = nodal.deficiency_bound(si, algebra.integer_value(2, 9))
    assert rep.core_multiplicity == 2 and rep.k == 0
    assert rep.bound_unfolding == 1
    assert rep.bound >= 1


def test_deficiency_rejects_bad_inputs():
    si = spectrum.build_index(triangle(), 60)
    with pytest.raises(DomainError):
        nodal.deficiency_bound(si, algebra.integer_value(1, 0))
    with pytest.raises(DomainError):
        nodal.deficiency_bound(si, algebra.integer_value(1, 3))


def test_dirichlet_identity_hand_cases():
    si = spectrum.build_index(box(2, "dirichlet"), 40)
    chk = nodal.dirichlet_deficiency_check(si, algebra.integer_value(2, 6))
    assert (chk.lhs, chk.rhs) == (0, 0)
    assert chk.boundary_odd == 1
    chk = nodal.dirichlet_deficiency_check(si, algebra.integer_value(2, 12))
    assert (chk.lhs, chk.rhs) == (1, 1)


def test_dirichlet_identity_preconditions():
    si = spectrum.build_index(box(2, "dirichlet"), 40)
    with pytest.raises(DomainError):
        nodal.dirichlet_deficiency_check(si, algebra.integer_value(2, 3))  # odd
    sin = spectrum.build_index(box(2), 40)
    with pytest.raises(DomainError):
        nodal.dirichlet_deficiency_check(sin, algebra.integer_value(2, 6))
