"""Courant-sharpness classification of every eigenvalue below a cutoff.

Each level receives exactly one verdict.  Non-sharp verdicts carry a
machine-checked witness (boundary lattice points, a degenerate subdomain
pair, a strict reference-set inclusion, a smaller lattice point outside the
nodal box, or multiplicity > 1); witness verification failures raise
ConsistencyError rather than classifying silently.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from . import algebra, folding, nodal, qlattice
from .algebra import LESS, AlgebraicValue
from .domains import NEUMANN, TRIANGLE, Domain, eigenvalue, qn_parity
from .errors import ConsistencyError, DomainError
from .qlattice import QN, Cutoff
from .spectrum import Level, SpectrumIndex, build_index, odd_core

GROUND_STATE = "ground_state"
ORTHOGONALITY_SECOND = "orthogonality_second"
EXPLICIT_COUNT = "explicit_count"
ODD_BOUNDARY = "odd_boundary"
SUBDOMAIN_MULTIPLICITY = "subdomain_multiplicity"
MULTIPLE_EIGENVALUE = "multiple_eigenvalue"
REFERENCE_SET_STRICT = "reference_set_strict"
BOX_CASE_ANALYSIS = "box_case_analysis"

SHARP_REASONS = {GROUND_STATE, ORTHOGONALITY_SECOND, EXPLICIT_COUNT}


@dataclass(frozen=True)
class Verdict:
    position: int  # first spectral index of the eigenvalue
    value: AlgebraicValue
    multiplicity: int
    parity: str
    core: AlgebraicValue
    core_k: int
    sharp: bool
    reason: str
    nu: int | None  # exact nodal count when determined
    witness: dict = field(default_factory=dict)

    def as_dict(self) -> dict:
        return {
            "position": self.position,
            "value": self.value.text(),
            "float": float(self.value),
            "multiplicity": self.multiplicity,
            "parity": self.parity,
            "core": self.core.text(),
            "k": self.core_k,
            "sharp": self.sharp,
            "reason": self.reason,
            "nu": self.nu,
            "witness": self.witness,
        }


def classify(domain: Domain, cutoff: Cutoff) -> list[Verdict]:
    if domain.bc != NEUMANN:
        raise DomainError("Courant-sharpness classification covers the Neumann problem")
    si = build_index(domain, cutoff)
    if domain.kind == TRIANGLE:
        return [_classify_triangle_level(si, lv) for lv in si.levels]
    return [_classify_box_level(si, lv) for lv in si.levels]


def classify_triangle(cutoff: Cutoff) -> list[Verdict]:
    from .domains import triangle

    return classify(triangle(), cutoff)


def classify_box(n: int, cutoff: Cutoff) -> list[Verdict]:
    from .domains import box

    return classify(box(n), cutoff)


def _base(si: SpectrumIndex, lv: Level) -> dict:
    value = lv.value
    if value.is_zero():
        core, k = value, 0
    else:
        oc = odd_core(value)
        core, k = oc.core, oc.k
    return {
        "position": si.position_of(value),
        "value": value,
        "multiplicity": lv.multiplicity,
        "parity": algebra.parity(value),
        "core": core,
        "core_k": k,
    }


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ConsistencyError(message)


# ---------------------------------------------------------------------------
# triangle


def _boundary_witnesses(si: SpectrumIndex, value: AlgebraicValue, m: QN) -> list[QN]:
    """Two distinct even lattice points on the right boundary of Q(value)."""
    a, b = m
    w1 = (a - 1, b)
    w2 = (a, b - 1) if b >= 1 else (a - 1, 2)
    dom = si.domain
    for w in (w1, w2):
        _require(
            qn_parity(dom, w) == "even"
            and algebra.compare(eigenvalue(dom, w), value) == LESS
            and algebra.compare(eigenvalue(dom, (w[0] + 1, w[1])), value) != LESS,
            f"boundary witness {w} failed for {value.text()}",
        )
    _require(w1 != w2, "boundary witnesses coincide")
    return [w1, w2]


def _classify_triangle_level(si: SpectrumIndex, lv: Level) -> Verdict:
    base = _base(si, lv)
    value, n_pos, d = lv.value, base["position"], lv.multiplicity

    if value.is_zero():
        return Verdict(**base, sharp=True, reason=GROUND_STATE, nu=1)

    if base["parity"] == "odd":
        if lv.members == ((1, 0),):
            nu = nodal.count_grid(_combo(si.domain, (1, 0))).count
            _require(nu == n_pos, f"lambda_2 grid count {nu} != N {n_pos}")
            return Verdict(**base, sharp=True, reason=ORTHOGONALITY_SECOND, nu=nu)
        witnesses = _boundary_witnesses(si, value, lv.members[0])
        return Verdict(
            **base,
            sharp=False,
            reason=ODD_BOUNDARY,
            nu=None,
            witness={"boundary_even_points": witnesses},
        )

    # even, nonzero: value = 2^k * core with k >= 1
    if d > 1:
        return Verdict(
            **base,
            sharp=False,
            reason=MULTIPLE_EIGENVALUE,
            nu=None,
            witness={"members": list(lv.members)},
        )

    member = lv.members[0]
    k = base["core_k"]
    core_qn = member
    for _ in range(k):
        core_qn = folding.fold_qn(si.domain, core_qn)
    cm, cn = core_qn

    if cn != 0:
        pairs = _subdomain_pairs(cm, cn, k)
        for p, q in pairs:
            sub_val = (
                folding.square_subdomain_value(p, q)
                if k == 1
                else folding.rect_subdomain_value(k, p, q)
            )
            _require(
                sub_val.coeffs == value.coeffs,
                f"subdomain value {sub_val.text()} != {value.text()}",
            )
        _require(pairs[0] != pairs[1], "subdomain witness pair degenerate")
        return Verdict(
            **base,
            sharp=False,
            reason=SUBDOMAIN_MULTIPLICITY,
            nu=None,
            witness={
                "subdomain": "square" if k == 1 else f"rect_{k}",
                "pairs": pairs,
            },
        )

    # core of shape (m, 0): the unfolding chain of an odd axis point
    if cm == 1 and k <= 3:
        nu = nodal.count_formula(si.domain, member).count
        _require(nu == n_pos, f"explicit count {nu} != N {n_pos}")
        return Verdict(**base, sharp=True, reason=EXPLICIT_COUNT, nu=nu)

    return _reference_set_verdict(si, lv, base, member)


def _combo(domain: Domain, m: QN):
    from .eigenfn import basis_fn

    return basis_fn(domain, m)


def _subdomain_pairs(cm: int, cn: int, k: int) -> list[tuple[int, int]]:
    if k == 1:
        p1, q1 = (cm + cn - 1) // 2, (cm - cn - 1) // 2
    else:
        p1, q1 = cm + cn, cm - cn
    return [(p1, q1), (q1, p1)]


def _reference_set_verdict(
    si: SpectrumIndex, lv: Level, base: dict, member: QN
) -> Verdict:
    value, n_pos = lv.value, base["position"]
    a, b = member
    if a == b:
        ref = qlattice.reference_set_diagonal(a)
        extra = (a + 1, 0)
    else:
        _require(b == 0 and a % 2 == 0, f"unexpected reference shape {member}")
        ref = qlattice.reference_set_axis(a // 2)
        extra = (a - 1, 2)
    nu = nodal.count_formula(si.domain, member).count
    _require(nu == len(ref), f"reference set size {len(ref)} != nu {nu}")
    for p in ref:
        cmp = algebra.compare(eigenvalue(si.domain, p), value)
        _require(
            cmp == LESS or p == member,
            f"reference point {p} is not below {value.text()}",
        )
    _require(extra not in ref, f"strictness witness {extra} inside reference set")
    _require(
        algebra.compare(eigenvalue(si.domain, extra), value) == LESS,
        f"strictness witness {extra} is not below {value.text()}",
    )
    _require(nu < n_pos, f"nu {nu} not below N {n_pos}")
    return Verdict(
        **base,
        sharp=False,
        reason=REFERENCE_SET_STRICT,
        nu=nu,
        witness={"reference_size": len(ref), "extra_point": extra},
    )


# ---------------------------------------------------------------------------
# boxes


def _box_smaller_point(m: QN, n: int) -> QN | None:
    """A lattice point outside the nodal box with a smaller eigenvalue, or
    None for the finitely many Courant-sharp exceptions."""

    def unit(pos: int, entry: int) -> QN:
        out = [0] * n
        out[pos] = entry
        return tuple(out)

    for j in range(n - 1):
        if m[j] < m[j + 1]:
            return unit(j, m[j] + 1)

    # non-increasing entries; first index holding the minimum
    low = min(m)
    idx = m.index(low)
    if idx == 0:  # constant vector
        if low == 0:
            return None  # ground state
        if n == 2 and low == 1:
            return None  # (1, 1), the fourth rectangle eigenvalue
        return unit(0, m[0] + 1)
    if idx >= 2:
        return unit(idx, m[idx] + 1)

    # idx == 1: m = (m1, m2, ..., m2) with m1 > m2
    m1, m2 = m[0], m[1]
    if n >= 3:
        if m2 >= 1:
            return unit(1, m2 + 1)
        if m1 >= 2:
            return unit(1, 1)
        return None  # (1, 0, ..., 0), the second eigenvalue
    if m2 >= 3:
        return unit(1, m2 + 1)
    if m2 == 2:
        return (0, 3) if m1 > 3 else (4, 0)
    if m2 == 1:
        return (0, 2) if m1 >= 3 else None  # (2, 1) is the sixth eigenvalue
    return unit(1, 1) if m1 >= 2 else None  # (1, 0) is the second eigenvalue


def _classify_box_level(si: SpectrumIndex, lv: Level) -> Verdict:
    base = _base(si, lv)
    value, n_pos, d = lv.value, base["position"], lv.multiplicity
    n = si.domain.n

    if value.is_zero():
        return Verdict(**base, sharp=True, reason=GROUND_STATE, nu=1)

    if d > 1:
        return Verdict(
            **base,
            sharp=False,
            reason=MULTIPLE_EIGENVALUE,
            nu=None,
            witness={"members": list(lv.members)},
        )

    member = lv.members[0]
    nu = nodal.count_formula(si.domain, member).count

    sharp_reason = None
    if member == (1,) + (0,) * (n - 1):
        sharp_reason = ORTHOGONALITY_SECOND
    elif n == 2 and member in ((1, 1), (2, 1)):
        sharp_reason = EXPLICIT_COUNT
    if sharp_reason:
        _require(nu == n_pos, f"sharp candidate {member}: nu {nu} != N {n_pos}")
        return Verdict(**base, sharp=True, reason=sharp_reason, nu=nu)

    smaller = _box_smaller_point(member, n)
    _require(smaller is not None, f"decision tree found no witness for {member}")
    _require(
        any(w > e for w, e in zip(smaller, member)),
        f"witness {smaller} lies inside the nodal box of {member}",
    )
    _require(
        algebra.compare(eigenvalue(si.domain, smaller), value) == LESS,
        f"witness {smaller} is not below {value.text()}",
    )
    _require(nu < n_pos, f"nu {nu} not below N {n_pos}")
    return Verdict(
        **base,
        sharp=False,
        reason=BOX_CASE_ANALYSIS,
        nu=nu,
        witness={"smaller_point": smaller},
    )


def sharp_positions(verdicts: list[Verdict]) -> list[int]:
    return [v.position for v in verdicts if v.sharp]


def explain(verdicts: list[Verdict], position: int) -> Verdict:
    for v in verdicts:
        if v.position <= position < v.position + v.multiplicity:
            return v
    raise DomainError(f"no verdict covers position {position}")
