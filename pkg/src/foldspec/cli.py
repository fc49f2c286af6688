"""Command-line front end.

Subcommands: spectrum, verdicts, nodal, frame, eval, checksym, checkframe,
deficiency, dirichlet-check, selftest.  Output is deterministic for a fixed
invocation: ordering is exact-value order, floats are emitted via repr, and
sample offsets derive from the --seed flag (default 0).
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from fractions import Fraction

from . import algebra, courant, eigenfn, folding, nodal, spectrum, svgout
from .algebra import AlgebraicValue
from .domains import DIRICHLET, NEUMANN, Domain, box, triangle
from .errors import ConsistencyError, FoldspecError


def _parse_domain(args: argparse.Namespace) -> Domain:
    bc = getattr(args, "bc", NEUMANN)
    if args.domain == "triangle":
        return triangle(bc)
    return box(args.dim, bc)


def _parse_cutoff(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SystemExit(f"invalid cutoff {text!r}: {exc}")


def _parse_qn(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(p) for p in text.split(","))
    except ValueError:
        raise SystemExit(f"invalid quantum number {text!r}; expected like 2,1")


def _parse_value(domain: Domain, text: str) -> AlgebraicValue:
    """A spectral value: either one integer or the full coefficient vector."""
    parts = [int(p) for p in text.split(",")]
    if len(parts) == 1:
        return algebra.integer_value(domain.ring, parts[0])
    return AlgebraicValue(domain.ring, tuple(parts))


def _parse_coordinate(part: str) -> float:
    """A coordinate: plain float, or forms like pi, pi/2, 3pi/4, 0.5pi."""
    part = part.strip()
    num, den = part, None
    if "/" in part:
        num, den = part.split("/", 1)
    if "pi" in num:
        prefix = num.replace("pi", "").strip()
        value = math.pi * (float(prefix) if prefix else 1.0)
    else:
        value = float(num)
    if den is not None:
        value /= float(den)
    return value


def _parse_point(text: str) -> tuple[float, ...]:
    try:
        return tuple(_parse_coordinate(p) for p in text.split(","))
    except ValueError:
        raise SystemExit(f"invalid point {text!r}; expected like 1.2,0.5 or pi/2,0")


def _emit(args: argparse.Namespace, payload: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(payload)
    else:
        sys.stdout.write(payload)


def _json(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _csv(rows: list[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(rows[0].keys()), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


# ---------------------------------------------------------------------------
# subcommands


def _cmd_spectrum(args: argparse.Namespace) -> int:
    domain = _parse_domain(args)
    si = spectrum.build_index(domain, _parse_cutoff(args.cutoff))
    rows = []
    position = 1
    for lv in si.levels:
        oc = spectrum.odd_core(lv.value) if not lv.value.is_zero() else None
        row = {
            "position": position,
            "value": lv.value.text(),
            "float": float(lv.value),
            "multiplicity": lv.multiplicity,
            "parity": algebra.parity(lv.value),
            "odd_core": oc.core.text() if oc else None,
            "k": oc.k if oc else None,
        }
        if args.points:
            row["members"] = [list(m) for m in lv.members]
        rows.append(row)
        position += lv.multiplicity
    if args.format == "csv":
        for row in rows:
            if "members" in row:
                row["members"] = json.dumps(row["members"])
        _emit(args, _csv(rows))
    else:
        _emit(args, _json(rows))
    return 0


def _cmd_verdicts(args: argparse.Namespace) -> int:
    domain = _parse_domain(args)
    verdicts = courant.classify(domain, _parse_cutoff(args.cutoff))
    if args.explain is not None:
        v = courant.explain(verdicts, args.explain)
        _emit(args, _json(v.as_dict()))
        return 0
    rows = [v.as_dict() for v in verdicts]
    if args.format == "csv":
        for row in rows:
            row["witness"] = json.dumps(row["witness"])
        _emit(args, _csv(rows))
    elif args.format == "table":
        lines = [
            f"{'pos':>5} {'value':>16} {'d':>2} {'parity':>6} {'sharp':>5}  reason"
        ]
        for v in verdicts:
            lines.append(
                f"{v.position:>5} {v.value.text():>16} {v.multiplicity:>2} "
                f"{v.parity:>6} {str(v.sharp).lower():>5}  {v.reason}"
            )
        _emit(args, "\n".join(lines) + "\n")
    else:
        _emit(args, _json(rows))
    return 0


def _cmd_nodal(args: argparse.Namespace) -> int:
    domain = _parse_domain(args)
    qn = _parse_qn(args.qn)
    f = eigenfn.basis_fn(domain, qn)
    result: dict = {"domain": domain.label(), "qn": list(qn), "value": f.value.text()}
    count = nodal.count_auto(domain, qn, resolution=args.grid)
    result.update(
        {
            "nu": count.count,
            "method": count.method,
            "resolution": count.resolution,
            "stable": count.stable,
        }
    )
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svgout.nodal_svg(f))
        result["svg"] = args.svg
    _emit(args, _json(result))
    return 0


def _cmd_frame(args: argparse.Namespace) -> int:
    domain = _parse_domain(args)
    frame = folding.build_frame(domain, args.k)
    if args.svg:
        with open(args.svg, "w", encoding="utf-8") as fh:
            fh.write(svgout.frame_svg(frame))
    if args.json or not args.svg:
        if domain.kind == "triangle":
            facets = [
                {
                    "a": [str(seg.a[0]), str(seg.a[1])],
                    "b": [str(seg.b[0]), str(seg.b[1])],
                }
                for seg in frame.facets
            ]
        else:
            facets = [
                {"axis": slab.axis, "position": str(slab.frac)}
                for slab in frame.facets
            ]
        _emit(
            args,
            _json(
                {
                    "domain": domain.label(),
                    "k": args.k,
                    "facet_count": len(frame.facets),
                    "facets": facets,
                    "units": "pi (triangle) / edge-length fraction (box)",
                }
            ),
        )
    return 0


def _cmd_eval(args: argparse.Namespace) -> int:
    domain = _parse_domain(args)
    f = eigenfn.basis_fn(domain, _parse_qn(args.qn))
    p = _parse_point(args.at)
    _emit(
        args,
        _json(
            {
                "qn": list(_parse_qn(args.qn)),
                "at": list(p),
                "value": eigenfn.eval_at(f, p),
                "eigenvalue": f.value.text(),
            }
        ),
    )
    return 0


def _cmd_checksym(args: argparse.Namespace) -> int:
    domain = _parse_domain(args)
    f = eigenfn.basis_fn(domain, _parse_qn(args.qn))
    verdict = eigenfn.symmetry_check(f, samples=args.samples)
    _emit(
        args,
        _json(
            {
                "qn": list(_parse_qn(args.qn)),
                "eigenvalue": f.value.text(),
                "eigenvalue_parity": algebra.parity(f.value),
                "symmetry": verdict,
                "samples": args.samples,
            }
        ),
    )
    return 0


def _cmd_checkframe(args: argparse.Namespace) -> int:
    domain = _parse_domain(args)
    f = eigenfn.basis_fn(domain, _parse_qn(args.qn))
    oc = spectrum.odd_core(f.value)
    frame = folding.build_frame(domain, oc.k)
    max_abs = eigenfn.frame_vanishing(f, frame, samples=args.samples)
    scale = eigenfn.sup_estimate(f)
    _emit(
        args,
        _json(
            {
                "qn": list(_parse_qn(args.qn)),
                "eigenvalue": f.value.text(),
                "k": oc.k,
                "samples": args.samples,
                "max_abs_on_frame": max_abs,
                "sup_estimate": scale,
                "vanishes": max_abs <= 1e-9 * scale,
            }
        ),
    )
    return 0


def _cmd_deficiency(args: argparse.Namespace) -> int:
    domain = _parse_domain(args)
    value = _parse_value(domain, args.lam)
    si = spectrum.build_index(domain, Fraction(float(value)) * 2 + 2)
    report = nodal.deficiency_bound(si, value)
    _emit(args, _json(report.as_dict()))
    return 0


def _cmd_dirichlet_check(args: argparse.Namespace) -> int:
    domain = box(args.dim, DIRICHLET)
    value = _parse_value(domain, args.lam)
    si = spectrum.build_index(domain, Fraction(float(value)) * 2 + 2)
    check = nodal.dirichlet_deficiency_check(si, value)
    _emit(args, _json(check.as_dict()))
    return 0


def _cmd_selftest(args: argparse.Namespace) -> int:
    from . import acceptance

    failures = 0
    for crit in acceptance.CRITERIA:
        if args.only and crit.cid not in args.only:
            continue
        result = crit.run()
        status = "PASS" if result.ok else "FAIL"
        print(f"[{status}] criterion {crit.cid}: {crit.name} -- {result.detail}")
        if not result.ok:
            failures += 1
    return 1 if failures else 0


# ---------------------------------------------------------------------------


def _add_domain_flags(p: argparse.ArgumentParser, bc: bool = True) -> None:
    p.add_argument("--domain", choices=["triangle", "box"], required=True)
    p.add_argument("--dim", type=int, default=2, help="box dimension (>= 2)")
    if bc:
        p.add_argument("--bc", choices=[NEUMANN, DIRICHLET], default=NEUMANN)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="foldspec",
        description="Spectra, folding structure, nodal counts and "
        "Courant-sharpness of 2-rep-tile domains.",
    )
    parser.add_argument("--seed", type=int, default=0, help="sampling seed")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("spectrum", help="sorted eigenvalue table")
    _add_domain_flags(p)
    p.add_argument("--cutoff", required=True)
    p.add_argument("--format", choices=["json", "csv"], default="json")
    p.add_argument("--points", action="store_true", help="include member lattice points")
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_spectrum)

    p = sub.add_parser("verdicts", help="Courant-sharpness classification")
    _add_domain_flags(p, bc=False)
    p.add_argument("--cutoff", required=True)
    p.add_argument("--format", choices=["json", "csv", "table"], default="table")
    p.add_argument("--explain", type=int, help="print the witness chain for one position")
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_verdicts)

    p = sub.add_parser("nodal", help="nodal-domain count of a basis function")
    _add_domain_flags(p)
    p.add_argument("--qn", required=True)
    p.add_argument("--grid", type=int, help="force grid counting at this resolution")
    p.add_argument("--svg", help="write the sign pattern as SVG")
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_nodal)

    p = sub.add_parser("frame", help="k-frame facets")
    _add_domain_flags(p, bc=False)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--svg", help="write the frame as SVG")
    p.add_argument("--json", action="store_true", help="also emit facet JSON")
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_frame)

    p = sub.add_parser("eval", help="evaluate a basis function at a point")
    _add_domain_flags(p)
    p.add_argument("--qn", required=True)
    p.add_argument("--at", required=True, help="coordinates, e.g. 1.2,0.5 or pi/2,0")
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_eval)

    p = sub.add_parser("checksym", help="reflection symmetry report")
    _add_domain_flags(p)
    p.add_argument("--qn", required=True)
    p.add_argument("--samples", type=int, default=256)
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_checksym)

    p = sub.add_parser("checkframe", help="frame vanishing report")
    _add_domain_flags(p, bc=False)
    p.add_argument("--qn", required=True)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_checkframe)

    p = sub.add_parser("deficiency", help="nodal-deficiency lower bounds")
    _add_domain_flags(p, bc=False)
    p.add_argument("--lambda", dest="lam", required=True, help="eigenvalue (int or coefficients)")
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_deficiency)

    p = sub.add_parser("dirichlet-check", help="Dirichlet deficiency identity")
    p.add_argument("--dim", type=int, default=2)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("-o", "--out")
    p.set_defaults(fn=_cmd_dirichlet_check)

    p = sub.add_parser("selftest", help="run the acceptance criteria")
    p.add_argument("--only", nargs="*", help="criterion ids to run")
    p.set_defaults(fn=_cmd_selftest)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConsistencyError as exc:
        print(f"internal consistency error: {exc}", file=sys.stderr)
        return 1
    except FoldspecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
