"""Command-line front end.

Subcommands::

    factor    list all factorizations, labels, and complementary pairing
    norm      norm polynomial and its real roots
    linkage   joints, quadrances, coupler conic, null tangents, focal points
    verify    run the geometric checks and report pass/fail per check
    simulate  trajectory table of the motion (CSV or JSON)
    midpoints midpoints of two points
    quad      complete a quadrilateral with equal opposite quadrances

Exit codes: 0 success, 2 non-generic input, 1 parse/usage/IO errors.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import scalars
from .algebra import Signature, quaternion_str
from .errors import NonGenericError, ParseError, QuatLinkError
from .factorization import complementary_pairs
from .geometry import ProjPoint, midpoints
from .linkage import (
    FourBar,
    VerificationReport,
    build_linkage,
    construct_equal_quadrilateral,
    coupler_conic,
    sample_motion,
    verify_linkage,
)
from .polynomials import real_roots
from .textio import parse_point, parse_poly, quat_poly_str, real_poly_str


# ---------------------------------------------------------------------------
# serialization helpers


def fmt(value) -> object:
    """JSON-ready form of a scalar: exact values as strings, floats as numbers."""
    if isinstance(value, float):
        return value
    return scalars.format_scalar(value)


def quat_json(q) -> dict:
    return {
        "coords": [fmt(c) for c in q.coords],
        "text": quaternion_str(q),
    }


def point_json(p: ProjPoint | None) -> object:
    if p is None:
        return None
    return [fmt(c) for c in p.canonical_coords()]


def real_poly_json(p) -> dict:
    return {"coefficients": [fmt(c) for c in p.coeffs], "text": real_poly_str(p)}


def factorization_json(f, index: int) -> dict:
    return {
        "index": index,
        "h1": quat_json(f.h1),
        "h2": quat_json(f.h2),
        "divisor": real_poly_json(f.divisor),
        "label": sorted(f.label) if f.label is not None else None,
        "exact": f.exact,
    }


def report_json(report: VerificationReport) -> dict:
    return {
        "all_passed": report.ok,
        "checks": [
            {
                "name": c.name,
                "passed": c.passed,
                "skipped": c.skipped,
                "reason": c.reason,
                "residual": c.residual,
                "details": list(c.details),
            }
            for c in report.checks
        ],
    }


def emit_json(payload: dict, stream) -> None:
    json.dump(payload, stream, indent=2)
    stream.write("\n")


# ---------------------------------------------------------------------------
# SVG emission


def _chart(coords) -> tuple[float, float] | None:
    x1, x2, x3 = (scalars.to_float(c) for c in coords)
    if abs(x1) < 1e-12 * max(abs(x2), abs(x3), 1.0):
        return None
    return (x2 / x1, x3 / x1)


def _clip_line(u, box: float):
    """Segment of the line <u, (1, X, Y)> = 0 inside [-box, box]^2, or None."""
    u1, u2, u3 = (scalars.to_float(c) for c in u)
    points = []
    if abs(u3) > 1e-12:
        for x in (-box, box):
            y = (u1 - u2 * x) / u3
            if abs(y) <= box + 1e-9:
                points.append((x, y))
    if abs(u2) > 1e-12:
        for y in (-box, box):
            x = (u1 - u3 * y) / u2
            if abs(x) <= box + 1e-9:
                points.append((x, y))
    unique = []
    for p in points:
        if all(abs(p[0] - q[0]) + abs(p[1] - q[1]) > 1e-9 for q in unique):
            unique.append(p)
    if len(unique) < 2:
        return None
    return unique[0], unique[1]


def render_svg(fb: FourBar, conic, samples: int, t_range: tuple[float, float]) -> str:
    """Standalone SVG scene: null circle, coupler conic, null tangents, joints."""
    scale = 100.0
    box = 2.4
    size = scale * (box + 0.2)
    out = io.StringIO()
    out.write(
        f'<svg xmlns="http://www.w3.org/2000/svg" viewBox="{-size:.0f} {-size:.0f} '
        f'{2 * size:.0f} {2 * size:.0f}">\n'
    )
    out.write(f'  <rect class="frame" x="{-size:.0f}" y="{-size:.0f}" width="{2 * size:.0f}" '
              f'height="{2 * size:.0f}" fill="white" stroke="#ccc"/>\n')
    out.write(f'  <circle class="null-circle" cx="0" cy="0" r="{scale:.0f}" fill="none" stroke="black"/>\n')

    if conic is not None:
        t0, t1 = t_range
        step = (t1 - t0) / max(1, samples - 1)
        segments: list[list[tuple[float, float]]] = [[]]
        for k in range(samples):
            t = t0 + step * k
            rep = conic.reduced.to_float()(float(t))
            chart = _chart((rep.x, rep.y, rep.z))
            if chart is None or abs(chart[0]) > 3 * box or abs(chart[1]) > 3 * box:
                if segments[-1]:
                    segments.append([])
                continue
            segments[-1].append(chart)
        for seg in segments:
            if len(seg) < 2:
                continue
            path = " ".join(f"{scale * x:.2f},{-scale * y:.2f}" for x, y in seg)
            out.write(f'  <polyline class="conic" points="{path}" fill="none" stroke="#1f77b4"/>\n')
        for tangent in conic.null_tangents:
            clipped = _clip_line(tangent.coords(), box)
            if clipped is None:
                continue
            (xa, ya), (xb, yb) = clipped
            out.write(
                f'  <line class="null-tangent" x1="{scale * xa:.2f}" y1="{-scale * ya:.2f}" '
                f'x2="{scale * xb:.2f}" y2="{-scale * yb:.2f}" stroke="#999" stroke-dasharray="6 3"/>\n'
            )

    def draw_joint(p: ProjPoint, css: str, label: str, color: str):
        chart = _chart(p.coords())
        if chart is None:
            # ideal point: direction marker on the frame instead of a dot
            x2, x3 = (scalars.to_float(c) for c in p.coords()[1:])
            norm = max((x2 * x2 + x3 * x3) ** 0.5, 1e-12)
            bx, by = box * x2 / norm, box * x3 / norm
            out.write(
                f'  <path class="joint {css} ideal-marker" d="M {scale * bx - 6:.2f} '
                f'{-scale * by:.2f} l 6 -6 l 6 6 z" fill="{color}"/>\n'
            )
            out.write(
                f'  <text class="joint-label" x="{scale * bx + 8:.2f}" y="{-scale * by:.2f}" '
                f'font-size="12">{label} (ideal)</text>\n'
            )
            return
        x, y = chart
        out.write(
            f'  <circle class="joint {css}" cx="{scale * x:.2f}" cy="{-scale * y:.2f}" r="4" '
            f'fill="{color}"/>\n'
        )
        out.write(
            f'  <text class="joint-label" x="{scale * x + 6:.2f}" y="{-scale * y - 6:.2f}" '
            f'font-size="12">{label}</text>\n'
        )

    for leg in fb.legs:
        tag = "".join(str(i) for i in sorted(leg.label)) if leg.label else ""
        draw_joint(leg.fixed_joint, "joint-fixed", f"A{tag}", "#d62728")
        draw_joint(leg.moving_joint_initial, "joint-moving", f"B{tag}", "#2ca02c")
    out.write("</svg>\n")
    return out.getvalue()


# ---------------------------------------------------------------------------
# subcommands


def _poly_from_args(args) -> tuple:
    signature = Signature.HAMILTON if args.algebra == "hamilton" else Signature.SPLIT
    poly = parse_poly(args.polynomial, signature, args.backend)
    return poly, signature


def cmd_factor(args, stream) -> int:
    poly, _ = _poly_from_args(args)
    from .factorization import all_factorizations

    factorizations = all_factorizations(poly, args.tol)
    norm_poly = poly.norm_polynomial(args.tol)
    roots = real_roots(norm_poly, args.tol)
    pairs = complementary_pairs(factorizations, norm_poly, args.tol)
    payload = {
        "command": "factor",
        "algebra": args.algebra,
        "backend": args.backend,
        "input": args.polynomial,
        "canonical": quat_poly_str(poly),
        "norm_polynomial": real_poly_json(norm_poly),
        "norm_roots": [fmt(r) for r in roots.roots],
        "roots_exact": roots.exact,
        "factorizations": [factorization_json(f, i) for i, f in enumerate(factorizations)],
        "complementary_pairs": [list(p) for p in pairs],
    }
    emit_json(payload, stream)
    return 0


def cmd_norm(args, stream) -> int:
    poly, _ = _poly_from_args(args)
    norm_poly = poly.norm_polynomial(args.tol)
    roots = real_roots(norm_poly, args.tol)
    payload = {
        "command": "norm",
        "algebra": args.algebra,
        "backend": args.backend,
        "canonical": quat_poly_str(poly),
        "norm_polynomial": real_poly_json(norm_poly),
        "real_roots": [fmt(r) for r in roots.roots],
        "irreducible_quadratic_factors": [real_poly_json(q) for q in roots.quadratic_factors],
        "roots_exact": roots.exact,
    }
    emit_json(payload, stream)
    return 0


def _linkage_payload(fb: FourBar, tol) -> dict:
    pairs = fb.complementary_leg_pairs(tol)
    quadrance_rows = []
    from .geometry import quadrance as q_of

    for i, j in pairs:
        a, b = fb.legs[i], fb.legs[j]
        try:
            leg_q = q_of(a.fixed_joint, a.moving_joint_initial, tol)
            side_q = q_of(a.fixed_joint, b.fixed_joint, tol)
            quadrance_rows.append(
                {"legs": [i, j], "leg_quadrance": fmt(leg_q), "side_quadrance": fmt(side_q)}
            )
        except QuatLinkError:
            quadrance_rows.append({"legs": [i, j], "leg_quadrance": None, "side_quadrance": None})
    conic = None
    conic_payload = None
    if pairs:
        conic = coupler_conic(fb.legs[pairs[0][0]], fb.legs[pairs[0][1]], tol)
        conic_payload = {
            "content": real_poly_json(conic.content),
            "reduced_coefficients": [quat_json(c) for c in conic.reduced.coeffs],
            "tangent_quartic": real_poly_json(conic.tangent_quartic),
            "null_tangent_params": [fmt(r) for r in conic.null_tangent_params],
            "null_tangents": [[fmt(c) for c in t.canonical_coords()] for t in conic.null_tangents],
            "focal_points": [point_json(p) for p in conic.focal_points],
            "exact": conic.exact,
        }
    return {
        "legs": [
            {
                "index": idx,
                "label": sorted(leg.label) if leg.label else None,
                "fixed_joint": point_json(leg.fixed_joint),
                "moving_joint": point_json(leg.moving_joint_initial),
                "h1": quat_json(leg.factorization.h1),
                "h2": quat_json(leg.factorization.h2),
            }
            for idx, leg in enumerate(fb.legs)
        ],
        "complementary_pairs": [list(p) for p in pairs],
        "norm_roots": [fmt(r) for r in fb.norm_roots],
        "quadrances": quadrance_rows,
        "conic": conic_payload,
    }, conic


def cmd_linkage(args, stream) -> int:
    poly, _ = _poly_from_args(args)
    fb = build_linkage(poly, args.tol)
    payload, conic = _linkage_payload(fb, args.tol)
    if args.format == "svg":
        t0, t1 = args.t_range if args.t_range else (-8.0, 8.0)
        stream.write(render_svg(fb, conic, max(args.samples, 64), (float(t0), float(t1))))
        return 0
    payload = {
        "command": "linkage",
        "algebra": args.algebra,
        "backend": args.backend,
        "canonical": quat_poly_str(poly),
        **payload,
    }
    emit_json(payload, stream)
    return 0


def cmd_verify(args, stream) -> int:
    poly, _ = _poly_from_args(args)
    fb = build_linkage(poly, args.tol)
    report = verify_linkage(fb, samples=args.samples, tol=args.tol)
    payload = {
        "command": "verify",
        "algebra": args.algebra,
        "backend": args.backend,
        "canonical": quat_poly_str(poly),
        **report_json(report),
    }
    emit_json(payload, stream)
    return 0


def cmd_simulate(args, stream) -> int:
    poly, signature = _poly_from_args(args)
    fb = build_linkage(poly, args.tol)
    t0, t1 = args.t_range if args.t_range else (Fraction(-2), Fraction(4))
    tracers = tuple(parse_point(text, signature, args.backend) for text in args.tracer)
    rows = sample_motion(fb, t0, t1, args.samples, tracers, args.tol)
    if args.format == "json":
        payload = {
            "command": "simulate",
            "canonical": quat_poly_str(poly),
            "rows": [
                {
                    "t": fmt(row.t),
                    "null_position": row.null_position,
                    "joints": [point_json(p) for p in row.joints],
                    "coupler": point_json(row.coupler),
                    "tracers": [point_json(p) for p in row.tracers],
                    "notes": list(row.notes),
                }
                for row in rows
            ],
        }
        emit_json(payload, stream)
        return 0
    writer = csv.writer(stream, lineterminator="\n")
    header = ["t", "null_position"]
    for idx in range(len(fb.legs)):
        header += [f"leg{idx}_x1", f"leg{idx}_x2", f"leg{idx}_x3"]
    header += ["coupler_x1", "coupler_x2", "coupler_x3"]
    for idx in range(len(tracers)):
        header += [f"tracer{idx}_x1", f"tracer{idx}_x2", f"tracer{idx}_x3"]
    writer.writerow(header)

    def cells(p: ProjPoint | None):
        if p is None:
            return ["", "", ""]
        return [scalars.format_scalar(c) if not isinstance(c, float) else repr(c)
                for c in p.canonical_coords()]

    for row in rows:
        out_row = [scalars.format_scalar(row.t) if not isinstance(row.t, float) else repr(row.t),
                   int(row.null_position)]
        for p in row.joints:
            out_row += cells(p)
        out_row += cells(row.coupler)
        for p in row.tracers:
            out_row += cells(p)
        writer.writerow(out_row)
    return 0


def cmd_midpoints(args, stream) -> int:
    signature = Signature.HAMILTON if args.algebra == "hamilton" else Signature.SPLIT
    a = parse_point(args.point_a, signature, args.backend)
    b = parse_point(args.point_b, signature, args.backend)
    points = midpoints(a, b, args.tol)
    payload = {
        "command": "midpoints",
        "midpoints": [point_json(p) for p in points],
    }
    emit_json(payload, stream)
    return 0


def cmd_quad(args, stream) -> int:
    signature = Signature.HAMILTON if args.algebra == "hamilton" else Signature.SPLIT
    a12 = parse_point(args.a12, signature, args.backend)
    a34 = parse_point(args.a34, signature, args.backend)
    b34 = parse_point(args.b34, signature, args.backend)
    candidates = construct_equal_quadrilateral(a12, a34, b34, args.tol)
    from .geometry import quadrance as q_of

    payload = {
        "command": "quad",
        "candidates": [point_json(p) for p in candidates],
        "quadrance_a12_a34": fmt(q_of(a12, a34, args.tol)),
        "quadrance_a34_b34": fmt(q_of(a34, b34, args.tol)),
    }
    emit_json(payload, stream)
    return 0


# ---------------------------------------------------------------------------
# argument parsing and dispatch


def _t_range(text: str):
    try:
        lo, _, hi = text.partition(":")
        return (Fraction(lo), Fraction(hi))
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"bad range {text!r}, expected a:b") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="quatlink",
        description="Factor quadratic quaternion polynomials and inspect the "
        "four-bar linkages they generate in universal hyperbolic geometry.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, poly_arg=True):
        if poly_arg:
            p.add_argument("polynomial", help="polynomial expression, e.g. 't^2 - (2+j+2k)t + (1-2i+j+2k)'")
        p.add_argument("--algebra", choices=["hamilton", "split"], default="split")
        p.add_argument("--backend", choices=["exact", "float"], default="exact")
        p.add_argument("--tol", type=float, default=None, help="tolerance for float comparisons")
        p.add_argument("--format", choices=["json", "csv", "svg"], default="json")
        p.add_argument("--samples", type=int, default=20, help="sample count where applicable")
        p.add_argument("--t-range", type=_t_range, default=None, metavar="A:B")
        p.add_argument("--out", default=None, help="write output to a file instead of stdout")

    common(sub.add_parser("factor", help="list all factorizations"))
    common(sub.add_parser("norm", help="norm polynomial and real roots"))
    common(sub.add_parser("linkage", help="joints, quadrances, conic, focal points"))
    common(sub.add_parser("verify", help="machine-check the linkage geometry"))
    p_sim = sub.add_parser("simulate", help="trajectory table of the motion")
    common(p_sim)
    p_sim.add_argument("--tracer", action="append", default=[],
                       help="vectorial quaternion to trace, e.g. 'j' (repeatable)")
    p_mid = sub.add_parser("midpoints", help="midpoints of two points")
    p_mid.add_argument("point_a")
    p_mid.add_argument("point_b")
    common(p_mid, poly_arg=False)
    p_quad = sub.add_parser("quad", help="complete an equal-quadrance quadrilateral")
    p_quad.add_argument("a12")
    p_quad.add_argument("a34")
    p_quad.add_argument("b34")
    common(p_quad, poly_arg=False)
    return parser


_HANDLERS = {
    "factor": cmd_factor,
    "norm": cmd_norm,
    "linkage": cmd_linkage,
    "verify": cmd_verify,
    "simulate": cmd_simulate,
    "midpoints": cmd_midpoints,
    "quad": cmd_quad,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.tol is not None:
        scalars.DEFAULT_TOLERANCE = args.tol

    def run(stream) -> int:
        return _HANDLERS[args.command](args, stream)

    try:
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                return run(handle)
        return run(sys.stdout)
    except NonGenericError as exc:
        _report_error(args, "NonGeneric", exc)
        return 2
    except ParseError as exc:
        _report_error(args, "ParseError", exc)
        return 1
    except (QuatLinkError, OSError) as exc:
        _report_error(args, type(exc).__name__, exc)
        return 1


def _report_error(args, kind: str, exc: Exception) -> None:
    if getattr(args, "format", "json") == "json":
        json.dump({"error": {"type": kind, "message": str(exc)}}, sys.stderr)
        sys.stderr.write("\n")
    else:
        print(f"{kind}: {exc}", file=sys.stderr)


if __name__ == "__main__":
    sys.exit(main())
