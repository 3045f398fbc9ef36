"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Every exact assertion is exact rational (or exact surd) arithmetic; float
residual gates are 1e-9.  Timing gates measure the library pipeline after a
warm-up call (imports and factor caches are not part of the algorithm cost).
"""

import random
import time
from fractions import Fraction

import pytest

from quatlink import (
    DegenerateError,
    NonGenericError,
    ProjPoint,
    Quaternion,
    RealPoly,
    all_factorizations,
    build_linkage,
    complementary,
    coupler_conic,
    joint_path,
    parse_poly,
    quadrance,
    real_roots,
    reflect,
    rotate,
)
from quatlink.cli import main as cli_main
from quatlink.geometry import collinear, incident, line, point
from quatlink.linkage import _projective_residual

from conftest import (
    HAMILTON,
    HAMILTON_TWO_FACTORS,
    HAMILTON_TWO_TEXT,
    SPLIT,
    SPLIT_SIX_FACTORS,
    SPLIT_SIX_TEXT,
    expand_pair,
    hq,
    sq,
)


def _report(num: int, description: str, failures: list):
    status = "PASS" if not failures else "FAIL"
    print(f"\n[acceptance] criterion {num}: {status} - {description}")
    assert not failures, f"criterion {num}: {failures}"


def test_criterion_1_hamilton_example_reproduction():
    failures = []
    poly = parse_poly(HAMILTON_TWO_TEXT, HAMILTON)
    all_factorizations(poly)  # warm-up (sympy import, caches)

    start = time.perf_counter()
    factorizations = all_factorizations(poly)
    norm = poly.norm_polynomial()
    elapsed = time.perf_counter() - start

    if len(factorizations) != 2:
        failures.append(f"expected 2 factorizations, got {len(factorizations)}")
    if {(f.h1, f.h2) for f in factorizations} != set(HAMILTON_TWO_FACTORS):
        failures.append("factor quaternions differ from the reference values")
    if norm != RealPoly((2, -2, 1)) * RealPoly((5, -2, 1)):
        failures.append(f"norm polynomial is {norm}")
    if not all(f.exact for f in factorizations):
        failures.append("factorizations not exact rational")
    if elapsed >= 0.1:
        failures.append(f"runtime {elapsed:.3f}s >= 0.1s")
    _report(1, "two exact factorizations of the Hamiltonian example", failures)


def test_criterion_2_split_example_reproduction():
    failures = []
    poly = parse_poly(SPLIT_SIX_TEXT, SPLIT)
    all_factorizations(poly)  # warm-up

    start = time.perf_counter()
    factorizations = all_factorizations(poly)
    norm = poly.norm_polynomial()
    elapsed = time.perf_counter() - start

    if len(factorizations) != 6:
        failures.append(f"expected 6 factorizations, got {len(factorizations)}")
    if {(f.h1, f.h2) for f in factorizations} != set(SPLIT_SIX_FACTORS):
        failures.append("factor quaternions differ from the reference values")
    if norm != RealPoly.from_roots([0, -1, 2, 3]):
        failures.append(f"norm polynomial is {norm}")
    labels = {tuple(sorted(f.label)) for f in factorizations}
    if labels != {(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)}:
        failures.append(f"labels are {labels}")
    for f in factorizations:
        g = complementary(f, poly)
        if f.label & g.label:
            failures.append(f"complementary labels intersect: {f.label} vs {g.label}")
    if elapsed >= 0.1:
        failures.append(f"runtime {elapsed:.3f}s >= 0.1s")
    _report(2, "six exact factorizations of the split example with full labeling", failures)


def test_criterion_3_complementary_formulas():
    failures = []
    poly = parse_poly(SPLIT_SIX_TEXT, SPLIT)
    base = next(
        f for f in all_factorizations(poly) if (f.h1, f.h2) == (sq(1, 0, 1, 0), sq(1, 0, 0, 2))
    )
    partner = complementary(base, poly)
    if partner.h1 != sq(1, 0, Fraction(8, 5), Fraction(6, 5)):
        failures.append(f"k1 = {partner.h1}")
    if partner.h2 != sq(1, 0, Fraction(-3, 5), Fraction(4, 5)):
        failures.append(f"k2 = {partner.h2}")
    for f in all_factorizations(poly):
        twice = complementary(complementary(f, poly), poly)
        if (twice.h1, twice.h2, twice.label) != (f.h1, f.h2, f.label):
            failures.append(f"complementary is not an involution on {f.h1}, {f.h2}")
    _report(3, "conjugation formulas give the reference complementary pair; involution", failures)


def _example_pair():
    fb = build_linkage(parse_poly(SPLIT_SIX_TEXT, SPLIT))
    leg_a = next(leg for leg in fb.legs if leg.label == frozenset({1, 4}))
    leg_b = next(leg for leg in fb.legs if leg.label == frozenset({2, 3}))
    return fb, leg_a, leg_b


def test_criterion_4_equal_opposite_quadrances():
    failures = []
    fb, leg_a, leg_b = _example_pair()
    values = (
        quadrance(leg_a.fixed_joint, leg_a.moving_joint_initial),
        quadrance(leg_b.fixed_joint, leg_b.moving_joint_initial),
        quadrance(leg_a.fixed_joint, leg_b.fixed_joint),
        quadrance(leg_a.moving_joint_initial, leg_b.moving_joint_initial),
    )
    if values != (1, 1, Fraction(9, 25), Fraction(9, 25)):
        failures.append(f"quadrances {values} != (1, 1, 9/25, 9/25)")

    norm = fb.norm_poly
    count = 0
    t = Fraction(0)
    while count < 20:
        t += Fraction(3, 7)
        if norm(t) == 0:
            continue
        qa = quadrance(leg_a.fixed_joint, joint_path(leg_a, t))
        qb = quadrance(leg_b.fixed_joint, joint_path(leg_b, t))
        if qa != qb:
            failures.append(f"t={t}: {qa} != {qb}")
        count += 1
    _report(4, "equal opposite quadrances, exactly, at 20 rational parameters", failures)


def test_criterion_5_null_tangent_corollaries():
    failures = []
    fb, leg_a, leg_b = _example_pair()

    start = time.perf_counter()
    conic = coupler_conic(leg_a, leg_b)
    if sorted(conic.null_tangent_params) != [-1, 0, 2, 3]:
        failures.append(f"null tangent params {conic.null_tangent_params}")

    fixed = [leg.fixed_joint for leg in fb.legs]
    if len(conic.focal_points) != 6:
        failures.append(f"{len(conic.focal_points)} focal points")
    for focal in conic.focal_points:
        if sum(1 for p in fixed if p == focal) != 1:
            failures.append(f"focal point {focal!r} is not a fixed joint")

    # the four quadrilateral sides are null; one is [i + k] through three knowns
    side_lines = []
    for tangent in conic.null_tangents:
        if not tangent.is_null():
            failures.append(f"tangent {tangent!r} is not null")
        side_lines.append(tangent)
    target = line(1, 0, 1)
    if sum(1 for s in side_lines if s == target) != 1:
        failures.append("side [i + k] missing")
    for member in (point(0, 1, 0), point(1, 3, 1), point(3, -1, 3)):
        if not incident(target, member):
            failures.append(f"{member!r} not on [i + k]")

    # linked vertex triples (three vertices on one null side) are collinear
    for index in (1, 2, 3, 4):
        moving = [leg.moving_joint_initial for leg in fb.legs if index in leg.label]
        fixed_triple = [leg.fixed_joint for leg in fb.legs if index not in leg.label]
        if not collinear(*moving):
            failures.append(f"moving triple for index {index} not collinear")
        if not collinear(*fixed_triple):
            failures.append(f"fixed triple omitting index {index} not collinear")
    elapsed = time.perf_counter() - start
    if elapsed >= 1.0:
        failures.append(f"runtime {elapsed:.3f}s >= 1s")
    _report(5, "null tangents, focal points, null sides, linked collinearity (exact)", failures)


def _random_split_quaternion(rng) -> Quaternion:
    return Quaternion(
        Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
        Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
        Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
        Fraction(rng.randint(-3, 3), rng.randint(1, 2)),
        SPLIT,
    )


def _reflection_samples(conic, leg_a, leg_b, exact: bool, failures: list, tag: str):
    checked = 0
    t = Fraction(1, 5)
    attempts = 0
    while checked < 5 and attempts < 60:
        attempts += 1
        t += Fraction(2, 7)
        try:
            tangent = conic.tangent_at(t)
            if tangent.is_null():
                continue
            image_b = reflect(tangent, leg_a.fixed_joint)
            image_a = reflect(tangent, leg_b.fixed_joint)
            target_b = joint_path(leg_b, t)
            target_a = joint_path(leg_a, t)
        except DegenerateError:
            continue
        if exact:
            if image_b != target_b or image_a != target_a:
                failures.append(f"{tag}: exact reflection identity fails at t={t}")
        else:
            res = max(
                _projective_residual(image_b, target_b),
                _projective_residual(image_a, target_a),
            )
            if res >= 1e-9:
                failures.append(f"{tag}: reflection residual {res:.2e} at t={t}")
        checked += 1
    if checked < 5:
        failures.append(f"{tag}: fewer than 5 usable sample parameters")


def test_criterion_6_randomized_property_suite():
    failures = []
    rng = random.Random(20240811)
    start = time.perf_counter()
    tested = 0
    counts = {2: 0, 6: 0}
    float_pairs_checked = 0
    while tested < 200:
        h1 = _random_split_quaternion(rng)
        h2 = _random_split_quaternion(rng)
        poly = expand_pair(h1, h2)
        try:
            factorizations = all_factorizations(poly)
        except NonGenericError:
            continue
        tested += 1

        for f in factorizations:
            if f.exact and f.expand() != poly:
                failures.append(f"round trip fails for {poly}")

        n_real = len(real_roots(poly.norm_polynomial()).roots)
        expected = 6 if n_real == 4 else 2
        counts[expected] += 1
        if len(factorizations) != expected:
            failures.append(f"{poly}: {len(factorizations)} factorizations, expected {expected}")
            continue

        fb = build_linkage(poly)
        pairs = fb.complementary_leg_pairs()
        if not pairs:
            failures.append(f"{poly}: no complementary pair")
            continue
        exact_pair = next(
            (
                p
                for p in pairs
                if fb.legs[p[0]].factorization.exact and fb.legs[p[1]].factorization.exact
            ),
            None,
        )
        if exact_pair is None:
            failures.append(f"{poly}: generating pair not exact")
            continue
        leg_a, leg_b = fb.legs[exact_pair[0]], fb.legs[exact_pair[1]]
        conic = coupler_conic(leg_a, leg_b)
        roots_rational = all(isinstance(r, Fraction) for r in fb.norm_roots)
        _reflection_samples(
            conic, leg_a, leg_b, exact=conic.exact and roots_rational, failures=failures,
            tag=str(poly),
        )

        # exercise the float path on a sample of linkages with inexact legs
        if float_pairs_checked < 10:
            float_pair = next(
                (
                    p
                    for p in pairs
                    if not fb.legs[p[0]].factorization.exact
                    and not fb.legs[p[1]].factorization.exact
                ),
                None,
            )
            if float_pair is not None:
                fa, fb_leg = fb.legs[float_pair[0]], fb.legs[float_pair[1]]
                _reflection_samples(
                    coupler_conic(fa, fb_leg), fa, fb_leg, exact=False, failures=failures,
                    tag=f"{poly} (float pair)",
                )
                float_pairs_checked += 1

        # rotation action is an isometry on random non-null point pairs
        h = _random_split_quaternion(rng)
        x = _random_split_quaternion(rng).vector_part()
        y = _random_split_quaternion(rng).vector_part()
        if h.norm() != 0 and not x.is_zero() and not y.is_zero():
            try:
                px, py = ProjPoint(x), ProjPoint(y)
                ix, iy = rotate(h, px), rotate(h, py)
                if quadrance(ix, iy) != quadrance(px, py):
                    failures.append(f"isometry fails for h={h}")
            except (DegenerateError, NonGenericError):
                pass
            except Exception as exc:  # NullPointError among others
                if "null" not in str(exc).lower():
                    raise

    elapsed = time.perf_counter() - start
    if counts[2] == 0 or counts[6] == 0:
        failures.append(f"unbalanced sample: {counts}")
    if float_pairs_checked == 0:
        failures.append("no float complementary pair was exercised")
    if elapsed >= 30.0:
        failures.append(f"runtime {elapsed:.1f}s >= 30s")
    _report(
        6,
        f"200 random generic split polynomials (counts {counts}, "
        f"{float_pairs_checked} float pairs, {elapsed:.1f}s)",
        failures,
    )


def test_criterion_7_degeneracy_gates(capsys):
    failures = []
    code = cli_main(["factor", "t^2+1"])
    if code != 2:
        failures.append(f"t^2+1 exit code {code} != 2")
    code = cli_main(["factor", "--algebra", "hamilton", "t^2 - 2it - 1"])
    if code != 2:
        failures.append(f"(t-i)^2 exit code {code} != 2")
    capsys.readouterr()
    with pytest.raises(NonGenericError):
        all_factorizations(parse_poly("t^2+1", SPLIT))
    with pytest.raises(NonGenericError):
        all_factorizations(expand_pair(hq(0, 1, 0, 0), hq(0, 1, 0, 0)))
    _report(7, "degenerate inputs rejected with NonGeneric (exit code 2)", failures)
