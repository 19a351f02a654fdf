"""Acceptance suite: one test per criterion, each printing a PASS line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines; every tolerance and bound is pinned here, nothing is deferred.
"""

import random
import time
from fractions import Fraction

import numpy as np
import pytest

from salemlattices.criteria import (
    MuSpecT1,
    check_mu_T1,
    rational_mu_t1,
    rational_mu_t2,
    synthesize_mu_T1,
)
from salemlattices.errors import ClosureViolation
from salemlattices.groups import (
    DqExact,
    DqNumeric,
    Osc2Exact,
    Osc2Numeric,
    bch_crosscheck_Ell,
    build_lattice_T1,
    build_lattice_T2,
    closure_check,
    conjugating_basis,
)
from salemlattices.linalg import charpoly, mat_eq, mat_mul, transpose
from salemlattices.polycore import IntPoly, isolate_roots
from salemlattices.salem import (
    F4Params,
    classify_F_plus,
    f4_condition,
    salem4_closed_form,
    salem_equivalent,
)
from salemlattices.sympmat import (
    GammaA,
    SympPair,
    build_A_for_theorem1,
    commensurable,
    verify_LKO,
)

QUAD = IntPoly([1, -3, 1])
QUARTIC = IntPoly([1, -3, 3, -3, 1])
SEXTIC = IntPoly([1, 0, -1, -1, -1, 0, 1])
MU3 = [(1, 0), (0, 1), (1, 1)]


def test_criterion_1_f4_oracle_agreement():
    """Inequality characterization vs root-based classification on [-8,8]^2."""
    t0 = time.time()
    discrepancies = []
    for a in range(-8, 9):
        for b in range(-8, 9):
            ineq = f4_condition(a, b)
            root_based = classify_F_plus(IntPoly([1, -a, b, -a, 1]))
            accepted = root_based.accepted and root_based.k == 2
            if ineq != accepted:
                discrepancies.append((a, b, ineq, root_based.reason))
    elapsed = time.time() - t0
    assert discrepancies == []
    assert elapsed < 30.0, f"criterion 1 took {elapsed:.1f}s"
    print(f"\nACCEPTANCE 1 PASS: 289/289 agree, 0 discrepancies, {elapsed:.1f}s")


def test_criterion_2_paper_fixtures():
    """The published sextic and the quadratic family boundary."""
    res = classify_F_plus(SEXTIC)
    assert res.accepted and res.k == 3
    for a in range(3, 11):
        assert classify_F_plus(IntPoly([1, -a, 1])).accepted, a
    for a in (0, 1, 2):
        assert not classify_F_plus(IntPoly([1, -a, 1])).accepted, a
    print("ACCEPTANCE 2 PASS: sextic accepted (k=3); quadratic rule at a=3 boundary")


def test_criterion_3_closed_forms_meet_isolated_roots():
    """Closed-form quartic data vs certified isolation at 1e-10."""
    tol = Fraction(1, 10**10)
    count = 0
    for a in range(-8, 9):
        for b in range(-8, 9):
            if not f4_condition(a, b):
                continue
            cf = salem4_closed_form(F4Params(a, b), tol, crosscheck=False)
            assert cf.r.width <= tol and cf.s.width <= tol
            roots = isolate_roots(IntPoly([1, -a, b, -a, 1]), tol)
            real = [r for r in roots if r.is_real]
            circle = [r for r in roots if r.on_unit_circle and r.im.lo > 0]
            big = max(real, key=lambda r: r.re.lo)
            assert big.re.intersects(cf.r), (a, b)
            assert circle[0].re.scale(2).intersects(cf.t2), (a, b)
            count += 1
    print(f"ACCEPTANCE 3 PASS: closed forms meet isolated roots on {count} quartics")


def test_criterion_4_theorem1_roundtrip():
    """Constructive side of the one-dimensional-centre criterion."""
    t0 = time.time()
    cases = [(QUAD, 1), (QUAD, 2), (QUARTIC, 1)]
    for f, q in cases:
        lat = build_lattice_T1(f, q)
        gamma = lat.group
        qbar = gamma.qbar
        expected = f * IntPoly([-1, 1]) ** (2 * (q - qbar))
        assert charpoly(gamma.pair.a_rows()) == expected
        A, J = gamma.pair.a_rows(), gamma.pair.j_rows()
        assert mat_eq(mat_mul(mat_mul(transpose(A), J), A), J)
        assert verify_LKO(gamma.pair).passed
        report = closure_check(lat, 4)
        assert report.products_checked > 0
    elapsed = time.time() - t0
    assert elapsed < 60.0, f"criterion 4 took {elapsed:.1f}s"
    print(f"ACCEPTANCE 4 PASS: 3 constructions verified and closed at length 4, "
          f"{elapsed:.1f}s")


def test_criterion_5_theorem2_roundtrip():
    """Constructive side of the two-dimensional-centre criterion."""
    lat_osc2 = build_lattice_T2(rational_mu_t2(MU3, family="osc2"))
    rep = closure_check(lat_osc2, 3)
    assert rep.products_checked > 0
    lat_d = build_lattice_T2(rational_mu_t2(MU3, family="d"))
    rep_d = closure_check(lat_d, 3)
    assert rep_d.products_checked > 0

    caught = 0
    bad = lat_osc2.with_generator(
        0, ((Fraction(1, 2) + Fraction(1, 6), Fraction(0)),
            (Fraction(0),) * 6, (0, 0))
    )
    try:
        closure_check(bad, 2)
    except ClosureViolation:
        caught += 1
    z, a, s, t = lat_d.generators[8]
    bad_d = lat_d.with_generator(8, (z, a, s + Fraction(1, 3), t))
    try:
        closure_check(bad_d, 2)
    except ClosureViolation:
        caught += 1
    assert caught == 2

    lat_d0 = build_lattice_T2(rational_mu_t2([], family="d"))
    rep0 = closure_check(lat_d0, 3)
    assert rep0.products_checked > 0
    print(
        "ACCEPTANCE 5 PASS: Osc2_3 and D_3 closed at length 3 "
        f"({rep.distinct_elements}/{rep_d.distinct_elements} elements), "
        "negative controls caught, D_0 closed"
    )


def test_criterion_6_group_law_property_suite():
    """1000 random triples per family, exact and numeric, plus eigenvalues."""
    rng = random.Random(2024)

    # exact models: identically zero error demanded (equality of tuples)
    gamma = build_A_for_theorem1(QUAD, 1)

    def rand_gamma():
        return (
            Fraction(rng.randint(-6, 6), 2),
            tuple(rng.randint(-4, 4) for _ in range(4)),
            rng.randint(-3, 3),
        )

    osc2 = Osc2Exact(3, MU3)

    def rand_osc2():
        return (
            (Fraction(rng.randint(-4, 4), 2), Fraction(rng.randint(-4, 4), 2)),
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(6)),
            (rng.randint(-2, 2), rng.randint(-2, 2)),
        )

    dq = DqExact(3, MU3)

    def rand_dq():
        return (
            (Fraction(rng.randint(-6, 6), 6), Fraction(rng.randint(-6, 6), 6)),
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(6)),
            Fraction(rng.randint(-4, 4)),
            (rng.randint(-2, 2), rng.randint(-2, 2)),
        )

    for model, rand in ((gamma, rand_gamma), (osc2, rand_osc2), (dq, rand_dq)):
        e = model.identity()
        for _ in range(1000):
            a, b, c = rand(), rand(), rand()
            assert model.mul(model.mul(a, b), c) == model.mul(a, model.mul(b, c))
            assert model.mul(a, model.inv(a)) == e
            assert model.mul(e, a) == a

    # numeric models: residual below 1e-9
    _, osc1_num = conjugating_basis(gamma)
    models = (osc1_num, Osc2Numeric(3, MU3), DqNumeric(3, MU3))
    worst = 0.0
    for model in models:
        for _ in range(1000):
            a, b, c = (model.random_element(rng) for _ in range(3))
            lhs = model.mul(model.mul(a, b), c)
            rhs = model.mul(a, model.mul(b, c))
            for u, v in zip(lhs, rhs):
                worst = max(worst, float(np.abs(np.asarray(u) - np.asarray(v)).max()))
    assert worst < 1e-9, worst

    # eigenvalues of the cyclic conjugation match the certified roots
    for f, q in ((QUAD, 1), (QUAD, 2), (QUARTIC, 1)):
        g = build_A_for_theorem1(f, q)
        _, num = conjugating_basis(g)
        eigs = sorted(num.eigenvalues_tprime(), key=lambda z: (z.real, z.imag))
        target = f * IntPoly([-1, 1]) ** (2 * (q - g.qbar))
        roots = []
        for r in isolate_roots(target, Fraction(1, 10**12)):
            roots.extend([r.approx()] * r.multiplicity)
        roots.sort(key=lambda z: (z.real, z.imag))
        for e_val, r_val in zip(eigs, roots):
            assert abs(e_val - r_val) < 1e-8
    print(f"ACCEPTANCE 6 PASS: exact axioms hold identically; numeric residual "
          f"{worst:.2e} < 1e-9; eigenvalues match certified roots")


def test_criterion_7_bch_grid():
    """Closed formula equals the truncated series on a 20 x 20 rational grid."""
    group = DqExact(3, MU3)
    checks = 0
    for i in range(20):
        for j in range(20):
            t1 = (Fraction(i - 10, 3), Fraction(2 * i + 1, 5))
            t2 = (Fraction(j - 10, 2), Fraction(3 * j - 1, 7))
            res = bch_crosscheck_Ell(group, t1, t2)
            assert res.equal
            checks += 1
    assert checks == 400
    print("ACCEPTANCE 7 PASS: 400/400 grid points agree exactly")


def test_criterion_8_membership_roundtrip():
    """Randomized synthesis always checks back as a member; the rational
    singleton is certified out."""
    rng = random.Random(88)
    total = 0
    for f, q in ((QUAD, 2), (QUARTIC, 2), (SEXTIC, 3)):
        qbar = f.degree // 2 - 1
        for _ in range(50):
            signs = tuple(rng.choice((1, -1)) for _ in range(qbar))
            ks = tuple(rng.randint(-4, 4) for _ in range(qbar)) + tuple(
                rng.choice((-3, -2, -1, 1, 2, 3)) for _ in range(q - qbar)
            )
            mu = synthesize_mu_T1(f, q, signs, ks)
            assert check_mu_T1(mu, f).status == "member", (f, signs, ks)
            total += 1
    res = check_mu_T1(rational_mu_t1([1]), QUAD)
    assert res.status == "non-member"
    assert res.assumptions == ()  # interval-certified, unconditional
    print(f"ACCEPTANCE 8 PASS: {total}/150 round trips member; mu=(1) certified out")


def test_criterion_9_commensurability():
    """Reflexivity, the power relation, and the two disproof routes."""
    g = build_A_for_theorem1(QUAD, 1)
    res = commensurable(g, g)
    assert res.status == "proven" and (res.n1, res.n2) == (1, 1)
    assert res.m == 1
    assert all(
        res.S[i][j] == int(i == j) for i in range(len(res.S)) for j in range(len(res.S))
    )

    from salemlattices.linalg import mat_pow

    C = [list(r) for r in build_A_for_theorem1(QUAD, 0).companion_block()[0]]
    pair2 = SympPair(tuple(map(tuple, mat_pow(C, 2))), ((0, 1), (-1, 0)))
    g_sq = GammaA(pair2, IntPoly([1, -7, 1]), 0, 0)
    res = commensurable(build_A_for_theorem1(QUAD, 0), g_sq)
    assert res.status == "proven" and (res.n1, res.n2) == (2, 1)

    res = commensurable(build_A_for_theorem1(QUAD, 1),
                        build_A_for_theorem1(QUARTIC, 1))
    assert res.status == "disproven" and "multiplicit" in res.reason

    res = commensurable(build_A_for_theorem1(QUARTIC, 2),
                        build_A_for_theorem1(SEXTIC, 2))
    assert res.status == "disproven"
    equiv = salem_equivalent(QUARTIC, SEXTIC)
    assert equiv.status == "not-equivalent" and "degree" in equiv.reason
    print("ACCEPTANCE 9 PASS: reflexive proven, power relation (2,1) proven, "
          "both disproof routes exercised")
