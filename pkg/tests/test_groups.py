import random
from fractions import Fraction

import numpy as np
import pytest

from salemlattices.criteria import rational_mu_t2
from salemlattices.errors import ClosureViolation, InexactPath, NotInLattice
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
    lattice_from_json,
)
from salemlattices.groups.twocentre import D0_UNITS, DQ_UNITS
from salemlattices.polycore import IntPoly, isolate_roots
from salemlattices.sympmat import build_A_for_theorem1

QUAD = IntPoly([1, -3, 1])
QUARTIC = IntPoly([1, -3, 3, -3, 1])

MU3 = [(1, 0), (0, 1), (1, 1)]


# -- numeric model of the one-dimensional-centre family -------------------------


def test_osc1_numeric_identity_and_inverse():
    _, num = conjugating_basis(build_A_for_theorem1(QUAD, 1))
    rng = random.Random(0)
    e = num.identity()
    for _ in range(50):
        g = num.random_element(rng)
        gi = num.inv(g)
        prod = num.mul(g, gi)
        assert abs(prod[0]) < 1e-9
        assert np.abs(prod[1]).max() < 1e-9
        assert abs(prod[2]) < 1e-9
        back = num.mul(num.mul(e, g), e)
        assert abs(back[0] - g[0]) < 1e-12


def test_osc1_numeric_eigenvalues_match_certified_roots():
    for f, q in ((QUAD, 1), (QUAD, 2), (QUARTIC, 1)):
        gamma = build_A_for_theorem1(f, q)
        _, num = conjugating_basis(gamma)
        eigs = sorted(num.eigenvalues_tprime(), key=lambda z: (z.real, z.imag))
        qbar = gamma.qbar
        target = f * IntPoly([-1, 1]) ** (2 * (q - qbar))
        roots = []
        for r in isolate_roots(target, Fraction(1, 10**12)):
            roots.extend([r.approx()] * r.multiplicity)
        roots.sort(key=lambda z: (z.real, z.imag))
        assert len(eigs) == len(roots)
        for e, r in zip(eigs, roots):
            assert abs(e - r) < 1e-8, (f, q)


def test_osc1_abstract_numeric_correspondence():
    gamma = build_A_for_theorem1(QUAD, 2)
    P, num = conjugating_basis(gamma)
    A = np.array(gamma.pair.A, dtype=float)
    J = np.array(gamma.pair.J, dtype=float)
    assert np.abs(P @ A - num.exp_tl(num.t_prime) @ P).max() < 1e-9
    assert np.abs(P.T @ num.omega_matrix() @ P - J).max() < 1e-9

    def embed(g):
        z, v, n = g
        return (float(z), P @ np.array([float(x) for x in v]), n * num.t_prime)

    rng = random.Random(1)
    for _ in range(100):
        a = (Fraction(rng.randint(-4, 4), 2),
             tuple(rng.randint(-3, 3) for _ in range(6)), rng.randint(-2, 2))
        b = (Fraction(rng.randint(-4, 4), 2),
             tuple(rng.randint(-3, 3) for _ in range(6)), rng.randint(-2, 2))
        lhs = embed(gamma.mul(a, b))
        rhs = num.mul(embed(a), embed(b))
        assert abs(lhs[0] - rhs[0]) < 1e-9
        assert np.abs(lhs[1] - rhs[1]).max() < 1e-9
        assert abs(lhs[2] - rhs[2]) < 1e-9


# -- exact models of the two-dimensional-centre families -------------------------


def test_osc2_omega_values():
    group = Osc2Exact(3, MU3)
    # omega(e_k, i e_k) = mu_k and cross terms vanish
    for k in range(3):
        a = tuple(Fraction(int(j == 2 * k)) for j in range(6))
        b = tuple(Fraction(int(j == 2 * k + 1)) for j in range(6))
        assert group.omega(a, b) == tuple(map(Fraction, MU3[k]))
    e0 = tuple(Fraction(int(j == 0)) for j in range(6))
    e2 = tuple(Fraction(int(j == 2)) for j in range(6))
    ie2 = tuple(Fraction(int(j == 3)) for j in range(6))
    assert group.omega(e0, e2) == (0, 0)
    assert group.omega(e0, ie2) == (0, 0)


def test_osc2_group_axioms_exact():
    group = Osc2Exact(3, MU3)
    rng = random.Random(5)

    def rand_el():
        return (
            (Fraction(rng.randint(-4, 4), 2), Fraction(rng.randint(-4, 4), 2)),
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(6)),
            (rng.randint(-2, 2), rng.randint(-2, 2)),
        )

    e = group.identity()
    for _ in range(300):
        a, b, c = rand_el(), rand_el(), rand_el()
        assert group.mul(group.mul(a, b), c) == group.mul(a, group.mul(b, c))
        assert group.mul(a, group.inv(a)) == e
        assert group.mul(e, a) == a


def test_dq_group_axioms_exact():
    group = DqExact(3, MU3)
    rng = random.Random(6)

    def rand_el():
        return (
            (Fraction(rng.randint(-6, 6), 6), Fraction(rng.randint(-6, 6), 6)),
            tuple(Fraction(rng.randint(-3, 3)) for _ in range(6)),
            Fraction(rng.randint(-4, 4)),
            (rng.randint(-2, 2), rng.randint(-2, 2)),
        )

    e = group.identity()
    for _ in range(300):
        a, b, c = rand_el(), rand_el(), rand_el()
        assert group.mul(group.mul(a, b), c) == group.mul(a, group.mul(b, c))
        assert group.mul(a, group.inv(a)) == e
        assert group.mul(e, a) == a


def test_dq_central_conjugation():
    # l(t) h(z,0,0) l(t)^-1 = h(z,0,0): s = 0 kills the correction term
    group = DqExact(3, MU3)
    z = ((Fraction(1, 6), Fraction(-1, 3)), (Fraction(0),) * 6, Fraction(0), (0, 0))
    lt = ((Fraction(0), Fraction(0)), (Fraction(0),) * 6, Fraction(0), (2, -1))
    conj = group.mul(group.mul(lt, z), group.inv(lt))
    assert conj == z


def test_dq_half_alpha_lands_on_s_unit():
    # the s-part of l(T1) l(T2) is alpha(T1,T2)/2 = one s unit exactly
    group = DqExact(3, MU3)
    l1 = (group.identity()[0], group.identity()[1], Fraction(0), (1, 0))
    l2 = (group.identity()[0], group.identity()[1], Fraction(0), (0, 1))
    prod = group.mul(l1, l2)
    assert prod[2] == 1  # in u_s units
    assert prod[3] == (1, 1)
    # and the commutator has nontrivial central and s parts
    comm = group.mul(prod, group.inv(group.mul(l2, l1)))
    assert comm[3] == (0, 0)
    assert comm[2] == 2
    assert comm[0] == (Fraction(1, 2), Fraction(-1, 2))


def test_exact_model_rejects_non_integer_l_part():
    group = DqExact(3, MU3)
    bad = ((Fraction(0), Fraction(0)), (Fraction(0),) * 6, Fraction(0),
           (Fraction(1, 2), 0))
    with pytest.raises(InexactPath):
        group.mul(bad, group.identity())


def test_numeric_twins_associativity():
    rng = random.Random(9)
    osc2 = Osc2Numeric(3, MU3)
    dq = DqNumeric(3, MU3)
    for model in (osc2, dq):
        for _ in range(200):
            a, b, c = (model.random_element(rng) for _ in range(3))
            lhs = model.mul(model.mul(a, b), c)
            rhs = model.mul(a, model.mul(b, c))
            for u, v in zip(lhs, rhs):
                assert np.abs(np.asarray(u) - np.asarray(v)).max() < 1e-9


def test_numeric_matches_exact_on_integer_l():
    group = DqExact(3, MU3)
    num = DqNumeric(3, MU3)
    rng = random.Random(10)
    for _ in range(100):
        def rand_exact():
            return (
                (Fraction(rng.randint(-6, 6), 6), Fraction(rng.randint(-6, 6), 6)),
                tuple(Fraction(rng.randint(-2, 2)) for _ in range(6)),
                Fraction(rng.randint(-3, 3)),
                (rng.randint(-2, 2), rng.randint(-2, 2)),
            )

        a, b = rand_exact(), rand_exact()
        exact = group.mul(a, b)

        def to_num(g):
            return (
                np.array([float(g[0][0]), float(g[0][1])]),
                np.array([float(x) for x in g[1]]),
                float(g[2]),
                np.array([float(g[3][0]), float(g[3][1])]),
            )

        approx = num.mul(to_num(a), to_num(b))
        exact_n = to_num(exact)
        for u, v in zip(approx, exact_n):
            assert np.abs(np.asarray(u) - np.asarray(v)).max() < 1e-9


def test_rotation_trivial_on_torus_lattice():
    # e^{rho(t)} = id for t in the l-lattice: integer mu coordinates mean
    # the numeric rotation at integer tau is the identity
    num = DqNumeric(3, MU3)
    a = np.array([1.0, 2.0, -3.0, 0.5, 0.25, -1.0])
    for tau in ((1, 0), (0, 1), (3, -2)):
        assert np.abs(num._rot(tau, a) - a).max() < 1e-12


# -- the truncated-series cross-check --------------------------------------------


def test_bch_crosscheck_spec_examples():
    group = DqExact(3, MU3)
    one = Fraction(1)
    # basis pair: equality with nontrivial central and s parts
    res = bch_crosscheck_Ell(group, (one, 0), (0, one))
    assert res.equal and res.closed_form[1] == 1
    # alpha(t, t) = 0: product is l(2t) exactly
    res = bch_crosscheck_Ell(group, (one, one), (one, one))
    assert res.equal and res.closed_form == ((Fraction(0), Fraction(0)), Fraction(0))
    # inverse: l(T1) l(-T1) is the identity
    res = bch_crosscheck_Ell(group, (one, 0), (-one, 0))
    assert res.equal and res.closed_form == ((Fraction(0), Fraction(0)), Fraction(0))


def test_bch_crosscheck_rational_grid_small():
    group = DqExact(0, [], D0_UNITS)
    for i in range(5):
        for j in range(5):
            t1 = (Fraction(i - 2, 3), Fraction(2 * i + 1, 5))
            t2 = (Fraction(j - 2, 2), Fraction(3 * j - 1, 7))
            assert bch_crosscheck_Ell(group, t1, t2).equal


# -- lattices ---------------------------------------------------------------------


def test_build_lattice_t1_generators():
    lat = build_lattice_T1(QUAD, 1)
    assert len(lat.generators) == 6  # central + 4 basis + cyclic
    for g in lat.generators:
        assert lat.group.is_member(g)
    rep = closure_check(lat, 2)
    assert rep.distinct_elements > 1


def test_t1_conjugation_stays_in_lattice():
    lat = build_lattice_T1(QUAD, 1)
    gamma = lat.group
    t = (Fraction(0), (0, 0, 0, 0), 1)
    for i in range(4):
        v = tuple(int(i == j) for j in range(4))
        conj = gamma.mul(gamma.mul(t, (Fraction(0), v, 0)), gamma.inv(t))
        assert gamma.is_member(conj)


def test_build_lattice_t2_osc2():
    lat = build_lattice_T2(rational_mu_t2(MU3))
    group = lat.group
    # omega(Lambda, Lambda) lands in the dual lattice (integer coordinates)
    rng = random.Random(12)
    for _ in range(50):
        a = tuple(Fraction(rng.randint(-3, 3)) for _ in range(6))
        b = tuple(Fraction(rng.randint(-3, 3)) for _ in range(6))
        w = group.omega(a, b)
        assert w[0].denominator == 1 and w[1].denominator == 1


def test_build_lattice_t2_d3_products():
    lat = build_lattice_T2(rational_mu_t2(MU3, family="d"))
    group = lat.group
    l1 = ((Fraction(0), Fraction(0)), (Fraction(0),) * 6, Fraction(0), (1, 0))
    l2 = ((Fraction(0), Fraction(0)), (Fraction(0),) * 6, Fraction(0), (0, 1))
    assert group.is_member(group.mul(l1, l2))
    # s * t-flat stays in the half z-lattice for lattice s and torus t
    s_unit = ((Fraction(0), Fraction(0)), (Fraction(0),) * 6, Fraction(1), (0, 0))
    conj = group.mul(group.mul(l1, s_unit), group.inv(l1))
    assert group.is_member(conj)


def test_build_lattice_t2_rejects_non_lattice():
    from salemlattices.criteria import MuSpecT2
    from salemlattices.symbols import SymbolicReal, sqrt_symbol

    s2 = sqrt_symbol(2)
    mu = MuSpecT2(
        (
            (SymbolicReal.rational(1), SymbolicReal.rational(0)),
            (SymbolicReal.from_terms([(s2, 1)]), SymbolicReal.rational(0)),
        ),
        family="d",
    )
    with pytest.raises(NotInLattice):
        build_lattice_T2(mu)


def test_closure_negative_control():
    lat = build_lattice_T1(QUAD, 1)
    # shift the central generator by a third of its lattice unit
    bad = lat.with_generator(0, (Fraction(1, 2) + Fraction(1, 6), (0,) * 4, 0))
    with pytest.raises(ClosureViolation):
        closure_check(bad, 2)
    latd = build_lattice_T2(rational_mu_t2(MU3, family="d"))
    s_index = 2 + 6  # after z units and a units
    z, a, s, t = latd.generators[s_index]
    bad = latd.with_generator(s_index, (z, a, s + Fraction(1, 3), t))
    with pytest.raises(ClosureViolation):
        closure_check(bad, 2)


def test_lattice_json_roundtrip():
    for lat, length in (
        (build_lattice_T1(QUAD, 1), 2),
        (build_lattice_T2(rational_mu_t2(MU3)), 2),
        (build_lattice_T2(rational_mu_t2(MU3, family="d")), 2),
        (build_lattice_T2(rational_mu_t2([], family="d")), 2),
    ):
        data = lat.to_json()
        back = lattice_from_json(data)
        assert back.family == lat.family
        assert back.generators == lat.generators
        assert closure_check(back, length).products_checked > 0
