"""Partial compositions, their axioms, and the equivariance search."""

import random

import pytest

from csgroups import BRAID, SYMMETRIC
from csgroups import braids, groupoid, operad, perms
from csgroups.groupoid import GroupoidArrow


def test_circ_frozen_values():
    a = SYMMETRIC.element((1, 0))
    assert operad.circ_set(SYMMETRIC, a, 0, a).payload == (2, 1, 0)
    one0 = SYMMETRIC.one(0)
    assert operad.circ_set(SYMMETRIC, a, 0, one0).payload == (1, 0)
    assert operad.circ_set(SYMMETRIC, a, 1, one0).payload == (1, 0)
    assert operad.circ_set(SYMMETRIC, one0, 0, a).payload == (1, 0)
    with pytest.raises(IndexError):
        operad.circ_set(SYMMETRIC, a, 2, a)


def test_circ_equals_block_oracle():
    for n in range(4):
        for m in range(4):
            for a in SYMMETRIC.elements(n):
                for b in SYMMETRIC.elements(m):
                    for i in range(n + 1):
                        assert operad.circ_set(SYMMETRIC, a, i, b).payload == \
                            perms.block_substitute(a.payload, i, b.payload)


def test_circ_braid_levels_and_projection():
    rng = random.Random(0)
    for _ in range(50):
        n = rng.randint(0, 2)
        m = rng.randint(0, 2)
        a = BRAID.random_element(rng, n, 5)
        b = BRAID.random_element(rng, m, 5)
        i = rng.randint(0, n)
        out = operad.circ_set(BRAID, a, i, b)
        assert out.level == n + m
        assert BRAID.underlying_perm(out) == perms.block_substitute(
            BRAID.underlying_perm(a), i, BRAID.underlying_perm(b))


def test_operadic_mult_identity():
    rng = random.Random(1)
    for _ in range(60):
        n = rng.randint(1, 2)
        m = rng.randint(0, 2)
        i = rng.randint(0, n)
        a, a2 = (BRAID.random_element(rng, n, 5) for _ in range(2))
        b, b2 = (BRAID.random_element(rng, m, 5) for _ in range(2))
        assert operad.check_operadic_mult(BRAID, a, a2, i, b, b2).ok
    for n in range(2):
        for a in SYMMETRIC.elements(n):
            for a2 in SYMMETRIC.elements(n):
                for b in SYMMETRIC.elements(1):
                    for b2 in SYMMETRIC.elements(1):
                        for i in range(n + 1):
                            assert operad.check_operadic_mult(
                                SYMMETRIC, a, a2, i, b, b2).ok


def test_circ_gpd_matches_components():
    rng = random.Random(2)
    for _ in range(40):
        n = rng.randint(0, 2)
        m = rng.randint(0, 2)
        i = rng.randint(0, n)
        x = groupoid.random_arrow(BRAID, rng, n, 5)
        v = groupoid.random_arrow(BRAID, rng, m, 5)
        out = operad.circ_gpd(BRAID, x, i, v)
        assert out.source == perms.block_substitute(x.source, i, v.source)
        j = perms.inverse(x.source)[i]
        expected = BRAID.inv(operad.circ_set(
            BRAID, BRAID.inv(x.f), j, BRAID.inv(v.f)))
        assert BRAID.equal(out.f, expected)
        assert out.level == n + m


def test_circ_gpd_symm_consistency():
    for n in range(2):
        for m in range(2):
            for xs in perms.all_perms(n):
                for xf in SYMMETRIC.elements(n):
                    for vs in perms.all_perms(m):
                        for vf in SYMMETRIC.elements(m):
                            x = GroupoidArrow(xs, xf)
                            v = GroupoidArrow(vs, vf)
                            for i in range(n + 1):
                                out = operad.circ_gpd(SYMMETRIC, x, i, v)
                                assert groupoid.target(SYMMETRIC, out) == \
                                    perms.block_substitute(
                                        groupoid.target(SYMMETRIC, x), i,
                                        groupoid.target(SYMMETRIC, v))


def test_circ_gpd_functorial():
    rng = random.Random(3)
    for _ in range(40):
        n = rng.randint(1, 2)
        m = rng.randint(0, 2)
        i = rng.randint(0, n)
        x = groupoid.random_arrow(BRAID, rng, n, 4)
        v = groupoid.random_arrow(BRAID, rng, m, 4)
        y = GroupoidArrow(groupoid.target(BRAID, x), BRAID.random_element(rng, n, 4))
        w = GroupoidArrow(groupoid.target(BRAID, v), BRAID.random_element(rng, m, 4))
        assert operad.check_circ_functorial(BRAID, x, y, i, v, w).ok


def test_shifted_axioms_exhaustive_small_symm():
    car = operad.SetCarrier(SYMMETRIC)
    els = [g for n in range(2) for g in SYMMETRIC.elements(n)]
    for lam in els:
        assert operad.check_shifted_units(car, lam).ok
        for mu in els:
            for nu in els:
                assert operad.check_shifted_axioms(car, lam, mu, nu).ok


def test_shifted_axioms_random_braid_both_carriers():
    rng = random.Random(4)
    for car in (operad.SetCarrier(BRAID), operad.GroupoidCarrier(BRAID)):
        for _ in range(25):
            lam, mu, nu = (car.random(rng, rng.randint(1, 2), 3) for _ in range(3))
            rep = operad.check_shifted_axioms(car, lam, mu, nu)
            assert rep.ok, rep.violations[0]


def test_unshifted_view():
    view = operad.shift_to_unshifted(operad.SetCarrier(SYMMETRIC))
    one0 = SYMMETRIC.one(0)
    a = SYMMETRIC.element((1, 0))
    assert view.arity(a) == 2
    assert view.arity(operad.STAR) == 0
    # unit laws
    assert view.equal(view.comp(view.unit(), 1, a), a)
    assert view.equal(view.comp(a, 1, view.unit()), a)
    assert view.equal(view.comp(a, 2, view.unit()), a)
    # composing with STAR is the face
    got = view.comp(a, 1, operad.STAR)
    assert view.equal(got, SYMMETRIC.face(0, a))
    assert view.comp(one0, 1, operad.STAR) is operad.STAR
    with pytest.raises(ValueError):
        view.comp(operad.STAR, 1, a)
    with pytest.raises(IndexError):
        view.comp(a, 3, view.unit())


def test_unshifted_axioms():
    rng = random.Random(5)
    view = operad.shift_to_unshifted(operad.SetCarrier(BRAID))
    for _ in range(30):
        lam = BRAID.random_element(rng, rng.randint(1, 2), 4)
        mu = operad.STAR if rng.random() < 0.3 else \
            BRAID.random_element(rng, rng.randint(0, 2), 4)
        nu = operad.STAR if rng.random() < 0.3 else \
            BRAID.random_element(rng, rng.randint(0, 2), 4)
        rep = operad.check_unshifted_axioms(view, lam, mu, nu)
        assert rep.ok, rep.violations[0]
    sview = operad.shift_to_unshifted(operad.SetCarrier(SYMMETRIC))
    els = [g for n in range(3) for g in SYMMETRIC.elements(n)]
    for lam in els[:9]:
        for mu in els[:9] + [operad.STAR]:
            for nu in els[:9] + [operad.STAR]:
                assert operad.check_unshifted_axioms(sview, lam, mu, nu).ok


def test_equivariance_literal_right_multiplication_fails():
    """The frozen minimal counterexample: with the plain right
    translation the padded acting element lands at the wrong slot."""
    car = operad.SetCarrier(SYMMETRIC)
    mu = SYMMETRIC.element((1, 0))
    nu = SYMMETRIC.one(1)
    beta = SYMMETRIC.element((1, 0))
    assert not operad.equivariance_condition1(car, "right-mul", mu, 0, nu, beta)
    assert operad.equivariance_condition1(car, "left-inv", mu, 0, nu, beta)


def test_equivariance_calibrated_readings():
    rng = random.Random(6)
    for car in (operad.SetCarrier(BRAID), operad.GroupoidCarrier(BRAID),
                operad.SetCarrier(SYMMETRIC), operad.GroupoidCarrier(SYMMETRIC)):
        inst = car.inst
        for _ in range(25):
            m = rng.randint(0, 2)
            n = rng.randint(0, 2)
            i = rng.randint(0, m)
            mu = car.random(rng, m, 4)
            nu = car.random(rng, n, 4)
            beta_inner = inst.random_element(rng, n, 4)
            beta_outer = inst.random_element(rng, m, 4)
            assert operad.equivariance_condition1(
                car, "left-inv", mu, i, nu, beta_inner)
            assert operad.equivariance_condition2(
                car, "left-inv", "sigma", "sigma", mu, i, nu, beta_outer)


def test_g_like_combined_report():
    car = operad.SetCarrier(SYMMETRIC)
    mu = SYMMETRIC.element((0, 2, 1))
    nu = SYMMETRIC.element((1, 0))
    beta_inner = SYMMETRIC.element((1, 0))
    beta_outer = SYMMETRIC.element((2, 0, 1))
    verdicts = operad.check_g_like_equivariance(car, mu, 1, nu,
                                                beta_inner, beta_outer)
    assert verdicts["cond1/left-inv"] is True
    assert verdicts["cond2/left-inv/slot=sigma/deg=sigma"] is True
    assert any(k.startswith("cond2/right-mul") for k in verdicts)
