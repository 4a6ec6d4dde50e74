"""The instance interface and the crossed-law checkers on both families."""

import random

import pytest

from csgroups import BRAID, SYMMETRIC, LevelMismatch
from csgroups import braids, core, perms


def test_group_axioms_exhaustive_symm():
    for n in range(4):
        els = list(SYMMETRIC.elements(n))
        one = SYMMETRIC.one(n)
        for g in els:
            assert SYMMETRIC.equal(SYMMETRIC.mul(g, one), g)
            assert SYMMETRIC.equal(SYMMETRIC.mul(SYMMETRIC.inv(g), g), one)
            for h in els:
                for k in els:
                    assert SYMMETRIC.equal(
                        SYMMETRIC.mul(SYMMETRIC.mul(g, h), k),
                        SYMMETRIC.mul(g, SYMMETRIC.mul(h, k)))


def test_group_axioms_random_braid():
    rng = random.Random(0)
    for _ in range(60):
        n = rng.randint(1, 4)
        g, h, k = (BRAID.random_element(rng, n, 8) for _ in range(3))
        one = BRAID.one(n)
        assert BRAID.equal(BRAID.mul(g, one), g)
        assert BRAID.equal(BRAID.mul(BRAID.inv(g), g), one)
        assert BRAID.equal(BRAID.mul(BRAID.mul(g, h), k),
                           BRAID.mul(g, BRAID.mul(h, k)))


def test_mul_examples():
    assert SYMMETRIC.mul(SYMMETRIC.element((1, 0)),
                         SYMMETRIC.element((1, 0))).payload == (0, 1)
    assert SYMMETRIC.mul(SYMMETRIC.element((1, 0, 2)),
                         SYMMETRIC.element((2, 0, 1))).payload == (2, 1, 0)
    assert SYMMETRIC.inv(SYMMETRIC.element((1, 2, 0))).payload == (2, 0, 1)
    with pytest.raises(LevelMismatch):
        SYMMETRIC.mul(SYMMETRIC.one(1), SYMMETRIC.one(2))


def test_projection_is_homomorphism():
    rng = random.Random(1)
    for inst in (SYMMETRIC, BRAID):
        for _ in range(40):
            n = rng.randint(1, 4)
            g = inst.random_element(rng, n, 8)
            h = inst.random_element(rng, n, 8)
            assert inst.underlying_perm(inst.mul(g, h)) == perms.compose(
                inst.underlying_perm(g), inst.underlying_perm(h))
            assert inst.underlying_perm(inst.one(n)) == perms.identity(n)


def test_projection_commutes_with_structure():
    rng = random.Random(2)
    for inst in (SYMMETRIC, BRAID):
        for _ in range(40):
            n = rng.randint(1, 3)
            m = rng.randint(0, 3)
            g = inst.random_element(rng, n, 6)
            h = inst.random_element(rng, m, 6)
            pg = inst.underlying_perm(g)
            ph = inst.underlying_perm(h)
            for i in range(n + 1):
                assert inst.underlying_perm(inst.face(i, g)) == perms.face_perm(i, pg)
                assert inst.underlying_perm(inst.degeneracy(i, g)) == \
                    perms.degeneracy_perm(i, pg)
            assert inst.underlying_perm(inst.s_left(g)) == perms.s_left_perm(pg)
            assert inst.underlying_perm(inst.s_right(g)) == perms.s_right_perm(pg)
            assert inst.underlying_perm(inst.pad(g, 2, 1)) == \
                perms.s_left_perm(perms.s_left_perm(perms.s_right_perm(pg)))
            assert inst.underlying_perm(inst.boxplus(g, h)) == SYMMETRIC.boxplus(
                SYMMETRIC.element(pg), SYMMETRIC.element(ph)).payload


def test_pad_boxplus_frozen_values():
    g = SYMMETRIC.element((1, 0))
    h = SYMMETRIC.element((0,))
    assert SYMMETRIC.pad(g, 0, 1).payload == (1, 0, 2)
    assert SYMMETRIC.pad(g, 0, 0).payload == (1, 0)
    assert SYMMETRIC.pad(g, 1, 1).payload == (0, 2, 1, 3)
    assert SYMMETRIC.boxplus(g, h).payload == (1, 0, 2)
    assert SYMMETRIC.boxplus(h, g).payload == (0, 2, 1)
    assert SYMMETRIC.boxplus(SYMMETRIC.one(1), SYMMETRIC.one(2)).payload == \
        perms.identity(4)
    b = BRAID.element(braids.generator(1, 0))
    assert BRAID.s_right(b).payload.letters == ((0, 1),)
    assert BRAID.s_left(b).payload.letters == ((1, 1),)
    assert BRAID.boxplus(b, b).payload.letters == ((0, 1), (2, 1))


def test_checkers_symm_exhaustive():
    for n in range(3):
        els = list(SYMMETRIC.elements(n))
        for g in els:
            assert core.check_simplicial_identities(SYMMETRIC, g).ok
            assert core.check_extra_degeneracy(SYMMETRIC, g).ok
            for h in els:
                for i in range(n + 1):
                    assert core.check_crossed_identities(SYMMETRIC, g, h, i).ok


def test_checkers_braid_random():
    rng = random.Random(3)
    for _ in range(80):
        n = rng.randint(1, 4)
        g = BRAID.random_element(rng, n, 8)
        h = BRAID.random_element(rng, n, 8)
        i = rng.randint(0, n)
        assert core.check_crossed_identities(BRAID, g, h, i).ok
        assert core.check_simplicial_identities(BRAID, g).ok
        assert core.check_extra_degeneracy(BRAID, g).ok


def test_monoidal_operadic_checkers():
    rng = random.Random(4)
    for _ in range(60):
        n = rng.randint(1, 2)
        m = rng.randint(0, 2)
        g = BRAID.random_element(rng, n, 5)
        h = BRAID.random_element(rng, m, 5)
        assert core.check_monoidal(BRAID, g, h).ok
        assert core.check_operadic(BRAID, g, h, rng.randint(0, n)).ok
    for n in range(2):
        for m in range(2):
            for g in SYMMETRIC.elements(n):
                for h in SYMMETRIC.elements(m):
                    assert core.check_monoidal(SYMMETRIC, g, h).ok
                    for i in range(n + 1):
                        assert core.check_operadic(SYMMETRIC, g, h, i).ok


def test_pure_homomorphism_checker():
    rng = random.Random(5)
    for _ in range(40):
        n = rng.randint(1, 3)
        g = BRAID.random_element(rng, n, 8)
        p = BRAID.mul(g, BRAID.inv(BRAID.section(BRAID.underlying_perm(g))))
        assert BRAID.is_pure(p)
        q = BRAID.random_element(rng, n, 8)
        assert core.check_pure_homomorphism(BRAID, p, q, rng.randint(0, n)).ok
    with pytest.raises(ValueError):
        core.check_pure_homomorphism(
            BRAID, BRAID.element(braids.generator(1, 0)), BRAID.one(1), 0)


def test_report_shape():
    rep = core.check_crossed_identities(
        SYMMETRIC, SYMMETRIC.one(1), SYMMETRIC.one(1), 0)
    assert rep.ok and rep.cases == 2 and rep.violations == ()
    merged = core.merge_reports("combined", [rep, rep])
    assert merged.cases == 4 and merged.ok


def test_section_and_parse():
    assert SYMMETRIC.section((1, 0, 2)).payload == (1, 0, 2)
    assert BRAID.section((1, 0, 2)).payload.letters == ((0, 1),)
    assert SYMMETRIC.parse_at("[1,0]", 1).payload == (1, 0)
    with pytest.raises(ValueError):
        SYMMETRIC.parse_at("[1,0]", 2)
    assert BRAID.parse_at("s1 s1", 2).payload.letters == ((0, 1), (0, 1))
    assert BRAID.format(BRAID.one(2)) == "1@2"
    assert SYMMETRIC.format(SYMMETRIC.one(1)) == "[0,1]"
