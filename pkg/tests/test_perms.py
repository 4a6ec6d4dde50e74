"""Permutation operations against independent table-level oracles."""

import itertools
import random

import pytest
from hypothesis import given, strategies as st

from csgroups import perms


def face_table(i, p):
    """Delete the pair (source, value) with value i from the function
    table and compact both coordinate ranges by rank."""
    pairs = [(s, v) for s, v in enumerate(p) if v != i]
    srcs = sorted(s for s, _ in pairs)
    vals = sorted(v for _, v in pairs)
    image = {srcs.index(s): vals.index(v) for s, v in pairs}
    return tuple(image[j] for j in range(len(image)))


def degeneracy_table(i, p):
    """Duplicate the point with value i: a fresh source right after
    p^-1(i) pairs with a fresh value right after i."""
    a = p.index(i)
    pairs = [(s + (1 if s > a else 0), v + (1 if v > i else 0))
             for s, v in enumerate(p)]
    pairs.append((a + 1, i + 1))
    image = dict(pairs)
    return tuple(image[j] for j in range(len(image)))


def inversion_pairs(p):
    return sum(1 for a, b in itertools.combinations(range(len(p)), 2)
               if p[a] > p[b])


@st.composite
def random_perm_st(draw, max_level=4):
    n = draw(st.integers(min_value=0, max_value=max_level))
    word = list(range(n + 1))
    draw(st.randoms(use_true_random=False)).shuffle(word)
    return tuple(word)


def test_compose_inverse_examples():
    assert perms.compose((1, 0, 2), (2, 0, 1)) == (2, 1, 0)
    assert perms.inverse((1, 2, 0)) == (2, 0, 1)
    assert perms.compose((1, 0), (1, 0)) == (0, 1)


@given(random_perm_st(), random_perm_st(), random_perm_st())
def test_group_laws(p, q, r):
    n = max(len(p), len(q), len(r)) - 1
    p, q, r = (perm + tuple(range(len(perm), n + 1)) for perm in (p, q, r))
    assert perms.compose(perms.compose(p, q), r) == perms.compose(p, perms.compose(q, r))
    assert perms.compose(p, perms.inverse(p)) == perms.identity(n)
    assert perms.compose(p, perms.identity(n)) == p


def test_face_matches_table_oracle():
    for n in range(1, 5):
        for p in perms.all_perms(n):
            for i in range(n + 1):
                assert perms.face_perm(i, p) == face_table(i, p)


def test_degeneracy_matches_table_oracle():
    for n in range(4):
        for p in perms.all_perms(n):
            for i in range(n + 1):
                assert perms.degeneracy_perm(i, p) == degeneracy_table(i, p)


def test_face_degeneracy_frozen_values():
    assert perms.face_perm(0, (1, 2, 0)) == (0, 1)
    assert perms.face_perm(2, (1, 2, 0)) == (1, 0)
    assert perms.degeneracy_perm(0, (1, 0)) == (2, 0, 1)
    assert perms.degeneracy_perm(1, (1, 0)) == (1, 2, 0)
    for n in range(4):
        for i in range(n + 1):
            assert perms.degeneracy_perm(i, perms.identity(n)) == perms.identity(n + 1)
            if n >= 1:
                assert perms.face_perm(i, perms.identity(n)) == perms.identity(n - 1)


def test_end_insertions():
    assert perms.s_right_perm((1, 0)) == (1, 0, 2)
    assert perms.s_left_perm((1, 0)) == (0, 2, 1)
    for p in perms.all_perms(2):
        for q in perms.all_perms(2):
            pq = perms.compose(p, q)
            assert perms.s_left_perm(pq) == perms.compose(
                perms.s_left_perm(p), perms.s_left_perm(q))
            assert perms.s_right_perm(pq) == perms.compose(
                perms.s_right_perm(p), perms.s_right_perm(q))


def test_block_substitute_frozen_values():
    assert perms.block_substitute((1, 0), 0, (1, 0)) == (2, 1, 0)
    assert perms.block_substitute((0, 1), 0, (1, 0)) == (1, 0, 2)
    for n in range(3):
        for p in perms.all_perms(n):
            for i in range(n + 1):
                assert perms.block_substitute(p, i, (0,)) == p


def test_block_substitute_unit_and_levels():
    rng = random.Random(0)
    for _ in range(50):
        n, m = rng.randint(0, 3), rng.randint(0, 3)
        p = perms.random_perm(rng, n)
        q = perms.random_perm(rng, m)
        i = rng.randint(0, n)
        out = perms.block_substitute(p, i, q)
        assert len(out) == n + m + 1
        assert perms.is_perm(out)


def test_transport_identities_exhaustive():
    for n in range(1, 5):
        for p in perms.all_perms(n):
            for j in range(1, n + 1):
                for i in range(j):
                    for kind in ("face-above", "face-below",
                                 "degeneracy-below", "degeneracy-above"):
                        assert perms.transport_holds(kind, p, i, j), (kind, p, i, j)


def test_transport_block_exhaustive():
    for n in range(3):
        for m in range(3):
            for p in perms.all_perms(n):
                for q in perms.all_perms(m):
                    for i in range(n + 1):
                        for j in range(m + 1):
                            assert perms.transport_holds("block", p, i, j, q)


def test_inversions():
    assert perms.inversions((0, 1, 2)) == 0
    assert perms.inversions((2, 1, 0)) == 3
    for p in perms.all_perms(3):
        assert perms.inversions(p) == inversion_pairs(p)


def test_parse_format_roundtrip():
    assert perms.parse_perm("[1, 0, 2]") == (1, 0, 2)
    assert perms.format_perm((1, 0, 2)) == "[1,0,2]"
    with pytest.raises(ValueError):
        perms.parse_perm("[0, 0]")
    with pytest.raises(ValueError):
        perms.parse_perm("1,0")


def test_index_errors():
    with pytest.raises(ValueError):
        perms.face_perm(0, (0,))
    with pytest.raises(IndexError):
        perms.face_perm(3, (1, 0, 2))
    with pytest.raises(IndexError):
        perms.degeneracy_perm(4, (1, 0, 2))
