"""
Permutations of [n] = {0, ..., n} in one-line notation.

A permutation at level n is a tuple (s(0), ..., s(n)) of n + 1 distinct
integers; levels count points minus one, so the level-n group acts on
n + 1 points.  Composition is right-to-left: compose(g, h) applies h
first, i.e. compose(g, h)(x) = g(h(x)).

The simplicial structure: the face at index i removes the point whose
value is i (the source position inverse(s)[i] and the value i are both
deleted, and the remaining sources and values are compacted); the
degeneracy at i doubles that point.  s_left and s_right insert a fresh
fixed point at the left or right end and are group homomorphisms.

block_substitute expands the point i of the outer permutation into a
block of m + 1 consecutive points carrying an inner permutation; it is
the direct, table-level form of partial composition and serves as the
oracle the structural formula is checked against.
"""

from __future__ import annotations

import itertools
import random
from typing import Iterator, Sequence

Perm = tuple[int, ...]


def is_perm(word: Sequence[int]) -> bool:
    """
    >>> [is_perm(w) for w in [(0,), (1, 0), (0, 2), (0, 0)]]
    [True, True, False, False]
    """
    return sorted(word) == list(range(len(word)))


def identity(n: int) -> Perm:
    """The identity at level n (on n + 1 points)."""
    if n < 0:
        raise ValueError(f"level must be >= 0, got {n}")
    return tuple(range(n + 1))


def compose(g: Perm, h: Perm) -> Perm:
    """
    compose(g, h)(x) = g(h(x)): h acts first.

    >>> compose((1, 0, 2), (2, 0, 1))
    (2, 1, 0)
    """
    if len(g) != len(h):
        raise ValueError(f"cannot compose permutations on {len(g)} and {len(h)} points")
    return tuple(g[x] for x in h)


def inverse(p: Perm) -> Perm:
    """
    >>> inverse((1, 2, 0))
    (2, 0, 1)
    """
    inv = [0] * len(p)
    for src, val in enumerate(p):
        inv[val] = src
    return tuple(inv)


def transposition(n: int, k: int) -> Perm:
    """The adjacent swap of k and k + 1 at level n."""
    if not 0 <= k < n:
        raise IndexError(f"transposition index {k} out of range at level {n}")
    word = list(range(n + 1))
    word[k], word[k + 1] = word[k + 1], word[k]
    return tuple(word)


def inversions(p: Perm) -> int:
    """Number of pairs a < b with p(a) > p(b)."""
    return sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])


def face_perm(i: int, p: Perm) -> Perm:
    """
    Delete the point with value i: the source position inverse(p)[i] and
    the value i are removed and both gaps are closed.

    >>> face_perm(0, (1, 2, 0))
    (0, 1)
    >>> face_perm(2, (1, 2, 0))
    (1, 0)
    """
    n = len(p) - 1
    if n < 1:
        raise ValueError("cannot take a face at level 0")
    if not 0 <= i <= n:
        raise IndexError(f"face index {i} out of range at level {n}")
    a = p.index(i)
    out = []
    for j in range(n):
        jj = j if j < a else j + 1
        out.append(p[jj] - 1 if p[jj] > i else p[jj])
    return tuple(out)


def degeneracy_perm(i: int, p: Perm) -> Perm:
    """
    Double the point with value i: source position a = inverse(p)[i]
    becomes two positions a, a + 1 with values i, i + 1, and all other
    values >= i + 1 shift up.

    >>> degeneracy_perm(0, (1, 0))
    (2, 0, 1)
    >>> degeneracy_perm(1, (1, 0))
    (1, 2, 0)
    """
    n = len(p) - 1
    if not 0 <= i <= n:
        raise IndexError(f"degeneracy index {i} out of range at level {n}")
    a = p.index(i)
    out = []
    for j in range(n + 2):
        if j < a:
            out.append(p[j] + 1 if p[j] > i else p[j])
        elif j in (a, a + 1):
            out.append(i + (j - a))
        else:
            out.append(p[j - 1] + 1 if p[j - 1] > i else p[j - 1])
    return tuple(out)


def s_left_perm(p: Perm) -> Perm:
    """
    Add a fixed point at the left end: (0, p(0)+1, ..., p(n)+1).

    >>> s_left_perm((1, 0))
    (0, 2, 1)
    """
    return (0,) + tuple(v + 1 for v in p)


def s_right_perm(p: Perm) -> Perm:
    """
    Add a fixed point at the right end: (p(0), ..., p(n), n+1).

    >>> s_right_perm((1, 0))
    (1, 0, 2)
    """
    return p + (len(p),)


def block_substitute(p: Perm, i: int, q: Perm) -> Perm:
    """
    Substitute q for the point i of p.  The source position a =
    inverse(p)[i] grows into the block [a, a+m] and the value i into the
    value block [i, i+m], with q acting inside the block.

    >>> block_substitute((1, 0), 0, (1, 0))
    (2, 1, 0)
    >>> block_substitute((0, 1), 0, (1, 0))
    (1, 0, 2)
    """
    n = len(p) - 1
    m = len(q) - 1
    if not 0 <= i <= n:
        raise IndexError(f"block index {i} out of range at level {n}")
    a = p.index(i)
    out = []
    for pos in range(n + m + 1):
        if pos < a:
            out.append(p[pos] + m if p[pos] > i else p[pos])
        elif pos <= a + m:
            out.append(i + q[pos - a])
        else:
            out.append(p[pos - m] + m if p[pos - m] > i else p[pos - m])
    return tuple(out)


# Case-split identities describing how inverse images transport through
# faces, degeneracies and block substitution.  Each kind names the value
# being chased and the operator it is chased through.
TRANSPORT_KINDS = (
    "face-above",        # d_i(s)^-1(j-1) in terms of s^-1(j), for i < j
    "face-below",        # d_j(s)^-1(i) in terms of s^-1(i), for i < j
    "degeneracy-below",  # s_j(s)^-1(i) in terms of s^-1(i), for i < j
    "block",             # (p o_i q)^-1(i+j) = p^-1(i) + q^-1(j)
    "degeneracy-above",  # s_i(s)^-1(j+1) in terms of s^-1(j), for i < j
)


def transport_holds(kind: str, p: Perm, i: int, j: int, q: Perm | None = None) -> bool:
    """Check one inverse-transport identity for the given inputs."""
    pinv = inverse(p)
    if kind == "face-above":
        lhs = inverse(face_perm(i, p))[j - 1]
        rhs = pinv[j] - 1 if pinv[i] < pinv[j] else pinv[j]
        return lhs == rhs
    if kind == "face-below":
        lhs = inverse(face_perm(j, p))[i]
        rhs = pinv[i] - 1 if pinv[j] < pinv[i] else pinv[i]
        return lhs == rhs
    if kind == "degeneracy-below":
        lhs = inverse(degeneracy_perm(j, p))[i]
        rhs = pinv[i] + 1 if pinv[j] < pinv[i] else pinv[i]
        return lhs == rhs
    if kind == "block":
        assert q is not None
        lhs = inverse(block_substitute(p, i, q))[i + j]
        rhs = pinv[i] + inverse(q)[j]
        return lhs == rhs
    if kind == "degeneracy-above":
        lhs = inverse(degeneracy_perm(i, p))[j + 1]
        rhs = pinv[j] if pinv[j] < pinv[i] else pinv[j] + 1
        return lhs == rhs
    raise ValueError(f"unknown transport kind {kind!r}")


def all_perms(n: int) -> Iterator[Perm]:
    """All permutations at level n, in lexicographic order."""
    return itertools.permutations(range(n + 1))


def random_perm(rng: random.Random, n: int) -> Perm:
    word = list(range(n + 1))
    rng.shuffle(word)
    return tuple(word)


def format_perm(p: Perm) -> str:
    """Bracketed comma list, e.g. '[1,0,2]'."""
    return "[" + ",".join(str(v) for v in p) + "]"


def parse_perm(text: str) -> Perm:
    """
    Parse '[1,0,2]' (whitespace tolerated) into a permutation.

    >>> parse_perm("[1, 0, 2]")
    (1, 0, 2)
    """
    body = text.strip()
    if not (body.startswith("[") and body.endswith("]")):
        raise ValueError(f"permutation literal must be bracketed: {text!r}")
    inner = body[1:-1].strip()
    if not inner:
        raise ValueError("empty permutation literal; the smallest level is [0]")
    try:
        word = tuple(int(part) for part in inner.split(","))
    except ValueError:
        raise ValueError(f"bad permutation literal {text!r}") from None
    if not is_perm(word):
        raise ValueError(f"{text!r} is not a permutation of 0..{len(word) - 1}")
    return word
