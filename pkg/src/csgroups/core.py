"""
The crossed simplicial group interface and its two concrete families.

An instance bundles the group operations of one family (symmetric or
braid) at every level, together with the face and degeneracy maps, the
two end insertions s_left and s_right, and the projection onto
permutations.  Faces and degeneracies are not homomorphisms; instead
they satisfy the crossed identities

    d_i(g h) = d_i(g) d_{a}(h),   s_i(g h) = s_i(g) s_{a}(h),

where a is the image of i under the inverse of g's underlying
permutation.  The checkers at the bottom of this module turn these and
the related laws (plain simplicial identities, extra degeneracies,
commuting paddings, the degeneracy-conjugation law used by the partial
compositions) into structured reports that name the failing identity
and its inputs.
"""

from __future__ import annotations

import dataclasses
import random
from typing import Iterator

from . import braids, perms
from .perms import Perm


class LevelMismatch(ValueError):
    pass


@dataclasses.dataclass(frozen=True)
class CsgElement:
    """A level-tagged element; the payload type is fixed by the instance."""

    level: int
    payload: object


@dataclasses.dataclass(frozen=True)
class Violation:
    identity: str
    inputs: str


@dataclasses.dataclass(frozen=True)
class CheckReport:
    name: str
    cases: int
    violations: tuple[Violation, ...]

    @property
    def ok(self) -> bool:
        return not self.violations


def merge_reports(name: str, reports) -> CheckReport:
    cases = 0
    violations: list[Violation] = []
    for rep in reports:
        cases += rep.cases
        violations.extend(rep.violations)
    violations.sort(key=lambda v: (v.identity, v.inputs))
    return CheckReport(name, cases, tuple(violations))


class CsgInstance:
    """Operations of one crossed simplicial group family."""

    name = "?"

    # Family-specific primitives.

    def one(self, n: int) -> CsgElement:
        raise NotImplementedError

    def element(self, payload) -> CsgElement:
        raise NotImplementedError

    def mul(self, g: CsgElement, h: CsgElement) -> CsgElement:
        raise NotImplementedError

    def inv(self, g: CsgElement) -> CsgElement:
        raise NotImplementedError

    def face(self, i: int, g: CsgElement) -> CsgElement:
        raise NotImplementedError

    def degeneracy(self, i: int, g: CsgElement) -> CsgElement:
        raise NotImplementedError

    def underlying_perm(self, g: CsgElement) -> Perm:
        raise NotImplementedError

    def s_left(self, g: CsgElement) -> CsgElement:
        raise NotImplementedError

    def s_right(self, g: CsgElement) -> CsgElement:
        raise NotImplementedError

    def equal(self, g: CsgElement, h: CsgElement) -> bool:
        raise NotImplementedError

    def section(self, p: Perm) -> CsgElement:
        """A positive lift through the projection, compatible with faces
        and degeneracies."""
        raise NotImplementedError

    def format(self, g: CsgElement) -> str:
        raise NotImplementedError

    def parse_at(self, text: str, level: int) -> CsgElement:
        raise NotImplementedError

    def random_element(self, rng: random.Random, n: int, max_len: int = 12) -> CsgElement:
        raise NotImplementedError

    def elements(self, n: int) -> Iterator[CsgElement]:
        raise NotImplementedError(f"{self.name} levels are not enumerable")

    # Derived operations, shared by all families.

    def _require_same_level(self, g: CsgElement, h: CsgElement):
        if g.level != h.level:
            raise LevelMismatch(f"levels {g.level} and {h.level} differ")

    def is_pure(self, g: CsgElement) -> bool:
        return self.underlying_perm(g) == perms.identity(g.level)

    def degeneracy_power(self, i: int, m: int, g: CsgElement) -> CsgElement:
        """Apply the degeneracy at the literal index i, m times."""
        for _ in range(m):
            g = self.degeneracy(i, g)
        return g

    def pad(self, g: CsgElement, left: int, right: int) -> CsgElement:
        """Insert `left` trivial points on the left and `right` on the
        right, landing at level g.level + left + right."""
        for _ in range(right):
            g = self.s_right(g)
        for _ in range(left):
            g = self.s_left(g)
        return g

    def boxplus(self, g: CsgElement, h: CsgElement) -> CsgElement:
        """Juxtaposition product at level n + m + 1."""
        n, m = g.level, h.level
        return self.mul(self.pad(g, 0, m + 1), self.pad(h, n + 1, 0))


class SymmetricCsg(CsgInstance):
    """Permutation groups; the projection is the identity."""

    name = "symm"

    def one(self, n: int) -> CsgElement:
        return CsgElement(n, perms.identity(n))

    def element(self, payload) -> CsgElement:
        word = tuple(payload)
        if not perms.is_perm(word):
            raise ValueError(f"{payload!r} is not a permutation")
        return CsgElement(len(word) - 1, word)

    def mul(self, g, h):
        self._require_same_level(g, h)
        return CsgElement(g.level, perms.compose(g.payload, h.payload))

    def inv(self, g):
        return CsgElement(g.level, perms.inverse(g.payload))

    def face(self, i, g):
        return CsgElement(g.level - 1, perms.face_perm(i, g.payload))

    def degeneracy(self, i, g):
        return CsgElement(g.level + 1, perms.degeneracy_perm(i, g.payload))

    def underlying_perm(self, g):
        return g.payload

    def s_left(self, g):
        return CsgElement(g.level + 1, perms.s_left_perm(g.payload))

    def s_right(self, g):
        return CsgElement(g.level + 1, perms.s_right_perm(g.payload))

    def equal(self, g, h):
        self._require_same_level(g, h)
        return g.payload == h.payload

    def section(self, p):
        return self.element(p)

    def format(self, g):
        return perms.format_perm(g.payload)

    def parse_at(self, text, level):
        word = perms.parse_perm(text)
        if len(word) - 1 != level:
            raise ValueError(f"{text!r} has level {len(word) - 1}, expected {level}")
        return CsgElement(level, word)

    def random_element(self, rng, n, max_len=12):
        return CsgElement(n, perms.random_perm(rng, n))

    def elements(self, n):
        return (CsgElement(n, p) for p in perms.all_perms(n))


class BraidCsg(CsgInstance):
    """Braid groups on level + 1 strands; equality via the free-group action."""

    name = "braid"

    def one(self, n: int) -> CsgElement:
        return CsgElement(n, braids.empty_word(n))

    def element(self, payload) -> CsgElement:
        if not isinstance(payload, braids.BraidWord):
            raise ValueError(f"expected a BraidWord, got {payload!r}")
        return CsgElement(payload.level, payload)

    def mul(self, g, h):
        self._require_same_level(g, h)
        return CsgElement(g.level, braids.concat(g.payload, h.payload))

    def inv(self, g):
        return CsgElement(g.level, braids.invert_word(g.payload))

    def face(self, i, g):
        return CsgElement(g.level - 1, braids.face_word(i, g.payload))

    def degeneracy(self, i, g):
        return CsgElement(g.level + 1, braids.degeneracy_word(i, g.payload))

    def underlying_perm(self, g):
        return braids.underlying_perm_word(g.payload)

    def s_left(self, g):
        return CsgElement(g.level + 1, braids.s_left_word(g.payload))

    def s_right(self, g):
        return CsgElement(g.level + 1, braids.s_right_word(g.payload))

    def equal(self, g, h):
        self._require_same_level(g, h)
        return braids.braids_equal(g.payload, h.payload)

    def section(self, p):
        return CsgElement(len(p) - 1, braids.permutation_braid(p))

    def format(self, g):
        return f"{braids.format_letters(g.payload)}@{g.level}"

    def parse_at(self, text, level):
        return CsgElement(level, braids.parse_letters(text, level))

    def random_element(self, rng, n, max_len=12):
        return CsgElement(n, braids.random_word(rng, n, max_len))


SYMMETRIC = SymmetricCsg()
BRAID = BraidCsg()

INSTANCES = {inst.name: inst for inst in (SYMMETRIC, BRAID)}


def _viol(inst: CsgInstance, identity: str, *gs) -> Violation:
    return Violation(identity, ", ".join(inst.format(g) for g in gs))


def check_crossed_identities(inst: CsgInstance, g: CsgElement, h: CsgElement,
                             i: int) -> CheckReport:
    """d_i and s_i applied to a product, against the twisted-index form."""
    inst._require_same_level(g, h)
    n = g.level
    a = perms.inverse(inst.underlying_perm(g))[i]
    cases = 0
    bad: list[Violation] = []
    if n >= 1:
        cases += 1
        lhs = inst.face(i, inst.mul(g, h))
        rhs = inst.mul(inst.face(i, g), inst.face(a, h))
        if not inst.equal(lhs, rhs):
            bad.append(_viol(inst, f"d_{i}(g*h) == d_{i}(g)*d_{a}(h)", g, h))
    cases += 1
    lhs = inst.degeneracy(i, inst.mul(g, h))
    rhs = inst.mul(inst.degeneracy(i, g), inst.degeneracy(a, h))
    if not inst.equal(lhs, rhs):
        bad.append(_viol(inst, f"s_{i}(g*h) == s_{i}(g)*s_{a}(h)", g, h))
    return CheckReport("crossed", cases, tuple(bad))


def simplicial_report(x, n: int, face, degeneracy, equal, describe,
                      face_pairs=None, deg_pairs=None,
                      mixed_pairs=None) -> CheckReport:
    """
    The five families of simplicial identities on one object, for any
    carrier supplying face(i, x), degeneracy(i, x) and equality.  The
    pair arguments optionally restrict each family to the given (i, j)
    index pairs; out-of-range pairs for a family are skipped.
    """
    cases = 0
    bad: list[Violation] = []

    def run(label, lhs, rhs):
        nonlocal cases
        cases += 1
        if not equal(lhs, rhs):
            bad.append(Violation(label, describe(x)))

    if face_pairs is None:
        face_pairs = [(i, j) for j in range(n + 1) for i in range(j)]
    for i, j in face_pairs:
        if not (0 <= i < j <= n and n >= 2):
            continue
        run(f"d_{i} d_{j} == d_{j}-1 d_{i}",
            face(i, face(j, x)), face(j - 1, face(i, x)))

    if deg_pairs is None:
        deg_pairs = [(i, j) for j in range(n + 1) for i in range(j + 1)]
    for i, j in deg_pairs:
        if not 0 <= i <= j <= n:
            continue
        run(f"s_{i} s_{j} == s_{j}+1 s_{i}",
            degeneracy(i, degeneracy(j, x)),
            degeneracy(j + 1, degeneracy(i, x)))

    if mixed_pairs is None:
        mixed_pairs = [(i, j) for j in range(n + 1) for i in range(n + 2)]
    for i, j in mixed_pairs:
        if not (0 <= j <= n and 0 <= i <= n + 1):
            continue
        sj = degeneracy(j, x)
        if i < j:
            if n >= 1:
                run(f"d_{i} s_{j} == s_{j}-1 d_{i}",
                    face(i, sj), degeneracy(j - 1, face(i, x)))
        elif i in (j, j + 1):
            run(f"d_{i} s_{j} == id", face(i, sj), x)
        else:
            if n >= 1:
                run(f"d_{i} s_{j} == s_{j} d_{i}-1",
                    face(i, sj), degeneracy(j, face(i - 1, x)))

    return CheckReport("simplicial", cases, tuple(bad))


def check_simplicial_identities(inst: CsgInstance, g: CsgElement,
                                face_pairs=None, deg_pairs=None,
                                mixed_pairs=None) -> CheckReport:
    return simplicial_report(
        g, g.level, inst.face, inst.degeneracy, inst.equal, inst.format,
        face_pairs, deg_pairs, mixed_pairs)


def check_extra_degeneracy(inst: CsgInstance, g: CsgElement) -> CheckReport:
    """s_left as an extra degeneracy below index 0, s_right above index
    n, and the projection squares for both."""
    n = g.level
    cases = 0
    bad: list[Violation] = []

    def run(label, lhs, rhs):
        nonlocal cases
        cases += 1
        if not inst.equal(lhs, rhs):
            bad.append(_viol(inst, label, g))

    left, right = inst.s_left(g), inst.s_right(g)
    run("d_0 sL == id", inst.face(0, left), g)
    run(f"d_{n + 1} sR == id", inst.face(n + 1, right), g)
    for i in range(n + 1):
        run(f"s_{i + 1} sL == sL s_{i}",
            inst.degeneracy(i + 1, left), inst.s_left(inst.degeneracy(i, g)))
        run(f"s_{i} sR == sR s_{i}",
            inst.degeneracy(i, right), inst.s_right(inst.degeneracy(i, g)))
    if n >= 1:
        for i in range(n + 1):
            run(f"d_{i + 1} sL == sL d_{i}",
                inst.face(i + 1, left), inst.s_left(inst.face(i, g)))
            run(f"d_{i} sR == sR d_{i}",
                inst.face(i, right), inst.s_right(inst.face(i, g)))

    cases += 2
    if inst.underlying_perm(left) != perms.s_left_perm(inst.underlying_perm(g)):
        bad.append(_viol(inst, "perm(sL g) == sL(perm g)", g))
    if inst.underlying_perm(right) != perms.s_right_perm(inst.underlying_perm(g)):
        bad.append(_viol(inst, "perm(sR g) == sR(perm g)", g))

    return CheckReport("extra-degeneracy", cases, tuple(bad))


def check_monoidal(inst: CsgInstance, g: CsgElement, h: CsgElement) -> CheckReport:
    """The two paddings entering the juxtaposition product commute."""
    n, m = g.level, h.level
    a = inst.pad(g, 0, m + 1)
    b = inst.pad(h, n + 1, 0)
    ok = inst.equal(inst.mul(a, b), inst.mul(b, a))
    bad = () if ok else (_viol(inst, "pad(g)*pad(h) == pad(h)*pad(g)", g, h),)
    return CheckReport("monoidal", 1, bad)


def check_operadic(inst: CsgInstance, g: CsgElement, h: CsgElement,
                   i: int) -> CheckReport:
    """Padded elements conjugate through iterated degeneracies by moving
    their insertion index along g's inverse permutation."""
    n, m = g.level, h.level
    if not 0 <= i <= n:
        raise IndexError(f"index {i} out of range at level {n}")
    a = perms.inverse(inst.underlying_perm(g))[i]
    si = inst.degeneracy_power(i, m, g)
    lhs = inst.mul(inst.pad(h, i, n - i), si)
    rhs = inst.mul(si, inst.pad(h, a, n - a))
    ok = inst.equal(lhs, rhs)
    bad = () if ok else (
        _viol(inst, f"pad(h,{i})*s_{i}^{m}(g) == s_{i}^{m}(g)*pad(h,{a})", g, h),)
    return CheckReport("operadic", 1, bad)


def check_pure_homomorphism(inst: CsgInstance, p: CsgElement, q: CsgElement,
                            i: int) -> CheckReport:
    """Faces and degeneracies are plain homomorphisms when the left
    factor projects to the identity."""
    if not inst.is_pure(p):
        raise ValueError("left factor must project to the identity")
    n = p.level
    cases = 0
    bad: list[Violation] = []
    if n >= 1 and i <= n:
        cases += 1
        if not inst.equal(inst.face(i, inst.mul(p, q)),
                          inst.mul(inst.face(i, p), inst.face(i, q))):
            bad.append(_viol(inst, f"d_{i}(p*q) == d_{i}(p)*d_{i}(q) [p pure]", p, q))
    cases += 1
    if not inst.equal(inst.degeneracy(i, inst.mul(p, q)),
                      inst.mul(inst.degeneracy(i, p), inst.degeneracy(i, q))):
        bad.append(_viol(inst, f"s_{i}(p*q) == s_{i}(p)*s_{i}(q) [p pure]", p, q))
    return CheckReport("pure-homomorphism", cases, tuple(bad))
