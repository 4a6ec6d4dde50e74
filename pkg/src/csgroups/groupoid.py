"""
Action groupoids of the level groups over their pure subgroups.

At level n the objects are the permutations and an arrow out of sigma is
a pair [sigma, f] with f a group element; its target is sigma composed
with the inverse of f's underlying permutation, so arrows from sigma to
itself are exactly the pure elements.  Composition multiplies the group
parts, [sigma f^-1, g] . [sigma, f] = [sigma, g f].

Faces and degeneracies act on an arrow by applying the corresponding
permutation operator to the source and a twisted, doubly inverted
operator to the group part:

    d_i [sigma, f] = [d_i(sigma), d_{sigma^-1(i)}(f^-1)^-1]

and likewise for degeneracies.  The double inversion is what makes
these maps functors even though faces and degeneracies are not group
homomorphisms.  The permutation group of each level acts freely on the
left by translating sources.

A nerve simplex of dimension m is a start object together with a chain
of m composable arrows, stored by their group parts.  Face indices
count from the end of the chain (the face at 0 drops the last arrow)
so that forgetting the start object intertwines the operators with the
bar structure of the opposite group on plain tuples.
"""

from __future__ import annotations

import dataclasses
import json
import random

from . import perms
from .core import CsgElement, CsgInstance
from .perms import Perm


@dataclasses.dataclass(frozen=True)
class GroupoidArrow:
    source: Perm
    f: CsgElement

    def __post_init__(self):
        if len(self.source) - 1 != self.f.level:
            raise ValueError(
                f"source level {len(self.source) - 1} != element level {self.f.level}")

    @property
    def level(self) -> int:
        return self.f.level


def target(inst: CsgInstance, a: GroupoidArrow) -> Perm:
    return perms.compose(a.source, perms.inverse(inst.underlying_perm(a.f)))


def identity_arrow(inst: CsgInstance, p: Perm) -> GroupoidArrow:
    return GroupoidArrow(p, inst.one(len(p) - 1))


def inverse_arrow(inst: CsgInstance, a: GroupoidArrow) -> GroupoidArrow:
    return GroupoidArrow(target(inst, a), inst.inv(a.f))


def arrows_equal(inst: CsgInstance, a: GroupoidArrow, b: GroupoidArrow) -> bool:
    return a.source == b.source and inst.equal(a.f, b.f)


def compose_arrows(inst: CsgInstance, b: GroupoidArrow, a: GroupoidArrow) -> GroupoidArrow:
    """The composite b . a, with a applied first."""
    if target(inst, a) != b.source:
        raise ValueError("arrows are not composable: target(a) != source(b)")
    return GroupoidArrow(a.source, inst.mul(b.f, a.f))


def hom_arrow(inst: CsgInstance, src: Perm, dst: Perm) -> GroupoidArrow:
    """Some arrow src -> dst; witnesses that every level is connected."""
    ratio = perms.compose(perms.inverse(dst), src)
    return GroupoidArrow(src, inst.section(ratio))


def face_arrow(inst: CsgInstance, i: int, a: GroupoidArrow) -> GroupoidArrow:
    s = a.source
    j = perms.inverse(s)[i]
    part = inst.inv(inst.face(j, inst.inv(a.f)))
    return GroupoidArrow(perms.face_perm(i, s), part)


def degeneracy_arrow(inst: CsgInstance, i: int, a: GroupoidArrow) -> GroupoidArrow:
    s = a.source
    j = perms.inverse(s)[i]
    part = inst.inv(inst.degeneracy(j, inst.inv(a.f)))
    return GroupoidArrow(perms.degeneracy_perm(i, s), part)


def n_action(t: Perm, a: GroupoidArrow) -> GroupoidArrow:
    """Left translation of the source by a permutation of the same level."""
    if len(t) != len(a.source):
        raise ValueError(f"levels {len(t) - 1} and {a.level} differ")
    return GroupoidArrow(perms.compose(t, a.source), a.f)


def is_automorphism(inst: CsgInstance, a: GroupoidArrow) -> bool:
    return inst.is_pure(a.f)


def random_arrow(inst: CsgInstance, rng: random.Random, n: int,
                 max_len: int = 12) -> GroupoidArrow:
    return GroupoidArrow(perms.random_perm(rng, n),
                         inst.random_element(rng, n, max_len))


@dataclasses.dataclass(frozen=True)
class NerveSimplex:
    start: Perm
    chain: tuple[CsgElement, ...]

    @property
    def dimension(self) -> int:
        return len(self.chain)

    @property
    def level(self) -> int:
        return len(self.start) - 1


def simplex_objects(inst: CsgInstance, s: NerveSimplex) -> tuple[Perm, ...]:
    """The start object followed by the targets along the chain."""
    objs = [s.start]
    for f in s.chain:
        objs.append(perms.compose(objs[-1], perms.inverse(inst.underlying_perm(f))))
    return tuple(objs)


def simplex_arrows(inst: CsgInstance, s: NerveSimplex) -> tuple[GroupoidArrow, ...]:
    objs = simplex_objects(inst, s)
    return tuple(GroupoidArrow(objs[j], f) for j, f in enumerate(s.chain))


def simplices_equal(inst: CsgInstance, a: NerveSimplex, b: NerveSimplex) -> bool:
    return (a.start == b.start and len(a.chain) == len(b.chain)
            and all(inst.equal(x, y) for x, y in zip(a.chain, b.chain)))


def orbit_equivalent(inst: CsgInstance, a: NerveSimplex, b: NerveSimplex) -> bool:
    """Whether some source translation carries a to b.  The translation
    is forced to be b.start relative to a.start, so only the chains
    need comparing."""
    if a.level != b.level or len(a.chain) != len(b.chain):
        return False
    t = perms.compose(b.start, perms.inverse(a.start))
    return simplices_equal(inst, nerve_n_action(t, a), b)


def nerve_face(inst: CsgInstance, i: int, s: NerveSimplex) -> NerveSimplex:
    m = s.dimension
    if m < 1:
        raise ValueError("a 0-simplex has no faces")
    if not 0 <= i <= m:
        raise IndexError(f"face index {i} out of range in dimension {m}")
    if i == 0:
        return NerveSimplex(s.start, s.chain[:-1])
    if i == m:
        first = s.chain[0]
        moved = perms.compose(s.start, perms.inverse(inst.underlying_perm(first)))
        return NerveSimplex(moved, s.chain[1:])
    j = m - i
    combined = inst.mul(s.chain[j], s.chain[j - 1])
    return NerveSimplex(s.start, s.chain[:j - 1] + (combined,) + s.chain[j + 1:])


def nerve_degeneracy(inst: CsgInstance, i: int, s: NerveSimplex) -> NerveSimplex:
    m = s.dimension
    if not 0 <= i <= m:
        raise IndexError(f"degeneracy index {i} out of range in dimension {m}")
    j = m - i
    unit = inst.one(s.level)
    return NerveSimplex(s.start, s.chain[:j] + (unit,) + s.chain[j:])


def nerve_n_action(t: Perm, s: NerveSimplex) -> NerveSimplex:
    return NerveSimplex(perms.compose(t, s.start), s.chain)


def quotient_map(s: NerveSimplex) -> tuple[CsgElement, ...]:
    """Forget the start object; the chain comes out last arrow first."""
    return tuple(reversed(s.chain))


def opposite_nerve_face(inst: CsgInstance, i: int, t: tuple[CsgElement, ...]):
    """Bar-style face on plain tuples, multiplying adjacent entries in
    the opposite order."""
    m = len(t)
    if not 0 <= i <= m:
        raise IndexError(f"face index {i} out of range in dimension {m}")
    if i == 0:
        return t[1:]
    if i == m:
        return t[:-1]
    return t[:i - 1] + (inst.mul(t[i - 1], t[i]),) + t[i + 1:]


def opposite_nerve_degeneracy(inst: CsgInstance, i: int, t: tuple[CsgElement, ...],
                              level: int):
    m = len(t)
    if not 0 <= i <= m:
        raise IndexError(f"degeneracy index {i} out of range in dimension {m}")
    return t[:i] + (inst.one(level),) + t[i:]


def random_simplex(inst: CsgInstance, rng: random.Random, n: int, dim: int,
                   max_len: int = 12) -> NerveSimplex:
    chain = tuple(inst.random_element(rng, n, max_len) for _ in range(dim))
    return NerveSimplex(perms.random_perm(rng, n), chain)


# Serialization.

def arrow_to_json(inst: CsgInstance, a: GroupoidArrow) -> dict:
    return {
        "source": perms.format_perm(a.source),
        "word": inst.format(a.f),
        "target": perms.format_perm(target(inst, a)),
    }


def simplex_to_json(inst: CsgInstance, s: NerveSimplex) -> dict:
    return {
        "level": s.level,
        "dimension": s.dimension,
        "start": perms.format_perm(s.start),
        "chain": [inst.format(f) for f in s.chain],
        "arrows": [arrow_to_json(inst, a) for a in simplex_arrows(inst, s)],
        "objects": [perms.format_perm(p) for p in simplex_objects(inst, s)],
        "quotient": [inst.format(f) for f in quotient_map(s)],
    }


def skeleton_to_json(inst: CsgInstance, simplices) -> str:
    payload = []
    for s in simplices:
        entry = simplex_to_json(inst, s)
        if s.dimension >= 1:
            entry["faces"] = [
                simplex_to_json(inst, nerve_face(inst, i, s))
                for i in range(s.dimension + 1)
            ]
        entry["degeneracies"] = [
            simplex_to_json(inst, nerve_degeneracy(inst, i, s))
            for i in range(s.dimension + 1)
        ]
        payload.append(entry)
    return json.dumps(payload, sort_keys=True, indent=2)


def skeleton_to_dot(inst: CsgInstance, n: int) -> str:
    """
    DOT digraph of the full 1-skeleton at level n for the symmetric
    family: one node per permutation, one labelled edge per arrow.
    """
    if inst.name != "symm":
        raise ValueError("the full 1-skeleton is only enumerable for symm")
    if n > 2:
        raise ValueError("level > 2 skeletons are too large to draw")
    nodes = list(perms.all_perms(n))
    lines = ["digraph groupoid {"]
    for p in nodes:
        lines.append(f'  "{perms.format_perm(p)}";')
    for src in nodes:
        for dst in nodes:
            f = perms.compose(perms.inverse(dst), src)
            lines.append(
                f'  "{perms.format_perm(src)}" -> "{perms.format_perm(dst)}"'
                f' [label="{perms.format_perm(f)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
