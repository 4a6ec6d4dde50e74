"""
Horn lifting along the projection onto permutations.

Every element splits uniquely as p * s with p pure (trivial underlying
permutation) and s the positive lift of the element's permutation; the
pure elements at all levels form a genuine simplicial group, because
the crossed twist in the face and degeneracy identities disappears on
them.

A horn consists of a level n, a missing index k, compatible faces y_r
at level n - 1 for r != k, and a base permutation the lift must project
to.  Lifting proceeds by splitting each face against the lifted base,
filling the resulting pure horn with the classical two-sweep degeneracy
construction (moore_fill), and multiplying the filler back onto the
lifted base.  The filler's face equations are re-verified after
construction, so a convention slip or an incompatible input surfaces as
an error rather than a wrong answer.
"""

from __future__ import annotations

import dataclasses
import json
from typing import Callable, Mapping

from . import perms
from .core import CsgElement, CsgInstance
from .perms import Perm


class IncompatibleHorn(ValueError):
    pass


class FillError(RuntimeError):
    pass


@dataclasses.dataclass(frozen=True)
class Horn:
    n: int
    k: int
    faces: tuple[CsgElement | None, ...]  # length n + 1, None exactly at k
    base: Perm

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("horns need level >= 1")
        if not 0 <= self.k <= self.n:
            raise IndexError(f"missing index {self.k} out of range at level {self.n}")
        if len(self.faces) != self.n + 1:
            raise ValueError(f"expected {self.n + 1} face slots")
        if len(self.base) - 1 != self.n:
            raise ValueError("base permutation has the wrong level")
        for r, y in enumerate(self.faces):
            if r == self.k:
                if y is not None:
                    raise ValueError(f"slot {r} is the missing face")
            elif y is None:
                raise ValueError(f"missing face at slot {r}")
            elif y.level != self.n - 1:
                raise ValueError(f"face {r} has level {y.level}, expected {self.n - 1}")

    def face_items(self):
        return [(r, y) for r, y in enumerate(self.faces) if r != self.k]


def horn_from_faces(n: int, k: int, faces: Mapping[int, CsgElement],
                    base: Perm) -> Horn:
    slots: list[CsgElement | None] = [None] * (n + 1)
    for r, y in faces.items():
        slots[r] = y
    return Horn(n, k, tuple(slots), base)


def horn_from_filler(inst: CsgInstance, g: CsgElement, k: int) -> Horn:
    """The horn obtained by forgetting the k-th face of g; always liftable."""
    n = g.level
    faces = {r: inst.face(r, g) for r in range(n + 1) if r != k}
    return horn_from_faces(n, k, faces, inst.underlying_perm(g))


def validate_horn(inst: CsgInstance, horn: Horn) -> list[str]:
    """All violated horn equations, worst first: projection mismatches,
    then face compatibilities."""
    problems = []
    for r, y in horn.face_items():
        if inst.underlying_perm(y) != perms.face_perm(r, horn.base):
            problems.append(f"perm(y_{r}) != d_{r}(base)")
    if horn.n >= 2:
        items = horn.face_items()
        for a, (r, yr) in enumerate(items):
            for t, yt in items[a + 1:]:
                if not inst.equal(inst.face(r, yt), inst.face(t - 1, yr)):
                    problems.append(f"d_{r}(y_{t}) != d_{t - 1}(y_{r})")
    return problems


@dataclasses.dataclass(frozen=True)
class Decomposition:
    """g == mul(p, s) with p pure and s the lift of g's permutation."""

    p: CsgElement
    s: CsgElement


def decompose(inst: CsgInstance, g: CsgElement,
              section: Callable[[Perm], CsgElement] | None = None) -> Decomposition:
    section = section or inst.section
    s = section(inst.underlying_perm(g))
    p = inst.mul(g, inst.inv(s))
    assert inst.is_pure(p)
    return Decomposition(p, s)


def moore_fill(inst: CsgInstance, faces: Mapping[int, CsgElement], n: int,
               k: int) -> CsgElement:
    """
    Fill a pure horn: return a pure element whose r-th face is faces[r]
    for every r != k.  Two degeneracy sweeps, upward below k and then
    downward above it; each step corrects one face without disturbing
    the ones already matched.  The face equations are re-checked at the
    end and a failure raises FillError.
    """
    for r, p in faces.items():
        if not inst.is_pure(p):
            raise IncompatibleHorn(f"face {r} is not pure")
        if p.level != n - 1:
            raise IncompatibleHorn(f"face {r} has level {p.level}, expected {n - 1}")
    w = inst.one(n)
    for r in range(k):
        u = inst.mul(inst.inv(inst.face(r, w)), faces[r])
        w = inst.mul(w, inst.degeneracy(r, u))
    for r in range(n, k, -1):
        u = inst.mul(inst.inv(inst.face(r, w)), faces[r])
        w = inst.mul(w, inst.degeneracy(r - 1, u))
    for r in range(n + 1):
        if r != k and not inst.equal(inst.face(r, w), faces[r]):
            raise FillError(f"filler face {r} does not match; "
                            "the input horn is not compatible")
    return w


def lift_horn(inst: CsgInstance, horn: Horn,
              section: Callable[[Perm], CsgElement] | None = None) -> CsgElement:
    """
    An element at level n whose faces restrict to the horn and whose
    underlying permutation is the base.
    """
    problems = validate_horn(inst, horn)
    if problems:
        raise IncompatibleHorn(problems[0])
    section = section or inst.section
    s = section(horn.base)
    kernel_faces = {}
    for r, y in horn.face_items():
        p_r = inst.mul(y, inst.inv(inst.face(r, s)))
        if not inst.is_pure(p_r):
            raise IncompatibleHorn(
                f"kernel part of face {r} is not pure; the section does not "
                "commute with faces")
        kernel_faces[r] = p_r
    p = moore_fill(inst, kernel_faces, horn.n, horn.k)
    phi = inst.mul(p, s)
    if inst.underlying_perm(phi) != horn.base:
        raise FillError("lift does not project to the base")
    for r, y in horn.face_items():
        if not inst.equal(inst.face(r, phi), y):
            raise FillError(f"lift face {r} does not match the horn")
    return phi


# Serialization.

def horn_to_json(inst: CsgInstance, horn: Horn) -> str:
    payload = {
        "instance": inst.name,
        "level": horn.n,
        "k": horn.k,
        "base": perms.format_perm(horn.base),
        "faces": {str(r): _strip_level(inst, y) for r, y in horn.face_items()},
    }
    return json.dumps(payload, sort_keys=True, indent=2)


def _strip_level(inst: CsgInstance, g: CsgElement) -> str:
    text = inst.format(g)
    return text.rsplit("@", 1)[0] if inst.name == "braid" else text


def horn_from_json(inst: CsgInstance, data: dict) -> Horn:
    try:
        n = int(data["level"])
        k = int(data["k"])
        base = perms.parse_perm(data["base"])
        raw = data["faces"]
    except (KeyError, TypeError, ValueError) as exc:
        raise ValueError(f"malformed horn description: {exc}") from None
    faces = {}
    for key, text in raw.items():
        r = int(key)
        faces[r] = inst.parse_at(text, n - 1)
    missing = [r for r in range(n + 1) if r not in faces]
    if missing != [k]:
        raise ValueError(f"faces present do not match missing index {k}")
    return horn_from_faces(n, k, faces, base)
