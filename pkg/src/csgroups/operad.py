"""
Partial compositions on the level groups and on their action groupoids.

The composition circ_set inserts an inner element into slot i of an
outer one by padding the inner element into position and multiplying by
the iterated degeneracy of the outer one,

    circ(a, i, b) = pad(b, i, n - i) * s_i^m(a),

landing at level n + m.  Together with the faces this makes the level
sequence a shifted operad: levels add under composition, the face maps
play the role of composing with the empty slot, and re-indexing
arity(n) = level + 1 recovers the classical 1-based axioms (the
shift_to_unshifted adapter below exposes that view, with a unique
nullary element represented by STAR).

On arrows the composition acts by block substitution on sources and by
the doubly inverted set-level composition on group parts, at the slot
transported through the source's inverse permutation.  The
multiplicativity law check_operadic_mult is exactly what makes this a
functor in both variables.

Right G-actions are equivariance data for the compositions.  The
literal right translation does not commute with the compositions at a
fixed padding slot (the slot drifts along the outer element's inverse
permutation), so check_g_like_equivariance enumerates candidate
readings (which action, which slot index, where the degeneracies that
inflate the acting element go) and reports which ones hold; see the
ACTIONS / SLOT_RULES / PLACEMENTS triples.
"""

from __future__ import annotations

from typing import Iterable

from . import perms
from .core import CheckReport, CsgElement, CsgInstance, Violation
from .groupoid import (
    GroupoidArrow,
    arrows_equal,
    compose_arrows,
    face_arrow,
    identity_arrow,
    n_action,
    target,
)


def circ_set(inst: CsgInstance, a: CsgElement, i: int, b: CsgElement) -> CsgElement:
    """Insert b into slot i of a; levels add."""
    n, m = a.level, b.level
    if not 0 <= i <= n:
        raise IndexError(f"slot {i} out of range at level {n}")
    return inst.mul(inst.pad(b, i, n - i), inst.degeneracy_power(i, m, a))


def circ_gpd(inst: CsgInstance, a: GroupoidArrow, i: int, b: GroupoidArrow) -> GroupoidArrow:
    """Insert arrow b into slot i of arrow a."""
    n = a.level
    if not 0 <= i <= n:
        raise IndexError(f"slot {i} out of range at level {n}")
    src = perms.block_substitute(a.source, i, b.source)
    j = perms.inverse(a.source)[i]
    part = inst.inv(circ_set(inst, inst.inv(a.f), j, inst.inv(b.f)))
    return GroupoidArrow(src, part)


def check_operadic_mult(inst: CsgInstance, a: CsgElement, a2: CsgElement, i: int,
                        b: CsgElement, b2: CsgElement) -> CheckReport:
    """(a o_i b) * (a2 o_{a^-1(i)} b2) == (a a2) o_i (b b2)."""
    inst._require_same_level(a, a2)
    inst._require_same_level(b, b2)
    ai = perms.inverse(inst.underlying_perm(a))[i]
    lhs = inst.mul(circ_set(inst, a, i, b), circ_set(inst, a2, ai, b2))
    rhs = circ_set(inst, inst.mul(a, a2), i, inst.mul(b, b2))
    ok = inst.equal(lhs, rhs)
    bad = () if ok else (Violation(
        f"(a o_{i} b)*(a2 o_{ai} b2) == a*a2 o_{i} b*b2",
        ", ".join(inst.format(x) for x in (a, a2, b, b2))),)
    return CheckReport("operadic-mult", 1, bad)


class SetCarrier:
    """The shifted operad on plain group elements."""

    kind = "set"

    def __init__(self, inst: CsgInstance):
        self.inst = inst

    def comp(self, a, i, b):
        return circ_set(self.inst, a, i, b)

    def face(self, i, a):
        return self.inst.face(i, a)

    def level(self, a) -> int:
        return a.level

    def equal(self, a, b) -> bool:
        return self.inst.equal(a, b)

    def one(self, n):
        return self.inst.one(n)

    def format(self, a) -> str:
        return self.inst.format(a)

    def act(self, a, beta: CsgElement, action: str):
        if action == "right-mul":
            return self.inst.mul(a, beta)
        if action == "left-inv":
            return self.inst.mul(self.inst.inv(beta), a)
        raise ValueError(f"unknown action {action!r}")

    def random(self, rng, n, max_len):
        return self.inst.random_element(rng, n, max_len)


class GroupoidCarrier:
    """The shifted operad on groupoid arrows."""

    kind = "gpd"

    def __init__(self, inst: CsgInstance):
        self.inst = inst

    def comp(self, a, i, b):
        return circ_gpd(self.inst, a, i, b)

    def face(self, i, a):
        return face_arrow(self.inst, i, a)

    def level(self, a) -> int:
        return a.level

    def equal(self, a, b) -> bool:
        return arrows_equal(self.inst, a, b)

    def one(self, n):
        return identity_arrow(self.inst, perms.identity(n))

    def format(self, a) -> str:
        return f"[{perms.format_perm(a.source)}; {self.inst.format(a.f)}]"

    def act(self, a, beta: CsgElement, action: str):
        pb = self.inst.underlying_perm(beta)
        if action == "right-mul":
            part = self.inst.mul(self.inst.mul(self.inst.inv(beta), a.f), beta)
            return GroupoidArrow(perms.compose(a.source, pb), part)
        if action == "left-inv":
            return n_action(perms.inverse(pb), a)
        raise ValueError(f"unknown action {action!r}")

    def random(self, rng, n, max_len):
        return GroupoidArrow(perms.random_perm(rng, n),
                             self.inst.random_element(rng, n, max_len))


def check_shifted_axioms(car, lam, mu, nu, axioms: Iterable[int] = (1, 2, 3, 4, 5),
                         rng=None) -> CheckReport:
    """
    Index instantiations of the five shifted-operad families on one
    triple: sequential composition (1), parallel composition (2), and
    the three face/composition exchange laws (3, 4, 5).  All admissible
    indices are enumerated; passing an rng samples one instantiation
    per family instead.
    """
    l, m, n = car.level(lam), car.level(mu), car.level(nu)
    cases = 0
    bad: list[Violation] = []

    def run(label, lhs, rhs):
        nonlocal cases
        cases += 1
        if not car.equal(lhs, rhs):
            bad.append(Violation(label, ", ".join(
                car.format(x) for x in (lam, mu, nu))))

    def pick(pairs):
        if rng is None or not pairs:
            return pairs
        return [pairs[rng.randrange(len(pairs))]]

    if 1 in axioms:
        for i, j in pick([(i, j) for i in range(l + 1) for j in range(m + 1)]):
            run(f"(x o_{i} y) o_{i + j} z == x o_{i} (y o_{j} z)",
                car.comp(car.comp(lam, i, mu), i + j, nu),
                car.comp(lam, i, car.comp(mu, j, nu)))
    if 2 in axioms:
        for i, k in pick([(i, k) for i in range(l + 1)
                          for k in range(i + 1, l + 1)]):
            run(f"(x o_{i} y) o_{k}+m z == (x o_{k} z) o_{i} y",
                car.comp(car.comp(lam, i, mu), k + m, nu),
                car.comp(car.comp(lam, k, nu), i, mu))
    if 3 in axioms and m >= 1:
        for i, j in pick([(i, j) for i in range(l + 1) for j in range(m + 1)]):
            run(f"d_{i}+{j}(x o_{i} y) == x o_{i} d_{j}(y)",
                car.face(i + j, car.comp(lam, i, mu)),
                car.comp(lam, i, car.face(j, mu)))
    if 4 in axioms and l >= 1:
        # Deleting input i below the insertion slot shifts the slot down.
        for i, k in pick([(i, k) for i in range(l) for k in range(i + 1, l + 1)]):
            run(f"d_{i}(x o_{k} z) == d_{i}(x) o_{k}-1 z",
                car.face(i, car.comp(lam, k, nu)),
                car.comp(car.face(i, lam), k - 1, nu))
    if 5 in axioms and l >= 1:
        for i, k in pick([(i, k) for i in range(l + 1)
                          for k in range(i + 1, l + 1)]):
            run(f"d_{k}+m(x o_{i} y) == d_{k}(x) o_{i} y",
                car.face(k + m, car.comp(lam, i, mu)),
                car.comp(car.face(k, lam), i, mu))

    return CheckReport("shifted-operad", cases, tuple(bad))


def check_shifted_units(car, nu) -> CheckReport:
    """one(0) is a two-sided unit for the compositions."""
    unit = car.one(0)
    cases = 0
    bad: list[Violation] = []
    cases += 1
    if not car.equal(car.comp(unit, 0, nu), nu):
        bad.append(Violation("id o_0 z == z", car.format(nu)))
    for i in range(car.level(nu) + 1):
        cases += 1
        if not car.equal(car.comp(nu, i, unit), nu):
            bad.append(Violation(f"z o_{i} id == z", car.format(nu)))
    return CheckReport("shifted-units", cases, tuple(bad))


class _Star:
    """The unique nullary element of the 1-based view."""

    def __repr__(self):
        return "*"


STAR = _Star()


class UnshiftedView:
    """
    1-based re-indexing: a carrier element of level n has arity n + 1,
    composition slot i becomes slot i - 1 underneath, and composing with
    STAR in slot i takes the face at i - 1.
    """

    def __init__(self, car):
        self.car = car

    def arity(self, x) -> int:
        return 0 if x is STAR else self.car.level(x) + 1

    def comp(self, x, i, y):
        if x is STAR:
            raise ValueError("the nullary element has no slots")
        if not 1 <= i <= self.arity(x):
            raise IndexError(f"slot {i} out of range for arity {self.arity(x)}")
        if y is STAR:
            if self.arity(x) == 1:
                return STAR
            return self.car.face(i - 1, x)
        return self.car.comp(x, i - 1, y)

    def equal(self, x, y) -> bool:
        if x is STAR or y is STAR:
            return x is STAR and y is STAR
        return self.car.equal(x, y)

    def unit(self):
        return self.car.one(0)

    def format(self, x) -> str:
        return "*" if x is STAR else self.car.format(x)


def shift_to_unshifted(car) -> UnshiftedView:
    return UnshiftedView(car)


def check_unshifted_axioms(view: UnshiftedView, lam, mu, nu) -> CheckReport:
    """Classical 1-based axioms, with STAR allowed for mu and nu."""
    cases = 0
    bad: list[Violation] = []

    def run(label, lhs, rhs):
        nonlocal cases
        cases += 1
        if not view.equal(lhs, rhs):
            bad.append(Violation(label, ", ".join(
                view.format(x) for x in (lam, mu, nu))))

    unit = view.unit()
    if nu is not STAR:
        run("id o_1 z == z", view.comp(unit, 1, nu), nu)
        for i in range(1, view.arity(nu) + 1):
            run(f"z o_{i} id == z", view.comp(nu, i, unit), nu)

    la, ma = view.arity(lam), view.arity(mu)
    for i in range(1, la + 1):
        for j in range(1, ma + 1):
            run(f"(x o_{i} y) o_{i}+{j}-1 z == x o_{i} (y o_{j} z)",
                view.comp(view.comp(lam, i, mu), i + j - 1, nu),
                view.comp(lam, i, view.comp(mu, j, nu)))
    for i in range(1, la + 1):
        for k in range(i + 1, la + 1):
            run(f"(x o_{i} y) o_{k}-1+m z == (x o_{k} z) o_{i} y",
                view.comp(view.comp(lam, i, mu), k - 1 + ma, nu),
                view.comp(view.comp(lam, k, nu), i, mu))

    return CheckReport("unshifted-operad", cases, tuple(bad))


# Candidate readings for the equivariance conditions.

ACTIONS = ("right-mul", "left-inv")
SLOT_RULES = ("literal", "sigma", "sigma-inv")
PLACEMENTS = ("literal", "sigma", "sigma-inv")


def _slot(rule: str, sigma: perms.Perm, i: int) -> int:
    if rule == "literal":
        return i
    if rule == "sigma":
        return sigma[i]
    if rule == "sigma-inv":
        return perms.inverse(sigma)[i]
    raise ValueError(f"unknown slot rule {rule!r}")


def equivariance_condition1(car, action: str, mu, i: int, nu,
                            beta: CsgElement) -> bool:
    """mu o_i (nu acted by beta) == (mu o_i nu) acted by the padding of
    beta into slot i."""
    inst = car.inst
    m = car.level(mu)
    if beta.level != car.level(nu):
        raise ValueError("beta must live at the inner element's level")
    lhs = car.comp(mu, i, car.act(nu, beta, action))
    padded = inst.pad(beta, i, m - i)
    rhs = car.act(car.comp(mu, i, nu), padded, action)
    return car.equal(lhs, rhs)


def equivariance_condition2(car, action: str, slot_rule: str, placement: str,
                            mu, i: int, nu, beta: CsgElement) -> bool:
    """(mu acted by beta) o_i nu == (mu o_j nu) acted by the degeneracy
    inflation of beta, for the candidate slot j and inflation index."""
    inst = car.inst
    n = car.level(nu)
    if beta.level != car.level(mu):
        raise ValueError("beta must live at the outer element's level")
    sigma = inst.underlying_perm(beta)
    j = _slot(slot_rule, sigma, i)
    idx = _slot(placement, sigma, i)
    inflated = inst.degeneracy_power(idx, n, beta)
    lhs = car.comp(car.act(mu, beta, action), i, nu)
    rhs = car.act(car.comp(mu, j, nu), inflated, action)
    return car.equal(lhs, rhs)


def check_g_like_equivariance(car, mu, i: int, nu, beta_inner: CsgElement,
                              beta_outer: CsgElement) -> dict[str, bool]:
    """
    Verdicts for one input tuple: condition (1) under each action, and
    condition (2) under each (action, slot, placement) reading.
    beta_inner acts at nu's level, beta_outer at mu's level.
    """
    verdicts: dict[str, bool] = {}
    for action in ACTIONS:
        verdicts[f"cond1/{action}"] = equivariance_condition1(
            car, action, mu, i, nu, beta_inner)
    for action in ACTIONS:
        for slot_rule in SLOT_RULES:
            for placement in PLACEMENTS:
                key = f"cond2/{action}/slot={slot_rule}/deg={placement}"
                verdicts[key] = equivariance_condition2(
                    car, action, slot_rule, placement, mu, i, nu, beta_outer)
    return verdicts


def check_circ_functorial(inst: CsgInstance, x: GroupoidArrow, y: GroupoidArrow,
                          i: int, v: GroupoidArrow, w: GroupoidArrow) -> CheckReport:
    """circ_gpd preserves identities, targets and composition; y must
    continue x and w must continue v."""
    cases = 0
    bad: list[Violation] = []

    def run(label, ok):
        nonlocal cases
        cases += 1
        if not ok:
            bad.append(Violation(label, ", ".join(
                f"[{perms.format_perm(a.source)}; {inst.format(a.f)}]"
                for a in (x, y, v, w))))

    comp_outer = compose_arrows(inst, y, x)
    comp_inner = compose_arrows(inst, w, v)
    xv = circ_gpd(inst, x, i, v)
    yw = circ_gpd(inst, y, i, w)

    run("target(x o_i v) == target(x) o_i target(v)",
        target(inst, xv) == perms.block_substitute(
            target(inst, x), i, target(inst, v)))
    run("(y.x) o_i (w.v) == (y o_i w).(x o_i v)",
        arrows_equal(inst, circ_gpd(inst, comp_outer, i, comp_inner),
                     compose_arrows(inst, yw, xv)))
    ids = circ_gpd(inst, identity_arrow(inst, x.source), i,
                   identity_arrow(inst, v.source))
    run("id o_i id == id",
        arrows_equal(inst, ids, identity_arrow(inst, ids.source)))
    return CheckReport("circ-functorial", cases, tuple(bad))
