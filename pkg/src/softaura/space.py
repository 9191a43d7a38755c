"""Soft topologies, scope functions, and the spaces that combine them.

A soft topology is a family of soft sets containing the null and absolute
sets and closed under unions and intersections (pairwise closure suffices on
a finite family).  A scope function assigns every point an open soft set
containing the point in every slice; a space bundles a context, a topology,
and a scope function.

The discrete topology is intensional: membership is decided by a predicate,
no 2^(|X|*|E|) family is ever materialised.  Validated and generated
topologies are extensional with named members.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Iterator, Mapping

from .errors import (
    CapExceeded,
    ContextMismatch,
    MembershipViolation,
    NotOpen,
    ScopeViolations,
    TopologyViolation,
)
from .softset import Context, SoftSet, _require_same_context

#: Default ceiling for enumeration results, overridable per call.
DEFAULT_CAP = 1_000_000

DISCRETE = "discrete"
INDISCRETE = "indiscrete"
EXPLICIT = "explicit"
GENERATED = "generated"

#: Names reserved for the implicit null/absolute members.
NULL_NAME = "null"
ABSOLUTE_NAME = "absolute"


@dataclass(frozen=True)
class SoftTopology:
    """A soft topology over a context.

    kind "discrete" is intensional (members is None, contains() is a
    predicate); all other kinds carry an ordered tuple of (name, SoftSet)
    members.  Generated topologies also retain their subbasis so they can be
    re-encoded in the form they were declared.
    """

    context: Context
    kind: str
    members: tuple[tuple[str, SoftSet], ...] | None = None
    subbasis: tuple[tuple[str, SoftSet], ...] | None = None

    def __post_init__(self):
        if self.kind == DISCRETE:
            if self.members is not None:
                raise ValueError("discrete topology is intensional; no member list")
        else:
            if self.members is None:
                raise ValueError(f"{self.kind} topology requires members")

    @property
    def is_extensional(self) -> bool:
        return self.kind != DISCRETE

    @cached_property
    def _member_masks(self) -> frozenset[tuple[int, ...]]:
        return frozenset(s.masks for _, s in self.members) if self.members else frozenset()

    def contains(self, s: SoftSet) -> bool:
        if s.context != self.context:
            return False
        if self.kind == DISCRETE:
            return True
        return s.masks in self._member_masks

    def member_named(self, name: str) -> SoftSet | None:
        if self.members is None:
            return None
        for n, s in self.members:
            if n == name:
                return s
        return None

    def __iter__(self) -> Iterator[tuple[str, SoftSet]]:
        if self.members is None:
            raise TypeError("discrete topology is intensional; it cannot be iterated")
        return iter(self.members)

    def __len__(self) -> int:
        if self.members is None:
            raise TypeError("discrete topology is intensional; it has no member count")
        return len(self.members)


def discrete_topology(context: Context) -> SoftTopology:
    """All soft sets over the context, held intensionally."""
    return SoftTopology(context, DISCRETE)


def indiscrete_topology(context: Context) -> SoftTopology:
    """Just the null and absolute soft sets."""
    members = (
        (NULL_NAME, SoftSet.null(context)),
        (ABSOLUTE_NAME, SoftSet.absolute(context)),
    )
    return SoftTopology(context, INDISCRETE, members)


def _as_named_members(sets) -> list[tuple[str, SoftSet]]:
    if isinstance(sets, Mapping):
        items = list(sets.items())
    else:
        items = list(sets)
    names = [n for n, _ in items]
    if len(set(names)) != len(names):
        raise ValueError("member names must be unique")
    return items


def validate_topology(context: Context, sets) -> SoftTopology:
    """Check the axioms on a named family and certify it as a topology.

    `sets` is a name -> SoftSet mapping (or (name, set) pairs) that must
    already include the null and absolute sets.  Checking is fail-fast: the
    first violation found, scanning null, absolute, then member pairs in
    declared order (union before intersection per pair), raises
    TopologyViolation.  Pairwise closure is sufficient on a finite family.
    """
    items = _as_named_members(sets)
    for _, s in items:
        _require_same_context(context, s.context)

    by_masks = {s.masks: n for n, s in reversed(items)}
    null_masks = SoftSet.null(context).masks
    abs_masks = SoftSet.absolute(context).masks
    if null_masks not in by_masks:
        raise TopologyViolation("missing-null")
    if abs_masks not in by_masks:
        raise TopologyViolation("missing-absolute")

    for (name_a, a), (name_b, b) in itertools.combinations(items, 2):
        u = tuple(x | y for x, y in zip(a.masks, b.masks))
        if u not in by_masks:
            raise TopologyViolation("missing-union", (name_a, name_b))
        n = tuple(x & y for x, y in zip(a.masks, b.masks))
        if n not in by_masks:
            raise TopologyViolation("missing-intersection", (name_a, name_b))

    return SoftTopology(context, EXPLICIT, tuple(items))


def generate_topology(context: Context, subbasis, cap: int = DEFAULT_CAP) -> SoftTopology:
    """Smallest topology containing the subbasis.

    Saturates the family {null, absolute} ∪ subbasis under pairwise
    intersections, then pairwise unions; on a finite family that yields all
    subfamily unions of the intersection basis, hence a topology.  Raises
    CapExceeded as soon as the member count would pass `cap`.

    Derived members are named G1, G2, ... in canonical bitmask order; the
    result keeps the subbasis for round-tripping.
    """
    sub_items = _as_named_members(subbasis)
    for _, s in sub_items:
        _require_same_context(context, s.context)
    reserved = {NULL_NAME, ABSOLUTE_NAME}
    for n, _ in sub_items:
        if n in reserved:
            raise ValueError(f"subbasis name {n!r} is reserved")

    family: dict[tuple[int, ...], None] = {}
    family[SoftSet.null(context).masks] = None
    family[SoftSet.absolute(context).masks] = None
    for _, s in sub_items:
        family[s.masks] = None

    def saturate(op) -> None:
        while True:
            current = list(family)
            added = False
            for a, b in itertools.combinations(current, 2):
                derived = tuple(op(x, y) for x, y in zip(a, b))
                if derived not in family:
                    family[derived] = None
                    added = True
                    if len(family) > cap:
                        raise CapExceeded(len(family), cap)
            if not added:
                return

    saturate(lambda x, y: x & y)
    saturate(lambda x, y: x | y)

    named: dict[tuple[int, ...], str] = {
        SoftSet.null(context).masks: NULL_NAME,
        SoftSet.absolute(context).masks: ABSOLUTE_NAME,
    }
    for n, s in sub_items:
        named.setdefault(s.masks, n)
    ordered = sorted(family, key=lambda masks: tuple(reversed(masks)))
    counter = itertools.count(1)
    members = tuple(
        (named.get(masks) or f"G{next(counter)}", SoftSet(context, masks))
        for masks in ordered
    )
    return SoftTopology(context, GENERATED, members, subbasis=tuple(sub_items))


@dataclass(frozen=True)
class ScopeFunction:
    """Total assignment of an open soft set to every point, stored in universe order."""

    context: Context
    assignment: tuple[SoftSet, ...]

    def __post_init__(self):
        if len(self.assignment) != self.context.n_points:
            raise ValueError("assignment must be total on the universe")

    def of(self, x: str) -> SoftSet:
        return self.assignment[self.context.point_index[x]]

    def items(self) -> Iterator[tuple[str, SoftSet]]:
        return iter(zip(self.context.universe, self.assignment))


def validate_scope(context: Context, topology: SoftTopology, assignment: Mapping[str, SoftSet]) -> ScopeFunction:
    """Check a point -> soft set table and certify it as a scope function.

    Violations are collected exhaustively (per point: NotOpen first, then
    MembershipViolation per parameter in declared order) and raised together
    as ScopeViolations.
    """
    _require_same_context(context, topology.context)
    missing = [x for x in context.universe if x not in assignment]
    if missing:
        raise ValueError(f"assignment missing points: {missing}")
    extra = [x for x in assignment if x not in context.point_index]
    if extra:
        raise ValueError(f"assignment names unknown points: {extra}")

    violations: list = []
    for xi, x in enumerate(context.universe):
        s = assignment[x]
        _require_same_context(context, s.context)
        if not topology.contains(s):
            violations.append(NotOpen(x))
        for ei, e in enumerate(context.parameters):
            if not s.masks[ei] >> xi & 1:
                violations.append(MembershipViolation(x, e))
    if violations:
        raise ScopeViolations(violations)
    return ScopeFunction(context, tuple(assignment[x] for x in context.universe))


def trivial_scope(topology: SoftTopology) -> ScopeFunction:
    """The scope assigning the absolute soft set to every point (valid in any topology)."""
    ctx = topology.context
    return ScopeFunction(ctx, (SoftSet.absolute(ctx),) * ctx.n_points)


@dataclass(frozen=True)
class SoftAuraSpace:
    """A context, a soft topology over it, and a scope function into it."""

    context: Context
    topology: SoftTopology
    scope: ScopeFunction

    def __post_init__(self):
        if self.topology.context != self.context or self.scope.context != self.context:
            raise ContextMismatch("topology and scope must share the space context")
        violations: list = []
        for xi, x in enumerate(self.context.universe):
            s = self.scope.assignment[xi]
            if not self.topology.contains(s):
                violations.append(NotOpen(x))
            for ei, e in enumerate(self.context.parameters):
                if not s.masks[ei] >> xi & 1:
                    violations.append(MembershipViolation(x, e))
        if violations:
            raise ScopeViolations(violations)

    @cached_property
    def scope_masks(self) -> tuple[tuple[int, ...], ...]:
        """scope_masks[xi][ei]: bitmask of the scope slice of point xi at parameter ei."""
        return tuple(s.masks for s in self.scope.assignment)


def make_space(
    universe: Iterable[str],
    parameters: Iterable[str],
    scope: Mapping[str, Mapping[str, Iterable[str]]],
    topology: SoftTopology | None = None,
) -> SoftAuraSpace:
    """Convenience builder from plain tables; defaults to the discrete topology."""
    ctx = Context(tuple(universe), tuple(parameters))
    topo = topology if topology is not None else discrete_topology(ctx)
    assignment = {x: SoftSet.from_slices(ctx, scope[x]) for x in ctx.universe}
    return SoftAuraSpace(ctx, topo, validate_scope(ctx, topo, assignment))
