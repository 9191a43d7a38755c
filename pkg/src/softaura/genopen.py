"""Generalized openness classes built from the aura operators.

Each class is a containment of the set in a closure/interior composite of
itself: semi uses cl(int G), pre uses int(cl G), alpha uses int(cl(int G)),
beta uses cl(int(cl G)), and b uses cl(int G) joined with int(cl G).  The
closure may be the one-step (cech) or fixpoint (kuratowski) operator; the
interior is always the one-step aura interior.

Implications run open => alpha => semi and pre => b => beta for either
closure kind.  Semi, pre and beta are closed under arbitrary unions.  Alpha
meets are not safe under either kind: because the interior stays one-step,
the intersection of two alpha-open sets can fail to be alpha-open even with
the idempotent fixpoint closure (smallest counterexamples: a cyclic
three-point scope for the fixpoint kind, four points for the one-step
kind).  search_alpha_intersection_failure hunts for such pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import PreconditionUnmet
from .operators import CECH, KURATOWSKI, aura_closure, aura_interior, kuratowski_closure
from .softset import SoftSet
from .space import SoftAuraSpace

UNION_CLOSED_CLASSES = ("semi", "pre", "beta")


@dataclass(frozen=True)
class OpennessProfile:
    """Six membership flags for one soft set, under one closure kind."""

    a_open: bool
    alpha_open: bool
    semi_open: bool
    pre_open: bool
    b_open: bool
    beta_open: bool
    closure_kind: str

    def flag(self, openness_class: str) -> bool:
        return {
            "open": self.a_open,
            "alpha": self.alpha_open,
            "semi": self.semi_open,
            "pre": self.pre_open,
            "b": self.b_open,
            "beta": self.beta_open,
        }[openness_class]


def _closure_fn(space: SoftAuraSpace, kind: str):
    if kind == CECH:
        return lambda s: aura_closure(space, s)
    if kind == KURATOWSKI:
        return lambda s: kuratowski_closure(space, s).closure
    raise ValueError(f"unknown closure kind {kind!r}")


def classify(space: SoftAuraSpace, g: SoftSet, kind: str = CECH) -> OpennessProfile:
    """Evaluate every defining containment directly and report all six flags."""
    cl = _closure_fn(space, kind)
    ig = aura_interior(space, g)
    cl_ig = cl(ig)
    cl_g = cl(g)
    i_cl_g = aura_interior(space, cl_g)
    return OpennessProfile(
        a_open=ig == g,
        alpha_open=g.is_subset_of(aura_interior(space, cl_ig)),
        semi_open=g.is_subset_of(cl_ig),
        pre_open=g.is_subset_of(i_cl_g),
        b_open=g.is_subset_of(cl_ig.union(i_cl_g)),
        beta_open=g.is_subset_of(cl(i_cl_g)),
        closure_kind=kind,
    )


def check_union_closure(
    space: SoftAuraSpace,
    family: Sequence[SoftSet],
    openness_class: str,
    kind: str = CECH,
) -> bool:
    """Does the union of a family stay in the named union-closed class?

    Every member must already belong to the class (else PreconditionUnmet
    with the offending index).  These classes are union-closed, so the
    answer is always true; returning False is a falsification to be
    reported, never swallowed.
    """
    if openness_class not in UNION_CLOSED_CLASSES:
        raise ValueError(f"class must be one of {UNION_CLOSED_CLASSES}, got {openness_class!r}")
    union = SoftSet.null(space.context)
    for i, member in enumerate(family):
        if not classify(space, member, kind).flag(openness_class):
            raise PreconditionUnmet(i, f"not {openness_class}-open")
        union = union.union(member)
    return classify(space, union, kind).flag(openness_class)


@dataclass(frozen=True)
class AlphaMeetWitness:
    """Two alpha-open sets whose intersection is not alpha-open."""

    space: SoftAuraSpace
    left: SoftSet
    right: SoftSet

    def replay(self, kind: str = CECH) -> bool:
        """Re-evaluate the three classifications; True when the witness still holds."""
        return (
            classify(self.space, self.left, kind).alpha_open
            and classify(self.space, self.right, kind).alpha_open
            and not classify(self.space, self.left.intersect(self.right), kind).alpha_open
        )


def search_alpha_intersection_failure(
    spaces: SoftAuraSpace | Iterable[SoftAuraSpace],
    budget: int,
    kind: str = CECH,
) -> AlphaMeetWitness | None:
    """Scan for a pair of alpha-open sets with a non-alpha intersection.

    Spaces are scanned in the given order; within a space, soft sets are
    enumerated in canonical combined-bitmask order and pairs in ascending
    rank order, so the first witness found is canonically minimal.  `budget`
    bounds the number of pair checks; None is returned when it runs out or
    the scan completes clean.
    """
    if budget <= 0:
        raise ValueError("budget must be positive")
    if isinstance(spaces, SoftAuraSpace):
        spaces = [spaces]
    from .softset import iter_all_soft_sets

    for space in spaces:
        alphas = [
            s for s in iter_all_soft_sets(space.context)
            if classify(space, s, kind).alpha_open
        ]
        for i, left in enumerate(alphas):
            for right in alphas[i + 1:]:
                if budget <= 0:
                    return None
                budget -= 1
                if not classify(space, left.intersect(right), kind).alpha_open:
                    return AlphaMeetWitness(space, left, right)
    return None
