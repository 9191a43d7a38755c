"""Exhaustive and sampled verification over small space families.

The engine enumerates every scope function over the discrete topology for
each universe/parameter shape up to the requested bounds, builds per-space
lookup tables by calling the public operators once per soft set, and then
evaluates every law as comparisons of those library-produced values.  Set
ranks, pair ranks, scope ranks and shape ranks are all canonical, so every
reported witness is the first one in canonical order and every report is
byte-reproducible.

Literal per-element oracles for the closure and interior live here too; they
work on name sets, never on bitmasks, so they share no code with the
optimized operators they check.
"""

from __future__ import annotations

import itertools
import json
import random
from dataclasses import dataclass, field
from typing import Callable, Iterator, Mapping, Sequence

from .errors import CapExceeded, SizeGuard
from .genopen import classify
from .operators import (
    CECH,
    KURATOWSKI,
    aura_closure,
    aura_interior,
    enumerate_aura_topology,
    is_aura_open,
    kuratowski_closure,
)
from .rough import accuracy, boundary, lower_approx, upper_approx
from .separation import separation_report, t1_singleton_closure, t1_via_singleton_scopes
from .softset import Context, SoftSet, make_soft_set
from .space import (
    DEFAULT_CAP,
    DISCRETE,
    GENERATED,
    ScopeFunction,
    SoftAuraSpace,
    SoftTopology,
    discrete_topology,
    generate_topology,
    validate_scope,
)

#: Product bound for exhaustive family enumeration.
EXHAUSTIVE_GUARD = 12

#: Witnesses kept per law row before further failures are only counted.
WITNESS_LIMIT = 3


@dataclass(frozen=True)
class SpaceFamilySpec:
    """Bounds and enumeration mode for a family of spaces.

    scope_mode "all" enumerates every scope function over every shape up to
    (max_universe, max_params); it requires max_universe * max_params <= 12.
    scope_mode "sampled" draws `sample_count` spaces from `seed` instead.
    topology_kind "generated" (random saturated subbases) is only available
    in sampled mode.
    """

    max_universe: int
    max_params: int
    topology_kind: str = DISCRETE
    scope_mode: str = "all"
    seed: int | None = None
    sample_count: int | None = None

    def __post_init__(self):
        if self.max_universe < 1 or self.max_params < 1:
            raise ValueError("bounds must be at least 1")
        if self.topology_kind not in (DISCRETE, GENERATED):
            raise ValueError(f"unsupported family topology kind {self.topology_kind!r}")
        if self.scope_mode == "all":
            if self.max_universe * self.max_params > EXHAUSTIVE_GUARD:
                raise SizeGuard(
                    f"exhaustive family needs max_universe*max_params <= {EXHAUSTIVE_GUARD}"
                )
            if self.topology_kind != DISCRETE:
                raise SizeGuard("exhaustive enumeration is only supported over the discrete topology")
        elif self.scope_mode == "sampled":
            if self.seed is None or self.sample_count is None:
                raise ValueError("sampled mode requires seed and sample_count")
            if not 0 <= self.seed < 1 << 64:
                raise ValueError("seed must fit in 64 bits")
        else:
            raise ValueError(f"unknown scope mode {self.scope_mode!r}")


def _family_context(n: int, m: int) -> Context:
    return Context(
        tuple(f"x{i}" for i in range(1, n + 1)),
        tuple(f"e{j}" for j in range(1, m + 1)),
    )


def enumerate_scope_functions(
    context: Context,
    topology: SoftTopology,
    cap: int = DEFAULT_CAP,
) -> Iterator[ScopeFunction]:
    """Stream every admissible scope function in canonical order.

    Per point, admissible soft sets (topology members containing the point
    in every slice) ascend by combined bitmask; assignments then follow
    product order with the last point varying fastest.  The total count is
    capped before anything is yielded.
    """
    n, m = context.n_points, context.n_params
    per_point: list[list[SoftSet]] = []
    if topology.kind == DISCRETE:
        full = context.full_mask
        for xi in range(n):
            bit = 1 << xi
            slices = [s for s in range(full + 1) if s & bit]
            choices = [
                SoftSet(context, masks)
                for masks in itertools.product(slices, repeat=m)
            ]
            per_point.append(choices)
    else:
        for xi in range(n):
            bit = 1 << xi
            members = [s for _, s in topology if all(mk & bit for mk in s.masks)]
            members.sort(key=lambda s: tuple(reversed(s.masks)))
            per_point.append(members)

    total = 1
    for choices in per_point:
        total *= len(choices)
    if total > cap:
        raise CapExceeded(total, cap)
    for combo in itertools.product(*per_point):
        yield ScopeFunction(context, combo)


def _sample_scope(context: Context, topology: SoftTopology, rng: random.Random) -> ScopeFunction:
    n, m = context.n_points, context.n_params
    assignment = []
    if topology.kind == DISCRETE:
        for xi in range(n):
            bit = 1 << xi
            rest = context.full_mask & ~bit
            masks = []
            for _ in range(m):
                sub = rng.randrange(1 << (n - 1)) if n > 1 else 0
                # deposit sub's bits into the positions of `rest`
                mask, taken, r = bit, sub, rest
                while r:
                    low = r & -r
                    if taken & 1:
                        mask |= low
                    taken >>= 1
                    r ^= low
                masks.append(mask)
            assignment.append(SoftSet(context, tuple(masks)))
    else:
        for xi in range(n):
            bit = 1 << xi
            members = [s for _, s in topology if all(mk & bit for mk in s.masks)]
            members.sort(key=lambda s: tuple(reversed(s.masks)))
            assignment.append(rng.choice(members))
    return ScopeFunction(context, tuple(assignment))


def _sample_topology(context: Context, kind: str, rng: random.Random) -> SoftTopology:
    if kind == DISCRETE:
        return discrete_topology(context)
    full = context.full_mask
    subbasis = []
    for i in range(rng.randrange(4)):
        masks = tuple(rng.randrange(full + 1) for _ in range(context.n_params))
        subbasis.append((f"S{i + 1}", SoftSet(context, masks)))
    return generate_topology(context, subbasis)


def iter_family_spaces(spec: SpaceFamilySpec) -> Iterator[tuple[tuple[int, int, int], SoftAuraSpace]]:
    """Yield ((|X|, |E|, scope rank), space) in canonical family order."""
    if spec.scope_mode == "all":
        for n in range(1, spec.max_universe + 1):
            for m in range(1, spec.max_params + 1):
                ctx = _family_context(n, m)
                topo = discrete_topology(ctx)
                for idx, scope in enumerate(enumerate_scope_functions(ctx, topo)):
                    yield (n, m, idx), SoftAuraSpace(ctx, topo, scope)
    else:
        rng = random.Random(spec.seed)
        contexts: dict[tuple[int, int], Context] = {}
        for idx in range(spec.sample_count or 0):
            n = rng.randint(1, spec.max_universe)
            m = rng.randint(1, spec.max_params)
            ctx = contexts.setdefault((n, m), _family_context(n, m))
            topo = _sample_topology(ctx, spec.topology_kind, rng)
            scope = _sample_scope(ctx, topo, rng)
            yield (n, m, idx), SoftAuraSpace(ctx, topo, scope)


# -- literal oracles --------------------------------------------------------


def oracle_closure(space: SoftAuraSpace, g: SoftSet) -> SoftSet:
    """Per-element definition scan using name sets; no bitmask shortcuts."""
    ctx = space.context
    slices: dict[str, list[str]] = {}
    for e in ctx.parameters:
        hits = []
        for x in ctx.universe:
            scope_points = set(space.scope.of(x).points(e))
            if scope_points & set(g.points(e)):
                hits.append(x)
        slices[e] = hits
    return make_soft_set(ctx, slices)


def oracle_interior(space: SoftAuraSpace, g: SoftSet) -> SoftSet:
    """Per-element definition scan using name sets; no bitmask shortcuts."""
    ctx = space.context
    slices: dict[str, list[str]] = {}
    for e in ctx.parameters:
        hits = []
        for x in ctx.universe:
            scope_points = set(space.scope.of(x).points(e))
            if scope_points <= set(g.points(e)):
                hits.append(x)
        slices[e] = hits
    return make_soft_set(ctx, slices)


# -- witnesses ---------------------------------------------------------------


def _space_desc(space: SoftAuraSpace) -> dict:
    topo: dict = {"kind": space.topology.kind}
    if space.topology.kind == GENERATED:
        topo["subbasis"] = {
            name: {e: list(s.points(e)) for e in space.context.parameters}
            for name, s in (space.topology.subbasis or ())
        }
    return {
        "universe": list(space.context.universe),
        "parameters": list(space.context.parameters),
        "topology": topo,
        "scope": {
            x: {e: list(s.points(e)) for e in space.context.parameters}
            for x, s in space.scope.items()
        },
    }


def replay_space(desc: Mapping) -> SoftAuraSpace:
    """Rebuild a witness space from its description."""
    ctx = Context(tuple(desc["universe"]), tuple(desc["parameters"]))
    kind = desc["topology"]["kind"]
    if kind == DISCRETE:
        topo = discrete_topology(ctx)
    elif kind == GENERATED:
        topo = generate_topology(
            ctx,
            {
                name: SoftSet.from_slices(ctx, slices)
                for name, slices in desc["topology"]["subbasis"].items()
            },
        )
    else:
        raise ValueError(f"cannot replay topology kind {kind!r}")
    assignment = {
        x: SoftSet.from_slices(ctx, slices) for x, slices in desc["scope"].items()
    }
    return SoftAuraSpace(ctx, topo, validate_scope(ctx, topo, assignment))


@dataclass(frozen=True)
class Witness:
    """A replayable finding: a space, the soft sets involved, and what they show.

    kind is "law" (a falsification), "strictness" (an implication edge that
    is strict), or "report" (an expected finding, e.g. a one-step-closure
    alpha intersection failure).  rank is the canonical position
    (|X|, |E|, scope rank, set ranks...) of the instance in family order.
    """

    kind: str
    name: str
    space: dict
    rank: tuple[int, ...]
    sets: tuple[dict, ...]

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind,
            "name": self.name,
            "rank": list(self.rank),
            "space": self.space,
            "sets": [
                {e: list(pts) for e, pts in slices.items()} for slices in self.sets
            ],
        }


def _witness(kind: str, name: str, space: SoftAuraSpace, rank, sets: Sequence[SoftSet]) -> Witness:
    return Witness(
        kind,
        name,
        _space_desc(space),
        tuple(rank),
        tuple(s.as_dict() for s in sets),
    )


def witness_from_json(d: Mapping) -> Witness:
    """Rebuild a Witness from its to_json_dict form (e.g. out of a suite report)."""
    return Witness(
        d["kind"],
        d["name"],
        d["space"],
        tuple(d["rank"]),
        tuple({e: tuple(pts) for e, pts in slices.items()} for slices in d["sets"]),
    )


# -- law registry ------------------------------------------------------------


def _law_closure_grounding(space, sets):
    return aura_closure(space, SoftSet.null(space.context)).is_null()


def _law_interior_absolute(space, sets):
    return aura_interior(space, SoftSet.absolute(space.context)).is_absolute()


def _law_closure_enlargement(space, sets):
    (g,) = sets
    return g.is_subset_of(aura_closure(space, g))


def _law_interior_contraction(space, sets):
    (g,) = sets
    return aura_interior(space, g).is_subset_of(g)


def _law_duality(space, sets):
    (g,) = sets
    return (
        aura_closure(space, g.complement()) == aura_interior(space, g).complement()
        and aura_interior(space, g.complement()) == aura_closure(space, g).complement()
    )


def _law_closure_monotonicity(space, sets):
    g, h = sets
    if not g.is_subset_of(h):
        return True
    return aura_closure(space, g).is_subset_of(aura_closure(space, h))


def _law_interior_monotonicity(space, sets):
    g, h = sets
    if not g.is_subset_of(h):
        return True
    return aura_interior(space, g).is_subset_of(aura_interior(space, h))


def _law_closure_additivity(space, sets):
    g, h = sets
    return aura_closure(space, g.union(h)) == aura_closure(space, g).union(aura_closure(space, h))


def _law_interior_meet(space, sets):
    g, h = sets
    return aura_interior(space, g.intersect(h)) == aura_interior(space, g).intersect(
        aura_interior(space, h)
    )


def _law_aura_open_family(space, sets):
    g, h = sets
    if not (is_aura_open(space, g) and is_aura_open(space, h)):
        return True
    return is_aura_open(space, g.union(h)) and is_aura_open(space, g.intersect(h))


def _law_kuratowski_fixpoint(space, sets):
    (g,) = sets
    res = kuratowski_closure(space, g)
    k = res.closure
    n = space.context.n_points
    return (
        kuratowski_closure(space, k).closure == k
        and aura_closure(space, k) == k
        and aura_closure(space, g).is_subset_of(k)
        and g.is_subset_of(k)
        and all(1 <= it <= n for it in res.iterations.values())
    )


def _law_kuratowski_additivity(space, sets):
    g, h = sets
    return kuratowski_closure(space, g.union(h)).closure == kuratowski_closure(
        space, g
    ).closure.union(kuratowski_closure(space, h).closure)


def _law_tau_infinity_in_tau(space, sets):
    (g,) = sets
    comp = g.complement()
    if kuratowski_closure(space, comp).closure != comp:
        return True
    return is_aura_open(space, g)


def _chain_holds(p) -> bool:
    return (
        (not p.a_open or p.alpha_open)
        and (not p.alpha_open or (p.semi_open and p.pre_open))
        and (not (p.semi_open or p.pre_open) or p.b_open)
        and (not p.b_open or p.beta_open)
    )


def _law_hierarchy_cech(space, sets):
    (g,) = sets
    return _chain_holds(classify(space, g, CECH))


def _law_hierarchy_kuratowski(space, sets):
    (g,) = sets
    return _chain_holds(classify(space, g, KURATOWSKI))


def _law_classify_consistency(space, sets):
    (g,) = sets
    for kind in (CECH, KURATOWSKI):
        p = classify(space, g, kind)
        cl = (
            (lambda s: aura_closure(space, s))
            if kind == CECH
            else (lambda s: kuratowski_closure(space, s).closure)
        )
        ig = aura_interior(space, g)
        checks = (
            p.a_open == (ig == g),
            p.semi_open == g.is_subset_of(cl(ig)),
            p.pre_open == g.is_subset_of(aura_interior(space, cl(g))),
            p.alpha_open == g.is_subset_of(aura_interior(space, cl(ig))),
            p.b_open == g.is_subset_of(cl(ig).union(aura_interior(space, cl(g)))),
            p.beta_open == g.is_subset_of(cl(aura_interior(space, cl(g)))),
        )
        if not all(checks):
            return False
    return True


def _law_decomposition_set_kuratowski(space, sets):
    (g,) = sets
    p = classify(space, g, KURATOWSKI)
    return p.alpha_open == (p.semi_open and p.pre_open)


def _union_closure_law(openness_class):
    def law(space, sets):
        g, h = sets
        pg = classify(space, g, CECH).flag(openness_class)
        ph = classify(space, h, CECH).flag(openness_class)
        if not (pg and ph):
            return True
        return classify(space, g.union(h), CECH).flag(openness_class)

    return law


def _law_t1_iff_t2(space, sets):
    rep = separation_report(space)
    return rep.t1 == rep.t2


def _law_t1_iff_singleton_scopes(space, sets):
    rep = separation_report(space)
    return rep.t1 == t1_via_singleton_scopes(space)


def _law_t1_implies_t0(space, sets):
    rep = separation_report(space)
    return rep.t0 or not rep.t1


def _law_t1_singleton_closure(space, sets):
    return t1_singleton_closure(space).holds


def _law_rough_delegation(space, sets):
    (g,) = sets
    return lower_approx(space, g) == aura_interior(space, g) and upper_approx(
        space, g
    ) == aura_closure(space, g)


def _law_rough_sandwich(space, sets):
    (g,) = sets
    return lower_approx(space, g).is_subset_of(g) and g.is_subset_of(upper_approx(space, g))


def _law_rough_fixed_points(space, sets):
    null = SoftSet.null(space.context)
    absolute = SoftSet.absolute(space.context)
    return (
        lower_approx(space, null).is_null()
        and upper_approx(space, null).is_null()
        and lower_approx(space, absolute).is_absolute()
        and upper_approx(space, absolute).is_absolute()
    )


def _law_rough_duality(space, sets):
    (g,) = sets
    return (
        lower_approx(space, g.complement()) == upper_approx(space, g).complement()
        and upper_approx(space, g.complement()) == lower_approx(space, g).complement()
    )


def _law_rough_monotonicity(space, sets):
    g, h = sets
    if not g.is_subset_of(h):
        return True
    return lower_approx(space, g).is_subset_of(lower_approx(space, h)) and upper_approx(
        space, g
    ).is_subset_of(upper_approx(space, h))


def _law_rough_upper_join(space, sets):
    g, h = sets
    return upper_approx(space, g.union(h)) == upper_approx(space, g).union(
        upper_approx(space, h)
    )


def _law_rough_lower_meet(space, sets):
    g, h = sets
    return lower_approx(space, g.intersect(h)) == lower_approx(space, g).intersect(
        lower_approx(space, h)
    )


def _law_rough_accuracy(space, sets):
    (g,) = sets
    acc = accuracy(space, g)
    if not 0 <= acc.value <= 1:
        return False
    if (acc.value == 1) != boundary(space, g).is_null():
        return False
    return acc.convention_applied == upper_approx(space, g).is_null()


def _law_oracle_equivalence(space, sets):
    (g,) = sets
    return oracle_closure(space, g) == aura_closure(space, g) and oracle_interior(
        space, g
    ) == aura_interior(space, g)


@dataclass(frozen=True)
class LawSpec:
    arity: str  # "space" | "set" | "pair"
    evaluator: Callable
    description: str


LAWS: dict[str, LawSpec] = {
    "closure-grounding": LawSpec("space", _law_closure_grounding, "closure of null is null"),
    "closure-enlargement": LawSpec("set", _law_closure_enlargement, "G inside cl(G)"),
    "closure-monotonicity": LawSpec("pair", _law_closure_monotonicity, "G inside H implies cl(G) inside cl(H)"),
    "closure-additivity": LawSpec("pair", _law_closure_additivity, "cl(G or H) = cl(G) or cl(H)"),
    "interior-absolute": LawSpec("space", _law_interior_absolute, "interior of absolute is absolute"),
    "interior-contraction": LawSpec("set", _law_interior_contraction, "int(G) inside G"),
    "interior-monotonicity": LawSpec("pair", _law_interior_monotonicity, "G inside H implies int(G) inside int(H)"),
    "interior-meet": LawSpec("pair", _law_interior_meet, "int(G and H) = int(G) and int(H)"),
    "duality": LawSpec("set", _law_duality, "cl and int are complement-dual"),
    "aura-open-family": LawSpec("pair", _law_aura_open_family, "aura-open sets are closed under union and intersection"),
    "kuratowski-fixpoint": LawSpec("set", _law_kuratowski_fixpoint, "fixpoint closure is idempotent, contains one-step closure, stabilises within |X| steps"),
    "kuratowski-additivity": LawSpec("pair", _law_kuratowski_additivity, "fixpoint closure is additive"),
    "tau-infinity-in-tau": LawSpec("set", _law_tau_infinity_in_tau, "complements of fixpoint-closed sets are aura-open"),
    "hierarchy-cech": LawSpec("set", _law_hierarchy_cech, "open => alpha => semi,pre => b => beta (one-step closure)"),
    "hierarchy-kuratowski": LawSpec("set", _law_hierarchy_kuratowski, "open => alpha => semi,pre => b => beta (fixpoint closure)"),
    "classify-consistency": LawSpec("set", _law_classify_consistency, "classify flags match direct operator composition"),
    "decomposition-set-kuratowski": LawSpec("set", _law_decomposition_set_kuratowski, "alpha = semi and pre under the fixpoint closure"),
    "union-closure-semi": LawSpec("pair", _union_closure_law("semi"), "semi-open sets are union-closed"),
    "union-closure-pre": LawSpec("pair", _union_closure_law("pre"), "pre-open sets are union-closed"),
    "union-closure-beta": LawSpec("pair", _union_closure_law("beta"), "beta-open sets are union-closed"),
    "t1-iff-t2": LawSpec("space", _law_t1_iff_t2, "T1 and T2 coincide"),
    "t1-iff-singleton-scopes": LawSpec("space", _law_t1_iff_singleton_scopes, "T1 iff every scope slice is a singleton"),
    "t1-implies-t0": LawSpec("space", _law_t1_implies_t0, "T1 implies T0"),
    "t1-singleton-closure": LawSpec("space", _law_t1_singleton_closure, "in a T1 space soft points are closed"),
    "rough-delegation": LawSpec("set", _law_rough_delegation, "lower/upper approximations equal interior/closure"),
    "rough-sandwich": LawSpec("set", _law_rough_sandwich, "lower inside target inside upper"),
    "rough-fixed-points": LawSpec("space", _law_rough_fixed_points, "null and absolute approximate to themselves"),
    "rough-duality": LawSpec("set", _law_rough_duality, "approximations are complement-dual"),
    "rough-monotonicity": LawSpec("pair", _law_rough_monotonicity, "approximations are monotone"),
    "rough-upper-join": LawSpec("pair", _law_rough_upper_join, "upper approximation distributes over union"),
    "rough-lower-meet": LawSpec("pair", _law_rough_lower_meet, "lower approximation distributes over intersection"),
    "rough-accuracy": LawSpec("set", _law_rough_accuracy, "accuracy in [0,1]; 1 exactly when the boundary is null; convention flagged on null upper"),
    "oracle-equivalence": LawSpec("set", _law_oracle_equivalence, "bitmask operators equal the literal oracles"),
}

#: Rows whose pair evaluations coincide extensionally with a base row given
#: rough delegation; the engine shares the evaluations and mirrors counts.
_SHARED_ROUGH_PAIR_ROWS = {
    "rough-monotonicity": ("closure-monotonicity", "interior-monotonicity"),
    "rough-upper-join": ("closure-additivity",),
    "rough-lower-meet": ("interior-meet",),
}

#: Witness-producing findings (never build-blocking): alpha meets can fail
#: under both closure kinds because the interior stays one-step, and the
#: one-step closure can break the per-set alpha = semi+pre identity.
REPORT_ROWS = ("alpha-meet-cech", "alpha-meet-kuratowski", "decomposition-set-cech")

#: Hierarchy edges, each witnessed by a set where the right class holds and
#: the left does not.
STRICTNESS_EDGES = (
    "open=>alpha",
    "alpha=>semi",
    "alpha=>pre",
    "semi|pre=>b",
    "b=>beta",
)


def _edge_condition(edge: str, flags) -> bool:
    opn, alpha, semi, pre, b, beta = flags
    if edge == "open=>alpha":
        return alpha and not opn
    if edge == "alpha=>semi":
        return semi and not alpha
    if edge == "alpha=>pre":
        return pre and not alpha
    if edge == "semi|pre=>b":
        return b and not (semi or pre)
    if edge == "b=>beta":
        return beta and not b
    raise ValueError(f"unknown edge {edge!r}")


def replay_witness(w: Witness) -> bool:
    """Rebuild the witness instance and re-derive its verdict from the public API."""
    space = replay_space(w.space)
    ctx = space.context
    sets = [SoftSet.from_slices(ctx, slices) for slices in w.sets]
    if w.kind == "law":
        return not LAWS[w.name].evaluator(space, sets)
    if w.kind == "strictness":
        p = classify(space, sets[0], CECH)
        flags = (p.a_open, p.alpha_open, p.semi_open, p.pre_open, p.b_open, p.beta_open)
        return _edge_condition(w.name, flags)
    if w.kind == "report":
        if w.name in ("alpha-meet-cech", "alpha-meet-kuratowski"):
            g, h = sets
            kind = CECH if w.name.endswith("cech") else KURATOWSKI
            return (
                classify(space, g, kind).alpha_open
                and classify(space, h, kind).alpha_open
                and not classify(space, g.intersect(h), kind).alpha_open
            )
        if w.name == "decomposition-set-cech":
            p = classify(space, sets[0], CECH)
            return p.alpha_open != (p.semi_open and p.pre_open)
    raise ValueError(f"cannot replay witness kind {w.kind!r} name {w.name!r}")


# -- suite engine ------------------------------------------------------------


@dataclass
class LawResult:
    checked: int = 0
    failures: int = 0
    witnesses: list[Witness] = field(default_factory=list)


@dataclass
class SuiteResult:
    """Outcome of one law-suite run; serialises to a deterministic JSON report."""

    spec: SpaceFamilySpec
    laws: dict[str, LawResult]
    reports: dict[str, dict]
    strictness: dict[str, Witness | None]
    spaces_checked: int
    sets_per_space_max: int

    @property
    def total_failures(self) -> int:
        return sum(r.failures for r in self.laws.values())

    def to_json_dict(self) -> dict:
        return {
            "config": {
                "maxUniverse": self.spec.max_universe,
                "maxParams": self.spec.max_params,
                "topologyKind": self.spec.topology_kind,
                "scopeEnumeration": self.spec.scope_mode,
                "seed": self.spec.seed,
                "sampleCount": self.spec.sample_count,
            },
            "family": {
                "spaces": self.spaces_checked,
                "setsPerSpaceMax": self.sets_per_space_max,
            },
            "laws": {
                name: {
                    "checked": r.checked,
                    "failures": r.failures,
                    "witnesses": [w.to_json_dict() for w in r.witnesses],
                }
                for name, r in self.laws.items()
            },
            "reports": self.reports,
            "strictness": {
                edge: (w.to_json_dict() if w is not None else None)
                for edge, w in self.strictness.items()
            },
        }

    def to_json_bytes(self) -> bytes:
        return (json.dumps(self.to_json_dict(), indent=2, ensure_ascii=False) + "\n").encode(
            "utf-8"
        )


def _pack(masks: Sequence[int], n: int) -> int:
    out = 0
    for i, m in enumerate(masks):
        out |= m << (i * n)
    return out


class _ShapeCache:
    """Per-(n, m) soft set list shared by every space of that shape."""

    def __init__(self):
        self._sets: dict[tuple[int, int], list[SoftSet]] = {}

    def sets_for(self, ctx: Context) -> list[SoftSet]:
        key = (ctx.n_points, ctx.n_params)
        if key not in self._sets:
            n, m = key
            slice_mask = (1 << n) - 1
            self._sets[key] = [
                SoftSet(ctx, tuple((c >> (i * n)) & slice_mask for i in range(m)))
                for c in range(1 << (n * m))
            ]
        return self._sets[key]


def _set_list_for(space: SoftAuraSpace, spec: SpaceFamilySpec, cache: _ShapeCache, rng_key: int) -> list[SoftSet]:
    ctx = space.context
    bits = ctx.n_points * ctx.n_params
    if bits <= EXHAUSTIVE_GUARD:
        return cache.sets_for(ctx)
    # sampled big shapes: a seeded spread of soft sets instead of 2^bits
    rng = random.Random((spec.seed or 0) ^ rng_key)
    n, m = ctx.n_points, ctx.n_params
    full = ctx.full_mask
    return [
        SoftSet(ctx, tuple(rng.randrange(full + 1) for _ in range(m)))
        for _ in range(256)
    ]


def run_law_suite(spec: SpaceFamilySpec, laws: Sequence[str] | None = None) -> SuiteResult:
    """Evaluate the law registry over the family and collect a deterministic report.

    Per space, closure/interior/fixpoint tables are built by one public
    operator call per soft set; law checks are then comparisons of those
    library-produced values.  Scan order is canonical everywhere, so
    witnesses are canonically minimal and reports byte-reproducible.
    """
    if laws is not None:
        unknown = [l for l in laws if l not in LAWS]
        if unknown:
            raise ValueError(f"unknown laws: {unknown}")
    selected = set(laws) if laws is not None else set(LAWS)

    results = {name: LawResult() for name in LAWS if name in selected}
    reports: dict[str, dict] = {
        name: {"found": 0, "first": None} for name in REPORT_ROWS
    }
    strictness: dict[str, Witness | None] = {e: None for e in STRICTNESS_EDGES}
    cache = _ShapeCache()
    spaces_checked = 0
    sets_max = 0

    def want(name: str) -> bool:
        return name in selected

    def fail(name: str, space, rank, sets):
        r = results.get(name)
        if r is None:
            return
        r.failures += 1
        if len(r.witnesses) < WITNESS_LIMIT:
            r.witnesses.append(_witness("law", name, space, rank, sets))

    for rank3, space in iter_family_spaces(spec):
        spaces_checked += 1
        ctx = space.context
        n, m = ctx.n_points, ctx.n_params
        sets = _set_list_for(space, spec, cache, hash(rank3) & 0xFFFF)
        size = len(sets)
        sets_max = max(sets_max, size)
        exhaustive_sets = size == 1 << (n * m)

        cl_t = [_pack(aura_closure(space, s).masks, n) for s in sets]
        in_t = [_pack(aura_interior(space, s).masks, n) for s in sets]
        kur_results = [kuratowski_closure(space, s) for s in sets]
        ku_t = [_pack(r.closure.masks, n) for r in kur_results]
        packed = [_pack(s.masks, n) for s in sets]
        pack_index = {p: i for i, p in enumerate(packed)}
        full_packed = _pack((ctx.full_mask,) * m, n)

        def flags_from(cl_tab):
            opn, sem, pre_, alp, bb, bet = [], [], [], [], [], []
            for i, g in enumerate(packed):
                ig = in_t[i]
                cl_ig = cl_tab[pack_index[ig]] if ig in pack_index else None
                cl_g = cl_tab[i]
                i_cl_g = in_t[pack_index[cl_g]] if cl_g in pack_index else None
                # non-exhaustive set lists may miss intermediate values;
                # fall back to direct operator calls there
                if cl_ig is None or i_cl_g is None:
                    kind = CECH if cl_tab is cl_t else KURATOWSKI
                    p = classify(space, sets[i], kind)
                    row = (p.a_open, p.semi_open, p.pre_open, p.alpha_open, p.b_open, p.beta_open)
                else:
                    i_cl_ig = in_t[pack_index[cl_ig]] if cl_ig in pack_index else None
                    cl_i_cl_g = cl_tab[pack_index[i_cl_g]] if i_cl_g in pack_index else None
                    if i_cl_ig is None or cl_i_cl_g is None:
                        kind = CECH if cl_tab is cl_t else KURATOWSKI
                        p = classify(space, sets[i], kind)
                        row = (p.a_open, p.semi_open, p.pre_open, p.alpha_open, p.b_open, p.beta_open)
                    else:
                        row = (
                            ig == g,
                            g & ~cl_ig == 0,
                            g & ~i_cl_g == 0,
                            g & ~i_cl_ig == 0,
                            g & ~(cl_ig | i_cl_g) == 0,
                            g & ~cl_i_cl_g == 0,
                        )
                opn.append(row[0])
                sem.append(row[1])
                pre_.append(row[2])
                alp.append(row[3])
                bb.append(row[4])
                bet.append(row[5])
            return opn, sem, pre_, alp, bb, bet

        opn, sem, pre_, alp, bb, bet = flags_from(cl_t)
        opn_k, sem_k, pre_k, alp_k, bb_k, bet_k = flags_from(ku_t)

        # --- per-space laws
        if want("closure-grounding"):
            results["closure-grounding"].checked += 1
            if not _law_closure_grounding(space, ()):
                fail("closure-grounding", space, rank3, ())
        if want("interior-absolute"):
            results["interior-absolute"].checked += 1
            if not _law_interior_absolute(space, ()):
                fail("interior-absolute", space, rank3, ())
        if want("rough-fixed-points"):
            results["rough-fixed-points"].checked += 1
            if not _law_rough_fixed_points(space, ()):
                fail("rough-fixed-points", space, rank3, ())
        sep_laws = ("t1-iff-t2", "t1-iff-singleton-scopes", "t1-implies-t0", "t1-singleton-closure")
        if any(want(l) for l in sep_laws):
            rep = separation_report(space)
            if want("t1-iff-t2"):
                results["t1-iff-t2"].checked += 1
                if rep.t1 != rep.t2:
                    fail("t1-iff-t2", space, rank3, ())
            if want("t1-iff-singleton-scopes"):
                results["t1-iff-singleton-scopes"].checked += 1
                if rep.t1 != t1_via_singleton_scopes(space):
                    fail("t1-iff-singleton-scopes", space, rank3, ())
            if want("t1-implies-t0"):
                results["t1-implies-t0"].checked += 1
                if rep.t1 and not rep.t0:
                    fail("t1-implies-t0", space, rank3, ())
            if want("t1-singleton-closure"):
                results["t1-singleton-closure"].checked += 1
                if not t1_singleton_closure(space).holds:
                    fail("t1-singleton-closure", space, rank3, ())

        # --- per-set laws
        for i, g in enumerate(packed):
            rank = rank3 + (i,)
            one = (sets[i],)
            if want("closure-enlargement"):
                results["closure-enlargement"].checked += 1
                if g & ~cl_t[i]:
                    fail("closure-enlargement", space, rank, one)
            if want("interior-contraction"):
                results["interior-contraction"].checked += 1
                if in_t[i] & ~g:
                    fail("interior-contraction", space, rank, one)
            if want("duality") or want("rough-duality"):
                comp = full_packed & ~g
                ok = True
                if comp in pack_index:
                    ci = pack_index[comp]
                    ok = cl_t[ci] == full_packed & ~in_t[i] and in_t[ci] == full_packed & ~cl_t[i]
                else:
                    ok = _law_duality(space, one)
                if want("duality"):
                    results["duality"].checked += 1
                    if not ok:
                        fail("duality", space, rank, one)
                if want("rough-duality"):
                    results["rough-duality"].checked += 1
                    if not ok:
                        fail("rough-duality", space, rank, one)
            if want("kuratowski-fixpoint"):
                results["kuratowski-fixpoint"].checked += 1
                k = ku_t[i]
                ok = cl_t[i] & ~k == 0 and g & ~k == 0
                if ok and k in pack_index:
                    ok = ku_t[pack_index[k]] == k and cl_t[pack_index[k]] == k
                elif ok:
                    kk = kuratowski_closure(space, kur_results[i].closure).closure
                    ok = _pack(kk.masks, n) == k
                if ok:
                    ok = all(1 <= it <= n for it in kur_results[i].iterations.values())
                if not ok:
                    fail("kuratowski-fixpoint", space, rank, one)
            if want("tau-infinity-in-tau"):
                results["tau-infinity-in-tau"].checked += 1
                comp = full_packed & ~g
                if comp in pack_index:
                    closed = ku_t[pack_index[comp]] == comp
                else:
                    cc = sets[i].complement()
                    closed = kuratowski_closure(space, cc).closure == cc
                if closed and in_t[i] != g:
                    fail("tau-infinity-in-tau", space, rank, one)
            if want("hierarchy-cech"):
                results["hierarchy-cech"].checked += 1
                if not (
                    (not opn[i] or alp[i])
                    and (not alp[i] or (sem[i] and pre_[i]))
                    and (not (sem[i] or pre_[i]) or bb[i])
                    and (not bb[i] or bet[i])
                ):
                    fail("hierarchy-cech", space, rank, one)
            if want("hierarchy-kuratowski"):
                results["hierarchy-kuratowski"].checked += 1
                if not (
                    (not opn_k[i] or alp_k[i])
                    and (not alp_k[i] or (sem_k[i] and pre_k[i]))
                    and (not (sem_k[i] or pre_k[i]) or bb_k[i])
                    and (not bb_k[i] or bet_k[i])
                ):
                    fail("hierarchy-kuratowski", space, rank, one)
            if want("classify-consistency") and i % 7 == 0:
                results["classify-consistency"].checked += 1
                pc = classify(space, sets[i], CECH)
                pk = classify(space, sets[i], KURATOWSKI)
                ok = (
                    (pc.a_open, pc.semi_open, pc.pre_open, pc.alpha_open, pc.b_open, pc.beta_open)
                    == (opn[i], sem[i], pre_[i], alp[i], bb[i], bet[i])
                    and (pk.a_open, pk.semi_open, pk.pre_open, pk.alpha_open, pk.b_open, pk.beta_open)
                    == (opn_k[i], sem_k[i], pre_k[i], alp_k[i], bb_k[i], bet_k[i])
                )
                if not ok:
                    fail("classify-consistency", space, rank, one)
            if want("decomposition-set-kuratowski"):
                results["decomposition-set-kuratowski"].checked += 1
                if alp_k[i] != (sem_k[i] and pre_k[i]):
                    fail("decomposition-set-kuratowski", space, rank, one)
            if alp[i] != (sem[i] and pre_[i]):
                rep_row = reports["decomposition-set-cech"]
                rep_row["found"] += 1
                if rep_row["first"] is None:
                    rep_row["first"] = _witness(
                        "report", "decomposition-set-cech", space, rank, one
                    ).to_json_dict()
            if want("rough-delegation"):
                results["rough-delegation"].checked += 1
                if (
                    _pack(lower_approx(space, sets[i]).masks, n) != in_t[i]
                    or _pack(upper_approx(space, sets[i]).masks, n) != cl_t[i]
                ):
                    fail("rough-delegation", space, rank, one)
            if want("rough-sandwich"):
                results["rough-sandwich"].checked += 1
                if in_t[i] & ~g or g & ~cl_t[i]:
                    fail("rough-sandwich", space, rank, one)
            if want("rough-accuracy"):
                results["rough-accuracy"].checked += 1
                acc = accuracy(space, sets[i])
                ok = (
                    0 <= acc.value <= 1
                    and (acc.value == 1) == (cl_t[i] == in_t[i])
                    and acc.convention_applied == (cl_t[i] == 0)
                )
                if not ok:
                    fail("rough-accuracy", space, rank, one)
            if want("oracle-equivalence"):
                results["oracle-equivalence"].checked += 1
                if (
                    _pack(oracle_closure(space, sets[i]).masks, n) != cl_t[i]
                    or _pack(oracle_interior(space, sets[i]).masks, n) != in_t[i]
                ):
                    fail("oracle-equivalence", space, rank, one)
            for edge in STRICTNESS_EDGES:
                if strictness[edge] is None and _edge_condition(
                    edge, (opn[i], alp[i], sem[i], pre_[i], bb[i], bet[i])
                ):
                    strictness[edge] = _witness("strictness", edge, space, rank, one)

        # --- pair laws (lookups only); requires the full set lattice
        pair_names = (
            "closure-monotonicity",
            "closure-additivity",
            "interior-monotonicity",
            "interior-meet",
            "kuratowski-additivity",
            "aura-open-family",
            "union-closure-semi",
            "union-closure-pre",
            "union-closure-beta",
        )
        if exhaustive_sets and any(want(p) for p in pair_names):
            amc = reports["alpha-meet-cech"]
            amk = reports["alpha-meet-kuratowski"]
            for gi in range(size):
                clg = cl_t[gi]
                ing = in_t[gi]
                kug = ku_t[gi]
                og, sg, pg, ag, bg, eg = opn[gi], sem[gi], pre_[gi], alp[gi], bb[gi], bet[gi]
                akg = alp_k[gi]
                for hi in range(gi, size):
                    u = gi | hi
                    w = gi & hi
                    if cl_t[u] != clg | cl_t[hi]:
                        fail("closure-additivity", space, rank3 + (gi, hi), (sets[gi], sets[hi]))
                    if in_t[w] != ing & in_t[hi]:
                        fail("interior-meet", space, rank3 + (gi, hi), (sets[gi], sets[hi]))
                    if ku_t[u] != kug | ku_t[hi]:
                        fail("kuratowski-additivity", space, rank3 + (gi, hi), (sets[gi], sets[hi]))
                    if gi & ~hi == 0:
                        if clg & ~cl_t[hi]:
                            fail("closure-monotonicity", space, rank3 + (gi, hi), (sets[gi], sets[hi]))
                        if ing & ~in_t[hi]:
                            fail("interior-monotonicity", space, rank3 + (gi, hi), (sets[gi], sets[hi]))
                    elif hi & ~gi == 0:
                        if cl_t[hi] & ~clg:
                            fail("closure-monotonicity", space, rank3 + (hi, gi), (sets[hi], sets[gi]))
                        if in_t[hi] & ~ing:
                            fail("interior-monotonicity", space, rank3 + (hi, gi), (sets[hi], sets[gi]))
                    if sg and sem[hi] and not sem[u]:
                        fail("union-closure-semi", space, rank3 + (gi, hi), (sets[gi], sets[hi]))
                    if pg and pre_[hi] and not pre_[u]:
                        fail("union-closure-pre", space, rank3 + (gi, hi), (sets[gi], sets[hi]))
                    if eg and bet[hi] and not bet[u]:
                        fail("union-closure-beta", space, rank3 + (gi, hi), (sets[gi], sets[hi]))
                    if og and opn[hi] and not (opn[u] and opn[w]):
                        fail("aura-open-family", space, rank3 + (gi, hi), (sets[gi], sets[hi]))
                    if akg and alp_k[hi] and not alp_k[w]:
                        amk["found"] += 1
                        if amk["first"] is None:
                            amk["first"] = _witness(
                                "report",
                                "alpha-meet-kuratowski",
                                space,
                                rank3 + (gi, hi),
                                (sets[gi], sets[hi]),
                            ).to_json_dict()
                    if ag and alp[hi] and not alp[w]:
                        amc["found"] += 1
                        if amc["first"] is None:
                            amc["first"] = _witness(
                                "report",
                                "alpha-meet-cech",
                                space,
                                rank3 + (gi, hi),
                                (sets[gi], sets[hi]),
                            ).to_json_dict()
            pairs = size * (size + 1) // 2
            for p in pair_names:
                if want(p):
                    results[p].checked += pairs
    # rough pair rows coincide with the base rows once delegation holds;
    # counts are mirrored rather than re-scanned (see rough-delegation)
    for rough_name, base_names in _SHARED_ROUGH_PAIR_ROWS.items():
        if rough_name in results:
            for base in base_names:
                if base in results:
                    results[rough_name].checked = results[base].checked
                    results[rough_name].failures += results[base].failures
                    results[rough_name].witnesses.extend(results[base].witnesses)

    ordered = {name: results[name] for name in LAWS if name in selected}
    rep_counts = {
        name: {"found": row["found"], "first": row["first"]}
        for name, row in reports.items()
    }
    return SuiteResult(
        spec,
        ordered,
        rep_counts,
        strictness,
        spaces_checked,
        sets_max,
    )


def find_strictness_witnesses(spec: SpaceFamilySpec) -> dict[str, Witness | None]:
    """First witness per hierarchy edge in canonical family order (one-step closure)."""
    result = run_law_suite(spec, laws=["hierarchy-cech"])
    return result.strictness


# -- mapping decomposition scan ----------------------------------------------


@dataclass(frozen=True)
class MappingScanResult:
    """Outcome of the exhaustive mapping decomposition scan over one closure kind pair."""

    mappings_checked: int
    kuratowski_failures: int
    kuratowski_first_failure: dict | None
    cech_mismatches: int
    cech_first_mismatch: dict | None


def _family_space_selection(per_shape: int) -> list[SoftAuraSpace]:
    """Deterministic per-shape subfamily: evenly spaced canonical scope ranks.

    Always includes the first (all-singleton) and last (all-absolute) scope
    of each shape, with the rest spread through the canonical enumeration.
    """
    spaces: list[SoftAuraSpace] = []
    for n in range(1, 4):
        for m in range(1, 3):
            ctx = _family_context(n, m)
            topo = discrete_topology(ctx)
            all_scopes = list(enumerate_scope_functions(ctx, topo))
            total = len(all_scopes)
            if total <= per_shape:
                chosen = all_scopes
            else:
                idxs = sorted(
                    {round(j * (total - 1) / (per_shape - 1)) for j in range(per_shape)}
                )
                chosen = [all_scopes[i] for i in idxs]
            spaces.extend(SoftAuraSpace(ctx, topo, s) for s in chosen)
    return spaces


def _mapping_desc(src: SoftAuraSpace, tgt: SoftAuraSpace, u: tuple[int, ...], p: tuple[int, ...]) -> dict:
    return {
        "source": _space_desc(src),
        "target": _space_desc(tgt),
        "pointMap": {
            x: tgt.context.universe[u[xi]] for xi, x in enumerate(src.context.universe)
        },
        "paramMap": {
            e: tgt.context.parameters[p[ei]] for ei, e in enumerate(src.context.parameters)
        },
    }


def decomposition_mapping_scan(per_shape: int = 10, cross_check_every: int = 64) -> MappingScanResult:
    """Check mapping-level decomposition over an exhaustive family of mappings.

    Spaces come from a deterministic subfamily per shape (|X| <= 3, |E| <= 2,
    discrete); between every source/target pair, ALL point maps and ALL
    parameter maps are enumerated.  For each mapping the alpha/semi/pre
    continuity flags are computed under both closure kinds by classifying
    the inverse image of every target aura-open set; the fixpoint-kind
    equivalence (alpha iff semi and pre) must hold for every mapping, while
    one-step-kind mismatches are counted and reported.

    Classifications come from the public classify(); inverse images use a
    packed kernel cross-checked against the public inverse_image() every
    `cross_check_every` evaluations.
    """
    from .mapping import SoftMapping, inverse_image

    spaces = _family_space_selection(per_shape)

    flags_cache: dict[int, tuple] = {}
    tau_cache: dict[int, list[int]] = {}

    def source_flags(space: SoftAuraSpace):
        key = id(space)
        if key not in flags_cache:
            n, m = space.context.n_points, space.context.n_params
            slice_mask = (1 << n) - 1
            rows = []
            for c in range(1 << (n * m)):
                s = SoftSet(space.context, tuple((c >> (i * n)) & slice_mask for i in range(m)))
                pc = classify(space, s, CECH)
                pk = classify(space, s, KURATOWSKI)
                rows.append(
                    (
                        pc.alpha_open, pc.semi_open, pc.pre_open,
                        pk.alpha_open, pk.semi_open, pk.pre_open,
                    )
                )
            flags_cache[key] = tuple(rows)
        return flags_cache[key]

    def target_tau(space: SoftAuraSpace) -> list[int]:
        key = id(space)
        if key not in tau_cache:
            n = space.context.n_points
            tau_cache[key] = [
                _pack(s.masks, n) for s in enumerate_aura_topology(space)
            ]
        return tau_cache[key]

    checked = 0
    kur_failures = 0
    kur_first = None
    cech_mismatches = 0
    cech_first = None
    evals = 0

    for src in spaces:
        nx, ne = src.context.n_points, src.context.n_params
        src_rows = source_flags(src)
        for tgt in spaces:
            ny, nk = tgt.context.n_points, tgt.context.n_params
            tau = target_tau(tgt)
            tgt_slice = (1 << ny) - 1
            for u in itertools.product(range(ny), repeat=nx):
                # per-target-point preimage masks
                upre = [0] * ny
                for xi, yi in enumerate(u):
                    upre[yi] |= 1 << xi
                # preimage of every target slice mask
                slice_pre = [0] * (tgt_slice + 1)
                for smask in range(tgt_slice + 1):
                    acc = 0
                    rest = smask
                    while rest:
                        low = rest & -rest
                        acc |= upre[low.bit_length() - 1]
                        rest ^= low
                    slice_pre[smask] = acc
                for p in itertools.product(range(nk), repeat=ne):
                    checked += 1
                    a_c = s_c = p_c = a_k = s_k = p_k = True
                    for v in tau:
                        h = 0
                        for ei in range(ne):
                            vm = (v >> (p[ei] * ny)) & tgt_slice
                            h |= slice_pre[vm] << (ei * nx)
                        evals += 1
                        if evals % cross_check_every == 0:
                            mapping = SoftMapping(
                                src,
                                tgt,
                                {
                                    x: tgt.context.universe[u[xi]]
                                    for xi, x in enumerate(src.context.universe)
                                },
                                {
                                    e: tgt.context.parameters[p[ei]]
                                    for ei, e in enumerate(src.context.parameters)
                                },
                            )
                            v_set = SoftSet(
                                tgt.context,
                                tuple(
                                    (v >> (i * ny)) & tgt_slice for i in range(nk)
                                ),
                            )
                            if _pack(inverse_image(mapping, v_set).masks, nx) != h:
                                raise AssertionError(
                                    "packed preimage kernel disagrees with inverse_image"
                                )
                        row = src_rows[h]
                        a_c &= row[0]
                        s_c &= row[1]
                        p_c &= row[2]
                        a_k &= row[3]
                        s_k &= row[4]
                        p_k &= row[5]
                    if a_k != (s_k and p_k):
                        kur_failures += 1
                        if kur_first is None:
                            kur_first = _mapping_desc(src, tgt, u, p)
                    if a_c != (s_c and p_c):
                        cech_mismatches += 1
                        if cech_first is None:
                            cech_first = _mapping_desc(src, tgt, u, p)
    return MappingScanResult(checked, kur_failures, kur_first, cech_mismatches, cech_first)
