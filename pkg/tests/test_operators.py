"""Closure/interior operators, the fixpoint closure, and the induced topology."""

import pytest
from hypothesis import given, settings

from softaura import (
    CapExceeded,
    NotSingletonE,
    SoftSet,
    UnknownParameter,
    aura_closure,
    aura_interior,
    enumerate_aura_topology,
    is_aura_closed,
    is_aura_open,
    kuratowski_closure,
    make_soft_set,
    make_space,
    oracle_closure,
    oracle_interior,
    per_parameter_alexandrov,
    singleton_e_inclusion_check,
)

from conftest import space_with_sets


@pytest.fixture(scope="module")
def chain():
    return make_space(
        ["1", "2", "3"],
        ["e"],
        {"1": {"e": ["1", "2"]}, "2": {"e": ["2", "3"]}, "3": {"e": ["3"]}},
    )


class TestChainValues:
    def test_closure(self, chain):
        g = make_soft_set(chain.context, {"e": ["3"]})
        assert aura_closure(chain, g).as_dict() == {"e": ("2", "3")}

    def test_closure_not_idempotent_here(self, chain):
        g = make_soft_set(chain.context, {"e": ["3"]})
        once = aura_closure(chain, g)
        twice = aura_closure(chain, once)
        assert once != twice
        assert twice.as_dict() == {"e": ("1", "2", "3")}

    def test_kuratowski_reaches_fixpoint(self, chain):
        g = make_soft_set(chain.context, {"e": ["3"]})
        res = kuratowski_closure(chain, g)
        assert res.closure.is_absolute()
        assert res.iterations == {"e": 2}
        again = kuratowski_closure(chain, res.closure)
        assert again.closure == res.closure
        assert again.iterations == {"e": 1}

    def test_interior(self, chain):
        g = make_soft_set(chain.context, {"e": ["1", "2"]})
        assert aura_interior(chain, g).as_dict() == {"e": ("1",)}

    def test_openness(self, chain):
        assert is_aura_open(chain, make_soft_set(chain.context, {"e": ["2", "3"]}))
        assert not is_aura_open(chain, make_soft_set(chain.context, {"e": ["1", "2"]}))
        assert is_aura_open(chain, SoftSet.null(chain.context))
        assert is_aura_open(chain, SoftSet.absolute(chain.context))
        # closed iff complement open: {1} is closed since {2,3} is open
        assert is_aura_closed(chain, make_soft_set(chain.context, {"e": ["1"]}))

    def test_alexandrov_family(self, chain):
        fam = per_parameter_alexandrov(chain, "e")
        assert fam == [(), ("3",), ("2", "3"), ("1", "2", "3")]

    def test_alexandrov_unknown_parameter(self, chain):
        with pytest.raises(UnknownParameter):
            per_parameter_alexandrov(chain, "zz")

    def test_enumerate_topology(self, chain):
        tau = enumerate_aura_topology(chain)
        assert sorted(s.masks[0] for s in tau) == [0, 4, 6, 7]
        assert all(is_aura_open(chain, s) for s in tau)

    def test_singleton_e_inclusion(self, chain):
        # ambient topology is discrete, so inclusion holds trivially
        assert singleton_e_inclusion_check(chain)


class TestGuards:
    def test_singleton_e_requires_one_parameter(self):
        sp = make_space(
            ["x1"],
            ["e1", "e2"],
            {"x1": {"e1": ["x1"], "e2": ["x1"]}},
        )
        with pytest.raises(NotSingletonE):
            singleton_e_inclusion_check(sp)

    def test_enumerate_cap(self):
        # singleton scopes make every set aura-open: 2^(n*m) members
        sp = make_space(
            ["x1", "x2", "x3"],
            ["e1", "e2"],
            {x: {"e1": [x], "e2": [x]} for x in ["x1", "x2", "x3"]},
        )
        with pytest.raises(CapExceeded):
            enumerate_aura_topology(sp, cap=10)
        assert len(enumerate_aura_topology(sp, cap=100)) == 64

    def test_alexandrov_cap(self):
        sp = make_space(
            ["x1", "x2", "x3"],
            ["e1"],
            {x: {"e1": [x]} for x in ["x1", "x2", "x3"]},
        )
        with pytest.raises(CapExceeded):
            per_parameter_alexandrov(sp, "e1", cap=4)


class TestTrivialScope:
    def test_closure_blows_up_interior_collapses(self):
        sp = make_space(
            ["x1", "x2"],
            ["e1"],
            {"x1": {"e1": ["x1", "x2"]}, "x2": {"e1": ["x1", "x2"]}},
        )
        g = make_soft_set(sp.context, {"e1": ["x1"]})
        assert aura_closure(sp, g).is_absolute()
        assert aura_interior(sp, g).is_null()
        fam = per_parameter_alexandrov(sp, "e1")
        assert fam == [(), ("x1", "x2")]


class TestOperatorLaws:
    @given(space_with_sets(count=2))
    @settings(max_examples=150)
    def test_closure_laws(self, bundle):
        space, g, h = bundle
        ctx = space.context
        assert aura_closure(space, SoftSet.null(ctx)).is_null()
        cg = aura_closure(space, g)
        assert g.is_subset_of(cg)
        if g.is_subset_of(h):
            assert cg.is_subset_of(aura_closure(space, h))
        assert aura_closure(space, g.union(h)) == cg.union(aura_closure(space, h))

    @given(space_with_sets(count=2))
    @settings(max_examples=150)
    def test_interior_laws(self, bundle):
        space, g, h = bundle
        ctx = space.context
        assert aura_interior(space, SoftSet.absolute(ctx)).is_absolute()
        ig = aura_interior(space, g)
        assert ig.is_subset_of(g)
        if g.is_subset_of(h):
            assert ig.is_subset_of(aura_interior(space, h))
        assert aura_interior(space, g.intersect(h)) == ig.intersect(
            aura_interior(space, h)
        )

    @given(space_with_sets(count=1))
    @settings(max_examples=150)
    def test_duality(self, bundle):
        space, g = bundle
        assert aura_interior(space, g) == aura_closure(space, g.complement()).complement()
        assert aura_closure(space, g) == aura_interior(space, g.complement()).complement()

    @given(space_with_sets(count=1))
    @settings(max_examples=150)
    def test_kuratowski_laws(self, bundle):
        space, g = bundle
        res = kuratowski_closure(space, g)
        # contains the one-step closure and is idempotent
        assert aura_closure(space, g).is_subset_of(res.closure)
        assert aura_closure(space, res.closure) == res.closure
        n = space.context.n_points
        assert all(1 <= it <= n for it in res.iterations.values())

    @given(space_with_sets(count=2))
    @settings(max_examples=100)
    def test_kuratowski_additive(self, bundle):
        space, g, h = bundle
        joint = kuratowski_closure(space, g.union(h)).closure
        parts = kuratowski_closure(space, g).closure.union(
            kuratowski_closure(space, h).closure
        )
        assert joint == parts

    @given(space_with_sets(count=1, max_points=3, max_params=2))
    @settings(max_examples=100)
    def test_oracle_agreement(self, bundle):
        space, g = bundle
        assert aura_closure(space, g) == oracle_closure(space, g)
        assert aura_interior(space, g) == oracle_interior(space, g)

    @given(space_with_sets(count=0, max_points=3, max_params=2))
    @settings(max_examples=50)
    def test_tau_a_members_are_open(self, bundle):
        (space,) = bundle
        for s in enumerate_aura_topology(space, cap=1 << 12):
            assert is_aura_open(space, s)
