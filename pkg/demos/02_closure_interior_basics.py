"""Scope-driven closure and interior on a three-point chain.

The scope function 1 -> {1,2}, 2 -> {2,3}, 3 -> {3} makes information flow
down the chain: closing a set pulls in every point whose scope touches it.
One closure step is not idempotent here; iterating per parameter reaches a
fixed point within |X| steps.
"""

from softaura import (
    aura_closure,
    aura_interior,
    enumerate_aura_topology,
    is_aura_open,
    kuratowski_closure,
    make_soft_set,
    make_space,
    per_parameter_alexandrov,
)

space = make_space(
    ["1", "2", "3"],
    ["e"],
    {"1": {"e": ["1", "2"]}, "2": {"e": ["2", "3"]}, "3": {"e": ["3"]}},
)
ctx = space.context


def show(label, s):
    print(f"  {label}: {s.as_dict()['e']}")


def main():
    g = make_soft_set(ctx, {"e": ["3"]})
    once = aura_closure(space, g)
    twice = aura_closure(space, once)
    print("one-step closure is not idempotent:")
    show("cl {3}", once)
    show("cl cl {3}", twice)

    fix = kuratowski_closure(space, g)
    print(f"\nfixed point reached after {fix.iterations['e']} growth steps:")
    show("cl* {3}", fix.closure)
    again = kuratowski_closure(space, fix.closure)
    print(f"  re-closing changes nothing (iterations {again.iterations['e']})")

    h = make_soft_set(ctx, {"e": ["1", "2"]})
    print("\ninterior keeps only points whose scope stays inside:")
    show("int {1,2}", aura_interior(space, h))

    comp = h.complement()
    dual = aura_interior(space, h).complement()
    print(f"  duality: cl(comp) == comp(int) is {aura_closure(space, comp) == dual}")

    print("\nmembership in the induced open family:")
    for pts in (["2", "3"], ["1", "2"], ["3"]):
        s = make_soft_set(ctx, {"e": pts})
        print(f"  {{{', '.join(pts)}}} open: {is_aura_open(space, s)}")

    fam = per_parameter_alexandrov(space, "e")
    print(f"\nper-parameter fixed-point family at e ({len(fam)} slices):")
    print(f"  {[list(slice_) for slice_ in fam]}")

    tau = enumerate_aura_topology(space)
    print(f"full induced family has {len(tau)} members, all one-step open")


if __name__ == "__main__":
    main()
