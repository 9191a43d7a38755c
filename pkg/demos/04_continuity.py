"""Continuity of soft mappings and the alpha decomposition.

A mapping is continuous when inverse images of target open sets are open.
Relaxing "open" to the graded classes gives graded continuity; alpha
continuity should coincide with semi and pre together.  Under the
fixed-point closure it always does; under the one-step closure it can
split, and this script builds a mapping where it visibly does.
"""

from softaura import (
    CECH,
    KURATOWSKI,
    SoftMapping,
    continuity_profile,
    identity_mapping,
    make_space,
    verify_closure_characterization,
    verify_decomposition,
)

chain = make_space(
    ["1", "2", "3"],
    ["e"],
    {"1": {"e": ["1", "2"]}, "2": {"e": ["2", "3"]}, "3": {"e": ["3"]}},
)


def show(label, p):
    print(
        f"  {label} [{p.closure_kind}]: continuous={p.continuous} "
        f"alpha={p.alpha_continuous} semi={p.semi_continuous} "
        f"pre={p.pre_continuous} beta={p.beta_continuous}"
    )


def main():
    sink = SoftMapping(chain, chain, {"1": "3", "2": "3", "3": "3"}, {"e": "e"})
    print("collapsing the chain onto its sink:")
    show("sink", continuity_profile(sink))

    ident = identity_mapping(chain)
    print("\nidentity on the chain, by target family:")
    for family in ("aura", "kuratowski", "ambient"):
        p = continuity_profile(ident, target_family=family)
        print(f"  target family {family:10}: continuous={p.continuous}")
    print("  the ambient family is strictly harder to be continuous against")

    # Source scopes: x1 isolated, x2 sees everything, x3 pairs with x2.
    # Target scopes: y1 isolated, y2 sees y1.  Folding x1,x2 onto y1 makes
    # alpha continuity split from semi and pre under the one-step closure.
    src = make_space(
        ["x1", "x2", "x3"],
        ["e1"],
        {
            "x1": {"e1": ["x1"]},
            "x2": {"e1": ["x1", "x2", "x3"]},
            "x3": {"e1": ["x2", "x3"]},
        },
    )
    tgt = make_space(
        ["y1", "y2"],
        ["e1"],
        {"y1": {"e1": ["y1"]}, "y2": {"e1": ["y1", "y2"]}},
    )
    fold = SoftMapping(src, tgt, {"x1": "y1", "x2": "y1", "x3": "y2"}, {"e1": "e1"})

    print("\nalpha versus semi-and-pre for the folding mapping:")
    for kind in (KURATOWSKI, CECH):
        holds, witness = verify_decomposition(fold, kind=kind)
        note = "" if holds else f" (witness {witness.as_dict()['e1']})"
        print(f"  decomposition holds under {kind}: {holds}{note}")

    print("\nclosure characterization of continuity:")
    for kind in (KURATOWSKI, CECH):
        holds, _ = verify_closure_characterization(sink, kind=kind)
        print(f"  sink satisfies the {kind} inclusion test: {holds}")
    print("  with the fixed-point closure this test is exactly continuity;")
    print("  with the one-step closure only the forward direction holds")


if __name__ == "__main__":
    main()
