"""Generalized openness classes and where the alpha class breaks.

A set can fail to be open yet still be recoverable from closures and
interiors in five graded ways (alpha, semi, pre, b, beta).  The grades are
nested, the nesting is strict, and the alpha grade behaves differently
depending on whether closure means one step or the full fixed point: with
the one-step closure, alpha sets are not closed under intersection.
"""

from softaura import (
    CECH,
    KURATOWSKI,
    classify,
    make_soft_set,
    make_space,
    search_alpha_intersection_failure,
)

# Cyclic scopes: x1 -> {x1,x2}, x2 -> {x2,x3}, x3 -> {x1,x3}.
cyclic = make_space(
    ["x1", "x2", "x3"],
    ["e1"],
    {"x1": {"e1": ["x1", "x2"]}, "x2": {"e1": ["x2", "x3"]}, "x3": {"e1": ["x1", "x3"]}},
)
A = make_soft_set(cyclic.context, {"e1": ["x1", "x2"]})
B = make_soft_set(cyclic.context, {"e1": ["x1", "x3"]})


def show_profile(label, profile):
    flags = (
        f"open={profile.a_open} alpha={profile.alpha_open} semi={profile.semi_open} "
        f"pre={profile.pre_open} b={profile.b_open} beta={profile.beta_open}"
    )
    print(f"  {label} [{profile.closure_kind}]: {flags}")


def main():
    print("classification of A = {x1,x2} on the cyclic space:")
    show_profile("A", classify(cyclic, A, CECH))
    show_profile("A", classify(cyclic, A, KURATOWSKI))
    print("  the closure kind decides A's alpha grade")

    print("\nsearching for an alpha intersection failure (fixed-point kind):")
    w = search_alpha_intersection_failure(cyclic, budget=1000, kind=KURATOWSKI)
    assert w is not None
    print(f"  left  = {w.left.as_dict()['e1']}")
    print(f"  right = {w.right.as_dict()['e1']}")
    meet = w.left.intersect(w.right)
    prof = classify(w.space, meet, KURATOWSKI)
    print(f"  meet  = {meet.as_dict()['e1']} is alpha: {prof.alpha_open}")

    print("\nthe same search under the one-step kind on this space:")
    w2 = search_alpha_intersection_failure(cyclic, budget=100_000, kind=CECH)
    print(f"  witness found: {w2 is not None} (three points are not enough)")

    # The smallest one-step failures need four points.
    four = make_space(
        ["x1", "x2", "x3", "x4"],
        ["e1"],
        {
            "x1": {"e1": ["x1"]},
            "x2": {"e1": ["x1", "x2"]},
            "x3": {"e1": ["x1", "x3"]},
            "x4": {"e1": ["x2", "x3", "x4"]},
        },
    )
    w3 = search_alpha_intersection_failure(four, budget=100_000, kind=CECH)
    assert w3 is not None
    print("\none-step failure on a four-point space:")
    print(f"  left  = {w3.left.as_dict()['e1']}")
    print(f"  right = {w3.right.as_dict()['e1']}")


if __name__ == "__main__":
    main()
