"""Separation axioms read off scope overlaps.

Two points are separated when some parameter gives one of them a scope
avoiding the other.  The T1 grade is equivalent to T2 here, and both are
equivalent to every scope being a singleton; failures come with concrete
witnesses naming the points and the parameter.
"""

from softaura import make_space, separation_report, t1_via_singleton_scopes

two = make_space(
    ["x1", "x2"],
    ["e1", "e2"],
    {
        "x1": {"e1": ["x1"], "e2": ["x1", "x2"]},
        "x2": {"e1": ["x1", "x2"], "e2": ["x2"]},
    },
)

tight = make_space(
    ["x1", "x2", "x3"],
    ["e1"],
    {"x1": {"e1": ["x1"]}, "x2": {"e1": ["x2"]}, "x3": {"e1": ["x3"]}},
)


def show(name, space):
    rep = separation_report(space)
    print(f"{name}:")
    for axiom in ("t0", "t1", "t2", "regular", "t3"):
        holds = getattr(rep, axiom)
        line = f"  {axiom}: {holds}"
        w = rep.witnesses.get(axiom)
        if w is not None:
            line += f"  (witness: {w})"
        print(line)


def main():
    show("two-point space with overlapping scopes", two)
    print("  x1's scope at e2 swallows x2, so points cannot be told apart")

    print()
    show("three points with singleton scopes", tight)

    print("\nT1 via the singleton-scope characterization:")
    for name, space in (("two-point", two), ("tight", tight)):
        print(f"  {name}: {t1_via_singleton_scopes(space)}")


if __name__ == "__main__":
    main()
