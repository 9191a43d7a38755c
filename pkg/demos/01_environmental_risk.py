"""Rough approximation of a field audit over a sensor network.

Five monitoring stations s1..s5 report four indicators e1..e4.  Each
station's scope at an indicator is the set of stations whose readings its
sensor cluster can corroborate (always including itself).  A manual audit
flagged some stations per indicator; the flagged set G is approximated from
inside (stations whose whole scope is flagged) and outside (stations whose
scope meets the flagged set).
"""

from softaura import approximation_report, decode_space, pawlak_equivalence_check

DOC = {
    "universe": ["s1", "s2", "s3", "s4", "s5"],
    "parameters": ["e1", "e2", "e3", "e4"],
    "topology": {"kind": "discrete"},
    "scope": {
        "s1": {"e1": ["s1", "s2"], "e2": ["s1", "s4"], "e3": ["s1", "s2"], "e4": ["s1", "s3"]},
        "s2": {"e1": ["s2", "s4"], "e2": ["s2", "s3"], "e3": ["s2", "s5"], "e4": ["s2", "s3"]},
        "s3": {"e1": ["s3", "s5"], "e2": ["s3", "s5"], "e3": ["s3", "s5"], "e4": ["s3", "s4"]},
        "s4": {"e1": ["s1", "s4"], "e2": ["s4", "s5"], "e3": ["s3", "s4"], "e4": ["s4", "s5"]},
        "s5": {"e1": ["s4", "s5"], "e2": ["s1", "s5"], "e3": ["s2", "s5"], "e4": ["s1", "s5"]},
    },
    "namedSets": {
        "G": {"e1": ["s3", "s5"], "e2": ["s2"], "e3": ["s1", "s4"], "e4": ["s4", "s5"]}
    },
}


def fmt(points):
    return ", ".join(points) if points else "-"


def main():
    decoded = decode_space(DOC)
    space, audit = decoded.space, decoded.named_sets["G"]
    report = approximation_report(space, audit)

    print("flagged stations per indicator:")
    for e, pts in audit.as_dict().items():
        print(f"  {e}: {fmt(pts)}")

    print("\ncertainly affected (lower approximation):")
    for e, pts in report.lower.as_dict().items():
        print(f"  {e}: {fmt(pts)}")

    print("\npossibly affected (upper approximation):")
    for e, pts in report.upper.as_dict().items():
        print(f"  {e}: {fmt(pts)}")

    print("\nneeds re-inspection (boundary):")
    for e, pts in report.boundary.as_dict().items():
        print(f"  {e}: {fmt(pts)}")

    print(f"\noverall accuracy: {report.accuracy.display()}")
    for e, lo, up in report.per_parameter:
        print(f"  {e}: {lo} certain / {up} possible")

    # When scopes come from a partition (stations grouped by shared hardware),
    # the same operators reproduce classical partition-based rough sets.
    ctx = space.context
    crews = [["s1", "s2"], ["s3", "s4", "s5"]]
    flagged = ["s2", "s3"]
    agrees = pawlak_equivalence_check(ctx, crews, flagged)
    print(f"\npartition scopes match the classical construction: {agrees}")


if __name__ == "__main__":
    main()
