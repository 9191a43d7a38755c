"""Run the exhaustive law suite over a family of small spaces.

Enumerates every scope function over every shape up to the given bounds
(discrete topology), checks each law row against all soft sets of the
space, and prints the per-law tally plus the first strictness witness for
each hierarchy edge.  The (3, 2) family is the largest that stays
interactive; it finishes in well under a minute.
"""

import argparse
import sys

from softaura import SpaceFamilySpec, replay_witness, run_law_suite


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--points", type=int, default=2, help="max universe size")
    parser.add_argument("--params", type=int, default=2, help="max parameter count")
    parser.add_argument("--law", action="append", help="restrict to these law rows")
    parser.add_argument("--out", help="write the JSON report here")
    args = parser.parse_args(argv)

    spec = SpaceFamilySpec(args.points, args.params)
    result = run_law_suite(spec, laws=args.law)

    print(f"family: {result.spaces_checked} spaces, "
          f"up to {result.sets_per_space_max} soft sets each")
    for name, row in result.laws.items():
        print(f"  {name:32} checked={row.checked:9} failures={row.failures}")

    print("strictness witnesses (first per edge, canonical order):")
    for edge, w in result.strictness.items():
        if w is None:
            print(f"  {edge:12} none in this family")
        else:
            print(f"  {edge:12} rank={w.rank} replays={replay_witness(w)}")

    for name, rep in result.reports.items():
        print(f"report {name}: found={rep['found']}")

    if args.out:
        with open(args.out, "wb") as fh:
            fh.write(result.to_json_bytes())
        print(f"wrote {args.out}")

    return 0 if result.total_failures == 0 else 1


if __name__ == "__main__":
    sys.exit(main())
