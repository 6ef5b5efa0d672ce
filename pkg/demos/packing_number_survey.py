"""Survey: the constructed packing always meets the exact packing number.

For a spread of small instances, compare the size of the constructed
packing against the exhaustive-search optimum and the girth. All three
agree on every digon-free instance with a dicycle.

Usage: python3 demos/packing_number_survey.py [count]
"""

import sys

import woodall_packer as wp


def main() -> None:
    count = int(sys.argv[1]) if len(sys.argv) > 1 else 20

    print(f"{'seed':>4} {'n':>3} {'arcs':>4} {'girth':>5} {'packed':>6} {'exact':>5}")
    agreements = 0
    seed = 0
    shown = 0
    while shown < count:
        seed += 1
        cfg = wp.GenConfig(n=5 + seed % 8, seed=seed, require_dicycle=True)
        try:
            _, g = wp.generate(cfg)
        except wp.ResampleExhausted:
            continue
        value, _ = wp.girth(g)
        packed = len(wp.pack(g))
        exact = wp.exact_nu(g)
        mark = "" if packed == exact == value else "  <-- mismatch"
        print(f"{seed:>4} {g.n:>3} {len(g.arcs):>4} {value:>5} {packed:>6} {exact:>5}{mark}")
        agreements += packed == exact == value
        shown += 1

    print(f"\n{agreements}/{count} instances: packed size == exact optimum == girth")


if __name__ == "__main__":
    main()
