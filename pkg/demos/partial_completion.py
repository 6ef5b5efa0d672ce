"""Packing a digraph that only spans part of its host 3-tree.

Delete a fifth of the arcs, re-add the missing ones in the orientation
that keeps the girth at three, pack the completed digraph, then throw the
borrowed arcs away again: the surviving classes still work on the partial
digraph.

Usage: python3 demos/partial_completion.py [n] [seed]
"""

import random
import sys

import woodall_packer as wp


def main() -> None:
    n = int(sys.argv[1]) if len(sys.argv) > 1 else 14
    seed = int(sys.argv[2]) if len(sys.argv) > 2 else 3

    seq, full = wp.generate(wp.GenConfig(n=n, seed=seed, require_dicycle=True))
    rng = random.Random(seed)
    arcs = sorted(full.arcs)
    dropped = set(rng.sample(arcs, len(arcs) // 5))
    partial = wp.make_digraph(n, set(arcs) - dropped)

    value, witness = wp.girth(partial)
    if witness is None or value != 3:
        print("these arcs were load-bearing, pick another seed")
        return
    print(f"partial instance: {len(partial.arcs)} of {len(arcs)} arcs kept, girth {value}")

    completed = wp.complete_partial(partial, seq)
    added = completed.arcs - partial.arcs
    print(f"completion adds {len(added)} arcs: "
          + ", ".join(f"{a.tail}->{a.head}" for a in sorted(added)))

    p = wp.pack(completed)
    restricted = wp.restrict_packing(p, partial)
    report = wp.verify_packing(partial, restricted)
    print(f"\npacked the completion, restricted back to the partial digraph:")
    for i, t in enumerate(restricted.transversals):
        print(f"  class {i}: {len(t)} arcs")
    print(f"verdict on the partial digraph: {report.verdict}")


if __name__ == "__main__":
    main()
