"""Inspect adversarial pairs: digests, certificates, refinement traces.

Builds the pinned 10-vertex pair plus a few bipartite family instances
and shows, round by round, how many distinct digests the refinement
assigns inside each layer.  The counts stay at 1, which is exactly why
the final digests collide even though the graphs are not isomorphic.
"""

import argparse

from daghash.adversarial import (
    bipartite_adversarial_pair,
    counterexample_pair,
    middle_component_sizes,
)
from daghash.hashing import digest_hex, graph_invariant, refinement_trace


def layer_profile(g, degree_layers):
    """Distinct digest count per layer for every refinement round."""
    rows = []
    for state in refinement_trace(g):
        rows.append(tuple(len({state[i] for i in layer}) for layer in degree_layers))
    return rows


def show_pair(name, pair):
    g1, g2 = pair.g1, pair.g2
    print(f"== {name}: n={g1.n}, {g1.edge_count} edges each ==")
    d1, d2 = graph_invariant(g1), graph_invariant(g2)
    print(f"digest g1: {digest_hex(d1)}")
    print(f"digest g2: {digest_hex(d2)}")
    print(f"equal: {d1 == d2}")
    print(f"middle components: {middle_component_sizes(g1)}"
          f" vs {middle_component_sizes(g2)}")
    print(f"certificate: {pair.certificate}")

    m = (g1.n - 2) // 2
    layers = [range(1, 1 + m), range(1 + m, 1 + 2 * m)]
    p1, p2 = layer_profile(g1, layers), layer_profile(g2, layers)
    print("round  g1 A-layer  g1 B-layer  g2 A-layer  g2 B-layer")
    for r, (a, b) in enumerate(zip(p1, p2)):
        print(f"{r:5d}  {a[0]:9d}  {a[1]:9d}  {b[0]:9d}  {b[1]:9d}")
    print()


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--degree", type=int, action="append", default=None,
                    help="family degree, repeatable (paired with --size)")
    ap.add_argument("--size", type=int, action="append", default=None)
    args = ap.parse_args()

    show_pair("pinned pair", counterexample_pair())
    if args.degree or args.size:
        instances = list(zip(args.degree or [], args.size or []))
    else:
        instances = [(2, 6), (3, 6), (3, 8)]
    for d, m in instances:
        show_pair(f"bipartite family d={d}, m={m}",
                  bipartite_adversarial_pair(d, m))


if __name__ == "__main__":
    main()
