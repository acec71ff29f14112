"""Shared fixtures: pinned graphs, the property-test corpus, strategies."""

import itertools

import pytest
from hypothesis import assume, strategies as st

from daghash.adversarial import counterexample_pair
from daghash.enumeration import EnumerationConfig, enumerate_graphs
from daghash.graphs import (
    ComputationalGraph,
    GraphError,
    iter_pairs,
    neighbor_lists_from_bits,
    pack_edges,
    pair_count,
    span_mask,
    validate,
)
from daghash.isomorphism import are_isomorphic


def triple_graphs():
    """Three one-class 5-vertex graphs that differ only by relabeling.

    The middle graph is the left one with vertices 3 and 4 exchanged; the
    right one applies the cycle 2->3->4->2.  All three carry the palette
    green=1, red=2, blue=3.
    """
    left = ComputationalGraph(
        5, 3, pack_edges(5, [(1, 2), (1, 3), (1, 4), (2, 3), (3, 5), (4, 5)]),
        (1, 2, 1, 3, 3),
    )
    middle = ComputationalGraph(
        5, 3, pack_edges(5, [(1, 2), (1, 3), (1, 4), (2, 4), (3, 5), (4, 5)]),
        (1, 2, 3, 1, 3),
    )
    right = ComputationalGraph(
        5, 3, pack_edges(5, [(1, 2), (1, 3), (1, 4), (3, 4), (2, 5), (4, 5)]),
        (1, 3, 2, 1, 3),
    )
    return left, middle, right


@pytest.fixture(scope="session")
def triple():
    return triple_graphs()


@pytest.fixture(scope="session")
def pinned_pair():
    return counterexample_pair()


@pytest.fixture(scope="session")
def small_corpus():
    """Every class with n <= 5, k = 2, e_max = 10; a few thousand graphs."""
    return list(enumerate_graphs(EnumerationConfig(5, 10, 2)))


def oracle_census(n_max, e_max, k):
    """Class count by pairwise oracle dedup; no hashing involved.

    Walks the same (n, bit vector, coloring) space as the enumerator but
    keeps a flat list of representatives and compares each candidate
    against all same-size ones with the permutation oracle.  The path
    condition does not depend on colors, so the first GraphError for an
    edge set rules out all its colorings.
    """
    reps = []
    for n in range(2, n_max + 1):
        pairs = list(iter_pairs(n))
        for bits in range(1 << len(pairs)):
            if bits.bit_count() > e_max:
                continue
            edges = [p for t, p in enumerate(pairs) if bits >> t & 1]
            structural = None
            for colors in itertools.product(range(1, k + 1), repeat=n):
                if structural is False:
                    break
                try:
                    g = validate(n, k, edges, colors)
                    structural = True
                except GraphError:
                    structural = False
                    break
                if not any(
                    r.n == n and are_isomorphic(r, g).isomorphic for r in reps
                ):
                    reps.append(g)
    return len(reps)


@pytest.fixture(scope="session")
def census_by_oracle():
    return oracle_census


@st.composite
def valid_graphs(draw, max_n=6, max_k=3):
    """Uniformly-ish drawn graphs satisfying the path condition."""
    n = draw(st.integers(2, max_n))
    k = draw(st.integers(1, max_k))
    bits = draw(st.integers(0, (1 << pair_count(n)) - 1))
    outs, ins = neighbor_lists_from_bits(n, bits)
    assume(span_mask(n, outs, ins) == (1 << n) - 1)
    colors = tuple(draw(st.lists(st.integers(1, k), min_size=n, max_size=n)))
    return ComputationalGraph(n, k, bits, colors)
