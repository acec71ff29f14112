"""Exhaustive generation of computational graphs up to isomorphism.

For each vertex count n up to n_max, every upper-triangular adjacency bit
vector is decoded in increasing numeric order, pruned by edge budget and the
input-to-output path condition, and expanded over all colorings in
lexicographic order.  A graph is kept iff its invariant digest has not been
seen before, making the first-observed graph the canonical representative of
its equivalence class.  The digest dedup is sound only insofar as the
invariant separates non-isomorphic graphs; verify_buckets re-checks that
assumption with the brute-force oracle by retaining every duplicate and
demanding bucket purity.

The seen-digest set spans all n.  Digests embed the vertex count, so graphs
of different sizes cannot merge; the global set simply mirrors the loop
structure of the generation procedure.
"""

from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

from .graphs import (
    ComputationalGraph,
    neighbor_lists_from_bits,
    pair_count,
    iter_pairs,
    span_mask,
)
from .hashing import Digest, invariant_from_lists
from .isomorphism import ORACLE_MAX_VERTICES, OracleCapExceeded, are_isomorphic


@dataclass(frozen=True, slots=True)
class EnumerationConfig:
    """Search space bounds: vertex budget, edge budget, interior palette.

    With reserved_io set, vertex 1 always takes color k+1 and vertex n color
    k+2, interior vertices draw from [1, k], and generated graphs carry the
    full k+2 palette.  Otherwise every vertex draws from [1, k].
    """

    n_max: int
    e_max: int
    k: int
    reserved_io: bool = False

    def __post_init__(self):
        if self.n_max < 2:
            raise ValueError(f"n_max must be at least 2, got {self.n_max}")
        if self.e_max < 1:
            raise ValueError(f"e_max must be at least 1, got {self.e_max}")
        if self.k < 1:
            raise ValueError(f"k must be at least 1, got {self.k}")

    @property
    def palette(self) -> int:
        """Color count carried by generated graphs."""
        return self.k + 2 if self.reserved_io else self.k

    def colorings(self, n: int) -> Iterator[tuple[int, ...]]:
        """All color vectors for n vertices, in lexicographic order."""
        interior = range(1, self.k + 1)
        if not self.reserved_io:
            yield from itertools.product(interior, repeat=n)
        elif n == 2:
            yield (self.k + 1, self.k + 2)
        else:
            first, last = self.k + 1, self.k + 2
            for mid in itertools.product(interior, repeat=n - 2):
                yield (first, *mid, last)


@dataclass(frozen=True, slots=True)
class CanonicalRecord:
    """A digest together with the first graph observed to produce it."""

    invariant: Digest
    graph: ComputationalGraph


@dataclass(frozen=True, slots=True)
class EnumerationReport:
    """Per-n class counts, their total, and (optionally) retained buckets."""

    per_n: dict[int, int]
    total: int
    buckets: dict[Digest, list[ComputationalGraph]] | None = None

    def __post_init__(self):
        if self.total != sum(self.per_n.values()):
            raise ValueError("total does not match the per-n counts")


class FalseMerge(Exception):
    """A digest bucket holds graphs the oracle says are non-isomorphic."""

    def __init__(
        self,
        digest: Digest,
        canonical: ComputationalGraph,
        offender: ComputationalGraph,
    ):
        self.digest = digest
        self.canonical = canonical
        self.offender = offender
        super().__init__(
            f"digest {digest.hex()} merges non-isomorphic graphs "
            f"(n={canonical.n})"
        )


def decode_bitvector(n: int, bits: Sequence[int]) -> set[tuple[int, int]]:
    """Edge set encoded by a 0/1 vector over the row-major pair order."""
    expected = pair_count(n)
    if len(bits) != expected:
        raise ValueError(
            f"expected {expected} bits for n={n}, got {len(bits)}"
        )
    return {pair for pair, bit in zip(iter_pairs(n), bits) if bit}


def passes_prune(edges, n: int, e_max: int) -> bool:
    """True iff the edge set is within budget and spans input to output.

    The span requirement is the path condition: every vertex forward
    reachable from vertex 1 and backward reachable from vertex n.
    """
    if len(edges) > e_max:
        return False
    outs = [[] for _ in range(n)]
    ins = [[] for _ in range(n)]
    for i, j in edges:
        outs[i - 1].append(j - 1)
        ins[j - 1].append(i - 1)
    return span_mask(n, outs, ins) == (1 << n) - 1


def _surviving_matrices(n: int, e_max: int):
    """Packed adjacency ints that pass both prunes, ascending numerically.

    Yields (bits, outs, ins) so callers reuse the decoded neighbor lists
    across every coloring of the matrix.
    """
    full = (1 << n) - 1
    for bits in range(1 << pair_count(n)):
        if bits.bit_count() > e_max:
            continue
        outs, ins = neighbor_lists_from_bits(n, bits)
        if span_mask(n, outs, ins) == full:
            yield bits, outs, ins


def _matrix_digests(n, bits, config, backend):
    # Worker payload for parallel mode: all digests of one matrix, in
    # coloring order.  Everything needed is re-derived from (n, bits) so
    # only small values cross the process boundary.
    outs, ins = neighbor_lists_from_bits(n, bits)
    return [
        invariant_from_lists(n, outs, ins, colors, backend)
        for colors in config.colorings(n)
    ]


def enumerate_graphs(
    config: EnumerationConfig, backend: str = "md5", workers: int = 1
) -> Iterator[CanonicalRecord]:
    """Stream canonical records in deterministic generation order.

    Order: n ascending, then adjacency bit vector ascending numerically,
    then coloring lexicographic.  A record is yielded iff its digest is new;
    the seen set is global across n.  workers > 1 spreads digest computation
    over processes; the merged stream is identical to the sequential one
    because results are consumed in submission order.
    """
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")
    if workers == 1:
        yield from _enumerate_sequential(config, backend)
    else:
        yield from _enumerate_parallel(config, backend, workers)


def _enumerate_sequential(config, backend):
    seen: set[Digest] = set()
    palette = config.palette
    for n in range(2, config.n_max + 1):
        for bits, outs, ins in _surviving_matrices(n, config.e_max):
            for colors in config.colorings(n):
                dig = invariant_from_lists(n, outs, ins, colors, backend)
                if dig not in seen:
                    seen.add(dig)
                    yield CanonicalRecord(
                        dig, ComputationalGraph(n, palette, bits, colors)
                    )


def _enumerate_parallel(config, backend, workers):
    seen: set[Digest] = set()
    palette = config.palette
    with ProcessPoolExecutor(max_workers=workers) as pool:
        for n in range(2, config.n_max + 1):
            mats = [bits for bits, _, _ in _surviving_matrices(n, config.e_max)]
            digest_blocks = pool.map(
                _matrix_digests,
                itertools.repeat(n),
                mats,
                itertools.repeat(config),
                itertools.repeat(backend),
                chunksize=64,
            )
            for bits, digs in zip(mats, digest_blocks):
                for colors, dig in zip(config.colorings(n), digs):
                    if dig not in seen:
                        seen.add(dig)
                        yield CanonicalRecord(
                            dig, ComputationalGraph(n, palette, bits, colors)
                        )


def check_bucket(digest: Digest, members: Sequence[ComputationalGraph]) -> None:
    """Raise FalseMerge unless every member is isomorphic to the first."""
    canonical = members[0]
    for g in members[1:]:
        if not are_isomorphic(canonical, g).isomorphic:
            raise FalseMerge(digest, canonical, g)


def verify_buckets(
    config: EnumerationConfig, backend: str = "md5"
) -> EnumerationReport:
    """Re-run generation keeping duplicates and oracle-check every merge.

    Each graph whose digest was already seen is checked against its bucket's
    canonical representative with the brute-force oracle.  Returns the
    report (with buckets retained) if every bucket is pure; raises
    FalseMerge at the first impure one.  Requires n_max within the oracle
    cap.
    """
    if config.n_max > ORACLE_MAX_VERTICES:
        raise OracleCapExceeded(
            f"verification needs the oracle, capped at "
            f"{ORACLE_MAX_VERTICES} vertices; n_max={config.n_max}"
        )
    buckets: dict[Digest, list[ComputationalGraph]] = {}
    per_n: dict[int, int] = {}
    palette = config.palette
    for n in range(2, config.n_max + 1):
        for bits, outs, ins in _surviving_matrices(n, config.e_max):
            for colors in config.colorings(n):
                dig = invariant_from_lists(n, outs, ins, colors, backend)
                g = ComputationalGraph(n, palette, bits, colors)
                members = buckets.get(dig)
                if members is None:
                    buckets[dig] = [g]
                    per_n[n] = per_n.get(n, 0) + 1
                else:
                    if not are_isomorphic(members[0], g).isomorphic:
                        raise FalseMerge(dig, members[0], g)
                    members.append(g)
    return EnumerationReport(per_n, sum(per_n.values()), buckets)
