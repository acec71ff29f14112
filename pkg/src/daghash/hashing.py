"""Iterative neighborhood digests: an isomorphism-invariant hash for colored DAGs.

Every vertex starts from a digest of (out-degree, in-degree, color); each of
the n refinement rounds replaces a vertex's digest with a digest of its
sorted out-neighbor digests, sorted in-neighbor digests, and its own digest;
the final value digests the sorted per-vertex list.  Relabeling a graph
permutes the per-round digest lists but never changes their multisets, so the
result is invariant under isomorphism.

Digest inputs are byte strings built from LE64 length prefixes and raw digest
bytes, making the encoding injective.  Two backends share this encoding:

* ``md5``    -- 16-byte digests, the default.
* ``concat`` -- the identity map on the encoded bytes.  Collision-free, but
  digests grow exponentially with the round count; practical only for small
  graphs.
"""

from __future__ import annotations

import hashlib
import struct
from typing import Callable, Sequence

from .graphs import ComputationalGraph, adjacency_lists

Digest = bytes

BACKENDS = ("md5", "concat")

_LE64 = [struct.pack("<Q", v) for v in range(128)]


def _le64(v: int) -> bytes:
    return _LE64[v] if v < 128 else struct.pack("<Q", v)


def _md5(data: bytes) -> bytes:
    return hashlib.md5(data).digest()


def _identity(data: bytes) -> bytes:
    return data


def digest_function(backend: str) -> Callable[[bytes], bytes]:
    if backend == "md5":
        return _md5
    if backend == "concat":
        return _identity
    raise ValueError(f"unknown digest backend {backend!r}; expected one of {BACKENDS}")


def digest_hex(digest: Digest) -> str:
    """External rendering: lowercase hex of the raw bytes."""
    return digest.hex()


def vertex_init_digest(
    out_degree: int, in_degree: int, color: int, backend: str = "md5"
) -> Digest:
    """Digest of LE64(out_degree) || LE64(in_degree) || LE64(color)."""
    d = digest_function(backend)
    return d(_le64(out_degree) + _le64(in_degree) + _le64(color))


def refine_round(
    g: ComputationalGraph, digests: Sequence[Digest], backend: str = "md5"
) -> list[Digest]:
    """One refinement round over the pre-round digest list.

    Vertex i's new digest is digest(LE64(#out) || sorted out-neighbor digests
    || LE64(#in) || sorted in-neighbor digests || own digest).  All n updates
    read only the pre-round list.
    """
    if len(digests) != g.n:
        raise ValueError(f"expected {g.n} digests, got {len(digests)}")
    outs, ins = adjacency_lists(g)
    return _refine(g.n, outs, ins, list(digests), digest_function(backend), {})


def graph_invariant(g: ComputationalGraph, backend: str = "md5") -> Digest:
    """The graph's invariant digest.

    Initializes per-vertex digests, refines exactly n rounds, then digests
    LE64(n) || concatenation of the lexicographically sorted final digests.
    Does not rely on the path condition, only on the i < j representation.
    """
    outs, ins = adjacency_lists(g)
    return invariant_from_lists(g.n, outs, ins, g.colors, backend)


def refinement_trace(
    g: ComputationalGraph, backend: str = "md5"
) -> list[list[Digest]]:
    """The n+1 per-round digest lists (initial plus each of the n rounds)."""
    outs, ins = adjacency_lists(g)
    n = g.n
    d = digest_function(backend)
    h = _init_digests(n, outs, ins, g.colors, d)
    trace = [list(h)]
    for _ in range(n):
        h = _refine(n, outs, ins, h, d, {})
        trace.append(list(h))
    return trace


def final_digest(n: int, digests: Sequence[Digest], backend: str = "md5") -> Digest:
    """Collapse a per-vertex digest list into the single graph digest."""
    d = digest_function(backend)
    return d(b"".join([_le64(n)] + sorted(digests)))


def _init_digests(n, outs, ins, colors, d):
    return [
        d(_le64(len(outs[i])) + _le64(len(ins[i])) + _le64(colors[i]))
        for i in range(n)
    ]


def _refine(n, outs, ins, h, d, memo):
    # memo maps the tuple of input digests to the built output, so vertices
    # whose inputs agree share one output object.  bytes objects cache their
    # hash and equal digests are shared, so after the first sighting of a
    # digest the key costs almost nothing to hash or compare.  This keeps
    # concat-mode work proportional to the number of *distinct* digests per
    # round instead of n, and the memo stays valid across rounds and graphs.
    new = []
    for i in range(n):
        ho = [h[j] for j in outs[i]]
        if len(ho) > 1:
            ho.sort()
        hi = [h[j] for j in ins[i]]
        if len(hi) > 1:
            hi.sort()
        key = (tuple(ho), tuple(hi), h[i])
        got = memo.get(key)
        if got is None:
            parts = [_le64(len(ho))]
            parts += ho
            parts.append(_le64(len(hi)))
            parts += hi
            parts.append(h[i])
            got = d(b"".join(parts))
            memo[key] = got
        new.append(got)
    return new


def invariant_from_lists(
    n: int,
    outs: Sequence[Sequence[int]],
    ins: Sequence[Sequence[int]],
    colors: Sequence[int],
    backend: str = "md5",
) -> Digest:
    """Invariant digest from raw 0-based neighbor lists.

    This is the hot path for enumeration: callers precompute the neighbor
    lists once per adjacency matrix and reuse them across colorings.
    """
    if backend == "md5" and n < 128:
        return _md5_invariant(n, outs, ins, colors)
    return _generic_invariant(n, outs, ins, colors, digest_function(backend), ({}, {}, {}))


def _generic_invariant(n, outs, ins, colors, d, ctx):
    # ctx is (interned, memo, final_memo): init digests interned by content,
    # round outputs memoized on their inputs, final digests memoized on the
    # sorted per-vertex list.  All equal digests inside one ctx are therefore
    # the same object, so sorts and comparisons short-circuit on identity.
    interned, memo, final_memo = ctx
    h = [
        interned.setdefault(v, v)
        for v in _init_digests(n, outs, ins, colors, d)
    ]
    for _ in range(n):
        h = _refine(n, outs, ins, h, d, memo)
    h.sort()
    # The per-vertex digests are kept alive by the round memo for as long as
    # the ctx exists, so their ids are stable and cheaper to key on than
    # hashing hundreds of megabytes of content in concat mode.
    key = (n, tuple(map(id, h)))
    got = final_memo.get(key)
    if got is None:
        got = d(b"".join([_le64(n)] + h))
        final_memo[key] = got
    return got


def graph_invariants(
    graphs: Sequence[ComputationalGraph], backend: str = "md5"
) -> list[Digest]:
    """Invariant digests for several graphs at once.

    Returns exactly what mapping ``graph_invariant`` over the sequence would,
    but in concat mode the builder state is shared, so digests that several
    graphs have in common are built once and returned as shared objects.
    Worth using whenever concat digests of related graphs are compared: for a
    pair whose refinement agrees everywhere the second graph costs almost
    nothing and the final equality check is an identity test.
    """
    if backend == "md5":
        return [graph_invariant(g, "md5") for g in graphs]
    d = digest_function(backend)
    ctx = ({}, {}, {})
    out = []
    for g in graphs:
        outs, ins = adjacency_lists(g)
        out.append(_generic_invariant(g.n, outs, ins, g.colors, d, ctx))
    return out


def _md5_invariant(n, outs, ins, colors):
    # Specialized md5 loop: identical algorithm to _refine but with the
    # hashlib call inlined; enumeration spends nearly all its time here.
    md5 = hashlib.md5
    le64 = _LE64
    opre = [le64[len(outs[i])] for i in range(n)]
    ipre = [le64[len(ins[i])] for i in range(n)]
    h = [
        md5(opre[i] + ipre[i] + _le64(colors[i])).digest()
        for i in range(n)
    ]
    for _ in range(n):
        new = []
        append = new.append
        for i in range(n):
            ho = [h[j] for j in outs[i]]
            if len(ho) > 1:
                ho.sort()
            hi = [h[j] for j in ins[i]]
            if len(hi) > 1:
                hi.sort()
            parts = [opre[i]]
            parts += ho
            parts.append(ipre[i])
            parts += hi
            parts.append(h[i])
            append(md5(b"".join(parts)).digest())
        h = new
    h.sort()
    return md5(_le64(n) + b"".join(h)).digest()
