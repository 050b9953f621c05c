"""Core data model for 3-uniform triple systems and simple graphs.

A triple system stores its edges as sorted 3-tuples in lexicographic order, so
serialization is canonical and counting loops can rely on a single-valued
pair-to-edge index whenever the system is linear (every vertex pair lies in at
most one edge).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

from .errors import LinearityError, StructureError

Edge = tuple[int, int, int]
Pair = tuple[int, int]


def _sorted_pair(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class TripleSystem:
    """Immutable 3-uniform hypergraph on vertices 0..n-1."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 0:
            raise StructureError("vertex count must be non-negative")
        prev = None
        for e in self.edges:
            if len(e) != 3 or len(set(e)) != 3:
                raise StructureError(f"edge {e} does not have 3 distinct vertices")
            if not (0 <= e[0] < e[1] < e[2] < self.n):
                raise StructureError(f"edge {e} not sorted or out of range for n={self.n}")
            if prev is not None and e <= prev:
                raise StructureError(f"edge list not in canonical order near {e}")
            prev = e

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "TripleSystem":
        """Canonicalize: sort each triple, sort the list, reject duplicates."""
        canon = []
        for e in edges:
            t = tuple(sorted(e))
            if len(t) != 3 or len(set(t)) != 3:
                raise StructureError(f"edge {tuple(e)} does not have 3 distinct vertices")
            canon.append(t)
        canon.sort()
        for a, b in zip(canon, canon[1:]):
            if a == b:
                raise StructureError(f"duplicate edge {a}")
        return cls(n, tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def vertex_to_edges(self) -> tuple[tuple[int, ...], ...]:
        """vertex -> indices of incident edges."""
        inc: list[list[int]] = [[] for _ in range(self.n)]
        for i, e in enumerate(self.edges):
            for v in e:
                inc[v].append(i)
        return tuple(tuple(x) for x in inc)

    @cached_property
    def pair_to_edges(self) -> dict[Pair, tuple[int, ...]]:
        """Covered pair -> indices of edges containing it (length 1 iff linear)."""
        d: dict[Pair, list[int]] = {}
        for i, (a, b, c) in enumerate(self.edges):
            for p in ((a, b), (a, c), (b, c)):
                d.setdefault(p, []).append(i)
        return {p: tuple(v) for p, v in d.items()}

    @cached_property
    def edge_sets(self) -> tuple[frozenset[int], ...]:
        return tuple(frozenset(e) for e in self.edges)


@dataclass(frozen=True)
class SimpleGraph:
    """Immutable simple graph; edges stored as sorted pairs in lexicographic order."""

    n: int
    edges: tuple[Pair, ...]

    def __post_init__(self):
        prev = None
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise StructureError(f"edge ({u},{v}) is a loop, unsorted, or out of range")
            if prev is not None and (u, v) <= prev:
                raise StructureError("edge list not in canonical order")
            prev = (u, v)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> "SimpleGraph":
        canon = sorted({_sorted_pair(u, v) for u, v in edges})
        for u, v in canon:
            if u == v:
                raise StructureError(f"loop at vertex {u}")
        return cls(n, tuple(canon))

    @property
    def m(self) -> int:
        return len(self.edges)

    @cached_property
    def edge_set(self) -> frozenset[Pair]:
        return frozenset(self.edges)

    @cached_property
    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return tuple(tuple(sorted(x)) for x in adj)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def has_edge(self, u: int, v: int) -> bool:
        return _sorted_pair(u, v) in self.edge_set


@dataclass(frozen=True)
class Multigraph:
    """Multigraph whose parallel edges are told apart by witness labels."""

    n: int
    edges: tuple[tuple[Pair, tuple[int, ...]], ...] = field(default=())

    def __post_init__(self):
        labels = [lab for _, lab in self.edges]
        if len(labels) != len(set(labels)):
            raise StructureError("multigraph labels must be unique")

    @property
    def m(self) -> int:
        return len(self.edges)

    def pair_multiplicities(self) -> dict[Pair, int]:
        out: dict[Pair, int] = {}
        for pair, _ in self.edges:
            out[pair] = out.get(pair, 0) + 1
        return out

    def simple_projection(self) -> frozenset[Pair]:
        return frozenset(pair for pair, _ in self.edges)


# ---------------------------------------------------------------------------
# operations


def is_linear(H: TripleSystem) -> bool:
    """True iff every unordered vertex pair lies in at most one edge."""
    return all(len(ix) == 1 for ix in H.pair_to_edges.values())


def require_linear(H: TripleSystem) -> None:
    if not is_linear(H):
        bad = next(p for p, ix in H.pair_to_edges.items() if len(ix) > 1)
        raise LinearityError(f"pair {bad} lies in {len(H.pair_to_edges[bad])} edges")


def shadow(H: TripleSystem) -> SimpleGraph:
    """Graph of all vertex pairs covered by some triple; 3m edges when H is linear."""
    return SimpleGraph.from_edges(H.n, H.pair_to_edges.keys())


def degree_sequence(H: TripleSystem) -> list[int]:
    """Per-vertex edge-membership counts; sums to 3m."""
    return [len(ix) for ix in H.vertex_to_edges]


def directed_paths_from_edge(
    H: TripleSystem, start: int, k: int, first_connector_excluded: int | None = None
) -> Iterator[tuple[int, ...]]:
    """Directed k-edge linear paths beginning at edge index `start`.

    Consecutive edges share exactly one vertex, non-consecutive edges are
    disjoint.  If first_connector_excluded is given, the connector out of the
    first edge must avoid that vertex (used to keep a designated endpoint at
    degree one on the path).
    """
    esets = H.edge_sets
    seq = [start]
    used = set(esets[start])

    def extend(last_connector: int | None) -> Iterator[tuple[int, ...]]:
        if len(seq) == k:
            yield tuple(seq)
            return
        last = esets[seq[-1]]
        if last_connector is None:
            connectors = set(last)
            if first_connector_excluded is not None:
                connectors.discard(first_connector_excluded)
        else:
            connectors = last - {last_connector}
        for c in sorted(connectors):
            for j in H.vertex_to_edges[c]:
                if j in seq:
                    continue
                cand = esets[j]
                if len(cand & used) != 1:
                    continue
                seq.append(j)
                used.update(cand)
                yield from extend(c)
                seq.pop()
                used.clear()
                used.update(*(esets[i] for i in seq))

    yield from extend(None)


def linear_paths(H: TripleSystem, k: int, enumerate_paths: bool = False):
    """Count k-edge linear paths (edge sequences up to reversal).

    With enumerate_paths=True returns a list of (edge_index_tuple, endpoints)
    where endpoints are the degree-one vertices of the first and last edge; the
    stored direction is the one whose first edge index is smaller.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    require_linear(H)
    if k == 1:
        if enumerate_paths:
            return [((i,), tuple(H.edges[i])) for i in range(H.m)]
        return H.m
    esets = H.edge_sets
    found: list[tuple[tuple[int, ...], tuple[int, ...]]] = []
    count = 0
    for start in range(H.m):
        for seq in directed_paths_from_edge(H, start, k):
            if seq[0] > seq[-1]:
                continue  # keep one direction per path
            count += 1
            if enumerate_paths:
                first, last = esets[seq[0]], esets[seq[-1]]
                second, penult = esets[seq[1]], esets[seq[-2]]
                ends = tuple(sorted(first - second)) + tuple(sorted(last - penult))
                found.append((seq, ends))
    return found if enumerate_paths else count
