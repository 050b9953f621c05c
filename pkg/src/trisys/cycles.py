"""Loose-cycle counting in triple systems and simple-cycle counting in graphs.

Two independent routes everywhere: an anchored-DFS counter used in anger, and
a subset-scan oracle kept deliberately naive for cross-validation.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb

from .errors import CapacityError, InternalInvariantError
from .hypergraph import Edge, SimpleGraph, TripleSystem, require_linear

DEFAULT_WORK_LIMIT = 10**9


@dataclass(frozen=True)
class LooseCycleCopy:
    """One unlabeled loose C_k: edge i is {v_i, v_{i+1}, w_i} (indices mod k)."""

    edge_indices: tuple[int, ...]
    cycle_vertices: tuple[int, ...]
    wing_vertices: tuple[int, ...]

    @property
    def k(self) -> int:
        return len(self.edge_indices)

    def edge_key(self, H: TripleSystem) -> frozenset[Edge]:
        return frozenset(H.edges[i] for i in self.edge_indices)


def validate_loose_cycle(H: TripleSystem, copy: LooseCycleCopy) -> None:
    """Re-check every LooseCycleCopy invariant from scratch; raises on violation."""
    k = copy.k
    if k < 3:
        raise InternalInvariantError("loose cycle needs k >= 3")
    vs, ws = copy.cycle_vertices, copy.wing_vertices
    if len(vs) != k or len(ws) != k:
        raise InternalInvariantError("vertex lists must have length k")
    if len(set(vs) | set(ws)) != 2 * k:
        raise InternalInvariantError("the 2k vertices are not distinct")
    esets = [set(H.edges[i]) for i in copy.edge_indices]
    if len(set(copy.edge_indices)) != k:
        raise InternalInvariantError("edges not distinct")
    for i in range(k):
        expect = {vs[i], vs[(i + 1) % k], ws[i]}
        if esets[i] != expect:
            raise InternalInvariantError(f"edge {i} is {esets[i]}, expected {expect}")
    for i, j in combinations(range(k), 2):
        inter = esets[i] & esets[j]
        consecutive = (j - i) % k in (1, k - 1)
        if consecutive and len(inter) != 1:
            raise InternalInvariantError(f"consecutive edges {i},{j} share {len(inter)} vertices")
        if not consecutive and inter:
            raise InternalInvariantError(f"non-consecutive edges {i},{j} intersect")


def _loose_cycle_dfs(H: TripleSystem, k: int, collect: bool):
    """Anchored DFS: each copy found once, rooted at its lexicographically
    smallest edge, direction fixed by second edge < last edge."""
    esets = H.edge_sets
    copies: list[LooseCycleCopy] = []
    count = 0

    for a_idx in range(H.m):
        anchor = H.edges[a_idx]
        for v1 in anchor:
            for v2 in anchor:
                if v2 == v1:
                    continue
                (w1,) = set(anchor) - {v1, v2}
                # forward chain e_2..e_k; every edge index must exceed a_idx
                seq = [a_idx]
                joints = [v1, v2]
                used = set(anchor)

                def extend(connector: int):
                    nonlocal count
                    depth = len(seq)
                    if depth == k:
                        return
                    for j in H.vertex_to_edges[connector]:
                        if j <= a_idx or j in seq:
                            continue
                        cand = esets[j]
                        if depth == k - 1:
                            # closing edge: must meet used set in exactly {connector, v1}
                            if cand & used != {connector, v1}:
                                continue
                            if H.edges[seq[1]] > H.edges[j]:
                                continue  # reflection dedup
                            seq.append(j)
                            count += 1
                            if collect:
                                wings = []
                                for t in range(k):
                                    (w,) = esets[seq[t]] - {joints[t], joints[(t + 1) % k]}
                                    wings.append(w)
                                copies.append(
                                    LooseCycleCopy(tuple(seq), tuple(joints), tuple(wings))
                                )
                            seq.pop()
                            continue
                        if len(cand & used) != 1:
                            continue
                        for nxt in cand - {connector}:
                            seq.append(j)
                            joints.append(nxt)
                            used.update(cand)
                            extend(nxt)
                            seq.pop()
                            joints.pop()
                            used.clear()
                            used.update(*(esets[i] for i in seq))

                extend(v2)
    return copies if collect else count


def count_loose_cycles(H: TripleSystem, k: int) -> int:
    """Number of distinct edge-sets forming a loose C_k (unlabeled copies)."""
    if k < 3:
        raise ValueError("k must be >= 3")
    require_linear(H)
    return _loose_cycle_dfs(H, k, collect=False)


def enumerate_loose_cycles(H: TripleSystem, k: int) -> list[LooseCycleCopy]:
    if k < 3:
        raise ValueError("k must be >= 3")
    require_linear(H)
    return _loose_cycle_dfs(H, k, collect=True)


def _subset_is_loose_cycle(esets, combo):
    """Pattern check on a k-subset of edges: intersection graph is a single
    k-cycle with size-1 consecutive intersections and distinct joints."""
    k = len(combo)
    adj: dict[int, list[int]] = {i: [] for i in range(k)}
    joint: dict[tuple[int, int], int] = {}
    for i, j in combinations(range(k), 2):
        inter = esets[combo[i]] & esets[combo[j]]
        if len(inter) > 1:
            return False
        if len(inter) == 1:
            adj[i].append(j)
            adj[j].append(i)
            joint[(i, j)] = next(iter(inter))
    if any(len(v) != 2 for v in adj.values()):
        return False
    # walk the 2-regular graph; must close after exactly k steps
    order = [0]
    prev, cur = -1, 0
    while True:
        nxt = adj[cur][0] if adj[cur][0] != prev else adj[cur][1]
        if nxt == 0:
            break
        order.append(nxt)
        prev, cur = cur, nxt
    if len(order) != k:
        return False
    return len(set(joint.values())) == k


def count_loose_cycles_oracle(
    H: TripleSystem,
    k: int,
    work_limit: int = DEFAULT_WORK_LIMIT,
    enumerate_sets: bool = False,
):
    """Reference count via exhaustive k-subset scan; independent of the DFS."""
    if k < 3:
        raise ValueError("k must be >= 3")
    require_linear(H)
    est = comb(H.m, k) * k * k
    if est > work_limit:
        raise CapacityError(f"estimated work {est} exceeds limit {work_limit}")
    esets = H.edge_sets
    hits = []
    count = 0
    for combo in combinations(range(H.m), k):
        if _subset_is_loose_cycle(esets, combo):
            count += 1
            if enumerate_sets:
                hits.append(frozenset(H.edges[i] for i in combo))
    return hits if enumerate_sets else count


# ---------------------------------------------------------------------------
# simple-graph cycles


def count_graph_cycles(G: SimpleGraph, length: int) -> int:
    """Number of simple unlabeled cycles of the given length.

    Canonical-start DFS: cycles are rooted at their smallest vertex and the
    direction is fixed by requiring the second vertex to be smaller than the
    last, so each cycle is produced exactly once.
    """
    if length < 3:
        raise ValueError("cycle length must be >= 3")
    adj = G.adjacency
    n = G.n
    count = 0
    for s in range(n):
        path = [s]
        on_path = {s}

        def dfs(cur: int):
            nonlocal count
            if len(path) == length:
                if path[1] < path[-1] and G.has_edge(cur, s):
                    count += 1
                return
            for nxt in adj[cur]:
                if nxt <= s or nxt in on_path:
                    continue
                path.append(nxt)
                on_path.add(nxt)
                dfs(nxt)
                path.pop()
                on_path.remove(nxt)

        dfs(s)
    return count


def count_graph_cycles_oracle(
    G: SimpleGraph, length: int, work_limit: int = DEFAULT_WORK_LIMIT
) -> int:
    """Reference cycle count: scan vertex subsets and cyclic orderings."""
    if length < 3:
        raise ValueError("cycle length must be >= 3")
    from itertools import permutations
    from math import factorial

    est = comb(G.n, length) * factorial(length - 1) * length
    if est > work_limit:
        raise CapacityError(f"estimated work {est} exceeds limit {work_limit}")
    count = 0
    for subset in combinations(range(G.n), length):
        s = subset[0]
        rest = subset[1:]
        for perm in permutations(rest):
            if perm[0] > perm[-1]:
                continue
            cyc = (s,) + perm
            if all(G.has_edge(cyc[i], cyc[(i + 1) % length]) for i in range(length)):
                count += 1
    return count


def t3_c4_profile(n_values: list[int], work_limit: int = DEFAULT_WORK_LIMIT):
    """Exact loose-C4 counts of T3(n) with the count/|V|^{5/2} growth ratio.

    The squared ratio count^2/|V|^5 is reported as an exact fraction so
    successive values can be compared without floating point.  Normalization
    uses the vertex count |V| = 3n^2, the quantity the growth claim is about.
    """
    from fractions import Fraction

    from .constructions import gen_t3

    rows = []
    for n in n_values:
        H = gen_t3(n)
        est = H.m**4
        if est > work_limit:
            raise CapacityError(f"T3({n}) too large for exact C4 count")
        c4 = count_loose_cycles(H, 4)
        nv = H.n
        ratio_sq = Fraction(c4 * c4, nv**5)
        rows.append(
            {
                "n": n,
                "vertices": nv,
                "c4": c4,
                "ratio_squared": ratio_sq,
                "ratio": float(ratio_sq) ** 0.5,
            }
        )
    return rows
