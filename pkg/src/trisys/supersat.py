"""Auxiliary graphs, good/bad path classification, exact counting identities,
and the supersaturation bound calculators.

Numeric thresholds from the underlying counting argument are kept in one named
table so report output can surface them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .cycles import LooseCycleCopy, validate_loose_cycle
from .errors import InternalInvariantError
from .hypergraph import Pair, SimpleGraph, TripleSystem, degree_sequence, directed_paths_from_edge, linear_paths, require_linear

CONSTANTS = {
    # edge-count hypothesis m > 100 n^{3/2} of the pentagon bound
    "C5_EDGE_THRESHOLD": 100,
    # a base vertex is useful when its auxiliary graph has more than 1000 n edges
    "USEFUL_THRESHOLD": 1000,
    # iterative pruning threshold used by the 3-edge-path floor argument
    "PRUNE_DEGREE": 100,
}


def build_gv(H: TripleSystem, v: int) -> SimpleGraph:
    """Auxiliary graph of the base vertex: yz is an edge iff some 2-edge linear
    path runs from v to the pair {y, z}.

    Vertices keep the ambient numbering; v itself is always isolated.
    """
    require_linear(H)
    esets = H.edge_sets
    pairs: set[Pair] = set()
    for ei in H.vertex_to_edges[v]:
        for x in esets[ei] - {v}:
            for fj in H.vertex_to_edges[x]:
                if fj == ei:
                    continue
                far = esets[fj] - {x}
                a, b = sorted(far)
                pairs.add((a, b))
    return SimpleGraph.from_edges(H.n, pairs)


def gv_edge_identity(H: TripleSystem) -> tuple[int, int, bool]:
    """Both sides of the exact identity sum_v e(G_v) = 4 sum_x C(d(x), 2)."""
    require_linear(H)
    lhs = sum(build_gv(H, v).m for v in range(H.n))
    rhs = 4 * sum(comb(d, 2) for d in degree_sequence(H))
    return lhs, rhs, lhs == rhs


@dataclass(frozen=True)
class GoodPathWitness:
    """Certificate that the 3-edge path w-x-y-z of G_u extends to a loose C5.

    The six member triples u.a.a', a.w.x, x.y.b, u.b.b', y.z.c, u.c.c' all lie
    in the system; dropping u.b.b' leaves a pentagon through u, a, x, y, c.
    """

    u: int
    w: int
    x: int
    y: int
    z: int
    a: int
    b: int
    c: int
    a_prime: int
    b_prime: int
    c_prime: int

    def pentagon_edges(self) -> frozenset[tuple[int, int, int]]:
        raw = (
            (self.u, self.a, self.a_prime),
            (self.a, self.w, self.x),
            (self.x, self.y, self.b),
            (self.y, self.z, self.c),
            (self.u, self.c, self.c_prime),
        )
        return frozenset(tuple(sorted(e)) for e in raw)

    def pentagon_copy(self, H: TripleSystem) -> LooseCycleCopy:
        """Structured loose C5 (cycle u-a-x-y-c) with edge indices into H."""
        cycle = (self.u, self.a, self.x, self.y, self.c)
        wings = (self.a_prime, self.w, self.b, self.z, self.c_prime)
        index = {e: i for i, e in enumerate(H.edges)}
        ordered = []
        for i in range(5):
            want = tuple(sorted((cycle[i], cycle[(i + 1) % 5], wings[i])))
            ordered.append(index[want])
        return LooseCycleCopy(tuple(ordered), cycle, wings)


def three_edge_paths(G: SimpleGraph):
    """Yield each unordered simple 3-edge path once as (w, x, y, z) with the
    middle edge (x, y) sorted ascending."""
    adj = G.adjacency
    for x, y in G.edges:
        for w in adj[x]:
            if w == y:
                continue
            for z in adj[y]:
                if z == x or z == w:
                    continue
                yield (w, x, y, z)


def count_three_edge_paths(G: SimpleGraph) -> int:
    """Closed form: sum over edges xy of (d(x)-1)(d(y)-1) - #common neighbours."""
    adj = [set(a) for a in G.adjacency]
    total = 0
    for x, y in G.edges:
        total += (len(adj[x]) - 1) * (len(adj[y]) - 1) - len(adj[x] & adj[y])
    return total


def _third_vertex(H: TripleSystem, a: int, b: int) -> int | None:
    """The vertex completing the unique edge through pair {a, b}, if any."""
    hit = H.pair_to_edges.get((a, b) if a < b else (b, a))
    if not hit:
        return None
    (x, y, z) = H.edges[hit[0]]
    return x + y + z - a - b


def classify_paths(H: TripleSystem, v: int) -> tuple[list[GoodPathWitness], int]:
    """Split the 3-edge paths of G_v into good (with witness) and bad.

    Linearity makes the candidate witness tuple unique: a, b, c are the third
    vertices over the path's three pairs and a', b', c' the third vertices over
    the pairs {v,a}, {v,b}, {v,c}; the path is good iff a, b, c, a', c' are
    pairwise distinct and avoid {v, w, x, y, z}.
    """
    require_linear(H)
    gv = build_gv(H, v)
    good: list[GoodPathWitness] = []
    bad = 0
    for w, x, y, z in three_edge_paths(gv):
        a = _third_vertex(H, w, x)
        b = _third_vertex(H, x, y)
        c = _third_vertex(H, y, z)
        if a is None or b is None or c is None:
            raise InternalInvariantError("G_v edge without a covering triple")
        ap = _third_vertex(H, v, a)
        bp = _third_vertex(H, v, b)
        cp = _third_vertex(H, v, c)
        if ap is None or bp is None or cp is None:
            raise InternalInvariantError("G_v edge without a path back to v")
        five = (a, b, c, ap, cp)
        if len(set(five)) == 5 and not (set(five) & {v, w, x, y, z}):
            good.append(GoodPathWitness(v, w, x, y, z, a, b, c, ap, bp, cp))
        else:
            bad += 1
    return good, bad


def claim_bound(H: TripleSystem, v: int) -> int:
    """Right side of the bad-path bound: sum over G_v edges xy of
    12 (d(x) + d(y) - 2), degrees taken in G_v."""
    gv = build_gv(H, v)
    return sum(12 * (gv.degree(x) + gv.degree(y) - 2) for x, y in gv.edges)


def pentagons_from_good_paths(H: TripleSystem):
    """All pentagons certified by good paths, with (v, path) multiplicities.

    Returns (pentagon edge-set -> multiplicity, witnesses).  Every emitted
    5-edge set is re-validated as a loose C5; a failure here is a bug.
    """
    require_linear(H)
    multiplicity: dict[frozenset, int] = {}
    witnesses: list[GoodPathWitness] = []
    for v in range(H.n):
        good, _ = classify_paths(H, v)
        for wit in good:
            copy = wit.pentagon_copy(H)
            validate_loose_cycle(H, copy)
            key = wit.pentagon_edges()
            multiplicity[key] = multiplicity.get(key, 0) + 1
            witnesses.append(wit)
    return multiplicity, witnesses


def prune_to_min_degree(G: SimpleGraph, t: int) -> SimpleGraph:
    """Iteratively delete vertices of degree <= t; returns the surviving graph
    (same vertex numbering, deleted vertices isolated)."""
    alive = set(range(G.n))
    adj = [set(a) for a in G.adjacency]
    changed = True
    while changed:
        changed = False
        for u in list(alive):
            if len(adj[u]) <= t:
                alive.discard(u)
                for nb in adj[u]:
                    adj[nb].discard(u)
                adj[u] = set()
                changed = True
    edges = [(u, v) for u in alive for v in adj[u] if u < v]
    return SimpleGraph.from_edges(G.n, edges)


@dataclass(frozen=True)
class BoundReport:
    n: int
    m: int
    k: int
    threshold_ok: bool
    bound: Fraction
    constants: tuple[tuple[str, int], ...] = tuple(sorted(CONSTANTS.items()))

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "k": self.k,
            "threshold_ok": self.threshold_ok,
            "bound": f"{self.bound.numerator}/{self.bound.denominator}",
            "bound_float": float(self.bound),
            "constants": dict(self.constants),
        }


def c5_bound(n: int, m: int) -> BoundReport:
    """Pentagon supersaturation bound m^6/n^7 with the exact hypothesis test
    m > 100 n^{3/2}, compared as m^2 > 10^4 n^3 in integers."""
    if n <= 10:
        raise ValueError("pentagon bound requires n > 10")
    if m < 0:
        raise ValueError("m must be non-negative")
    threshold_ok = m > 0 and m * m > 10**4 * n**3
    return BoundReport(n, m, 2, threshold_ok, Fraction(m**6, n**7))


def ck_bound(n: int, m: int, k: int, big_c: Fraction) -> BoundReport:
    """General bound m^{3k}/n^{4k-1} with hypothesis m > C n^{2 - 1/(3k)},
    tested exactly as m^{3k} > C^{3k} n^{6k-1}."""
    if k < 2:
        raise ValueError("k must be >= 2")
    if big_c <= 0:
        raise ValueError("the hypothesis constant must be positive")
    if n < 1 or m < 0:
        raise ValueError("need n >= 1 and m >= 0")
    threshold_ok = m > 0 and Fraction(m) ** (3 * k) > Fraction(big_c) ** (3 * k) * n ** (6 * k - 1)
    return BoundReport(n, m, k, threshold_ok, Fraction(m ** (3 * k), n ** (4 * k - 1)))


@dataclass(frozen=True)
class KPathMultigraph:
    """Multigraph on V(H) minus the base vertex; one labeled edge per k-edge
    linear path with the base vertex as an endpoint."""

    base: int
    k: int
    n: int
    edges: tuple[tuple[Pair, tuple[int, ...]], ...]

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


def build_gu_multigraph(H: TripleSystem, u: int, k: int) -> KPathMultigraph:
    """Labelled far-end pairs of all k-edge linear paths starting at u.

    The label is the path's edge-index sequence read from u, so parallel pairs
    arising from different paths stay distinguishable.
    """
    if k < 2:
        raise ValueError("k must be >= 2")
    require_linear(H)
    esets = H.edge_sets
    out = []
    for e1 in H.vertex_to_edges[u]:
        for seq in directed_paths_from_edge(H, e1, k, first_connector_excluded=u):
            last, penult = esets[seq[-1]], esets[seq[-2]]
            far = sorted(last - penult)
            out.append(((far[0], far[1]), seq))
    return KPathMultigraph(u, k, H.n, tuple(out))


def kpath_identity(H: TripleSystem, k: int) -> tuple[int, int, bool]:
    """sum_u |E(G_u)| (with multiplicity) against 4x the k-edge path count."""
    require_linear(H)
    lhs = sum(build_gu_multigraph(H, u, k).m for u in range(H.n))
    rhs = 4 * linear_paths(H, k)
    return lhs, rhs, lhs == rhs
