"""Deterministic 64-bit PRNG and seeded instance generators.

All randomized behaviour in the library flows through SplitMix64 so that
results are bit-identical across platforms and Python versions.  The test
vector below is published in the test suite and README:

    seed 0       -> 16294208416658607535, 7960286522194355700, ...
    seed 1234567 -> 6457827717110365317, 3203168211198807973, ...
"""

from __future__ import annotations

from .errors import StructureError
from .hypergraph import SimpleGraph, TripleSystem

_MASK = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def splitmix64_next(state: int) -> tuple[int, int]:
    """Advance a SplitMix64 state once; returns (new_state, output)."""
    state = (state + _GOLDEN) & _MASK
    z = state
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
    return state, z ^ (z >> 31)


class SplitMix64:
    """Stateful wrapper around splitmix64_next."""

    def __init__(self, seed: int):
        self._state = seed & _MASK

    def next_u64(self) -> int:
        self._state, out = splitmix64_next(self._state)
        return out

    def below(self, bound: int) -> int:
        """Uniform-ish integer in [0, bound); modulo bias is < 2^-50 at desk scale."""
        if bound <= 0:
            raise ValueError("bound must be positive")
        return self.next_u64() % bound

    def fraction_parts(self, lo: int, hi: int, max_den: int) -> tuple[int, int]:
        """Random reduced-fraction raw parts: numerator in [lo, hi], denominator in [1, max_den]."""
        num = lo + self.below(hi - lo + 1)
        den = 1 + self.below(max_den)
        return num, den


def random_linear_system(n: int, m_target: int, seed: int) -> TripleSystem:
    """Seeded random linear triple system on n vertices with up to m_target edges.

    Edges are sampled with rejection against the pair-coverage constraint, so
    the result is always linear; fewer than m_target edges may be produced if
    the sampler stalls.
    """
    if n < 3:
        raise StructureError("need at least 3 vertices")
    rng = SplitMix64(seed)
    edges: list[tuple[int, int, int]] = []
    used_pairs: set[tuple[int, int]] = set()
    attempts = 0
    limit = 60 * m_target + 1000
    while len(edges) < m_target and attempts < limit:
        attempts += 1
        a = rng.below(n)
        b = rng.below(n)
        c = rng.below(n)
        if a == b or b == c or a == c:
            continue
        tri = tuple(sorted((a, b, c)))
        pairs = ((tri[0], tri[1]), (tri[0], tri[2]), (tri[1], tri[2]))
        if any(p in used_pairs for p in pairs):
            continue
        edges.append(tri)  # type: ignore[arg-type]
        used_pairs.update(pairs)
    return TripleSystem.from_edges(n, edges)


def random_graph(n: int, density_pct: int, seed: int) -> SimpleGraph:
    """Seeded G(n, p) with p = density_pct / 100."""
    rng = SplitMix64(seed)
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            if rng.below(100) < density_pct:
                edges.append((u, v))
    return SimpleGraph.from_edges(n, edges)
