"""Point sets, similar-triangle detection, similarity triple systems, pentagon
witnesses, shared-harmonic-point search, and the harmonic closure algorithm.

Role conventions: a labeled triangle (A, B, C) is a direct copy of the shape z
when C = (A+B)/2 + z(A-B)/2, and a mirror copy when the same holds with the
conjugate shape.  In a similarity system the role of a vertex is its class
label, so a pentagon's five triangles meet in class-consistent roles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cycles import LooseCycleCopy
from .errors import DegeneracyError, InternalInvariantError, StructureError
from .geometry import (
    GaussianRational,
    ShapeParameter,
    apex_from_z,
    gr,
    halve,
    harmonic_from_z,
    three_harmonic_points,
)
from .hypergraph import TripleSystem, is_linear
from .seeding import SplitMix64

ROLE_A, ROLE_B, ROLE_C = 0, 1, 2
ROLE_NAMES = ("A", "B", "C")


@dataclass(frozen=True)
class PointSet:
    points: tuple[GaussianRational, ...]

    def __post_init__(self):
        if len(set(self.points)) != len(self.points):
            raise StructureError("points must be pairwise distinct")

    @classmethod
    def from_points(cls, pts) -> "PointSet":
        return cls(tuple(pts))

    @property
    def n(self) -> int:
        return len(self.points)

    def index(self) -> dict[GaussianRational, int]:
        return {p: i for i, p in enumerate(self.points)}


@dataclass(frozen=True)
class LabeledTriangle:
    """Ordered vertex roles (a, b, c) as indices into a point set."""

    a: int
    b: int
    c: int

    def ids(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def points(self, ps: PointSet):
        return (ps.points[self.a], ps.points[self.b], ps.points[self.c])


def find_similar_triangles(
    ps: PointSet, z: ShapeParameter, orientation: str = "both"
) -> list[LabeledTriangle]:
    """Every role assignment (a, b, c) of points with c the z-apex of (a, b).

    Direct copies use z, mirror copies the conjugate shape; 'both' returns
    direct copies first.  A real z would describe collinear triples, which are
    not triangles, so it is rejected.
    """
    if z.is_real():
        raise DegeneracyError("real shape parameter describes collinear triples")
    if orientation not in ("direct", "mirror", "both"):
        raise ValueError(f"unknown orientation {orientation!r}")
    index = ps.index()
    out: list[LabeledTriangle] = []
    shapes = []
    if orientation in ("direct", "both"):
        shapes.append(z)
    if orientation in ("mirror", "both"):
        shapes.append(z.conjugate())
    for shape in shapes:
        for ia, pa in enumerate(ps.points):
            for ib, pb in enumerate(ps.points):
                if ia == ib:
                    continue
                apex = apex_from_z(pa, pb, shape)
                ic = index.get(apex)
                if ic is not None and ic not in (ia, ib):
                    out.append(LabeledTriangle(ia, ib, ic))
    return out


def tripartition(ps: PointSet, seed: int) -> tuple[int, ...]:
    """Deterministic pseudo-random class label in {ROLE_A, ROLE_B, ROLE_C} per
    point, a pure function of (point order, seed)."""
    rng = SplitMix64(seed)
    return tuple(rng.below(3) for _ in range(ps.n))


@dataclass(frozen=True)
class SimilaritySystem:
    """A 3-partite similarity triple system plus the role bookkeeping."""

    point_set: PointSet
    z: ShapeParameter
    labels: tuple[int, ...]
    system: TripleSystem
    triangles: tuple[LabeledTriangle, ...]  # aligned with system.edges

    def triangle_for_edge(self, edge: tuple[int, int, int]) -> LabeledTriangle:
        return self.triangles[self.system.edges.index(edge)]


def similarity_system(ps: PointSet, z: ShapeParameter, labels) -> SimilaritySystem:
    """Vertices are the points; edges are the direct z-copies whose roles match
    the class labels (A-role point in class A, and so on).

    The result is always linear: classes pin each vertex's role, and two roles
    of a z-triangle determine the third point.
    """
    labels = tuple(labels)
    if len(labels) != ps.n or any(l not in (0, 1, 2) for l in labels):
        raise StructureError("labels must assign one of three classes per point")
    found = find_similar_triangles(ps, z, "direct")
    keep = [
        t
        for t in found
        if labels[t.a] == ROLE_A and labels[t.b] == ROLE_B and labels[t.c] == ROLE_C
    ]
    edge_map: dict[tuple[int, int, int], LabeledTriangle] = {}
    for t in keep:
        edge_map[tuple(sorted(t.ids()))] = t
    system = TripleSystem.from_edges(ps.n, list(edge_map.keys()))
    if not is_linear(system):
        raise InternalInvariantError("similarity system must be linear")
    triangles = tuple(edge_map[e] for e in system.edges)
    return SimilaritySystem(ps, z, labels, system, triangles)


# ---------------------------------------------------------------------------
# pentagon witnesses (Lemma 4.1 machinery)

# share-role pattern of a canonical pentagon, read around the cycle:
# (T1&T2, T2&T3, T3&T4, T4&T5, T5&T1) carry roles (B, A, C, B, A)
_CANONICAL_SHARES = (ROLE_B, ROLE_A, ROLE_C, ROLE_B, ROLE_A)


@dataclass(frozen=True)
class PentagonWitness:
    """Five labeled triangles in cyclic order with the vertex identifications
    a1=a5, b1=b2, a2=a3, c3=c4, b4=b5; the five apexes are fresh points."""

    point_set: PointSet
    t1: LabeledTriangle
    t2: LabeledTriangle
    t3: LabeledTriangle
    t4: LabeledTriangle
    t5: LabeledTriangle

    def __post_init__(self):
        t1, t2, t3, t4, t5 = self.t1, self.t2, self.t3, self.t4, self.t5
        idents = (
            (t1.a, t5.a),
            (t1.b, t2.b),
            (t2.a, t3.a),
            (t3.c, t4.c),
            (t4.b, t5.b),
        )
        if any(u != v for u, v in idents):
            raise StructureError("pentagon vertex identifications violated")
        cycle = {t1.a, t1.b, t2.a, t3.c, t4.b}
        apexes = {t1.c, t2.c, t3.b, t4.a, t5.c}
        if len(cycle) != 5 or len(apexes) != 5 or (cycle & apexes):
            raise StructureError("pentagon needs 10 distinct points")

    def triangles(self) -> tuple[LabeledTriangle, ...]:
        return (self.t1, self.t2, self.t3, self.t4, self.t5)


def pentagon_fifth_harmonic(P: PentagonWitness, z: ShapeParameter) -> GaussianRational:
    """Harmonic point of the fifth triangle computed from the four degree-one
    points of the other four triangles:

        (A4 + B3)/2 + (A4 - B3)/(2z) + (C1 - C2)/z

    which agrees exactly with harmonic_from_z(A5, B5, z).  The published
    display of this combination omits the 1/z on the C1 - C2 term; the form
    here is the one its own derivation proves (and the only one that is an
    identity).
    """
    pts = P.point_set.points
    a4 = pts[P.t4.a]
    b3 = pts[P.t3.b]
    c1 = pts[P.t1.c]
    c2 = pts[P.t2.c]
    return halve(a4 + b3) + halve((a4 - b3) / z.z) + (c1 - c2) / z.z


def _role_rotation_for_flavor(rare_role: int, z: ShapeParameter):
    """Map real roles to starred roles so the once-occurring cycle role becomes
    C*, returning (role permutation, starred shape).

    The permutation gives, for each starred slot (A*, B*, C*), the real role
    found there.
    """
    if rare_role == ROLE_C:
        return (ROLE_A, ROLE_B, ROLE_C), z
    if rare_role == ROLE_A:
        # (A*, B*, C*) = (B, C, A): starred shape is z with roles rotated once
        return (ROLE_B, ROLE_C, ROLE_A), z.rotate_roles()
    # (A*, B*, C*) = (C, A, B)
    return (ROLE_C, ROLE_A, ROLE_B), z.rotate_roles_twice()


def pentagon_witness_from_cycle(
    sim: SimilaritySystem, copy: LooseCycleCopy
) -> tuple[PentagonWitness, ShapeParameter]:
    """Convert a loose C5 of a similarity system into a canonical witness.

    The cycle's shared vertices carry class roles; exactly one class occurs
    once.  Roles are rotated so that class becomes the C-role (adjusting the
    shape parameter accordingly), then the triangle order is rotated/reflected
    to the canonical identification pattern.
    """
    if copy.k != 5:
        raise StructureError("pentagon witness needs a loose C5")
    edges = [sim.system.edges[i] for i in copy.edge_indices]
    tris = [sim.triangle_for_edge(e) for e in edges]
    share_roles = [sim.labels[v] for v in copy.cycle_vertices]
    # shared vertex between consecutive edges i, i+1 is cycle_vertices[i+1]
    counts = [share_roles.count(r) for r in (0, 1, 2)]
    if sorted(counts) != [1, 2, 2]:
        raise InternalInvariantError("pentagon share roles must split 1/2/2")
    rare = counts.index(1)
    perm, z_star = _role_rotation_for_flavor(rare, sim.z)

    def starred(t: LabeledTriangle) -> LabeledTriangle:
        ids = t.ids()
        return LabeledTriangle(ids[perm[0]], ids[perm[1]], ids[perm[2]])

    star_tris = [starred(t) for t in tris]
    star_share = [perm.index(r) for r in share_roles]
    # share between T_j = edges[j] and T_{j+1} = edges[j+1] is cycle_vertices[(j+1) % 5]
    word = [star_share[(j + 1) % 5] for j in range(5)]
    for direction in (1, -1):
        for rot in range(5):
            if direction == 1:
                ordering = [(rot + j) % 5 for j in range(5)]
                w = [word[(rot + j) % 5] for j in range(5)]
            else:
                ordering = [(rot - j) % 5 for j in range(5)]
                # share between new T_j and T_{j+1} under reversal
                w = [word[(rot - j - 1) % 5] for j in range(5)]
            if tuple(w) == _CANONICAL_SHARES:
                ts = [star_tris[i] for i in ordering]
                witness = PentagonWitness(sim.point_set, *ts)
                return witness, z_star
    raise InternalInvariantError("no dihedral placement matches the canonical pattern")


def find_pentagon_witnesses(
    sim: SimilaritySystem,
) -> list[tuple[PentagonWitness, ShapeParameter]]:
    from .cycles import enumerate_loose_cycles

    out = []
    for copy in enumerate_loose_cycles(sim.system, 5):
        out.append(pentagon_witness_from_cycle(sim, copy))
    return out


def synth_pentagon(
    cycle_points: tuple[GaussianRational, ...], z: ShapeParameter
) -> tuple[tuple[GaussianRational, ...], tuple[tuple[int, int, int], ...]]:
    """Build the ten points of a pentagon from five cycle points and a shape.

    Returns (points, role triples): points[0..4] are the cycle, points[5..9]
    the apexes C1, C2, B3, A4, C5; each role triple is (a-id, b-id, c-id).
    Raises DegeneracyError if the construction collapses two points.
    """
    if z.is_real():
        raise DegeneracyError("pentagon needs a non-real shape")
    x1, x2, x3, x4, x5 = cycle_points
    one, two = gr(1), gr(2)
    zz = z.z
    c1 = apex_from_z(x1, x2, z)
    c2 = apex_from_z(x3, x2, z)
    b3 = (two * x4 - x3 * (one + zz)) / (one - zz)
    a4 = (two * x4 - x5 * (one - zz)) / (one + zz)
    c5 = apex_from_z(x1, x5, z)
    pts = (x1, x2, x3, x4, x5, c1, c2, b3, a4, c5)
    if len(set(pts)) != 10:
        raise DegeneracyError("degenerate cycle points: coincident pentagon points")
    roles = (
        (0, 1, 5),  # T1 = (X1, X2, C1)
        (2, 1, 6),  # T2 = (X3, X2, C2)
        (2, 7, 3),  # T3 = (X3, B3, X4)
        (8, 4, 3),  # T4 = (A4, X5, X4)
        (0, 4, 9),  # T5 = (X1, X5, C5)
    )
    return pts, roles


def pentagon_labels(roles, n: int) -> tuple[int, ...]:
    """Class labels consistent with the role triples of synth_pentagon."""
    labels = [ROLE_A] * n
    for a, b, c in roles:
        labels[a] = ROLE_A
        labels[b] = ROLE_B
        labels[c] = ROLE_C
    return tuple(labels)


# ---------------------------------------------------------------------------
# shared harmonic points


@dataclass(frozen=True)
class SharedHarmonicHit:
    first: LabeledTriangle
    second: LabeledTriangle
    point: GaussianRational
    vertex_disjoint: bool


def shared_harmonic_search(
    ps: PointSet, z: ShapeParameter, orientation: str = "both"
) -> list[SharedHarmonicHit]:
    """Bucket every similar triangle by each of its three harmonic points and
    emit all pairs landing in a common bucket; vertex-disjoint pairs are
    flagged (the structurally interesting case)."""
    triangles = find_similar_triangles(ps, z, orientation)
    buckets: dict[GaussianRational, list[LabeledTriangle]] = {}
    for t in triangles:
        pa, pb, pc = t.points(ps)
        for point in three_harmonic_points(pa, pb, pc):
            buckets.setdefault(point, []).append(t)
    hits = []
    for point in sorted(buckets, key=lambda p: p.sort_key()):
        group = buckets[point]
        for i in range(len(group)):
            for j in range(i + 1, len(group)):
                t1, t2 = group[i], group[j]
                if set(t1.ids()) == set(t2.ids()):
                    continue  # same vertex set, roles permuted
                disjoint = not (set(t1.ids()) & set(t2.ids()))
                hits.append(SharedHarmonicHit(t1, t2, point, disjoint))
    return hits


# ---------------------------------------------------------------------------
# harmonic closure


@dataclass(frozen=True)
class ClosureStep:
    iteration: int
    point: GaussianRational
    incident_triangles: int


@dataclass(frozen=True)
class ClosureResult:
    closure: PointSet
    audit: tuple[ClosureStep, ...]
    delta: Fraction
    size_bound: Fraction
    within_bound: bool


def harmonic_closure(
    ps: PointSet, z: ShapeParameter, c: Fraction, eps: Fraction
) -> ClosureResult:
    """Grow U from S by repeatedly adding the lexicographically least point
    that is the selected harmonic point of at least eps^6 * n triangles.

    The selected harmonic point of a triangle (A, B, C) is the one opposite C.
    Incidence counts are taken over the fixed direct-triangle family of S, as
    in the counting argument the algorithm comes from; the audit trail records
    each addition with its incidence count.  |U| is reported against the
    (c/delta + 1) n cap.
    """
    if eps <= 0:
        raise ValueError("eps must be positive")
    delta = Fraction(eps) ** 6
    n = ps.n
    threshold = delta * n
    triangles = find_similar_triangles(ps, z, "direct")
    buckets: dict[GaussianRational, int] = {}
    for t in triangles:
        pa, pb, _pc = t.points(ps)
        h = harmonic_from_z(pa, pb, z)
        buckets[h] = buckets.get(h, 0) + 1
    in_u = set(ps.points)
    added: list[ClosureStep] = []
    iteration = 0
    while True:
        candidates = [
            p for p, cnt in buckets.items() if p not in in_u and cnt >= threshold
        ]
        if not candidates:
            break
        iteration += 1
        pick = min(candidates, key=lambda p: p.sort_key())
        in_u.add(pick)
        added.append(ClosureStep(iteration, pick, buckets[pick]))
    closure = PointSet.from_points(
        tuple(ps.points) + tuple(step.point for step in added)
    )
    size_bound = (Fraction(c) / delta + 1) * n
    return ClosureResult(
        closure, tuple(added), delta, size_bound, Fraction(closure.n) <= size_bound
    )
