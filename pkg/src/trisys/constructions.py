"""Generators for the explicit extremal constructions, with exact statistics."""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, getcontext
from fractions import Fraction
from itertools import combinations
from math import comb

from .errors import VerificationError
from .geometry import (
    GaussianRational,
    ShapeParameter,
    gr,
    halve,
    harmonic_point,
    reflect_across_line,
    shape_z,
)
from .hypergraph import TripleSystem, require_linear


def gen_t3(n: int) -> TripleSystem:
    """Complete-tripartite triple system: vertices are the pairs of a complete
    3-partite graph with parts of size n, edges are its n^3 triangles.

    3n^2 vertices, n^3 edges, linear, no loose C3 or C5.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    nn = n * n
    edges = []
    for x in range(n):
        for y in range(n):
            xy = x * n + y
            for z in range(n):
                yz = nn + y * n + z
                xz = 2 * nn + x * n + z
                edges.append((xy, yz, xz))
    return TripleSystem.from_edges(3 * nn, edges)


def gen_blowup(H: TripleSystem, t: int) -> TripleSystem:
    """Replace each vertex by t clones and each edge {x,y,z} by the t^2 triples
    {(x,a),(y,b),(z,c)} with a+b+c = 0 mod t (a cyclic Latin-square gadget).

    Preserves linearity: a clone pair determines the base pair, the base pair
    determines the base edge, and two gadget coordinates force the third.
    """
    if t < 1:
        raise ValueError("t must be >= 1")
    require_linear(H)
    edges = []
    for x, y, z in H.edges:
        for a in range(t):
            for b in range(t):
                c = (-a - b) % t
                edges.append((x * t + a, y * t + b, z * t + c))
    return TripleSystem.from_edges(H.n * t, edges)


# ---------------------------------------------------------------------------
# base-13 construction


@dataclass(frozen=True)
class RuzsaTriangle:
    """One triangle of the base-13 construction with its digit vectors."""

    a_digits: tuple[int, ...]  # entries in {1, s}
    b_digits: tuple[int, ...]  # imaginary coefficients, entries in {1, s}
    alpha: GaussianRational
    beta: GaussianRational
    gamma: GaussianRational
    delta_gamma: GaussianRational
    delta_beta: GaussianRational
    delta_alpha: GaussianRational


@dataclass(frozen=True)
class RuzsaInstance:
    m: int
    s: int
    a_points: tuple[GaussianRational, ...]
    b_points: tuple[GaussianRational, ...]
    triangles: tuple[RuzsaTriangle, ...]

    @property
    def point_count(self) -> int:
        """n = 3 * C(3m, m): the alpha, beta and gamma point families."""
        return 3 * comb(3 * self.m, self.m)

    @property
    def triangle_count(self) -> int:
        return len(self.triangles)


def _digit_sum(coeffs, base: int = 13) -> int:
    """sum coeffs[k] * base^(k+1) for k = 0..len-1 (paper indexes from 1)."""
    total = 0
    p = base
    for c in coeffs:
        total += c * p
        p *= base
    return total


def gen_ruzsa(m: int, s: int = 2) -> RuzsaInstance:
    """Base-13 family of right isosceles triangles whose harmonic points are
    pairwise distinct (for s = 2).

    alpha digits lie in {1, s} with exactly 2m ones; beta digits are i or i*s
    with exactly m plain i's; a pair forms a base iff no coordinate combines
    a_k = s with b_k = i.  The right-angle vertex gamma and the three harmonic
    points come from the closed forms
        gamma       = (a+b)/2 + i(b-a)/2
        delta_gamma = (a+b)/2 - i(b-a)/2
        delta_beta  = (4-2i)/5 a + (1+2i)/5 b
        delta_alpha = (1-2i)/5 a + (4+2i)/5 b
    """
    if m < 1:
        raise ValueError("m must be >= 1")
    if s == 1:
        raise ValueError("s = 1 collapses the digit alphabet")
    n3 = 3 * m
    half = Fraction(1, 2)
    c_db_a = gr(Fraction(4, 5), Fraction(-2, 5))
    c_db_b = gr(Fraction(1, 5), Fraction(2, 5))
    c_da_a = gr(Fraction(1, 5), Fraction(-2, 5))
    c_da_b = gr(Fraction(4, 5), Fraction(2, 5))

    a_vectors = []
    for s_positions in combinations(range(n3), m):
        digits = [1] * n3
        for k in s_positions:
            digits[k] = s
        a_vectors.append(tuple(digits))
    b_vectors = []
    for i_positions in combinations(range(n3), m):
        digits = [s] * n3
        for k in i_positions:
            digits[k] = 1
        b_vectors.append(tuple(digits))

    a_points = tuple(gr(_digit_sum(v)) for v in a_vectors)
    b_points = tuple(gr(0, _digit_sum(v)) for v in b_vectors)

    triangles = []
    for av, alpha in zip(a_vectors, a_points):
        for bv, beta in zip(b_vectors, b_points):
            if any(a == s and b == 1 for a, b in zip(av, bv)):
                continue  # base rule: (a_k, b_k) != (s, i)
            diff = beta - alpha
            rot = gr(-diff.im * half, diff.re * half)  # i*(beta-alpha)/2
            mid = halve(alpha + beta)
            gamma = mid + rot
            delta_gamma = mid - rot
            delta_beta = c_db_a * alpha + c_db_b * beta
            delta_alpha = c_da_a * alpha + c_da_b * beta
            triangles.append(
                RuzsaTriangle(av, bv, alpha, beta, gamma, delta_gamma, delta_beta, delta_alpha)
            )
    return RuzsaInstance(m, s, a_points, b_points, tuple(triangles))


def _digit_tableau(s: int) -> dict[str, dict[tuple[int, int], GaussianRational]]:
    """Expected per-coordinate contributions, keyed by (a_k, b_k) class where
    the class is written (1|s, 1|s) with the beta digit's i factored out."""
    half = Fraction(1, 2)
    return {
        "gamma": {
            (1, 1): gr(0),
            (1, s): gr(Fraction(1 - s, 2), Fraction(s - 1, 2)),
            (s, s): gr(0),
        },
        "delta_gamma": {
            (1, 1): gr(1, 1),
            (1, s): gr(Fraction(1 + s) * half, Fraction(1 + s) * half),
            (s, s): gr(s, s),
        },
        "delta_beta_x5": {
            (1, 1): gr(2, -1),
            (1, s): gr(2 * (2 - s), -(2 - s)),
            (s, s): gr(2 * s, -s),
        },
        "delta_alpha_x5": {
            (1, 1): gr(-1, 2),
            (1, s): gr(1 - 2 * s, -2 * (1 - 2 * s)),
            (s, s): gr(-s, 2 * s),
        },
    }


def _tableau_value(tri: RuzsaTriangle, table) -> GaussianRational:
    total = gr(0)
    p = 13
    for a, b in zip(tri.a_digits, tri.b_digits):
        d = table[(a, b)]
        total = total + gr(d.re * p, d.im * p)
        p *= 13
    return total


def ruzsa_verify(inst: RuzsaInstance) -> dict:
    """Check every finite claim about the instance; raises VerificationError
    naming the offending pair on failure.

    Verified: harmonic-point global distinctness (all 3T points), right angle
    at gamma with equal legs, constant shape parameter, digit tableaux for
    gamma / delta_gamma / 5*delta_beta / 5*delta_alpha, delta_gamma in the open
    positive quadrant, and the reflection derivation of delta_alpha.
    """
    expected_t = comb(3 * inst.m, inst.m) * comb(2 * inst.m, inst.m)
    if inst.triangle_count != expected_t:
        raise VerificationError(
            f"triangle count {inst.triangle_count} != C(3m,m)C(2m,m) = {expected_t}"
        )

    seen: dict[GaussianRational, tuple[int, str]] = {}
    five = gr(5)
    tableau = _digit_tableau(inst.s)
    minus_i = gr(0, -1)
    for idx, tri in enumerate(inst.triangles):
        for kind, point in (
            ("delta_gamma", tri.delta_gamma),
            ("delta_beta", tri.delta_beta),
            ("delta_alpha", tri.delta_alpha),
        ):
            if point in seen:
                other = seen[point]
                raise VerificationError(
                    f"harmonic point collision: triangle {idx} {kind} equals "
                    f"triangle {other[0]} {other[1]} at {point}"
                )
            seen[point] = (idx, kind)

        leg_a = tri.gamma - tri.alpha
        leg_b = tri.gamma - tri.beta
        if leg_a != minus_i * leg_b:
            raise VerificationError(f"triangle {idx}: no right isosceles angle at gamma")
        if shape_z(tri.alpha, tri.beta, tri.gamma).z != minus_i:
            raise VerificationError(f"triangle {idx}: shape parameter drifted")

        if _tableau_value(tri, tableau["gamma"]) != tri.gamma:
            raise VerificationError(f"triangle {idx}: gamma digit tableau mismatch")
        if _tableau_value(tri, tableau["delta_gamma"]) != tri.delta_gamma:
            raise VerificationError(f"triangle {idx}: delta_gamma digit tableau mismatch")
        if _tableau_value(tri, tableau["delta_beta_x5"]) != five * tri.delta_beta:
            raise VerificationError(f"triangle {idx}: 5*delta_beta digit tableau mismatch")
        if _tableau_value(tri, tableau["delta_alpha_x5"]) != five * tri.delta_alpha:
            raise VerificationError(f"triangle {idx}: 5*delta_alpha digit tableau mismatch")

        if not (tri.delta_gamma.re > 0 and tri.delta_gamma.im > 0):
            raise VerificationError(f"triangle {idx}: delta_gamma not in open positive quadrant")

        mid = halve(tri.alpha + tri.beta)
        if reflect_across_line(tri.delta_beta, mid, tri.gamma) != tri.delta_alpha:
            raise VerificationError(f"triangle {idx}: delta_alpha is not the reflection of delta_beta")

        if harmonic_point(tri.alpha, tri.beta, tri.gamma) != tri.delta_gamma:
            raise VerificationError(f"triangle {idx}: delta_gamma fails its cross-ratio condition")
        if harmonic_point(tri.gamma, tri.alpha, tri.beta) != tri.delta_beta:
            raise VerificationError(f"triangle {idx}: delta_beta fails its cross-ratio condition")
        if harmonic_point(tri.beta, tri.gamma, tri.alpha) != tri.delta_alpha:
            raise VerificationError(f"triangle {idx}: delta_alpha fails its cross-ratio condition")

    return {
        "m": inst.m,
        "s": inst.s,
        "triangles": inst.triangle_count,
        "distinct_harmonic_points": len(seen),
        "shape": "-i",
    }


def ruzsa_stats(m_values: list[int], digits: int = 30) -> list[dict]:
    """(m, n, triangle count, exponent ln T / ln n) rows; exponent computed with
    Decimal ln at the requested precision."""
    getcontext().prec = digits + 10
    rows = []
    for m in m_values:
        if m < 1:
            raise ValueError("m must be >= 1")
        n = 3 * comb(3 * m, m)
        t = comb(3 * m, m) * comb(2 * m, m)
        exponent = Decimal(t).ln() / Decimal(n).ln()
        rows.append(
            {
                "m": m,
                "n": n,
                "triangles": t,
                "exponent": +exponent,  # rounded to context precision
                "exponent_float": float(exponent),
            }
        )
    return rows
