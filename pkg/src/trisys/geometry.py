"""Exact complex-plane geometry over Gaussian rationals.

Points are complex numbers with Fraction real and imaginary parts, so every
predicate here (cross-ratio, harmonicity, concyclicity) is an exact equality,
never a tolerance test.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from .errors import DegeneracyError

RatLike = Union[int, str, Fraction]


@dataclass(frozen=True)
class GaussianRational:
    """Exact complex number re + im*i with rational components."""

    re: Fraction
    im: Fraction

    def __add__(self, o: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re + o.re, self.im + o.im)

    def __sub__(self, o: "GaussianRational") -> "GaussianRational":
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __neg__(self) -> "GaussianRational":
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, o: "GaussianRational") -> "GaussianRational":
        return GaussianRational(
            self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re
        )

    def __truediv__(self, o: "GaussianRational") -> "GaussianRational":
        d = o.re * o.re + o.im * o.im
        if d == 0:
            raise DegeneracyError("division by zero point")
        return GaussianRational(
            (self.re * o.re + self.im * o.im) / d,
            (self.im * o.re - self.re * o.im) / d,
        )

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def abs2(self) -> Fraction:
        """Squared modulus, an exact rational."""
        return self.re * self.re + self.im * self.im

    def is_zero(self) -> bool:
        return self.re == 0 and self.im == 0

    def is_real(self) -> bool:
        return self.im == 0

    def sort_key(self) -> tuple[Fraction, Fraction]:
        return (self.re, self.im)

    def __str__(self) -> str:
        return f"({self.re})+({self.im})i"


def gr(re: RatLike, im: RatLike = 0) -> GaussianRational:
    """Convenience constructor accepting ints, Fractions, or 'p/q' strings."""
    return GaussianRational(Fraction(re), Fraction(im))


ZERO = gr(0)
ONE = gr(1)
TWO = gr(2)
I = gr(0, 1)


def halve(p: GaussianRational) -> GaussianRational:
    return GaussianRational(p.re / 2, p.im / 2)


def cross_ratio(
    a: GaussianRational, b: GaussianRational, c: GaussianRational, d: GaussianRational
) -> GaussianRational:
    """((a-c)(b-d)) / ((a-d)(b-c)); requires a != d and b != c."""
    den = (a - d) * (b - c)
    if den.is_zero():
        raise DegeneracyError("cross-ratio denominator vanishes (a=d or b=c)")
    return ((a - c) * (b - d)) / den


def harmonic_point(
    a: GaussianRational, b: GaussianRational, c: GaussianRational
) -> GaussianRational:
    """The point d with (a, b; c, d) = -1, i.e. (2ab - ac - bc)/(a + b - 2c).

    Undefined when c is the midpoint of ab (d escapes to infinity).
    """
    den = a + b - (c + c)
    if den.is_zero():
        raise DegeneracyError("harmonic point at infinity: c is the midpoint of ab")
    num = (a * b + a * b) - a * c - b * c
    return num / den


def is_harmonic_quad(
    a: GaussianRational, b: GaussianRational, c: GaussianRational, d: GaussianRational
) -> bool:
    """True iff (a, b; c, d) = -1 exactly.

    For such quadruples the cyclic quadrilateral is (a, c, b, d) and the exact
    side-product identity |a-c|^2 |b-d|^2 = |b-c|^2 |a-d|^2 holds; see
    side_products.
    """
    pts = (a, b, c, d)
    for i in range(4):
        for j in range(i + 1, 4):
            if pts[i] == pts[j]:
                raise DegeneracyError("harmonic quadruple needs pairwise distinct points")
    return cross_ratio(a, b, c, d) == gr(-1)


def side_products(
    a: GaussianRational, b: GaussianRational, c: GaussianRational, d: GaussianRational
) -> tuple[Fraction, Fraction]:
    """Squared products of opposite sides of the cyclic quadrilateral (a,c,b,d)."""
    return (
        (a - c).abs2() * (b - d).abs2(),
        (b - c).abs2() * (a - d).abs2(),
    )


@dataclass(frozen=True)
class ShapeParameter:
    """Similarity-class invariant z = (2C - A - B)/(A - B) of an ordered triangle."""

    z: GaussianRational

    def __post_init__(self):
        if self.z.is_zero():
            raise DegeneracyError("shape parameter must be nonzero")

    def conjugate(self) -> "ShapeParameter":
        return ShapeParameter(self.z.conjugate())

    def is_real(self) -> bool:
        return self.z.is_real()

    def rotate_roles(self) -> "ShapeParameter":
        """Shape of the same triangle read with roles (A,B,C) -> (B,C,A)."""
        z = self.z
        return ShapeParameter((z - gr(3)) / (z + ONE))

    def rotate_roles_twice(self) -> "ShapeParameter":
        """Shape with roles (A,B,C) -> (C,A,B)."""
        z = self.z
        return ShapeParameter((gr(3) + z) / (ONE - z))


def shape_z(
    a: GaussianRational, b: GaussianRational, c: GaussianRational
) -> ShapeParameter:
    """Shape parameter of the ordered triangle (a, b, c); requires a != b."""
    if a == b:
        raise DegeneracyError("shape undefined for a == b")
    return ShapeParameter(((c + c) - (a + b)) / (a - b))


def apex_from_z(
    a: GaussianRational, b: GaussianRational, z: ShapeParameter
) -> GaussianRational:
    """Reconstruct c = (a+b)/2 + z(a-b)/2 from the base points and the shape."""
    return halve(a + b) + halve(z.z * (a - b))


def harmonic_from_z(
    a: GaussianRational, b: GaussianRational, z: ShapeParameter
) -> GaussianRational:
    """Harmonic point opposite side ab of the triangle with shape z:
    (a+b)/2 + (a-b)/(2z)."""
    return halve(a + b) + halve((a - b) / z.z)


def collinear(
    a: GaussianRational, b: GaussianRational, c: GaussianRational
) -> bool:
    u, v = b - a, c - a
    return u.re * v.im - u.im * v.re == 0


def three_harmonic_points(
    a: GaussianRational, b: GaussianRational, c: GaussianRational
) -> tuple[GaussianRational, GaussianRational, GaussianRational]:
    """The three harmonic points of triangle abc, as
    (opposite c, opposite b, opposite a).

    Each satisfies the corresponding cross-ratio condition
    (a,b;c,.) = (c,a;b,.) = (b,c;a,.) = -1 and lies on the circumcircle.
    """
    if collinear(a, b, c):
        raise DegeneracyError("harmonic points undefined for a collinear triple")
    return (
        harmonic_point(a, b, c),
        harmonic_point(c, a, b),
        harmonic_point(b, c, a),
    )


def concyclic(
    p1: GaussianRational,
    p2: GaussianRational,
    p3: GaussianRational,
    p4: GaussianRational,
) -> bool:
    """Exact 4x4 determinant test: vanishes iff the points are concyclic
    (or all collinear)."""
    rows = []
    for p in (p1, p2, p3, p4):
        rows.append([p.re, p.im, p.re * p.re + p.im * p.im, Fraction(1)])
    return _det4(rows) == 0


def _det3(m) -> Fraction:
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def _det4(m) -> Fraction:
    total = Fraction(0)
    sign = 1
    for col in range(4):
        minor = [[m[r][c] for c in range(4) if c != col] for r in range(1, 4)]
        total += sign * m[0][col] * _det3(minor)
        sign = -sign
    return total


def reflect_across_line(
    p: GaussianRational, q1: GaussianRational, q2: GaussianRational
) -> GaussianRational:
    """Reflect p across the line through q1 and q2 (exact)."""
    u = q2 - q1
    if u.is_zero():
        raise DegeneracyError("reflection axis needs two distinct points")
    return q1 + u * ((p - q1) / u).conjugate()


def parse_rational(text: str) -> Fraction:
    return Fraction(text.strip())


def parse_point(text: str) -> GaussianRational:
    """Parse 're,im' with each part a reduced rational or integer."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ValueError(f"expected 're,im', got {text!r}")
    return GaussianRational(Fraction(parts[0].strip()), Fraction(parts[1].strip()))


def format_rational(f: Fraction) -> str:
    return str(f.numerator) if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def format_point(p: GaussianRational) -> str:
    return f"{format_rational(p.re)},{format_rational(p.im)}"
