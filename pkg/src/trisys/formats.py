"""Text formats: .l3g triple systems, .g1 graphs, .pts rational point sets.

Emission is canonical and bit-exact (sorted edges, reduced fractions); parsing
accepts '#' comment lines anywhere after the header.
"""

from __future__ import annotations

from fractions import Fraction

from .errors import StructureError
from .geometry import GaussianRational, format_rational
from .hypergraph import SimpleGraph, TripleSystem
from .similarity import PointSet


def _data_lines(text: str) -> list[str]:
    out = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line)
    return out


def emit_l3g(H: TripleSystem) -> str:
    lines = ["l3g 1", f"{H.n} {H.m}"]
    lines.extend(f"{a} {b} {c}" for a, b, c in H.edges)
    return "\n".join(lines) + "\n"


def parse_l3g(text: str) -> TripleSystem:
    lines = _data_lines(text)
    if not lines or lines[0] != "l3g 1":
        raise StructureError("missing 'l3g 1' header")
    try:
        n, m = map(int, lines[1].split())
    except (IndexError, ValueError) as exc:
        raise StructureError("bad n m line") from exc
    body = lines[2:]
    if len(body) != m:
        raise StructureError(f"expected {m} edges, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 3:
            raise StructureError(f"bad edge line {line!r}")
        edges.append(tuple(int(p) for p in parts))
    return TripleSystem.from_edges(n, edges)


def emit_g1(G: SimpleGraph) -> str:
    lines = ["g1 1", f"{G.n} {G.m}"]
    lines.extend(f"{u} {v}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def parse_g1(text: str) -> SimpleGraph:
    lines = _data_lines(text)
    if not lines or lines[0] != "g1 1":
        raise StructureError("missing 'g1 1' header")
    try:
        n, m = map(int, lines[1].split())
    except (IndexError, ValueError) as exc:
        raise StructureError("bad n m line") from exc
    body = lines[2:]
    if len(body) != m:
        raise StructureError(f"expected {m} edges, found {len(body)}")
    edges = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise StructureError(f"bad edge line {line!r}")
        edges.append((int(parts[0]), int(parts[1])))
    return SimpleGraph.from_edges(n, edges)


def emit_pts(ps: PointSet) -> str:
    lines = ["pts 1", str(ps.n)]
    for p in ps.points:
        lines.append(f"{format_rational(p.re)} {format_rational(p.im)}")
    return "\n".join(lines) + "\n"


def parse_pts(text: str) -> PointSet:
    lines = _data_lines(text)
    if not lines or lines[0] != "pts 1":
        raise StructureError("missing 'pts 1' header")
    try:
        n = int(lines[1])
    except (IndexError, ValueError) as exc:
        raise StructureError("bad point count line") from exc
    body = lines[2:]
    if len(body) != n:
        raise StructureError(f"expected {n} points, found {len(body)}")
    pts = []
    for line in body:
        parts = line.split()
        if len(parts) != 2:
            raise StructureError(f"bad point line {line!r}")
        try:
            pts.append(GaussianRational(Fraction(parts[0]), Fraction(parts[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise StructureError(f"bad rational in {line!r}") from exc
    return PointSet.from_points(pts)
