"""Labeled convex-polygon dissections and their central components.

Vertices of an n-gon are labeled 0..n-1 counterclockwise on the circle.
Everything here is purely combinatorial: crossing tests, face extraction,
and the central-component classification all work on vertex labels, never
on coordinates.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import factorial

#: Shape key of a central component that is a diameter edge.
DIAMETER = "diameter"


def cyclic_length(x: int, y: int, n: int) -> int:
    """Shorter arc distance min(y-x, n+x-y) between vertices x < y of an n-gon."""
    if not 0 <= x < y < n:
        raise ValueError(f"need 0 <= x < y < n, got x={x}, y={y}, n={n}")
    return min(y - x, n + x - y)


def diagonals_cross(d1: tuple[int, int], d2: tuple[int, int]) -> bool:
    """True when the two (sorted) diagonals cross strictly inside the polygon."""
    a, b = d1
    c, d = d2
    return a < c < b < d or c < a < d < b


@dataclass(frozen=True)
class Dissection:
    """A convex n-gon with a set of pairwise non-crossing diagonals.

    ``k`` is the intended uniform cell size (3 for triangulations); face
    sizes are enforced by :func:`faces`, not at construction.
    """

    n: int
    diagonals: frozenset
    k: int = 3

    def __init__(self, n: int, diagonals, k: int = 3):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "k", k)
        norm = frozenset((min(x, y), max(x, y)) for x, y in diagonals)
        object.__setattr__(self, "diagonals", norm)
        if n < 3:
            raise ValueError("polygon needs n >= 3")
        if k < 3:
            raise ValueError("cells need k >= 3")
        for x, y in norm:
            if not 0 <= x < y < n:
                raise ValueError(f"diagonal ({x},{y}) out of range for n={n}")
            if y - x == 1 or (x == 0 and y == n - 1):
                raise ValueError(f"({x},{y}) is a polygon side, not a diagonal")

    def sorted_diagonals(self) -> list:
        return sorted(self.diagonals)


def faces(d: Dissection) -> list:
    """All interior cells of the dissection, each a sorted vertex tuple.

    Rejects crossing diagonal sets and dissections whose cells are not all
    k-gons.  The sorted vertex order of a cell is its cyclic order rotated
    to the minimum label.
    """
    diags = d.sorted_diagonals()
    for i in range(len(diags)):
        for j in range(i + 1, len(diags)):
            if diagonals_cross(diags[i], diags[j]):
                raise ValueError(f"diagonals {diags[i]} and {diags[j]} cross")

    out: list = []

    def split(vertices: list, pending: list) -> None:
        if not pending:
            out.append(tuple(vertices))
            return
        x, y = pending[0]
        inner = [v for v in vertices if x <= v <= y]
        outer = [v for v in vertices if v <= x or v >= y]
        inner_p: list = []
        outer_p: list = []
        for e in pending[1:]:
            (inner_p if x <= e[0] and e[1] <= y else outer_p).append(e)
        split(inner, inner_p)
        split(outer, outer_p)

    split(list(range(d.n)), diags)
    out.sort()
    for f in out:
        if len(f) != d.k:
            raise ValueError(
                f"cell {f} has {len(f)} vertices; not a dissection into {d.k}-gons"
            )
    return out


def face_arcs(face, n: int):
    """Arc gaps between consecutive face vertices, last one wrapping around."""
    return tuple(face[i + 1] - face[i] for i in range(len(face) - 1)) + (
        n + face[0] - face[-1],
    )


@dataclass(frozen=True)
class CentralComponent:
    """The diameter edge or cell of a dissection that contains the center."""

    n: int
    diameter: "tuple[int, int] | None" = None
    cell: "tuple[int, ...] | None" = None

    def __post_init__(self):
        if (self.diameter is None) == (self.cell is None):
            raise ValueError("exactly one of diameter/cell must be set")

    @property
    def is_diameter(self) -> bool:
        return self.diameter is not None

    def vertices(self):
        return self.diameter if self.diameter is not None else self.cell

    def shape_key(self):
        """DIAMETER, or the sorted multiset of the cell's cyclic side lengths."""
        if self.diameter is not None:
            return DIAMETER
        return tuple(sorted(face_arcs(self.cell, self.n)))


def central_component(d: Dissection) -> CentralComponent:
    """Classify the dissection by the component containing the polygon center.

    An edge of cyclic length exactly n/2 (even n only) is the unique diameter
    through the center; otherwise exactly one cell has all arcs < n/2 and
    that cell contains the center.
    """
    fs = faces(d)
    if d.n % 2 == 0:
        half = d.n // 2
        diams = [e for e in d.sorted_diagonals() if e[1] - e[0] == half]
        if diams:
            if len(diams) != 1:
                raise AssertionError(f"multiple diameters {diams} in one dissection")
            return CentralComponent(d.n, diameter=diams[0])
    central = [f for f in fs if all(2 * a < d.n for a in face_arcs(f, d.n))]
    if len(central) != 1:
        raise AssertionError(f"expected one central cell, found {central}")
    return CentralComponent(d.n, cell=central[0])


def contains_vertex(c: CentralComponent, v: int) -> bool:
    """True iff v is an endpoint of the diameter or a vertex of the central cell."""
    if not 0 <= v < c.n:
        raise ValueError(f"vertex {v} out of range for n={c.n}")
    return v in c.vertices()


def placement_count(lengths, n: int) -> int:
    """Number of vertex subsets of an n-gon whose cyclic gap multiset is ``lengths``.

    Equals n * P / k where P is the number of distinct linear arrangements of
    the multiset; the division is always exact (each subset is counted once
    per choice of starting vertex).
    """
    lengths = tuple(lengths)
    k = len(lengths)
    if k < 3:
        raise ValueError("need at least 3 lengths")
    if sum(lengths) != n:
        raise ValueError(f"lengths {lengths} must sum to n={n}")
    for length in lengths:
        if length < 1 or 2 * length >= n:
            raise ValueError(f"length {length} not in [1, n/2) for n={n}")
    arrangements = factorial(k)
    for mult in Counter(lengths).values():
        arrangements //= factorial(mult)
    count, r = divmod(n * arrangements, k)
    if r:
        raise AssertionError("placement count must be integral")
    return count


def parse_diagonals(text: str) -> frozenset:
    """Parse the "x-y,x-y,..." diagonal notation; empty string means no diagonals."""
    text = text.strip()
    if not text:
        return frozenset()
    diags = set()
    for item in text.split(","):
        parts = item.strip().split("-")
        if len(parts) != 2:
            raise ValueError(f"malformed diagonal {item!r}; expected 'x-y'")
        try:
            x, y = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"malformed diagonal {item!r}; expected 'x-y'") from None
        diags.add((min(x, y), max(x, y)))
    return frozenset(diags)


def format_diagonals(diagonals) -> str:
    """Inverse of :func:`parse_diagonals`, lexicographically ordered."""
    return ",".join(f"{x}-{y}" for x, y in sorted(diagonals))
