"""Brute-force enumeration of dissections and the central-component census.

These generators are the ground-truth oracle: they build every dissection
explicitly by recursive cell choice on a base edge and never consult the
closed-form counts they are used to check.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator

from .model import DIAMETER, Dissection, central_component, contains_vertex


def _regions(vs: list, k: int, n: int) -> Iterator:
    """Yield diagonal tuples for every k-angulation of the sub-polygon ``vs``.

    ``vs`` is an ascending list of vertex labels whose first/last pair is the
    region's base edge; a 2-element region is an edge and dissects trivially.
    """
    if len(vs) == 2:
        yield ()
        return
    if (len(vs) - 2) % (k - 2):
        return
    last = len(vs) - 1
    for mids in combinations(range(1, last), k - 2):
        idxs = (0, *mids, last)
        segs = [vs[idxs[i]: idxs[i + 1] + 1] for i in range(k - 1)]
        if any((len(s) - 2) % (k - 2) for s in segs):
            continue
        cell_diags = []
        for i in range(k - 1):
            a, b = vs[idxs[i]], vs[idxs[i + 1]]
            if b - a > 1 and not (a == 0 and b == n - 1):
                cell_diags.append((a, b))
        cell_diags = tuple(cell_diags)
        sub = [list(_regions(s, k, n)) for s in segs]
        for parts in product(*sub):
            diags = cell_diags
            for p in parts:
                diags += p
            yield diags


def enumerate_kangulations(n: int, k: int = 3) -> Iterator[Dissection]:
    """Every dissection of the n-gon into k-gons, exactly once.

    Empty stream when n fails the parity constraint n = 2 (mod k-2).
    """
    if k < 3:
        raise ValueError("k must be >= 3")
    if n < k:
        raise ValueError(f"need n >= k, got n={n}, k={k}")
    if (n - 2) % (k - 2):
        return
    for diags in _regions(list(range(n)), k, n):
        yield Dissection(n, diags, k)


def enumerate_triangulations(n: int) -> Iterator[Dissection]:
    """Every triangulation of the n-gon, exactly once (apex recursion on edge 0-(n-1))."""
    return enumerate_kangulations(n, 3)


@dataclass(frozen=True)
class CensusEntry:
    """One central-component shape with its number of dissections."""

    key: "str | tuple[int, ...]"
    count: int


def _key_order(key):
    return (0, ()) if key == DIAMETER else (1, key)


def central_census(n: int, k: int = 3) -> list:
    """Tally all dissections of the n-gon by central-component shape key.

    Keys are DIAMETER or the sorted cyclic side lengths of the central cell;
    entries come out DIAMETER first, then lexicographic.
    """
    tally: dict = {}
    for d in enumerate_kangulations(n, k):
        key = central_component(d).shape_key()
        tally[key] = tally.get(key, 0) + 1
    return [CensusEntry(key, tally[key]) for key in sorted(tally, key=_key_order)]


def census_to_json(n: int, k: int, entries) -> dict:
    """JSON-ready census: counts as decimal strings, shapes as lists or "diameter"."""
    return {
        "n": n,
        "k": k,
        "entries": [
            {
                "shape": DIAMETER if e.key == DIAMETER else list(e.key),
                "count": str(e.count),
            }
            for e in entries
        ],
    }


def count_vertex0_outside(n: int) -> int:
    """Exhaustive count of triangulations whose central component avoids vertex 0."""
    if n < 3:
        raise ValueError("n must be >= 3")
    total = 0
    for d in enumerate_triangulations(n):
        if not contains_vertex(central_component(d), 0):
            total += 1
    return total
