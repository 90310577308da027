"""Potts partition function, Tutte polynomial, and orientation counts.

The partition function of an undirected graph is the subgraph expansion
sum of q^(components) * v^(edges) over all edge subsets, with all vertices
retained.  Specializing (q,v) at (-1,1) and (-1,-1) counts strongly
semiconnected and acyclic orientations respectively, which is what ties
these polynomials to the directed graph algebra.

The Tutte polynomial is computed by the usual deletion-contraction
recursion, memoized on the canonical edge multiset: it does not depend on
the edge numbering.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import FormalSum
from .graphs import (
    UndirectedGraph,
    _beta0,
    check_cap,
    classify,
    enumerate_undirected,
    orientations,
)
from .poly import MultiPoly, Q, V, X, Y


def potts(u: UndirectedGraph, cap: int | None = None) -> MultiPoly:
    """Subgraph-expansion polynomial in q and v."""
    k = u.k
    check_cap(2 ** k, cap)
    counts: dict = {}
    for mask in range(2 ** k):
        sub = tuple(u.edges[p] for p in range(k) if mask >> p & 1)
        b0 = _beta0(u.n, sub)
        size = len(sub)
        mono = ((Q, b0),) if size == 0 else ((Q, b0), (V, size))
        counts[mono] = counts.get(mono, 0) + 1
    return MultiPoly(counts)


def potts_value(u: UndirectedGraph, q0, v0, cap: int | None = None) -> Fraction:
    """The partition function evaluated at exact rationals, without building
    the polynomial."""
    q0, v0 = Fraction(q0), Fraction(v0)
    k = u.k
    check_cap(2 ** k, cap)
    total = Fraction(0)
    for mask in range(2 ** k):
        sub = tuple(u.edges[p] for p in range(k) if mask >> p & 1)
        total += q0 ** _beta0(u.n, sub) * v0 ** len(sub)
    return total


def shave(u: UndirectedGraph) -> UndirectedGraph:
    """Delete all loops (with the usual renumbering of later edges)."""
    return UndirectedGraph(u.n, tuple(e for e in u.edges if e[0] != e[1]))


_TUTTE_MEMO: dict[tuple[int, tuple], MultiPoly] = {}


def tutte(u: UndirectedGraph, cap: int | None = None) -> MultiPoly:
    """Tutte polynomial in x and y by deletion-contraction.

    Loops contribute a factor y, bridges a factor x; an ordinary edge splits
    into deletion plus contraction; the edgeless graph gives 1.
    """
    check_cap(2 ** u.k, cap)
    return _tutte(u.n, tuple(sorted(u.edges)))


def _tutte(n: int, edges: tuple) -> MultiPoly:
    if not edges:
        return MultiPoly.const(1)
    key = (n, edges)
    hit = _TUTTE_MEMO.get(key)
    if hit is not None:
        return hit
    a, b = edges[-1]
    rest = edges[:-1]
    if a == b:
        result = MultiPoly.variable(Y) * _tutte(n, rest)
    else:
        contracted = _contract(n, rest, a, b)
        if _beta0(n, rest) > _beta0(n, edges):  # removing it disconnects: bridge
            result = MultiPoly.variable(X) * _tutte(*contracted)
        else:
            result = _tutte(n, rest) + _tutte(*contracted)
    _TUTTE_MEMO[key] = result
    return result


def _contract(n: int, edges: tuple, a: int, b: int) -> tuple[int, tuple]:
    """Merge b into a (a < b), shifting higher vertex indices down."""
    def remap(v: int) -> int:
        if v == b:
            return a
        return v - 1 if v > b else v

    out = []
    for x, y in edges:
        x2, y2 = remap(x), remap(y)
        out.append((min(x2, y2), max(x2, y2)))
    return n - 1, tuple(sorted(out))


def count_orientations(u: UndirectedGraph, cls: str, cap: int | None = None) -> int:
    """Number of orientations of u that are strongly semiconnected ("SSC")
    or acyclic ("AC"), by brute enumeration."""
    cls = cls.upper()
    if cls not in ("SSC", "AC"):
        raise ValueError(f"unknown graph class {cls!r}")
    count = 0
    for g in orientations(u, cap=cap):
        c = classify(g)
        if (cls == "SSC" and c.strongly_semiconnected) or (cls == "AC" and c.acyclic):
            count += 1
    return count


def universal_potts(
    n: int,
    k: int,
    q0,
    v0,
    shaved: bool = False,
    cap: int | None = None,
) -> FormalSum:
    """Sum of every undirected (n,k) graph weighted by its partition-function
    value at (q0, v0); with shaved=True the weight is taken after deleting
    the graph's loops."""
    q0, v0 = Fraction(q0), Fraction(v0)
    check_cap((n * (n + 1) // 2) ** k, cap)
    value_cache: dict[tuple, Fraction] = {}
    terms: dict = {}
    for u in enumerate_undirected(n, k, cap=cap):
        src = shave(u) if shaved else u
        key = tuple(sorted(src.edges))
        val = value_cache.get(key)
        if val is None:
            val = potts_value(src, q0, v0, cap=cap)
            value_cache[key] = val
        if val:
            terms[u] = val
    return FormalSum(n, k, terms)
