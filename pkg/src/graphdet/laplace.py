"""Loop-resolving operators and the graph Laplace operator.

The position-p operator fixes any graph whose p-th edge is not a loop; a
loop at vertex a in position p is traded for minus the sum of the n-1 edges
(a,b), b != a, in the same position.  The Laplace operator composes these
over all positions.  Since the position operators are commuting idempotents,
composition order is irrelevant, and the whole operator can be applied in a
single pass: a graph with L loops expands into (n-1)^L terms with sign
(-1)^L, merged eagerly into the result.

The same definition works verbatim for undirected sums; replacement edges
are then stored canonically.
"""

from __future__ import annotations

import itertools
from typing import overload

from .graphs import DirectedGraph
from .algebra import FormalSum, GradedElement


def _replacements(kind, n: int, a: int):
    if kind is DirectedGraph:
        return [(a, b) for b in range(1, n + 1) if b != a]
    return [(min(a, b), max(a, b)) for b in range(1, n + 1) if b != a]


def b_op(p: int, s: FormalSum) -> FormalSum:
    """Resolve a loop in position p, linearly over the sum."""
    if not (1 <= p <= s.k):
        raise ValueError(f"edge position {p} out of range 1..{s.k}")
    terms: dict = {}
    for g, c in s._terms.items():
        a, b = g.edges[p - 1]
        if a != b:
            terms[g] = terms.get(g, 0) + c
            continue
        if s.n == 1:
            continue  # the operator vanishes on single-vertex loops
        for e in _replacements(type(g), s.n, a):
            h = type(g)(s.n, g.edges[: p - 1] + (e,) + g.edges[p:])
            terms[h] = terms.get(h, 0) - c
    return FormalSum(s.n, s.k, terms)


@overload
def laplace(s: FormalSum) -> FormalSum: ...
@overload
def laplace(s: GradedElement) -> GradedElement: ...


def laplace(s):
    """Apply every loop-resolving position operator at once.

    Identity in degree 0; zero on any term with a loop when n = 1.  The
    output is supported on loop-free graphs only.
    """
    if isinstance(s, GradedElement):
        return GradedElement(s.n, {k: laplace(part) for k, part in s.parts.items()})
    if not isinstance(s, FormalSum):
        raise TypeError("laplace expects a FormalSum or GradedElement")
    n = s.n
    terms: dict = {}
    for g, c in s._terms.items():
        loops = [p for p, (a, b) in enumerate(g.edges) if a == b]
        if not loops:
            terms[g] = terms.get(g, 0) + c
            continue
        if n == 1:
            continue
        sign = (-1) ** len(loops)
        options = [_replacements(type(g), n, g.edges[p][0]) for p in loops]
        base = list(g.edges)
        for combo in itertools.product(*options):
            for p, e in zip(loops, combo):
                base[p] = e
            h = type(g)(n, tuple(base))
            c2 = terms.get(h, 0) + sign * c
            if c2:
                terms[h] = c2
            else:
                terms.pop(h, None)
    return FormalSum(s.n, s.k, terms)
