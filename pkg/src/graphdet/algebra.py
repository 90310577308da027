"""Formal rational linear combinations of edge-numbered graphs.

The algebra of graphs on a fixed vertex set is graded by edge count; a
FormalSum is one homogeneous component: a finite map from graphs to exact
rational coefficients.  The product concatenates edge sequences (renumbering
the right factor's edges after the left's) and is deliberately
non-commutative: the same edges with different numbers are different graphs.

On top of the vector-space plumbing this module builds the signed class sums
over strongly semiconnected graphs that behave like determinants and minors
of a generic matrix, and the mixed-degree element whose Laplace image counts
acyclic graphs.  All constructions here enumerate by edge *multiset* first
and then expand the distinct numberings, since membership in every class
used is numbering-invariant; this keeps the big desk-scale cases cheap.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterable, Iterator

from .graphs import (
    DirectedGraph,
    GraphFormatError,
    UndirectedGraph,
    _classify_key,
    beta0,
    check_cap,
    classify,
    directed_edge_types,
    forget,
)

Coefficient = Fraction


def _coeff(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    raise TypeError(f"coefficients must be exact rationals, got {type(value).__name__}")


class FormalSum:
    """Homogeneous formal sum: finite map graph -> nonzero rational coefficient.

    All keys must share the same vertex count n, degree k and graph kind
    (directed or undirected).  Instances are immutable by convention; all
    operations return new sums.
    """

    __slots__ = ("n", "k", "_terms")

    def __init__(self, n: int, k: int, terms=None):
        if n < 1 or k < 0:
            raise ValueError("need n >= 1 and k >= 0")
        self.n = n
        self.k = k
        clean: dict = {}
        kind = None
        for g, c in (terms or {}).items():
            c = _coeff(c)
            if c == 0:
                continue
            if kind is None:
                kind = type(g)
            elif type(g) is not kind:
                raise ValueError("cannot mix directed and undirected terms")
            if g.n != n or g.k != k:
                raise ValueError(
                    f"term {g} breaks homogeneity: expected n={n}, k={k}"
                )
            clean[g] = c
        self._terms = clean

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, n: int, k: int) -> "FormalSum":
        return cls(n, k, {})

    @classmethod
    def single(cls, g, c=1) -> "FormalSum":
        return cls(g.n, g.k, {g: _coeff(c)})

    # -- basic queries -----------------------------------------------------

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def coeff(self, g) -> Fraction:
        return self._terms.get(g, Fraction(0))

    def terms(self) -> list[tuple]:
        """(graph, coefficient) pairs sorted lexicographically by edge sequence."""
        return sorted(self._terms.items(), key=lambda gc: gc[0].edges)

    def support(self) -> list:
        return [g for g, _ in self.terms()]

    def __eq__(self, other):
        if not isinstance(other, FormalSum):
            return NotImplemented
        return (self.n, self.k) == (other.n, other.k) and self._terms == other._terms

    def __hash__(self):
        return hash((self.n, self.k, frozenset(self._terms.items())))

    # -- linear structure ----------------------------------------------------

    def __add__(self, other: "FormalSum") -> "FormalSum":
        if not isinstance(other, FormalSum):
            return NotImplemented
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError(
                f"degree mismatch: ({self.n},{self.k}) vs ({other.n},{other.k})"
            )
        terms = dict(self._terms)
        for g, c in other._terms.items():
            c2 = terms.get(g, 0) + c
            if c2:
                terms[g] = c2
            else:
                terms.pop(g, None)
        return FormalSum(self.n, self.k, terms)

    def __sub__(self, other: "FormalSum") -> "FormalSum":
        return self + (-1) * other

    def __neg__(self):
        return (-1) * self

    def scale(self, c) -> "FormalSum":
        c = _coeff(c)
        if c == 0:
            return FormalSum.zero(self.n, self.k)
        return FormalSum(self.n, self.k, {g: c * x for g, x in self._terms.items()})

    def __rmul__(self, c):
        if isinstance(c, (int, Fraction)):
            return self.scale(c)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        if isinstance(other, FormalSum):
            return concat_product(self, other)
        return NotImplemented

    def map_graphs(self, fn: Callable) -> "FormalSum":
        """Linear extension of a degree-preserving map on basis graphs;
        coefficients of colliding images merge."""
        terms: dict = {}
        n = k = None
        for g, c in self._terms.items():
            h = fn(g)
            n, k = h.n, h.k
            terms[h] = terms.get(h, 0) + c
        if n is None:
            return FormalSum.zero(self.n, self.k)
        return FormalSum(n, k, terms)

    def __str__(self):
        if self.is_zero:
            return f"0 (n={self.n}, k={self.k})"
        return " + ".join(f"({c})*{g}" for g, c in self.terms())


def concat_product(s1: FormalSum, s2: FormalSum) -> FormalSum:
    """Bilinear edge-sequence concatenation; degree adds, order matters."""
    if s1.n != s2.n:
        raise ValueError(f"vertex-count mismatch: {s1.n} vs {s2.n}")
    terms: dict = {}
    for g1, c1 in s1._terms.items():
        for g2, c2 in s2._terms.items():
            if type(g1) is not type(g2):
                raise ValueError("cannot multiply directed by undirected sums")
            g = type(g1)(s1.n, g1.edges + g2.edges)
            c = terms.get(g, 0) + c1 * c2
            if c:
                terms[g] = c
            else:
                terms.pop(g, None)
    return FormalSum(s1.n, s1.k + s2.k, terms)


class GradedElement:
    """A finite sum of homogeneous components of different degrees."""

    __slots__ = ("n", "parts")

    def __init__(self, n: int, parts: dict[int, FormalSum] | None = None):
        self.n = n
        self.parts: dict[int, FormalSum] = {}
        for k, s in (parts or {}).items():
            if s.n != n or s.k != k:
                raise ValueError("component degree disagrees with its key")
            if not s.is_zero:
                self.parts[k] = s

    def part(self, k: int) -> FormalSum:
        return self.parts.get(k, FormalSum.zero(self.n, k))

    def degrees(self) -> list[int]:
        return sorted(self.parts)

    def __eq__(self, other):
        if not isinstance(other, GradedElement):
            return NotImplemented
        return self.n == other.n and self.parts == other.parts

    def __add__(self, other: "GradedElement") -> "GradedElement":
        if self.n != other.n:
            raise ValueError("vertex-count mismatch")
        parts = dict(self.parts)
        for k, s in other.parts.items():
            parts[k] = parts[k] + s if k in parts else s
        return GradedElement(self.n, parts)

    def __rmul__(self, c):
        return GradedElement(self.n, {k: c * s for k, s in self.parts.items()})

    def __str__(self):
        if not self.parts:
            return f"0 (n={self.n})"
        return "\n".join(f"degree {k}: {s}" for k, s in sorted(self.parts.items()))


# ---------------------------------------------------------------------------
# Sums over graph streams and subgraphs


def u_sum(graphs: Iterable, n: int | None = None, k: int | None = None) -> FormalSum:
    """Plain sum of a homogeneous stream of graphs, coefficient +1 each.

    n and k are only needed when the stream may be empty.
    """
    return _stream_sum(graphs, n, k, signed=False)


def x_sum(graphs: Iterable, n: int | None = None, k: int | None = None) -> FormalSum:
    """Sum of a stream with each graph weighted by (-1)^beta0."""
    return _stream_sum(graphs, n, k, signed=True)


def _stream_sum(graphs, n, k, signed: bool) -> FormalSum:
    terms: dict = {}
    for g in graphs:
        if n is None:
            n, k = g.n, g.k
        c = (-1) ** beta0(g) if signed else 1
        terms[g] = terms.get(g, 0) + c
    if n is None:
        raise ValueError("empty stream: pass n and k explicitly")
    return FormalSum(n, k, terms)


def alpha(g: DirectedGraph) -> int:
    """(-1)^k on acyclic graphs, 0 otherwise."""
    return (-1) ** g.k if classify(g).acyclic else 0


def sigma(g: DirectedGraph) -> int:
    """(-1)^beta1 on strongly semiconnected graphs, 0 otherwise."""
    c = classify(g)
    return (-1) ** c.beta1 if c.strongly_semiconnected else 0


def sum_over_subgraphs(f: Callable, g: DirectedGraph, cap: int | None = None):
    """Sum of f over all 2^k subgraphs of g (edge subsets, vertices kept)."""
    k = g.k
    check_cap(2 ** k, cap)
    total = 0
    for mask in range(2 ** k):
        edges = tuple(g.edges[p] for p in range(k) if mask >> p & 1)
        total = total + f(type(g)(g.n, edges))
    return total


# ---------------------------------------------------------------------------
# Class sums via edge multisets.
#
# Whether a graph is strongly semiconnected / acyclic, and its isolated or
# sink set, depend only on the multiset of its edges.  So instead of walking
# all n^(2k) sequences we walk the C(n^2+k-1, k) multisets, classify each
# once, and expand the qualifying ones into their distinct orderings.


def distinct_permutations(items: tuple) -> Iterator[tuple]:
    """All distinct orderings of a multiset, in lexicographic order."""
    pool = sorted(items)
    k = len(pool)
    if k == 0:
        yield ()
        return
    counts: dict = {}
    for it in pool:
        counts[it] = counts.get(it, 0) + 1
    keys = sorted(counts)
    current: list = []

    def rec():
        if len(current) == k:
            yield tuple(current)
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                current.append(key)
                yield from rec()
                current.pop()
                counts[key] += 1

    yield from rec()


@lru_cache(maxsize=None)
def _class_sum_cached(
    n: int, k: int, cls: str, iso: frozenset | None, signed: bool
) -> FormalSum:
    terms: dict = {}
    for multiset in itertools.combinations_with_replacement(directed_edge_types(n), k):
        c = _classify_key(n, multiset)
        if cls == "SSC":
            ok = c.strongly_semiconnected and (iso is None or c.isolated == iso)
        else:
            ok = c.acyclic and (iso is None or c.sinks == iso)
        if not ok:
            continue
        coeff = Fraction((-1) ** c.beta0 if signed else 1)
        for seq in distinct_permutations(multiset):
            terms[DirectedGraph(n, seq)] = coeff
    return FormalSum(n, k, terms)


def class_sum(
    n: int,
    k: int,
    cls: str,
    I: Iterable[int] | None = None,
    signed: bool = False,
    cap: int | None = None,
) -> FormalSum:
    """U- or X-style sum over a semiconnectivity/acyclicity class."""
    cls = cls.upper()
    if cls not in ("SSC", "AC"):
        raise ValueError(f"unknown graph class {cls!r}")
    check_cap((n * n) ** k, cap)
    iso = None if I is None else frozenset(I)
    return _class_sum_cached(n, k, cls, iso, signed)


@lru_cache(maxsize=None)
def _codim1_cached(n: int, k: int, i: int, j: int) -> FormalSum:
    pre = Fraction((-1) ** k, factorial(k))
    terms: dict = {}
    for multiset in itertools.combinations_with_replacement(directed_edge_types(n), k):
        cand = _classify_key(n, tuple(sorted(((i, j),) + multiset)))
        if not (cand.strongly_semiconnected and not cand.isolated):
            continue
        # Sign taken from the graph itself, not the augmented one; the two
        # beta0 values agree on every admissible graph anyway.
        coeff = pre * (-1) ** _classify_key(n, multiset).beta0
        for seq in distinct_permutations(multiset):
            terms[DirectedGraph(n, seq)] = coeff
    return FormalSum(n, k, terms)


def universal_det(
    n: int, k: int, I: Iterable[int] = (), cap: int | None = None
) -> FormalSum:
    """The degree-k diagonal minor element for the vertex set I.

    ((-1)^k / k!) times the beta0-signed sum of all strongly semiconnected
    graphs whose isolated vertices are exactly I.  Zero whenever k < n - |I|.
    """
    iso = frozenset(I)
    if not iso <= set(range(1, n + 1)):
        raise ValueError("vertex set out of range")
    if k < 0:
        raise ValueError("need k >= 0")
    if k < n - len(iso):
        return FormalSum.zero(n, k)
    check_cap((n * n) ** k, cap)
    return Fraction((-1) ** k, factorial(k)) * _class_sum_cached(n, k, "SSC", iso, True)


def universal_codim1(
    n: int, k: int, i: int, j: int, cap: int | None = None
) -> FormalSum:
    """The degree-k (i,j)-minor element: signed sum over graphs G such that
    prepending the edge (i,j) makes G strongly semiconnected with no
    isolated vertex."""
    if not (1 <= i <= n and 1 <= j <= n):
        raise ValueError("vertex out of range")
    if k < 0:
        raise ValueError("need k >= 0")
    check_cap((n * n) ** k, cap)
    return _codim1_cached(n, k, i, j)


def theta(n: int, cap: int | None = None) -> GradedElement:
    """The mixed-degree element in degrees n+1 and n-1 built from the
    degree-(n+1) determinant, edge-augmented two-vertex minors, and
    single-vertex minors."""
    if n < 2:
        raise ValueError("need n >= 2")
    high = universal_det(n, n + 1, (), cap=cap)
    low = FormalSum.zero(n, n - 1)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            edge = FormalSum.single(DirectedGraph(n, ((i, j),)))
            low = low - concat_product(edge, universal_det(n, n - 2, (i, j), cap=cap))
    for i in range(1, n + 1):
        low = low - universal_det(n, n - 1, (i,), cap=cap)
    return GradedElement(n, {n + 1: high, n - 1: low})


def forget_sum(s: FormalSum) -> FormalSum:
    """Linear extension of orientation-forgetting; distinct directed graphs
    may merge onto one undirected graph."""
    return s.map_graphs(forget)


# ---------------------------------------------------------------------------
# Text format: header "FS n k" (directed) or "FSU n k" (undirected), then one
# term per line as "p/q | a1 b1 ; a2 b2 ; ... ; ak bk", sorted by edge
# sequence.  A zero sum is just the header.


def format_formal_sum(s: FormalSum) -> str:
    kind = "FS"
    for g in s._terms:
        if isinstance(g, UndirectedGraph):
            kind = "FSU"
        break
    lines = [f"{kind} {s.n} {s.k}"]
    for g, c in s.terms():
        edges = " ; ".join(f"{a} {b}" for a, b in g.edges)
        line = f"{c.numerator}/{c.denominator} |"
        lines.append(f"{line} {edges}" if edges else line)
    return "\n".join(lines) + "\n"


def parse_formal_sum(text: str) -> FormalSum:
    lines = [
        (no, raw.strip())
        for no, raw in enumerate(text.split("\n"), start=1)
        if raw.strip()
    ]
    if not lines:
        raise GraphFormatError("empty formal-sum file")
    head_no, head = lines[0]
    parts = head.split()
    if len(parts) != 3 or parts[0] not in ("FS", "FSU"):
        raise GraphFormatError(f"expected header 'FS n k', got {head!r}", head_no)
    try:
        n, k = int(parts[1]), int(parts[2])
    except ValueError:
        raise GraphFormatError(f"non-integer header fields in {head!r}", head_no)
    cls = DirectedGraph if parts[0] == "FS" else UndirectedGraph
    terms: dict = {}
    for no, line in lines[1:]:
        if "|" not in line:
            raise GraphFormatError(f"expected 'p/q | edges', got {line!r}", no)
        coeff_part, _, edges_part = line.partition("|")
        try:
            c = Fraction(coeff_part.strip())
        except (ValueError, ZeroDivisionError):
            raise GraphFormatError(f"bad coefficient {coeff_part.strip()!r}", no)
        edges = []
        chunk_src = edges_part.strip()
        chunks = [c2.strip() for c2 in chunk_src.split(";")] if chunk_src else []
        for chunk in chunks:
            toks = chunk.split()
            if len(toks) != 2:
                raise GraphFormatError(f"expected 'a b' in term, got {chunk!r}", no)
            try:
                edges.append((int(toks[0]), int(toks[1])))
            except ValueError:
                raise GraphFormatError(f"non-integer endpoint in {chunk!r}", no)
        if len(edges) != k:
            raise GraphFormatError(f"term has {len(edges)} edges, expected {k}", no)
        try:
            g = cls(n, tuple(edges))
        except ValueError as exc:
            raise GraphFormatError(str(exc), no)
        terms[g] = terms.get(g, 0) + c
    return FormalSum(n, k, terms)
