"""Edge-numbered directed and undirected multigraphs.

A graph on vertices 1..n with k edges is the ordered sequence of its edges;
the position of an edge in the sequence (1-based) is its number.  Two graphs
are equal only if vertex count and the exact edge sequences coincide, so the
same multigraph with two different edge numberings gives two different
objects.  Loops and repeated edges are allowed everywhere.

Vertex counts stay tiny (desk scale), which the classification code exploits
by keeping reachability as per-vertex bit masks and caching results per
sorted edge multiset: every structural predicate computed here is invariant
under renumbering of the edges.
"""

from __future__ import annotations

import itertools
import os
from dataclasses import dataclass
from typing import Iterable, Iterator

DEFAULT_CAP = 10_000_000
CAP_ENV_VAR = "GRAPHDET_CAP"

Edge = tuple[int, int]


class CapExceeded(Exception):
    """An enumeration would exceed the configured case cap."""

    def __init__(self, size: int, cap: int):
        super().__init__(f"enumeration of {size} cases exceeds the cap of {cap}")
        self.size = size
        self.cap = cap


class GraphFormatError(ValueError):
    """Malformed graph or formal-sum text; carries a 1-based line number."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


def effective_cap(cap: int | None = None) -> int:
    """The enumeration cap: explicit argument, else $GRAPHDET_CAP, else default."""
    if cap is not None:
        return cap
    env = os.environ.get(CAP_ENV_VAR)
    if env:
        return int(env)
    return DEFAULT_CAP


def check_cap(size: int, cap: int | None = None) -> None:
    limit = effective_cap(cap)
    if size > limit:
        raise CapExceeded(size, limit)


@dataclass(frozen=True)
class DirectedGraph:
    """A directed multigraph given as an ordered sequence of (tail, head) edges."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        if not isinstance(self.edges, tuple):
            object.__setattr__(self, "edges", tuple(tuple(e) for e in self.edges))
        for a, b in self.edges:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge ({a},{b}) out of range for n={self.n}")

    @property
    def k(self) -> int:
        return len(self.edges)

    def delete_edge(self, p: int) -> "DirectedGraph":
        """Remove the edge numbered p; later edges slide down by one."""
        self._check_pos(p)
        return DirectedGraph(self.n, self.edges[: p - 1] + self.edges[p:])

    def contract_edge(self, p: int) -> "DirectedGraph":
        """Contract the (non-loop) edge numbered p.

        The endpoints merge into the smaller of the two indices; vertices above
        the larger index shift down by one, and remaining edges keep their
        relative numbering.  Contraction may create loops.
        """
        self._check_pos(p)
        a, b = self.edges[p - 1]
        if a == b:
            raise ValueError("cannot contract a loop edge")
        lo, hi = min(a, b), max(a, b)

        def remap(v: int) -> int:
            if v == hi:
                return lo
            return v - 1 if v > hi else v

        rest = self.edges[: p - 1] + self.edges[p:]
        return DirectedGraph(self.n - 1, tuple((remap(x), remap(y)) for x, y in rest))

    def reverse_edge(self, p: int) -> "DirectedGraph":
        self._check_pos(p)
        a, b = self.edges[p - 1]
        return self.replace_edge(p, b, a)

    def replace_edge(self, p: int, a: int, b: int) -> "DirectedGraph":
        """Substitute edge (a,b) at position p, keeping the numbering."""
        self._check_pos(p)
        if not (1 <= a <= self.n and 1 <= b <= self.n):
            raise ValueError(f"edge ({a},{b}) out of range for n={self.n}")
        return DirectedGraph(
            self.n, self.edges[: p - 1] + ((a, b),) + self.edges[p:]
        )

    def _check_pos(self, p: int) -> None:
        if not (1 <= p <= len(self.edges)):
            raise ValueError(f"edge position {p} out of range 1..{len(self.edges)}")

    def __str__(self):
        inner = ",".join(f"[{a}{b}]" if self.n < 10 else f"[{a},{b}]" for a, b in self.edges)
        return f"D(n={self.n}; {inner})"


@dataclass(frozen=True)
class UndirectedGraph:
    """An undirected multigraph; each edge is stored canonically as (min, max)."""

    n: int
    edges: tuple[Edge, ...]

    def __post_init__(self):
        if self.n < 1:
            raise ValueError("vertex count must be at least 1")
        object.__setattr__(
            self, "edges", tuple((min(a, b), max(a, b)) for a, b in self.edges)
        )
        for a, b in self.edges:
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge ({a},{b}) out of range for n={self.n}")

    @property
    def k(self) -> int:
        return len(self.edges)

    def delete_edge(self, p: int) -> "UndirectedGraph":
        if not (1 <= p <= len(self.edges)):
            raise ValueError(f"edge position {p} out of range 1..{len(self.edges)}")
        return UndirectedGraph(self.n, self.edges[: p - 1] + self.edges[p:])

    def __str__(self):
        inner = ",".join(f"{{{a},{b}}}" for a, b in self.edges)
        return f"U(n={self.n}; {inner})"


Graph = DirectedGraph | UndirectedGraph


@dataclass(frozen=True)
class GraphClassification:
    """Structural facts about a directed graph, all numbering-invariant."""

    beta0: int
    beta1: int
    strongly_connected: bool
    strongly_semiconnected: bool
    acyclic: bool
    sinks: frozenset[int]
    isolated: frozenset[int]
    loop_count: int


# Classification caches, keyed by (n, sorted edge tuple).  Predicates are
# invariant under edge renumbering, so sorting the sequence loses nothing.
_DIR_CACHE: dict[tuple[int, tuple[Edge, ...]], GraphClassification] = {}
_B0_CACHE: dict[tuple[int, tuple[Edge, ...]], int] = {}


def _components(n: int, edges: Iterable[Edge]) -> list[int]:
    """Vertex bit masks of the connected components of the underlying graph."""
    und = [0] * (n + 1)
    for a, b in edges:
        und[a] |= 1 << b
        und[b] |= 1 << a
    comps = []
    seen = 0
    for v in range(1, n + 1):
        if seen >> v & 1:
            continue
        mask = 0
        stack = [v]
        while stack:
            u = stack.pop()
            if mask >> u & 1:
                continue
            mask |= 1 << u
            m = und[u] & ~mask
            while m:
                w = (m & -m).bit_length() - 1
                stack.append(w)
                m &= m - 1
        seen |= mask
        comps.append(mask)
    return comps


def _beta0(n: int, edges: tuple[Edge, ...]) -> int:
    key = (n, tuple(sorted(edges)))
    hit = _B0_CACHE.get(key)
    if hit is None:
        hit = len(_components(n, key[1]))
        _B0_CACHE[key] = hit
    return hit


def beta0(g: Graph) -> int:
    """Number of connected components of the underlying graph (isolated
    vertices count as components)."""
    return _beta0(g.n, g.edges)


def beta1(g: Graph) -> int:
    """First Betti number of the graph as a 1-complex: k - n + beta0."""
    return g.k - g.n + beta0(g)


def _classify_key(n: int, sorted_edges: tuple[Edge, ...]) -> GraphClassification:
    hit = _DIR_CACHE.get((n, sorted_edges))
    if hit is not None:
        return hit

    k = len(sorted_edges)
    adj = [0] * (n + 1)
    outdeg = [0] * (n + 1)
    incident = [False] * (n + 1)
    loop_count = 0
    for a, b in sorted_edges:
        adj[a] |= 1 << b
        outdeg[a] += 1
        incident[a] = incident[b] = True
        if a == b:
            loop_count += 1

    # Reflexive-transitive closure as bit masks.
    reach = [0] * (n + 1)
    for v in range(1, n + 1):
        mask = 1 << v
        stack = [v]
        while stack:
            u = stack.pop()
            new = adj[u] & ~mask
            mask |= new
            while new:
                w = (new & -new).bit_length() - 1
                stack.append(w)
                new &= new - 1
        reach[v] = mask

    comps = _components(n, sorted_edges)
    b0 = len(comps)
    full = ((1 << (n + 1)) - 2)  # bits 1..n
    strongly_connected = all(reach[v] == full for v in range(1, n + 1))
    strongly_semiconnected = all(
        reach[v] == comp
        for comp in comps
        for v in range(1, n + 1)
        if comp >> v & 1
    )
    acyclic = all(not (reach[b] >> a & 1) for a, b in sorted_edges)
    sinks = frozenset(v for v in range(1, n + 1) if outdeg[v] == 0)
    isolated = frozenset(v for v in range(1, n + 1) if not incident[v])

    result = GraphClassification(
        beta0=b0,
        beta1=k - n + b0,
        strongly_connected=strongly_connected,
        strongly_semiconnected=strongly_semiconnected,
        acyclic=acyclic,
        sinks=sinks,
        isolated=isolated,
        loop_count=loop_count,
    )
    _DIR_CACHE[(n, sorted_edges)] = result
    _B0_CACHE[(n, sorted_edges)] = b0
    return result


def classify(g: DirectedGraph) -> GraphClassification:
    if not isinstance(g, DirectedGraph):
        raise TypeError("classification is defined for directed graphs")
    return _classify_key(g.n, tuple(sorted(g.edges)))


def reachable(g: DirectedGraph, a: int, b: int) -> bool:
    """Directed reachability a -> b; reflexively true for a == b."""
    if not (1 <= a <= g.n and 1 <= b <= g.n):
        raise ValueError("vertex out of range")
    if a == b:
        return True
    seen = 1 << a
    stack = [a]
    adj = [0] * (g.n + 1)
    for x, y in g.edges:
        adj[x] |= 1 << y
    while stack:
        u = stack.pop()
        if adj[u] >> b & 1:
            return True
        new = adj[u] & ~seen
        seen |= new
        while new:
            w = (new & -new).bit_length() - 1
            stack.append(w)
            new &= new - 1
    return False


def edge_on_directed_cycle(g: DirectedGraph, p: int) -> bool:
    """Whether edge number p lies on a directed cycle (a loop always does).

    Runs a fresh search from the head back to the tail; deliberately does not
    share code with classify() so the two can cross-check each other.
    """
    a, b = g.edges[p - 1]
    if a == b:
        return True
    frontier = {b}
    seen = {b}
    heads: dict[int, set[int]] = {}
    for x, y in g.edges:
        heads.setdefault(x, set()).add(y)
    while frontier:
        nxt = set()
        for u in frontier:
            for w in heads.get(u, ()):
                if w == a:
                    return True
                if w not in seen:
                    seen.add(w)
                    nxt.add(w)
        frontier = nxt
    return False


def is_ssc_by_edges(g: DirectedGraph) -> bool:
    """Independent semiconnectivity test: every edge on a directed cycle."""
    return all(edge_on_directed_cycle(g, p) for p in range(1, g.k + 1))


# ---------------------------------------------------------------------------
# Enumeration


def directed_edge_types(n: int) -> list[Edge]:
    """All n^2 possible directed edges in lexicographic order."""
    return [(a, b) for a in range(1, n + 1) for b in range(1, n + 1)]


def undirected_edge_types(n: int) -> list[Edge]:
    """All n(n+1)/2 canonical undirected edges in lexicographic order."""
    return [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


def enumerate_graphs(n: int, k: int, cap: int | None = None) -> Iterator[DirectedGraph]:
    """All directed graphs with n vertices and k numbered edges, in
    lexicographic order of the edge sequence; n^(2k) of them."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    check_cap((n * n) ** k, cap)
    for edges in itertools.product(directed_edge_types(n), repeat=k):
        yield DirectedGraph(n, edges)


def enumerate_undirected(n: int, k: int, cap: int | None = None) -> Iterator[UndirectedGraph]:
    """All undirected graphs with n vertices and k numbered edges."""
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    check_cap((n * (n + 1) // 2) ** k, cap)
    for edges in itertools.product(undirected_edge_types(n), repeat=k):
        yield UndirectedGraph(n, edges)


def enumerate_class(
    n: int,
    k: int,
    cls: str,
    I: Iterable[int] | None = None,
    cap: int | None = None,
) -> Iterator[DirectedGraph]:
    """Filtered enumeration of the strongly-semiconnected or acyclic graphs.

    For cls="SSC", I is the exact isolated-vertex set; for cls="AC" the exact
    sink set.  I=None takes the union over all vertex sets.
    """
    cls = cls.upper()
    if cls not in ("SSC", "AC"):
        raise ValueError(f"unknown graph class {cls!r}")
    target = None if I is None else frozenset(I)
    if target is not None and not target <= set(range(1, n + 1)):
        raise ValueError("class vertex set out of range")
    for g in enumerate_graphs(n, k, cap=cap):
        c = classify(g)
        if cls == "SSC":
            if c.strongly_semiconnected and (target is None or c.isolated == target):
                yield g
        else:
            if c.acyclic and (target is None or c.sinks == target):
                yield g


def subgraphs(
    g: DirectedGraph, cap: int | None = None
) -> Iterator[tuple[DirectedGraph, tuple[int, ...]]]:
    """All 2^k subgraphs obtained by deleting edge subsets, with renumbering.

    Yields (subgraph, kept positions); all n vertices are retained.
    """
    k = g.k
    check_cap(2 ** k, cap)
    for mask in range(2 ** k):
        kept = tuple(p for p in range(1, k + 1) if mask >> (p - 1) & 1)
        edges = tuple(g.edges[p - 1] for p in kept)
        yield type(g)(g.n, edges), kept


def forget(g: DirectedGraph) -> UndirectedGraph:
    """Erase edge orientations, keeping the numbering."""
    return UndirectedGraph(g.n, g.edges)


def orientations(u: UndirectedGraph, cap: int | None = None) -> Iterator[DirectedGraph]:
    """All directed graphs whose unoriented image is u.

    There are 2^(non-loop edge count): a loop has a single orientation.
    """
    choices: list[tuple[Edge, ...]] = []
    size = 1
    for a, b in u.edges:
        choices.append(((a, a),) if a == b else ((a, b), (b, a)))
        if a != b:
            size *= 2
    check_cap(size, cap)
    for edges in itertools.product(*choices):
        yield DirectedGraph(u.n, edges)


# ---------------------------------------------------------------------------
# Text format: header "D n k" or "U n k", then one "a b" line per edge,
# in numbering order.  ASCII, LF endings.


def format_graph(g: Graph) -> str:
    tag = "D" if isinstance(g, DirectedGraph) else "U"
    lines = [f"{tag} {g.n} {g.k}"]
    lines.extend(f"{a} {b}" for a, b in g.edges)
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> Graph:
    lines = text.split("\n")
    header_no = None
    header = None
    body: list[tuple[int, str]] = []
    for no, raw in enumerate(lines, start=1):
        stripped = raw.strip()
        if not stripped:
            continue
        if header is None:
            header, header_no = stripped, no
        else:
            body.append((no, stripped))
    if header is None:
        raise GraphFormatError("empty graph file")
    parts = header.split()
    if len(parts) != 3 or parts[0] not in ("D", "U"):
        raise GraphFormatError(
            f"expected header 'D n k' or 'U n k', got {header!r}", header_no
        )
    try:
        n, k = int(parts[1]), int(parts[2])
    except ValueError:
        raise GraphFormatError(f"non-integer header fields in {header!r}", header_no)
    if len(body) != k:
        raise GraphFormatError(
            f"header announces {k} edges but file has {len(body)}", header_no
        )
    edges = []
    for no, line in body:
        toks = line.split()
        if len(toks) != 2:
            raise GraphFormatError(f"expected 'a b', got {line!r}", no)
        try:
            a, b = int(toks[0]), int(toks[1])
        except ValueError:
            raise GraphFormatError(f"non-integer endpoint in {line!r}", no)
        if not (1 <= a <= n and 1 <= b <= n):
            raise GraphFormatError(f"endpoint out of range 1..{n} in {line!r}", no)
        edges.append((a, b))
    cls = DirectedGraph if parts[0] == "D" else UndirectedGraph
    try:
        return cls(n, tuple(edges))
    except ValueError as exc:
        raise GraphFormatError(str(exc), header_no)
