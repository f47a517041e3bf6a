"""Core signed graph data model.

A signed graph is a finite simple graph together with a sign in {+1, -1}
on every edge.  Vertices are the integers 1..p.  Edges are stored in a
single canonical form: each edge is a triple (u, v, s) with u < v, and the
edge tuple is sorted lexicographically.  Two signed graphs are equal
exactly when their canonical forms are equal, which keeps every
construction in the toolkit reproducible down to the byte.

Switching negates all edges across a vertex cut and is the basic
equivalence of signed graph theory: it preserves the sign of every cycle.

The module also carries the plain-text interchange format used by the
command line tools.  Line one holds "p q", the next q lines hold
"u v s" with s written as +1 or -1, and lines starting with '#' are
comments.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateEdgeError,
    EdgeListFormatError,
    InvalidParamsError,
    LengthMismatchError,
    LoopEdgeError,
    VertexOutOfRangeError,
)

Edge = tuple[int, int, int]

# A switching function is a plain tuple of p signs, entry i-1 for vertex i.
SwitchingFunction = tuple[int, ...]


@dataclass(frozen=True)
class SignedGraph:
    """Immutable signed graph in canonical edge form."""

    p: int
    edges: tuple[Edge, ...]

    @property
    def q(self) -> int:
        return len(self.edges)

    @property
    def positive_count(self) -> int:
        return sum(1 for _, _, s in self.edges if s == 1)

    @property
    def negative_count(self) -> int:
        return sum(1 for _, _, s in self.edges if s == -1)

    def sign(self, u: int, v: int) -> int:
        """Sign of edge uv, or 0 when uv is not an edge."""
        a, b = (u, v) if u < v else (v, u)
        for x, y, s in self.edges:
            if x == a and y == b:
                return s
        return 0

    def has_edge(self, u: int, v: int) -> bool:
        return self.sign(u, v) != 0


def canonicalize(p: int, edges: Iterable[Sequence[int]]) -> SignedGraph:
    """Build a SignedGraph from raw (u, v, s) triples.

    Endpoints may come in either order.  Loops, duplicate pairs, endpoints
    outside 1..p, and signs outside {+1, -1} are rejected.
    """
    if p < 0:
        raise InvalidParamsError(f"vertex count must be nonnegative, got {p}")
    seen: set[tuple[int, int]] = set()
    out: list[Edge] = []
    for e in edges:
        u, v, s = e
        if u == v:
            raise LoopEdgeError(f"loop at vertex {u}")
        if not (1 <= u <= p) or not (1 <= v <= p):
            raise VertexOutOfRangeError(f"edge ({u},{v}) outside 1..{p}")
        if s not in (1, -1):
            raise InvalidParamsError(f"edge ({u},{v}) has sign {s}, expected +1 or -1")
        if u > v:
            u, v = v, u
        if (u, v) in seen:
            raise DuplicateEdgeError(f"edge ({u},{v}) given twice")
        seen.add((u, v))
        out.append((u, v, s))
    out.sort()
    return SignedGraph(p, tuple(out))


def incident_edges(g: SignedGraph) -> dict[int, list[tuple[int, int]]]:
    """Map each vertex to its (neighbor, sign) list in canonical edge order.

    The per-vertex order is the order the edges appear in g.edges, which is
    what makes traversals over the graph deterministic.
    """
    inc: dict[int, list[tuple[int, int]]] = {v: [] for v in range(1, g.p + 1)}
    for u, v, s in g.edges:
        inc[u].append((v, s))
        inc[v].append((u, s))
    return inc


def validate_switching(g: SignedGraph, zeta: Sequence[int]) -> SwitchingFunction:
    if len(zeta) != g.p:
        raise LengthMismatchError(f"switching has length {len(zeta)}, graph has {g.p} vertices")
    for i, z in enumerate(zeta):
        if z not in (1, -1):
            raise InvalidParamsError(f"switching entry for vertex {i + 1} is {z}, expected +1 or -1")
    return tuple(zeta)


def switch(g: SignedGraph, zeta: Sequence[int]) -> SignedGraph:
    """Apply a switching function: edge uv gets sign zeta(u) * s * zeta(v).

    Switching is an involution and preserves the sign of every cycle.
    """
    z = validate_switching(g, zeta)
    return SignedGraph(g.p, tuple((u, v, z[u - 1] * s * z[v - 1]) for u, v, s in g.edges))


def is_all_positive(g: SignedGraph) -> bool:
    return all(s == 1 for _, _, s in g.edges)


def is_all_negative(g: SignedGraph) -> bool:
    return all(s == -1 for _, _, s in g.edges)


@dataclass(frozen=True)
class DegreeReport:
    """Per-vertex degree tallies, index i-1 for vertex i.

    degree ignores signs, positive/negative count signed edges at the
    vertex, and net_degree is their difference.
    """

    degree: tuple[int, ...]
    positive: tuple[int, ...]
    negative: tuple[int, ...]
    net_degree: tuple[int, ...]

    def row(self, v: int) -> tuple[int, int, int, int]:
        i = v - 1
        return (self.degree[i], self.positive[i], self.negative[i], self.net_degree[i])


def degrees(g: SignedGraph) -> DegreeReport:
    """Degree, positive degree, negative degree and net degree of every vertex."""
    d = [0] * g.p
    dp = [0] * g.p
    dn = [0] * g.p
    for u, v, s in g.edges:
        for x in (u, v):
            d[x - 1] += 1
            if s == 1:
                dp[x - 1] += 1
            else:
                dn[x - 1] += 1
    net = [a - b for a, b in zip(dp, dn)]
    return DegreeReport(tuple(d), tuple(dp), tuple(dn), tuple(net))


def is_connected(g: SignedGraph) -> bool:
    """Connectivity of the underlying graph.  The empty graph counts as connected."""
    if g.p <= 1:
        return True
    inc = incident_edges(g)
    seen = {1}
    stack = [1]
    while stack:
        u = stack.pop()
        for v, _ in inc[u]:
            if v not in seen:
                seen.add(v)
                stack.append(v)
    return len(seen) == g.p


def is_triangle_free(g: SignedGraph) -> bool:
    adj: dict[int, set[int]] = {v: set() for v in range(1, g.p + 1)}
    for u, v, _ in g.edges:
        adj[u].add(v)
        adj[v].add(u)
    for u, v, _ in g.edges:
        if adj[u] & adj[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# generators


def _pattern_signs(pattern: str, count: int, what: str) -> list[int]:
    if len(pattern) != count:
        raise InvalidParamsError(f"{what} needs {count} pattern signs, got {len(pattern)}")
    signs = []
    for ch in pattern:
        if ch == "+":
            signs.append(1)
        elif ch == "-":
            signs.append(-1)
        else:
            raise InvalidParamsError(f"pattern character {ch!r}, expected '+' or '-'")
    return signs


def generate(kind: str, params: Mapping[str, object] | None = None, seed: int | None = None) -> SignedGraph:
    """Deterministic signed graph factory.

    Kinds:
      path      length p >= 1, optional pattern of p-1 signs along 1-2-..-p
      cycle     length p >= 3, optional pattern of p signs along 1-2-..-p-1
      complete  order n >= 1, every edge negative
      random    order p, edge_prob, neg_prob; connected by rejection sampling

    The same kind, params and seed always return the same graph.
    """
    params = dict(params or {})

    def take(name, default=None):
        return params.pop(name, default)

    if kind == "path":
        p = int(take("length", 0))
        if p < 1:
            raise InvalidParamsError("path length must be >= 1")
        pattern = take("pattern")
        signs = _pattern_signs(str(pattern), p - 1, "path") if pattern is not None else [1] * (p - 1)
        edges = [(i, i + 1, signs[i - 1]) for i in range(1, p)]
    elif kind == "cycle":
        p = int(take("length", 0))
        if p < 3:
            raise InvalidParamsError("cycle length must be >= 3")
        pattern = take("pattern")
        signs = _pattern_signs(str(pattern), p, "cycle") if pattern is not None else [1] * p
        edges = [(i, i + 1, signs[i - 1]) for i in range(1, p)]
        edges.append((p, 1, signs[p - 1]))
    elif kind == "complete":
        n = int(take("order", 0))
        if n < 1:
            raise InvalidParamsError("complete order must be >= 1")
        edges = [(i, j, -1) for i in range(1, n + 1) for j in range(i + 1, n + 1)]
        p = n
    elif kind == "random":
        p = int(take("order", 0))
        if p < 1:
            raise InvalidParamsError("random order must be >= 1")
        edge_prob = float(take("edge_prob", 0.5))
        neg_prob = float(take("neg_prob", 0.5))
        if not (0.0 <= edge_prob <= 1.0 and 0.0 <= neg_prob <= 1.0):
            raise InvalidParamsError("probabilities must lie in [0, 1]")
        if params:
            raise InvalidParamsError(f"unknown parameters {sorted(params)}")
        return _random_connected(p, edge_prob, neg_prob, seed)
    else:
        raise InvalidParamsError(f"unknown generator kind {kind!r}")
    if params:
        raise InvalidParamsError(f"unknown parameters {sorted(params)}")
    return canonicalize(p, edges)


def _random_connected(p: int, edge_prob: float, neg_prob: float, seed: int | None) -> SignedGraph:
    rng = random.Random(0 if seed is None else seed)
    pairs = [(i, j) for i in range(1, p + 1) for j in range(i + 1, p + 1)]
    for _ in range(100000):
        chosen = [pair for pair in pairs if rng.random() < edge_prob]
        signs = [-1 if rng.random() < neg_prob else 1 for _ in chosen]
        g = canonicalize(p, [(u, v, s) for (u, v), s in zip(chosen, signs)])
        if is_connected(g):
            return g
    raise InvalidParamsError(
        f"could not draw a connected graph on {p} vertices with edge_prob={edge_prob}"
    )


# ---------------------------------------------------------------------------
# text interchange format


def dumps(g: SignedGraph) -> str:
    """Serialize to the text edge-list format.  Output is canonical."""
    lines = [f"{g.p} {g.q}"]
    for u, v, s in g.edges:
        lines.append(f"{u} {v} {'+1' if s == 1 else '-1'}")
    return "\n".join(lines) + "\n"


def loads(text: str) -> SignedGraph:
    """Parse the text edge-list format.  Comments and blank lines are skipped."""
    rows = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        rows.append((lineno, line))
    if not rows:
        raise EdgeListFormatError("empty edge list input")
    lineno, header = rows[0]
    parts = header.split()
    if len(parts) != 2:
        raise EdgeListFormatError(f"line {lineno}: header must be 'p q'")
    try:
        p, q = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListFormatError(f"line {lineno}: header must hold two integers") from None
    body = rows[1:]
    if len(body) != q:
        raise EdgeListFormatError(f"header promises {q} edges, found {len(body)}")
    triples = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != 3:
            raise EdgeListFormatError(f"line {lineno}: edge lines must be 'u v s'")
        try:
            u, v = int(parts[0]), int(parts[1])
            s = int(parts[2])
        except ValueError:
            raise EdgeListFormatError(f"line {lineno}: edge lines must hold integers") from None
        if s not in (1, -1):
            raise EdgeListFormatError(f"line {lineno}: sign must be +1 or -1, got {parts[2]}")
        triples.append((u, v, s))
    return canonicalize(p, triples)


def load(path: str) -> SignedGraph:
    with open(path, "r", encoding="utf-8") as fh:
        return loads(fh.read())


def dump(g: SignedGraph, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps(g))
