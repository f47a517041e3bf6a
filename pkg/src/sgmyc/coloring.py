"""Signed chromatic numbers over symmetric color sets.

Colors come from the symmetric sets M_n: for n = 2k the nonzero values
{-k..-1, 1..k}, for n = 2k+1 the same plus 0.  A coloring is proper when
c(u) differs from s * c(v) on every edge (u, v, s); on positive edges
that is the usual constraint, on negative edges the two endpoints must
not carry opposite values.  The signed chromatic number is the least n
admitting a proper coloring.

chromatic_number is an exact backtracking solver, deliberately plain so
its answers are easy to trust.  It tries n = 1, 2, ... in order, and for
each n branches over vertices in descending degree order (ties by vertex
id) with colors in the fixed order 0 (when present), 1, -1, 2, -2, ...
A proper coloring negated entrywise stays proper, so the very first
branch vertex only tries the nonnegative half of the color order; that
halves the search without changing reachability, and the fixed orders
keep every answer deterministic.  The optional node budget counts color
assignments across the whole call and raises BudgetExhaustedError
carrying the best lower bound when it runs out; the library itself never
imposes a budget.

The Mycielskian interacts with the chromatic number through a sandwich:
chi(M) is chi or chi + 1, equality holds for all-negative input, the +1
case for all-positive input, and deleting the root from the Mycielskian
always restores chi.  A proper coloring of the input extends to the
Mycielskian one color set up: for even n the twins copy their originals
and the root takes the new color 0; for odd n = 2k+1 every vertex colored
0 is recolored to the new value k+1, twins copy as before, and the root
takes -(k+1).  Vertices colored 0 form an independent set, so the
recoloring keeps the coloring proper.

Antibalance is the chromatic property chi <= 2, which gives the toolkit
a cheap cross-check between the coloring and balance modules.
"""

from __future__ import annotations

from typing import Sequence

from .balance import is_antibalanced
from .core import SignedGraph, incident_edges
from .errors import (
    BudgetExhaustedError,
    ColorOutOfSetError,
    ConsistencyError,
    InvalidParamsError,
    LengthMismatchError,
    NotProperError,
)
from .mycielskian import delete_root, mycielskian

from dataclasses import dataclass


def color_set(n: int) -> tuple[int, ...]:
    """Members of M_n in ascending order."""
    if n < 1:
        raise InvalidParamsError("color set needs n >= 1")
    k = n // 2
    values = list(range(-k, k + 1))
    if n % 2 == 0:
        values.remove(0)
    return tuple(values)


def color_trial_order(n: int) -> tuple[int, ...]:
    """Members of M_n in solver order: 0 when present, then 1, -1, 2, -2, ..."""
    if n < 1:
        raise InvalidParamsError("color set needs n >= 1")
    k = n // 2
    order = [0] if n % 2 == 1 else []
    for v in range(1, k + 1):
        order.extend((v, -v))
    return tuple(order)


@dataclass(frozen=True)
class SignedColoring:
    """A coloring certificate: the color set size n and one color per vertex."""

    n: int
    colors: tuple[int, ...]


def is_proper(g: SignedGraph, coloring: SignedColoring) -> bool:
    """Check c(u) != s * c(v) on every edge."""
    if len(coloring.colors) != g.p:
        raise LengthMismatchError(
            f"coloring has {len(coloring.colors)} colors, graph has {g.p} vertices"
        )
    allowed = set(color_set(coloring.n))
    for v, c in enumerate(coloring.colors, start=1):
        if c not in allowed:
            raise ColorOutOfSetError(f"vertex {v} has color {c}, not in M_{coloring.n}")
    return all(coloring.colors[u - 1] != s * coloring.colors[v - 1] for u, v, s in g.edges)


def deficiency(g: SignedGraph, coloring: SignedColoring) -> int:
    """How many colors of M_n a proper coloring leaves unused."""
    if not is_proper(g, coloring):
        raise NotProperError("deficiency is defined for proper colorings only")
    return coloring.n - len(set(coloring.colors))


def chromatic_number(g: SignedGraph, node_budget: int | None = None) -> tuple[int, SignedColoring]:
    """Least n with a proper coloring over M_n, plus one witness coloring."""
    # any graph is properly colored by p distinct positive values, so the
    # loop below always terminates by n = 2p (and at n = 1 for p = 0)
    if g.p == 0:
        return 1, SignedColoring(1, ())
    inc = incident_edges(g)
    order = sorted(range(1, g.p + 1), key=lambda v: (-len(inc[v]), v))
    # neighbors of each vertex that come earlier in the branch order
    pos = {v: i for i, v in enumerate(order)}
    earlier: list[list[tuple[int, int]]] = []
    for v in order:
        earlier.append([(pos[u], s) for u, s in inc[v] if pos[u] < pos[v]])
    nodes = 0
    for n in range(1, 2 * g.p + 1):
        trial = color_trial_order(n)
        first_trial = tuple(c for c in trial if c >= 0)
        assigned = [0] * g.p

        def search(i: int) -> bool:
            nonlocal nodes
            if i == g.p:
                return True
            for c in first_trial if i == 0 else trial:
                nodes += 1
                if node_budget is not None and nodes > node_budget:
                    raise BudgetExhaustedError(n)
                if all(c != s * assigned[j] for j, s in earlier[i]):
                    assigned[i] = c
                    if search(i + 1):
                        return True
            assigned[i] = 0
            return False

        if search(0):
            colors = [0] * g.p
            for i, v in enumerate(order):
                colors[v - 1] = assigned[i]
            return n, SignedColoring(n, tuple(colors))
    raise ConsistencyError("no coloring found below the terminating bound")


def extend_coloring_to_mycielskian(g: SignedGraph, coloring: SignedColoring) -> SignedColoring:
    """Extend a proper coloring of g to one of its Mycielskian over M_{n+1}.

    Even n: twins copy their originals, the root takes the new color 0.
    Odd n = 2k+1: every vertex colored 0 switches to the new color k+1,
    twins copy the adjusted colors, the root takes -(k+1).
    """
    if not is_proper(g, coloring):
        raise NotProperError("only proper colorings extend")
    n = coloring.n
    k = n // 2
    if n % 2 == 0:
        base = list(coloring.colors)
        root_color = 0
    else:
        base = [k + 1 if c == 0 else c for c in coloring.colors]
        root_color = -(k + 1)
    return SignedColoring(n + 1, tuple(base) + tuple(base) + (root_color,))


def restricted_mycielskian_chromatic(g: SignedGraph) -> int:
    """Chromatic number of the Mycielskian with its root deleted.

    Always equals the chromatic number of g itself; both are computed and
    compared, so a disagreement cannot pass silently.
    """
    gm, lab = mycielskian(g)
    restricted = delete_root(gm, lab)
    n_restricted, _ = chromatic_number(restricted)
    n_input, _ = chromatic_number(g)
    if n_restricted != n_input:
        raise ConsistencyError(
            f"root-deleted Mycielskian needs {n_restricted} colors, input needs {n_input}"
        )
    return n_restricted


def antibalance_chromatic_check(g: SignedGraph) -> bool:
    """Whether chi(g) <= 2, cross-checked against the antibalance certificate."""
    n, _ = chromatic_number(g)
    anti, _ = is_antibalanced(g)
    if (n <= 2) != anti:
        raise ConsistencyError(f"chi = {n} disagrees with antibalance = {anti}")
    return n <= 2


def mycielskian_two_colorable_iff_all_negative(g: SignedGraph) -> bool:
    """Diagnostic: chi of the Mycielskian is at most 2 exactly for all-negative input."""
    gm, _ = mycielskian(g)
    n, _ = chromatic_number(gm)
    two = n <= 2
    all_negative = all(s == -1 for _, _, s in g.edges)
    if two != all_negative:
        raise ConsistencyError("two-colorability of the Mycielskian disagrees with negativity")
    return two
