"""Mycielskian constructions for signed graphs.

The Mycielskian of a signed graph on vertices v_1..v_p adds a twin u_i
for every vertex and one root vertex w.  Each original edge v_i v_j is
kept and spawns the two cross edges v_i u_j and u_i v_j with the same
sign, and every twin is joined to the root by a positive edge.  Vertex
labels are fixed once and for all: original i stays i, the twin of i is
p + i, and the root is 2p + 1.  Counts follow directly: 2p + 1 vertices
and 3q + p edges, with 3r + p positive and 3(q - r) negative edges when
the input has r positive edges.

The plain Mycielskian of a balanced graph is balanced only in the
trivial all-positive case; any negative edge v_i v_j closes the negative
5-cycle (v_i, v_j, u_i, w, u_j).  Re-signing the root star repairs this.
When the root edge at u_i receives sign zeta(v_i) for a switching
function zeta that takes the input to all-positive, the result, the
balanced Mycielskian, is balanced, and the switching function that sends
it to all-positive copies zeta onto each twin and fixes the root.

Iterating the balanced Mycielskian starting from a single vertex and a
negative edge produces the tower used for chromatic lower bounds: every
level is balanced, triangle-free, and not all-positive, and each step
raises the signed chromatic number by exactly one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .balance import certify_balance, cycle_sign
from .core import (
    SignedGraph,
    SwitchingFunction,
    canonicalize,
    is_all_positive,
    validate_switching,
)
from .errors import (
    ConsistencyError,
    LengthMismatchError,
    InvalidParamsError,
    NotAMycielskianError,
    NotBalancedError,
)


@dataclass(frozen=True)
class MycielskianLabeling:
    """Fixed vertex labeling of a Mycielskian built from p originals."""

    p: int

    def original(self, i: int) -> int:
        return i

    def twin(self, i: int) -> int:
        return self.p + i

    @property
    def root(self) -> int:
        return 2 * self.p + 1

    def to_json_dict(self) -> dict:
        return {
            "original": list(range(1, self.p + 1)),
            "twin": list(range(self.p + 1, 2 * self.p + 1)),
            "root": self.root,
        }


def mycielskian(g: SignedGraph) -> tuple[SignedGraph, MycielskianLabeling]:
    """Signed Mycielskian with the fixed labeling."""
    lab = MycielskianLabeling(g.p)
    edges: list[tuple[int, int, int]] = []
    for u, v, s in g.edges:
        edges.append((u, v, s))
        edges.append((u, lab.twin(v), s))
        edges.append((v, lab.twin(u), s))
    for i in range(1, g.p + 1):
        edges.append((lab.twin(i), lab.root, 1))
    return canonicalize(lab.root, edges), lab


def delete_root(gm: SignedGraph, lab: MycielskianLabeling) -> SignedGraph:
    """Drop the root vertex and its star, keeping originals and twins."""
    if gm.p != lab.root:
        raise LengthMismatchError(f"graph has {gm.p} vertices, labeling expects {lab.root}")
    kept = [(u, v, s) for u, v, s in gm.edges if lab.root not in (u, v)]
    return canonicalize(2 * lab.p, kept)


def mycielskian_balanced_iff_all_positive(g: SignedGraph) -> tuple[bool, tuple[int, ...] | None]:
    """Diagnostic: the Mycielskian is balanced exactly for all-positive input.

    Returns the balance verdict for the Mycielskian, plus a negative
    5-cycle witness through the first negative edge when there is one.
    The verdict is cross-checked against positivity of the input and the
    witness sign is recomputed; a mismatch raises ConsistencyError.
    """
    gm, lab = mycielskian(g)
    balanced = certify_balance(gm).balanced
    if balanced != is_all_positive(g):
        raise ConsistencyError("Mycielskian balance disagrees with input positivity")
    witness = None
    for u, v, s in g.edges:
        if s == -1:
            witness = (lab.original(u), lab.original(v), lab.twin(u), lab.root, lab.twin(v))
            if cycle_sign(gm, witness) != -1:
                raise ConsistencyError("constructed 5-cycle is not negative")
            break
    return balanced, witness


def _split_mycielskian(gm: SignedGraph, lab: MycielskianLabeling):
    """Partition edges into original, cross and root groups, or complain."""
    p = lab.p
    if gm.p != 2 * p + 1:
        raise NotAMycielskianError(f"expected {2 * p + 1} vertices, got {gm.p}")
    original: list[tuple[int, int, int]] = []
    cross: list[tuple[int, int, int]] = []
    root: list[tuple[int, int, int]] = []
    for u, v, s in gm.edges:
        if v == lab.root:
            root.append((u, v, s))
        elif u == lab.root:
            root.append((v, u, s))
        elif u <= p and v <= p:
            original.append((u, v, s))
        elif u > p and v > p:
            raise NotAMycielskianError(f"twins {u} and {v} are adjacent")
        else:
            cross.append((u, v, s))
    return original, cross, root


def resign_root(gm: SignedGraph, lab: MycielskianLabeling, rs: Sequence[int]) -> SignedGraph:
    """Replace the sign of each root edge u_i w by rs(i).

    The input must actually be a Mycielskian under the labeling: the root
    is adjacent to exactly the twin set, the twin set is independent, and
    the cross edges mirror the original edges sign for sign.  The shape is
    validated structurally instead of trusting the caller.
    """
    p = lab.p
    if len(rs) != p:
        raise LengthMismatchError(f"root signature has length {len(rs)}, expected {p}")
    for i, s in enumerate(rs):
        if s not in (1, -1):
            raise InvalidParamsError(f"root signature entry for vertex {i + 1} is {s}")
    original, cross, root = _split_mycielskian(gm, lab)
    if sorted(u for u, _, _ in root) != list(range(p + 1, 2 * p + 1)):
        raise NotAMycielskianError("root must be adjacent to exactly the twin set")
    expected_cross = set()
    for u, v, s in original:
        expected_cross.add((min(u, lab.twin(v)), max(u, lab.twin(v)), s))
        expected_cross.add((min(v, lab.twin(u)), max(v, lab.twin(u)), s))
    if set(cross) != expected_cross:
        raise NotAMycielskianError("cross edges do not mirror the original edges")
    edges = original + cross + [(lab.twin(i), lab.root, rs[i - 1]) for i in range(1, p + 1)]
    return canonicalize(gm.p, edges)


def check_root_relation(g: SignedGraph, rs: Sequence[int]) -> bool:
    """Whether rs(i) * rs(j) equals the sign of v_i v_j for every edge.

    This is the exact condition under which the re-signed Mycielskian of g
    is balanced, for balanced g.  Exposed separately so the condition can
    be probed on its own, including with signatures that violate it.
    """
    if len(rs) != g.p:
        raise LengthMismatchError(f"root signature has length {len(rs)}, expected {g.p}")
    return all(rs[u - 1] * rs[v - 1] == s for u, v, s in g.edges)


def balanced_mycielskian(g: SignedGraph) -> tuple[SignedGraph, SwitchingFunction]:
    """Balanced Mycielskian of a balanced signed graph.

    The root edge at twin u_i carries sign zeta(v_i), where zeta switches
    g to all-positive.  Both a switching function and its negation do
    that, so one orientation has to be pinned for reproducible output:
    the construction uses the breadth-first certificate switching negated,
    except for all-positive input, which keeps zeta identically +1 and
    hence the plain Mycielskian.

    Returns the graph together with the switching function on 2p + 1
    vertices that takes it to all-positive (zeta copied onto the twins,
    +1 on the root).  Raises NotBalancedError for unbalanced input.
    """
    cert = certify_balance(g)
    if not cert.balanced:
        raise NotBalancedError(f"input is unbalanced, negative cycle {list(cert.witness)}")
    zeta = cert.to_all_positive
    if not is_all_positive(g):
        zeta = tuple(-z for z in zeta)
    gm, lab = mycielskian(g)
    gb = resign_root(gm, lab, zeta)
    zeta_b = tuple(zeta) + tuple(zeta) + (1,)
    return gb, zeta_b


def tower(n: int) -> list[SignedGraph]:
    """First n levels of the balanced Mycielskian tower.

    Level 1 is the single vertex, level 2 the single negative edge, and
    each later level is the balanced Mycielskian of the one before.  Level
    k has signed chromatic number exactly k, stays balanced and
    triangle-free, and from level 2 on is never all-positive.
    """
    if n < 1:
        raise InvalidParamsError("tower needs n >= 1")
    levels = [canonicalize(1, [])]
    if n >= 2:
        levels.append(canonicalize(2, [(1, 2, -1)]))
    while len(levels) < n:
        gb, _ = balanced_mycielskian(levels[-1])
        levels.append(gb)
    return levels


def verify_balanced_mycielskian(g: SignedGraph) -> bool:
    """Recheck the balanced Mycielskian contract on one input from scratch."""
    from .core import switch

    gb, zeta_b = balanced_mycielskian(g)
    if not certify_balance(gb).balanced:
        return False
    return is_all_positive(switch(gb, zeta_b))
