"""Voltage-graph covers, quotients by vertex partitions, and cover checks.

A voltage assignment puts a group element on every arc of a base graph so
that opposite arcs carry inverse elements.  The derived cover has vertex set
V(base) x N and joins (u, g) to (v, g * psi(u, v)).  Quotients go the other
way: collapsing a partition whose cells are the fibers of a cover recovers
the base graph.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .graphs import Graph
from .groups import FiniteGroup, cyclic_group


class VoltageError(ValueError):
    """Raised for invalid voltage assignments, walks or partitions."""


def _label(g: Graph, v: int) -> str:
    return str(g.labels[v]) if g.labels is not None else str(v)


@dataclass(frozen=True)
class VoltageAssignment:
    """Group elements on the arcs of a base graph, inverse law by construction.

    Only one direction per edge is stored; the opposite arc is read through
    the group inverse, so the inverse law cannot be violated after
    construction.  Arcs not mentioned carry the identity.
    """

    base: Graph
    group: FiniteGroup
    _forward: dict[tuple[int, int], int] = field(default_factory=dict)

    @staticmethod
    def from_arcs(base: Graph, group: FiniteGroup,
                  arcs: Mapping[tuple[int, int], int]) -> "VoltageAssignment":
        forward: dict[tuple[int, int], int] = {}
        for (u, v), g in arcs.items():
            if not base.has_edge(u, v):
                raise VoltageError(f"arc ({u},{v}) is not an edge of the base graph")
            if not 0 <= g < group.order:
                raise VoltageError(f"voltage {g} outside group of order {group.order}")
            key, val = ((u, v), g) if u < v else ((v, u), group.inv(g))
            if key in forward and forward[key] != val:
                raise VoltageError(
                    f"arcs ({u},{v}) and ({v},{u}) violate the inverse law")
            forward[key] = val
        return VoltageAssignment(base, group, forward)

    def voltage(self, u: int, v: int) -> int:
        if not self.base.has_edge(u, v):
            raise VoltageError(f"({u},{v}) is not an arc of the base graph")
        if u < v:
            return self._forward.get((u, v), 0)
        return self.group.inv(self._forward.get((v, u), 0))

    def to_json(self) -> str:
        arcs = [{"u": u, "v": v, "g": g}
                for (u, v), g in sorted(self._forward.items())]
        return json.dumps({"n": self.base.n, "group_order": self.group.order,
                           "arcs": arcs})

    @staticmethod
    def from_json(base: Graph, group: FiniteGroup, text: str) -> "VoltageAssignment":
        data = json.loads(text)
        if data.get("n") != base.n or data.get("group_order") != group.order:
            raise VoltageError("serialized assignment does not match base/group")
        arcs = {(a["u"], a["v"]): a["g"] for a in data["arcs"]}
        return VoltageAssignment.from_arcs(base, group, arcs)


@dataclass(frozen=True)
class CoverGraph:
    """A derived cover together with its fiber structure."""

    graph: Graph
    base: Graph
    group_order: int
    # cover vertex index -> (base vertex, group element)
    fiber_of: tuple[tuple[int, int], ...]

    def fibers(self) -> list[tuple[int, ...]]:
        cells: dict[int, list[int]] = {}
        for x, (u, _) in enumerate(self.fiber_of):
            cells.setdefault(u, []).append(x)
        return [tuple(cells[u]) for u in sorted(cells)]


def derive_cover(psi: VoltageAssignment) -> CoverGraph:
    """Derived graph on V(base) x N with (u,g) ~ (v, g*psi(u,v))."""
    base, grp = psi.base, psi.group
    m = grp.order
    edges = []
    for u, v in base.edges():
        w = psi.voltage(u, v)
        for g in range(m):
            edges.append((u * m + g, v * m + grp.mult(g, w)))
    labels = tuple(f"({_label(base, u)},{g})" for u in range(base.n) for g in range(m))
    cover = Graph.from_edges(base.n * m, edges, labels=labels)
    fiber_of = tuple((u, g) for u in range(base.n) for g in range(m))
    return CoverGraph(cover, base, m, fiber_of)


def walk_voltage(psi: VoltageAssignment, walk: Sequence[int]) -> int:
    """Ordered product of the arc voltages along a walk; identity if empty."""
    out = 0
    for u, v in zip(walk, walk[1:]):
        if not psi.base.has_edge(u, v):
            raise VoltageError(f"({u},{v}) is not an edge; not a walk")
        out = psi.group.mult(out, psi.voltage(u, v))
    return out


def _check_partition(g: Graph, orbits: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    cells = [tuple(c) for c in orbits]
    seen: set[int] = set()
    for c in cells:
        if not c:
            raise VoltageError("partition cell is empty")
        for v in c:
            if v in seen or not 0 <= v < g.n:
                raise VoltageError("partition cells must be disjoint vertex sets")
            seen.add(v)
    if len(seen) != g.n:
        raise VoltageError("partition does not cover the vertex set")
    return cells


def quotient_by_orbits(g: Graph, orbits: Iterable[Sequence[int]]) -> Graph:
    """Quotient graph on the cells; loops and multiplicity are discarded."""
    cells = _check_partition(g, orbits)
    cell_of = [0] * g.n
    for i, c in enumerate(cells):
        for v in c:
            cell_of[v] = i
    edges = set()
    for u, v in g.edges():
        a, b = cell_of[u], cell_of[v]
        if a != b:
            edges.add((min(a, b), max(a, b)))
    labels = tuple("{" + ",".join(_label(g, v) for v in c) + "}" for c in cells)
    return Graph.from_edges(len(cells), sorted(edges), labels=labels)


def is_n_cover(g: Graph, quotient_partition: Iterable[Sequence[int]]) -> bool:
    """True iff g covers the quotient: equal fibers, one neighbor per adjacent cell."""
    cells = _check_partition(g, quotient_partition)
    size = len(cells[0])
    if any(len(c) != size for c in cells):
        return False
    cell_of = [0] * g.n
    masks = [0] * len(cells)
    for i, c in enumerate(cells):
        for v in c:
            cell_of[v] = i
            masks[i] |= 1 << v
    quot = quotient_by_orbits(g, cells)
    for a, b in quot.edges():
        for v in cells[a]:
            if (g.rows[v] & masks[b]).bit_count() != 1:
                return False
        for v in cells[b]:
            if (g.rows[v] & masks[a]).bit_count() != 1:
                return False
    # no edges may survive inside a cell, or the projection is not a cover
    for i, c in enumerate(cells):
        for v in c:
            if g.rows[v] & masks[i]:
                return False
    return True


def semiregular_cyclic_quotient(g: Graph, perm: Sequence[int]) -> tuple[Graph, list[tuple[int, ...]]]:
    """Quotient of g by the cycles of a semiregular automorphism."""
    from .symmetry import is_automorphism

    perm = tuple(perm)
    if sorted(perm) != list(range(g.n)):
        raise VoltageError("not a permutation of the vertex set")
    if not is_automorphism(g, perm):
        raise VoltageError("permutation is not an automorphism")
    seen = [False] * g.n
    cycles: list[tuple[int, ...]] = []
    for v in range(g.n):
        if seen[v]:
            continue
        cyc = [v]
        seen[v] = True
        x = perm[v]
        while x != v:
            seen[x] = True
            cyc.append(x)
            x = perm[x]
        cycles.append(tuple(cyc))
    lengths = {len(c) for c in cycles}
    if len(lengths) != 1:
        raise VoltageError("automorphism is not semiregular (unequal cycle lengths)")
    return quotient_by_orbits(g, cycles), cycles


def spanning_tree_normalized(psi: VoltageAssignment) -> VoltageAssignment:
    """Gauge-equivalent assignment whose BFS spanning-tree arcs are trivial.

    Replacing psi(u,v) by f(u) psi(u,v) f(v)^{-1} permutes each fiber, so the
    derived cover is unchanged up to isomorphism.
    """
    base, grp = psi.base, psi.group
    f = [None] * base.n  # type: list[int | None]
    for root in range(base.n):
        if f[root] is not None:
            continue
        f[root] = 0
        frontier = [root]
        while frontier:
            nxt = []
            for u in frontier:
                for v in base.neighbors(u):
                    if f[v] is None:
                        f[v] = grp.mult(f[u], psi.voltage(u, v))
                        nxt.append(v)
            frontier = nxt
    arcs: dict[tuple[int, int], int] = {}
    for u, v in base.edges():
        arcs[(u, v)] = grp.mult(grp.mult(f[u], psi.voltage(u, v)), grp.inv(f[v]))
    return VoltageAssignment.from_arcs(base, grp, arcs)


def cyclic_voltage(base: Graph, d: int,
                   arcs: Mapping[tuple[int, int], int]) -> VoltageAssignment:
    """Convenience constructor for voltages in the cyclic group Z_d."""
    return VoltageAssignment.from_arcs(base, cyclic_group(d), arcs)
