"""Automorphism groups, canonical forms and the transitivity predicates.

The search engine is classic equitable-partition refinement with
individualization and backtracking.  Automorphisms are discovered by
comparing leaf certificates against the first leaf; the canonical form is
the minimum certificate over the (automorphism-pruned) leaves, which makes
isomorphism testing a string comparison.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graphs import Graph

Perm = tuple[int, ...]


def perm_identity(n: int) -> Perm:
    return tuple(range(n))


def perm_compose(p: Perm, q: Perm) -> Perm:
    """Apply p first, then q."""
    return tuple(q[x] for x in p)


def perm_inverse(p: Perm) -> Perm:
    out = [0] * len(p)
    for i, x in enumerate(p):
        out[x] = i
    return tuple(out)


def is_automorphism(g: Graph, p: Sequence[int]) -> bool:
    for v in range(g.n):
        row = 0
        adj = g.rows[v]
        while adj:
            low = adj & -adj
            row |= 1 << p[low.bit_length() - 1]
            adj ^= low
        if row != g.rows[p[v]]:
            return False
    return True


class DisjointSets:
    """Union-find; used for orbit partitions on vertices, pairs and 2-arcs."""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, x: int, y: int) -> bool:
        rx, ry = self.find(x), self.find(y)
        if rx == ry:
            return False
        if ry < rx:
            rx, ry = ry, rx
        self.parent[ry] = rx
        return True

    def class_count(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if self.find(i) == i)


@dataclass
class OrbitPartition:
    """Orbits of a generator set acting diagonally on an indexed domain."""

    domain: tuple
    dsu: DisjointSets

    @property
    def orbit_count(self) -> int:
        return self.dsu.class_count()

    def orbits(self) -> list[list]:
        groups: dict[int, list] = {}
        for i, x in enumerate(self.domain):
            groups.setdefault(self.dsu.find(i), []).append(x)
        return [groups[r] for r in sorted(groups)]


@dataclass
class PermutationGroup:
    """Generator set of vertex permutations with lazy order computation."""

    degree: int
    generators: tuple[Perm, ...]
    _order: int | None = field(default=None, repr=False)

    def order(self) -> int:
        if self._order is None:
            gens = [g for g in self.generators if g != perm_identity(self.degree)]
            if not gens:
                self._order = 1
            else:
                from sympy.combinatorics import Permutation
                from sympy.combinatorics import PermutationGroup as _SymPG
                group = _SymPG([Permutation(list(g)) for g in gens])
                self._order = int(group.order())
        return self._order

    def vertex_orbits(self) -> OrbitPartition:
        dsu = DisjointSets(self.degree)
        for p in self.generators:
            for v in range(self.degree):
                dsu.union(v, p[v])
        return OrbitPartition(tuple(range(self.degree)), dsu)

    def is_transitive(self) -> bool:
        return self.degree <= 1 or self.vertex_orbits().orbit_count == 1


# -- refinement + search ------------------------------------------------------

def _refine(rows: Sequence[int], cells: list[tuple[int, ...]],
            active: list[tuple[int, ...]] | None = None) -> list[tuple[int, ...]]:
    """Equitable refinement of an ordered partition (color refinement).

    Every newly created cell is queued as a splitter; counts stay equal on
    sub-cells of already-processed cells, so the fixpoint is equitable.
    When ``active`` is given only those cells seed the worklist, which is
    valid when the rest of the partition is already equitable.
    """
    work = [tuple(c) for c in (cells if active is None else active)]
    cells = [tuple(c) for c in cells]
    while work:
        splitter = work.pop()
        mask = 0
        for v in splitter:
            mask |= 1 << v
        out: list[tuple[int, ...]] = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts: dict[int, list[int]] = {}
            for v in cell:
                counts.setdefault((rows[v] & mask).bit_count(), []).append(v)
            if len(counts) == 1:
                out.append(cell)
            else:
                parts = [tuple(counts[k]) for k in sorted(counts)]
                out.extend(parts)
                work.extend(parts)
        cells = out
    return cells


def _certificate(rows: Sequence[int], lab: Sequence[int]) -> tuple[int, ...]:
    """Adjacency bitset rows after relabelling vertex lab[i] to i."""
    n = len(lab)
    pos = [0] * n
    for i, v in enumerate(lab):
        pos[v] = i
    out = []
    for v in lab:
        row = 0
        adj = rows[v]
        while adj:
            low = adj & -adj
            row |= 1 << pos[low.bit_length() - 1]
            adj ^= low
        out.append(row)
    return tuple(out)


def _initial_cells(g: Graph) -> list[tuple[int, ...]]:
    """Isomorphism-invariant seed colors: degree + distance distribution."""
    dist = g.distances()
    inv: dict[tuple, list[int]] = {}
    for v in range(g.n):
        row = dist[v]
        profile = tuple(sorted(row))
        inv.setdefault((g.degree(v), profile), []).append(v)
    return [tuple(inv[k]) for k in sorted(inv)]


_NO_JUMP = 1 << 30


class _Search:
    """Refinement/individualization backtracking with automorphism pruning.

    Two prunings keep the tree small, both of which only discard subtrees
    that are images of retained subtrees under already-found automorphisms:
    orbit pruning among the candidates of a node, and a backjump to the
    deepest first-path ancestor whenever a leaf reveals an automorphism.
    """

    def __init__(self, g: Graph):
        self.rows = g.rows
        self.n = g.n
        self.gens: list[Perm] = []
        self._gen_set: set[Perm] = set()
        self.first: tuple[Perm, tuple[int, ...]] | None = None
        self.first_base: tuple[int, ...] = ()
        self.best: tuple[Perm, tuple[int, ...]] | None = None
        self.base: list[int] = []

    def run(self, cells: list[tuple[int, ...]]) -> None:
        if self.n == 0:
            self.best = ((), ())
            return
        self._node([tuple(c) for c in cells], None)

    def _node(self, cells: list[tuple[int, ...]],
              active: list[tuple[int, ...]] | None) -> int:
        depth = len(self.base)
        cells = _refine(self.rows, cells, active)
        target = -1
        smallest = None
        for i, c in enumerate(cells):
            if len(c) > 1 and (smallest is None or len(c) < smallest):
                smallest = len(c)
                target = i
        if target < 0:
            return self._leaf(cells)
        tried: list[int] = []
        dsu: DisjointSets | None = None
        dsu_gens = -1
        for v in cells[target]:
            if tried:
                if dsu_gens != len(self.gens):
                    dsu = self._stabilizer_orbits()
                    dsu_gens = len(self.gens)
                if dsu is not None:
                    rv = dsu.find(v)
                    if any(dsu.find(u) == rv for u in tried):
                        continue
            tried.append(v)
            child = cells[:target] + [(v,), tuple(u for u in cells[target] if u != v)] \
                + cells[target + 1:]
            self.base.append(v)
            jump = self._node(child, [(v,)])
            self.base.pop()
            if jump < depth:
                return jump
        return _NO_JUMP

    def _stabilizer_orbits(self) -> DisjointSets | None:
        fixing = [p for p in self.gens if all(p[b] == b for b in self.base)]
        if not fixing:
            return None
        dsu = DisjointSets(self.n)
        for p in fixing:
            for x in range(self.n):
                dsu.union(x, p[x])
        return dsu

    def _leaf(self, cells: list[tuple[int, ...]]) -> int:
        lab = tuple(c[0] for c in cells)
        cert = _certificate(self.rows, lab)
        if self.best is None or cert < self.best[1]:
            self.best = (lab, cert)
        if self.first is None:
            self.first = (lab, cert)
            self.first_base = tuple(self.base)
            return _NO_JUMP
        if cert == self.first[1]:
            auto = perm_compose(perm_inverse(self.first[0]), lab)
            self._record(auto)
            # return to the deepest ancestor shared with the first path
            common = 0
            for x, y in zip(self.base, self.first_base):
                if x != y:
                    break
                common += 1
            return common
        if self.best is not None and cert == self.best[1]:
            auto = perm_compose(perm_inverse(self.best[0]), lab)
            self._record(auto)
        return _NO_JUMP

    def _record(self, auto: Perm) -> None:
        if auto == perm_identity(self.n) or auto in self._gen_set:
            return
        if not is_automorphism(Graph(self.n, self.rows), auto):
            raise AssertionError("search produced a non-automorphism")
        self.gens.append(auto)
        self._gen_set.add(auto)


def automorphism_group(g: Graph) -> PermutationGroup:
    """Generating set of the full automorphism group (exact order on demand)."""
    search = _Search(g)
    search.run(_initial_cells(g) if g.n else [])
    return PermutationGroup(g.n, tuple(search.gens))


def canonical_form(g: Graph) -> tuple[tuple[int, ...], Perm]:
    """(canonical certificate, canonical labelling) for isomorphism tests."""
    if g._canon is not None:
        return g._canon
    search = _Search(g)
    search.run(_initial_cells(g) if g.n else [])
    assert search.best is not None
    lab, cert = search.best
    # lab maps canonical position -> vertex; expose vertex -> position
    result = (cert, perm_inverse(lab) if g.n else ())
    object.__setattr__(g, "_canon", result)
    return result


def canonical_certificate(g: Graph) -> tuple[int, ...]:
    return canonical_form(g)[0]


def group_order_bruteforce(g: Graph) -> int:
    """Count all adjacency-preserving bijections by direct backtracking.

    Independent oracle: assigns images vertex by vertex, pruning only on the
    definition (degree equality and edge preservation against the already
    placed prefix).  No refinement, certificates, or orbit machinery.
    """
    if g.n > 12:
        raise ValueError("brute-force oracle limited to 12 vertices")
    n = g.n
    degs = [g.degree(v) for v in range(n)]
    image = [-1] * n
    used = [False] * n

    def place(v: int) -> int:
        if v == n:
            return 1
        total = 0
        for w in range(n):
            if used[w] or degs[w] != degs[v]:
                continue
            if any(g.has_edge(v, u) != g.has_edge(w, image[u])
                   for u in range(v)):
                continue
            image[v] = w
            used[w] = True
            total += place(v + 1)
            used[w] = False
            image[v] = -1
        return total

    return place(0)


def is_isomorphic(g1: Graph, g2: Graph) -> tuple[bool, Perm | None]:
    """Isomorphism test via canonical forms, with a verified witness."""
    if g1.n != g2.n or g1.edge_count() != g2.edge_count():
        return False, None
    if sorted(g1.degree(v) for v in range(g1.n)) != \
            sorted(g2.degree(v) for v in range(g2.n)):
        return False, None
    cert1, canon1 = canonical_form(g1)
    cert2, canon2 = canonical_form(g2)
    if cert1 != cert2:
        return False, None
    witness = perm_compose(canon1, perm_inverse(canon2))
    for u, v in g1.edges():
        if not g2.has_edge(witness[u], witness[v]):
            raise AssertionError("canonical forms matched but witness failed")
    return True, witness


# -- transitivity predicates --------------------------------------------------

def orbits_on_pairs_at_distance(g: Graph, aut: PermutationGroup, i: int
                                ) -> OrbitPartition:
    """Orbits of ordered vertex pairs at distance i under the generators."""
    if i < 1:
        raise ValueError("distance must be >= 1")
    dist = g.distances()
    domain = tuple((u, v) for u in range(g.n) for v in range(g.n)
                   if dist[u][v] == i)
    index = {p: j for j, p in enumerate(domain)}
    dsu = DisjointSets(len(domain))
    for p in aut.generators:
        for j, (u, v) in enumerate(domain):
            dsu.union(j, index[(p[u], p[v])])
    return OrbitPartition(domain, dsu)


def _two_arcs(g: Graph) -> tuple[tuple[int, int, int], ...]:
    out = []
    for v in range(g.n):
        nbrs = list(g.neighbors(v))
        for u in nbrs:
            for w in nbrs:
                if u != w:
                    out.append((u, v, w))
    return tuple(out)


def orbits_on_two_arcs(g: Graph, aut: PermutationGroup) -> OrbitPartition:
    domain = _two_arcs(g)
    index = {t: j for j, t in enumerate(domain)}
    dsu = DisjointSets(len(domain))
    for p in aut.generators:
        for j, (u, v, w) in enumerate(domain):
            dsu.union(j, index[(p[u], p[v], p[w])])
    return OrbitPartition(domain, dsu)


def is_vertex_transitive(g: Graph, aut: PermutationGroup | None = None) -> bool:
    if aut is None:
        aut = automorphism_group(g)
    return aut.is_transitive()


def is_arc_transitive(g: Graph, aut: PermutationGroup | None = None) -> bool:
    """Single orbit on ordered adjacent pairs; rejects disconnected input."""
    if not g.is_connected():
        raise ValueError("arc-transitivity is defined for connected graphs")
    if aut is None:
        aut = automorphism_group(g)
    if g.edge_count() == 0:
        return True
    part = orbits_on_pairs_at_distance(g, aut, 1)
    return part.orbit_count == 1


def is_2_arc_transitive(g: Graph, aut: PermutationGroup | None = None) -> bool:
    """Single orbit on 2-arcs (u,v,w), v adjacent to both, u != w."""
    if not g.is_connected():
        raise ValueError("2-arc-transitivity is defined for connected graphs")
    if aut is None:
        aut = automorphism_group(g)
    if not is_arc_transitive(g, aut):
        return False
    part = orbits_on_two_arcs(g, aut)
    return part.orbit_count <= 1


def is_s_distance_transitive(g: Graph, s: int,
                             aut: PermutationGroup | None = None) -> bool:
    """Vertex-transitive and a single orbit on pairs at each distance <= s.

    Distances beyond the diameter are vacuous.  Complete graphs are outside
    the s=2 predicate; callers should treat them separately.
    """
    if not g.is_connected():
        raise ValueError("distance-transitivity is defined for connected graphs")
    if aut is None:
        aut = automorphism_group(g)
    if not aut.is_transitive():
        return False
    diam = g.diameter()
    for i in range(1, min(s, diam) + 1):
        if orbits_on_pairs_at_distance(g, aut, i).orbit_count > 1:
            return False
    return True


def aut_certificate_json(g: Graph, aut: PermutationGroup) -> dict:
    """JSON-ready certificate: generators, order, orbit counts per distance."""
    diam = g.diameter()
    counts = {}
    if g.is_connected():
        for i in range(1, min(diam, g.n) + 1):
            counts[str(i)] = orbits_on_pairs_at_distance(g, aut, i).orbit_count
    return {
        "degree": g.n,
        "generators": [list(p) for p in aut.generators],
        "order": aut.order(),
        "pair_orbit_counts": counts,
    }
