"""Constructors for the classified two-distance-transitive graph families.

Each constructor returns a labeled simple Graph.  The catalog covers the ten
families arising from connected 2-distance-transitive Cayley graphs over
generalized quaternion groups: complete multipartite graphs, complete
bipartite graphs with and without a perfect matching, projective-space
incidence graphs and their bipartite complements, matching-deleted
complete-bipartite cyclic covers, complete-graph cyclic covers, quotients of
affine-hyperplane incidence graphs, and three sporadic covers.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Sequence

from .fields import (FieldGF, field_of_order, enumerate_subspaces, subspace_points,
                     subspace_contains, prime_power, is_prime, biplane_h11,
                     gdd_points_blocks, vec_scale, squares_and_nonsquares)
from .graphs import Graph
from .groups import FiniteGroup, QuaternionGroup, cyclic_group
from .voltage import (VoltageAssignment, CoverGraph, derive_cover, cyclic_voltage,
                      quotient_by_orbits, is_n_cover)


class FamilyParameterError(ValueError):
    """Raised when a constructor is called with out-of-range parameters."""


# -- elementary families -------------------------------------------------------

def complete_multipartite(x: int, y: int) -> Graph:
    """K_{x[y]}: x independent parts of size y, all cross edges present."""
    if x < 2 or y < 1:
        raise FamilyParameterError("complete multipartite needs x >= 2, y >= 1")
    n = x * y
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if u // y != v // y]
    labels = [f"p{u // y}v{u % y}" for u in range(n)]
    return Graph.from_edges(n, edges, labels=labels)


def complete_graph(m: int) -> Graph:
    return complete_multipartite(m, 1) if m >= 2 else Graph.from_edges(max(m, 0), [])


def complete_bipartite(m: int) -> Graph:
    """K_{m,m} with sides 0..m-1 and m..2m-1."""
    if m < 2:
        raise FamilyParameterError("complete bipartite needs m >= 2")
    edges = [(i, m + j) for i in range(m) for j in range(m)]
    labels = [f"{i}" for i in range(m)] + [f"{i}'" for i in range(m)]
    return Graph.from_edges(2 * m, edges, labels=labels)


def complete_bipartite_minus_matching(m: int) -> Graph:
    """K_{m,m} - mK_2: the matching pairs i with i'."""
    if m < 2:
        raise FamilyParameterError("needs m >= 2")
    edges = [(i, m + j) for i in range(m) for j in range(m) if i != j]
    labels = [f"{i}" for i in range(m)] + [f"{i}'" for i in range(m)]
    return Graph.from_edges(2 * m, edges, labels=labels)


def cayley_graph(group: FiniteGroup, connection_set: Iterable[int]) -> Graph:
    """Cay(T, S): g ~ sg for s in S; S must avoid the identity, S = S^-1."""
    s = sorted(set(connection_set))
    if 0 in s:
        raise FamilyParameterError("connection set contains the identity")
    if any(group.inv(x) not in s for x in s):
        raise FamilyParameterError("connection set is not inverse-closed")
    edges = [(g, group.mult(x, g)) for g in range(group.order) for x in s]
    return Graph.from_edges(group.order, edges, labels=group.names)


def generalized_petersen(n: int, r: int) -> Graph:
    """GP(n,r): outer cycle u_i, inner star polygon v_i ~ v_{i+r}, spokes."""
    if n < 3 or not 1 <= r < n / 2:
        raise FamilyParameterError("generalized Petersen needs n >= 3, 1 <= r < n/2")
    edges = []
    for i in range(n):
        edges.append((i, (i + 1) % n))            # outer cycle
        edges.append((n + i, n + (i + r) % n))    # inner polygon
        edges.append((i, n + i))                  # spoke
    labels = [f"u{i}" for i in range(n)] + [f"v{i}" for i in range(n)]
    return Graph.from_edges(2 * n, edges, labels=labels)


def hamming(d: int, r: int) -> Graph:
    """H(d,r) on r^d words, adjacent when differing in one coordinate."""
    if d < 1 or r < 2:
        raise FamilyParameterError("Hamming graph needs d >= 1, r >= 2")
    words = list(product(range(r), repeat=d))
    index = {w: i for i, w in enumerate(words)}
    edges = []
    for w in words:
        for pos in range(d):
            for c in range(w[pos] + 1, r):
                edges.append((index[w], index[w[:pos] + (c,) + w[pos + 1:]]))
    labels = ["".join(map(str, w)) for w in words]
    return Graph.from_edges(len(words), edges, labels=labels)


# -- incidence families --------------------------------------------------------

def incidence_pg(d_vs: int, q: int, complemented: bool = False) -> Graph:
    """Point/hyperplane incidence graph of PG(d_vs-1, q), or its complement.

    Vertices are the 1-subspaces and the (d_vs-1)-subspaces of GF(q)^{d_vs};
    a point is adjacent to a hyperplane containing it.  The complemented
    variant joins a point to the hyperplanes meeting it only in zero.
    """
    if d_vs < 3:
        raise FamilyParameterError("projective incidence graph needs dimension >= 3")
    if prime_power(q) is None:
        raise FamilyParameterError(f"{q} is not a prime power")
    field = field_of_order(q)
    points = enumerate_subspaces(field, d_vs, 1)
    hyps = enumerate_subspaces(field, d_vs, d_vs - 1)
    m = len(points)
    edges = []
    for i, pt in enumerate(points):
        rep = pt.basis[0]
        for j, h in enumerate(hyps):
            inside = subspace_contains(field, h, rep)
            if inside != complemented:
                edges.append((i, m + j))
    labels = [f"P{i}" for i in range(m)] + [f"H{j}" for j in range(len(hyps))]
    return Graph.from_edges(m + len(hyps), edges, labels=labels)


def incidence_h11(complemented: bool = False) -> Graph:
    """Incidence graph of the (11,5,2)-biplane, or its bipartite complement."""
    points, blocks = biplane_h11()
    edges = []
    for i, x in enumerate(points):
        for j, blk in enumerate(blocks):
            if (x in blk) != complemented:
                edges.append((i, 11 + j))
    labels = [f"x{i}" for i in points] + [f"B{j}" for j in range(11)]
    return Graph.from_edges(22, edges, labels=labels)


# -- voltage-cover families ----------------------------------------------------

def x1_4q_voltage(q: int) -> VoltageAssignment:
    """Voltages over Z_4 on K_{q+1} whose derived cover is X_1(4,q).

    Vertices 0..q-1 are GF(q), vertex q is infinity.  An arc (x,y) with both
    ends finite carries 1 when y-x is a nonzero square and 3 otherwise; arcs
    at infinity carry 0.  The inverse law needs -1 to be a non-square, hence
    q = 3 (mod 4).
    """
    pp = prime_power(q)
    if pp is None or q % 4 != 3:
        raise FamilyParameterError("needs a prime power q = 3 (mod 4)")
    field = field_of_order(q)
    sq, _ = squares_and_nonsquares(field)
    base = complete_graph(q + 1)
    arcs: dict[tuple[int, int], int] = {}
    for x in range(q):
        for y in range(x + 1, q):
            arcs[(x, y)] = 1 if field.sub(y, x) in sq else 3
        arcs[(x, q)] = 0
    return cyclic_voltage(base, 4, arcs)


def x1_4q_cover(q: int) -> CoverGraph:
    return derive_cover(x1_4q_voltage(q))


def x1_4q(q: int) -> Graph:
    """X_1(4,q): 4(q+1) vertices, valency q."""
    return x1_4q_cover(q).graph


def kq1_2d_voltage(q: int, d: int) -> VoltageAssignment:
    """Voltages over Z_d on K_{q+1,q+1}-(q+1)K_2 deriving K_{q+1}^{2d}.

    Sides are indexed by GF(q) together with infinity at position q.  The arc
    from i to j' (finite i, j) carries h mod d where j - i is the h-th power
    of the multiplicative generator; arcs at infinity carry 0.
    """
    pp = prime_power(q)
    if pp is None or q % 2 == 0:
        raise FamilyParameterError("q must be an odd prime power")
    if d < 2 or (q - 1) % d != 0:
        raise FamilyParameterError("needs d >= 2 dividing q-1")
    field = field_of_order(q)
    m = q + 1  # side size; infinity sits at index q
    base = complete_bipartite_minus_matching(m)
    arcs: dict[tuple[int, int], int] = {}
    for i in range(m):
        for j in range(m):
            if i == j:
                continue
            if i == q or j == q:
                arcs[(i, m + j)] = 0
            else:
                arcs[(i, m + j)] = field.discrete_log(field.sub(j, i)) % d
    return VoltageAssignment.from_arcs(base, cyclic_group(d), arcs)


def kq1_2d_cover(q: int, d: int) -> CoverGraph:
    return derive_cover(kq1_2d_voltage(q, d))


def kq1_2d(q: int, d: int) -> Graph:
    """K_{q+1}^{2d}: 2d(q+1) vertices, valency q."""
    return kq1_2d_cover(q, d).graph


_X23_TABLE = {
    (2, 5): 1, (3, 4): 1, (4, 3): 1, (5, 2): 1,
    (2, 4): 2, (3, 5): 2, (4, 2): 2, (5, 3): 2,
}


def x2_3_voltage() -> VoltageAssignment:
    """The fixed Z_3 voltage table on K_{5,5}-5K_2 whose cover is X_2(3).

    Rows/columns are 1..5; every arc into or out of vertex 1 carries 0, the
    four antidiagonal arcs carry 1, the remaining four carry 2, and
    (2,3'),(3,2'),(4,5'),(5,4') carry 0.
    """
    base = complete_bipartite_minus_matching(5)
    arcs: dict[tuple[int, int], int] = {}
    for i in range(1, 6):
        for j in range(1, 6):
            if i == j:
                continue
            g = _X23_TABLE.get((i, j), 0) if (i != 1 and j != 1) else 0
            arcs[(i - 1, 5 + j - 1)] = g
    return VoltageAssignment.from_arcs(base, cyclic_group(3), arcs)


def x2_3_cover() -> CoverGraph:
    return derive_cover(x2_3_voltage())


def x2_3() -> Graph:
    """X_2(3): 30 vertices, valency 4, a 3-cover of K_{5,5}-5K_2."""
    return x2_3_cover().graph


def x_22_voltage() -> VoltageAssignment:
    """Z_2 voltages on K_{4,4} given by the dot product of the GF(2)^2 labels."""
    vecs = list(product(range(2), repeat=2))
    base = complete_bipartite(4)
    arcs: dict[tuple[int, int], int] = {}
    for i, a in enumerate(vecs):
        for j, b in enumerate(vecs):
            arcs[(i, 4 + j)] = (a[0] * b[0] + a[1] * b[1]) % 2
    return cyclic_voltage(base, 2, arcs)


def x_22_cover() -> CoverGraph:
    return derive_cover(x_22_voltage())


def x_22() -> Graph:
    """X(2,2): 16 vertices, valency 4, a 2-cover of K_{4,4}."""
    return x_22_cover().graph


def x_prime_32() -> Graph:
    """X'(3,2): bicirculant on two copies of Z_14 with differences {0,1,9,11}."""
    diffs = {0, 1, 9, 11}
    edges = [(i, 14 + j) for i in range(14) for j in range(14)
             if (j - i) % 14 in diffs]
    labels = [f"{i}" for i in range(14)] + [f"{i}'" for i in range(14)]
    return Graph.from_edges(28, edges, labels=labels)


# -- subgroup-difference bicirculants ------------------------------------------

def _multiplicative_subgroup(p: int, r: int) -> set[int]:
    """The unique order-r subgroup of Z_p^*: solutions of x^r = 1 (mod p)."""
    return {x for x in range(1, p) if pow(x, r, p) == 1}


def g2pr(p: int, r: int, doubled: bool = False) -> Graph:
    """G(2p,r) or, when doubled, G(2,p,r) on two copies of Z_p.

    x ~ y' whenever y - x lies in the order-r subgroup L of Z_p^*; the
    doubled variant (r even, so L = -L) also joins x ~ y and x' ~ y' for
    y - x in L.  G(2,p,p-1) is K_{p[2]}.
    """
    if not is_prime(p) or p == 2:
        raise FamilyParameterError("p must be an odd prime")
    if r < 1 or (p - 1) % r != 0:
        raise FamilyParameterError("needs r dividing p-1")
    if doubled and r % 2 != 0:
        raise FamilyParameterError("the doubled variant needs r even")
    ell = _multiplicative_subgroup(p, r)
    edges = [(x, p + y) for x in range(p) for y in range(p) if (y - x) % p in ell]
    if doubled:
        for x in range(p):
            for y in range(x + 1, p):
                if (y - x) % p in ell:
                    edges.append((x, y))
                    edges.append((p + x, p + y))
    labels = [f"{i}" for i in range(p)] + [f"{i}'" for i in range(p)]
    return Graph.from_edges(2 * p, edges, labels=labels)


# -- affine-hyperplane incidence quotients --------------------------------------

def gamma_dq(d: int, q: int) -> Graph:
    """Incidence graph of nonzero vectors vs. affine hyperplanes off the origin."""
    if d < 2:
        raise FamilyParameterError("needs d >= 2")
    if prime_power(q) is None:
        raise FamilyParameterError(f"{q} is not a prime power")
    field = field_of_order(q)
    points, blocks = gdd_points_blocks(field, d)
    m = len(points)
    pt_index = {v: i for i, v in enumerate(points)}
    edges = []
    for j, blk in enumerate(blocks):
        for v in blk.points:
            edges.append((pt_index[v], m + j))
    labels = [str(v) for v in points] + [f"B{j}" for j in range(len(blocks))]
    return Graph.from_edges(m + len(blocks), edges, labels=labels)


def gamma_dqr(d: int, q: int, r: int) -> Graph:
    """Quotient of the affine-hyperplane incidence graph by a scalar subgroup.

    The subgroup N of order (q-1)/r generated by theta^r acts by scalar
    multiplication on points and blockwise on hyperplanes; the quotient is
    verified to be an |N|-fold cover image, never assumed.
    """
    if r < 1 or prime_power(q) is None or (q - 1) % r != 0:
        raise FamilyParameterError("needs a prime power q and r dividing q-1")
    g = gamma_dq(d, q)
    if r == q - 1:
        return g  # the scalar subgroup is trivial
    field = field_of_order(q)
    points, blocks = gdd_points_blocks(field, d)
    m = len(points)
    pt_index = {v: i for i, v in enumerate(points)}
    lam = field.power(field.theta, r)
    # orbits of N = <theta^r> on points, then on blocks via set images
    orbits: list[tuple[int, ...]] = []
    seen = [False] * g.n
    for i, v in enumerate(points):
        if seen[i]:
            continue
        orb = []
        w = v
        while not seen[pt_index[w]]:
            seen[pt_index[w]] = True
            orb.append(pt_index[w])
            w = vec_scale(field, lam, w)
        orbits.append(tuple(sorted(orb)))
    blk_key = {frozenset(b.points): m + j for j, b in enumerate(blocks)}
    for j, b in enumerate(blocks):
        if seen[m + j]:
            continue
        orb = []
        cur = frozenset(b.points)
        while not seen[blk_key[cur]]:
            seen[blk_key[cur]] = True
            orb.append(blk_key[cur])
            cur = frozenset(vec_scale(field, lam, v) for v in cur)
        orbits.append(tuple(sorted(orb)))
    if not is_n_cover(g, orbits):
        raise FamilyParameterError(
            f"scalar quotient of the (d={d}, q={q}) incidence graph is not a cover")
    return quotient_by_orbits(g, orbits)


# -- catalog -------------------------------------------------------------------

@dataclass(frozen=True)
class CatalogEntry:
    """A classified family member with its expected invariants."""

    family: str
    params: tuple[tuple[str, int], ...]
    graph: Graph
    expected: tuple[tuple[str, object], ...]

    @property
    def name(self) -> str:
        inner = ",".join(str(v) for _, v in self.params)
        return f"{self.family}({inner})" if inner else self.family

    def check_expected(self) -> list[str]:
        """Names of expected-property mismatches (empty when all hold)."""
        bad = []
        props = dict(self.expected)
        if "order" in props and self.graph.n != props["order"]:
            bad.append("order")
        if "valency" in props:
            if not self.graph.is_regular() or \
                    (self.graph.n and self.graph.degree(0) != props["valency"]):
                bad.append("valency")
        if "bipartite" in props and self.graph.is_bipartite() != props["bipartite"]:
            bad.append("bipartite")
        if "girth" in props and self.graph.girth() != props["girth"]:
            bad.append("girth")
        return bad


def _entry(family: str, params: Sequence[tuple[str, int]], graph: Graph,
           **expected: object) -> CatalogEntry:
    return CatalogEntry(family, tuple(params), graph,
                        tuple(sorted(expected.items())))


def _prime_powers(limit: int) -> list[int]:
    return [q for q in range(2, limit + 1) if prime_power(q) is not None]


def catalog_for_order(v: int) -> list[CatalogEntry]:
    """All classified-family members with exactly v vertices.

    Sweeps the parameter constraints of the ten families: xy = v for the
    multipartite graphs, v = 4n for the bipartite pair, 2(q^d-1)/(q-1) = v
    for the projective incidence pair, 2d(q+1) = v for the matching-deleted
    covers, 4(q+1) = v for the complete-graph covers, 2r(q^d-1)/(q-1) = v
    for the hyperplane quotients, and the fixed orders 16, 28 and 30.
    """
    out: list[CatalogEntry] = []
    if v < 4:
        return out
    # (1) complete multipartite K_{x[y]}, x >= 3, y >= 2
    for y in range(2, v // 3 + 1):
        if v % y == 0 and v // y >= 3:
            x = v // y
            out.append(_entry("K_multipartite", [("x", x), ("y", y)],
                              complete_multipartite(x, y),
                              order=v, valency=(x - 1) * y, girth=3))
    # (2)(3) complete bipartite and matching-deleted, v = 4n
    if v % 4 == 0:
        m = v // 2
        out.append(_entry("K_bipartite", [("m", m)], complete_bipartite(m),
                          order=v, valency=m, bipartite=True, girth=4))
        if v >= 12:
            out.append(_entry("K_bipartite_minus_matching", [("m", m)],
                              complete_bipartite_minus_matching(m),
                              order=v, valency=m - 1, bipartite=True, girth=4))
    # (4) projective point/hyperplane incidence graphs
    for q in _prime_powers(v):
        for d_vs in range(3, 40):
            count = (q ** d_vs - 1) // (q - 1)
            if 2 * count > v:
                break
            if 2 * count == v:
                val_b = (q ** (d_vs - 1) - 1) // (q - 1)
                out.append(_entry("PG_incidence", [("d", d_vs), ("q", q)],
                                  incidence_pg(d_vs, q, False),
                                  order=v, valency=val_b, bipartite=True))
                out.append(_entry("PG_incidence_complement",
                                  [("d", d_vs), ("q", q)],
                                  incidence_pg(d_vs, q, True),
                                  order=v, valency=q ** (d_vs - 1), bipartite=True))
    # (5) matching-deleted complete-bipartite cyclic covers K_{q+1}^{2d}
    for q in _prime_powers(v):
        if q % 2 == 0 or 2 * (q + 1) > v:
            continue
        if v % (2 * (q + 1)) == 0:
            d = v // (2 * (q + 1))
            if d >= 2 and (q - 1) % d == 0:
                out.append(_entry("K_cover", [("q", q), ("d", d)], kq1_2d(q, d),
                                  order=v, valency=q, bipartite=True))
    # (6) complete-graph Z_4 covers X_1(4,q)
    if v % 4 == 0:
        q = v // 4 - 1
        if q >= 3 and q % 4 == 3 and prime_power(q) is not None:
            out.append(_entry("X1_4q", [("q", q)], x1_4q(q),
                              order=v, valency=q))
    # (7) scalar quotients of affine-hyperplane incidence graphs
    for q in _prime_powers(v):
        for r in range(1, q):
            if (q - 1) % r != 0:
                continue
            for d in range(2, 40):
                count = (q ** d - 1) // (q - 1)
                if 2 * r * count > v:
                    break
                if 2 * r * count == v:
                    try:
                        g = gamma_dqr(d, q, r)
                    except FamilyParameterError:
                        continue
                    out.append(_entry("Gamma_dqr",
                                      [("d", d), ("q", q), ("r", r)], g,
                                      order=v))
    # (8)(9)(10) sporadic covers
    if v == 16:
        out.append(_entry("X_22", [], x_22(), order=16, valency=4, bipartite=True))
    if v == 28:
        out.append(_entry("X_prime_32", [], x_prime_32(),
                          order=28, valency=4, bipartite=True))
    if v == 30:
        out.append(_entry("X2_3", [], x2_3(), order=30, valency=4, bipartite=True))
    return out
