"""Finite group arithmetic for generalized quaternion, dihedral and cyclic groups.

Elements of a group of order m are the indices 0..m-1 with 0 the identity.
For the generalized quaternion group Q_4n the element a^i b^j gets index
i + 2n*j, so the index encodes the normal form directly.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd
from typing import Iterable, Sequence


@dataclass(frozen=True)
class QElement:
    """Element a^exp_a * b^has_b of Q_4n, exponents reduced."""

    exp_a: int
    has_b: int

    def index(self, n: int) -> int:
        return self.exp_a + 2 * n * self.has_b


def q_element(index: int, n: int) -> QElement:
    return QElement(index % (2 * n), index // (2 * n))


def q_multiply(g: QElement, h: QElement, n: int) -> QElement:
    """Product in Q_4n under a^{2n}=1, b^2=a^n, b^{-1}ab=a^{-1}.

    (k,0)(m,j) = (k+m, j); (k,1)(m,0) = (k-m, 1); (k,1)(m,1) = (k-m+n, 0).
    """
    m2 = 2 * n
    if g.has_b == 0:
        return QElement((g.exp_a + h.exp_a) % m2, h.has_b)
    if h.has_b == 0:
        return QElement((g.exp_a - h.exp_a) % m2, 1)
    return QElement((g.exp_a - h.exp_a + n) % m2, 0)


def q_inverse(g: QElement, n: int) -> QElement:
    m2 = 2 * n
    if g.has_b == 0:
        return QElement((-g.exp_a) % m2, 0)
    # (k,1)^-1 = (k+n, 1): (k,1)(k+n,1) = (k-(k+n)+n, 0) = (0,0)
    return QElement((g.exp_a + n) % m2, 1)


@dataclass(frozen=True)
class SubgroupDescriptor:
    """A subgroup given by generators and its full, sorted element set."""

    generators: tuple[int, ...]
    elements: tuple[int, ...]
    is_normal: bool

    @property
    def order(self) -> int:
        return len(self.elements)


class FiniteGroup:
    """Group defined by an explicit multiplication table on 0..order-1."""

    def __init__(self, table: Sequence[Sequence[int]], kind: str = "generic",
                 names: Sequence[str] | None = None):
        self.table = tuple(tuple(row) for row in table)
        self.order = len(self.table)
        self.kind = kind
        self.names = tuple(names) if names else tuple(str(i) for i in range(self.order))
        if self.table[0] != tuple(range(self.order)):
            raise ValueError("element 0 must be the identity")
        self._inv = [0] * self.order
        for g in range(self.order):
            for h in range(self.order):
                if self.table[g][h] == 0:
                    self._inv[g] = h
                    break

    def mult(self, g: int, h: int) -> int:
        return self.table[g][h]

    def inv(self, g: int) -> int:
        return self._inv[g]

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != 0:
            x = self.table[x][g]
            k += 1
        return k

    def elements(self) -> range:
        return range(self.order)

    def subgroup_generated(self, gens: Iterable[int]) -> tuple[int, ...]:
        seen = {0}
        frontier = [0]
        gens = list(gens)
        while frontier:
            x = frontier.pop()
            for s in gens:
                y = self.table[x][s]
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return tuple(sorted(seen))

    def is_normal(self, elements: Iterable[int]) -> bool:
        elems = set(elements)
        for g in range(self.order):
            gi = self._inv[g]
            for x in elems:
                if self.table[self.table[g][x]][gi] not in elems:
                    return False
        return True

    def subgroup(self, gens: Iterable[int]) -> SubgroupDescriptor:
        gens = tuple(gens)
        elems = self.subgroup_generated(gens)
        return SubgroupDescriptor(gens, elems, self.is_normal(elems))

    def center(self) -> SubgroupDescriptor:
        cent = [g for g in range(self.order)
                if all(self.table[g][h] == self.table[h][g] for h in range(self.order))]
        return SubgroupDescriptor(tuple(cent), tuple(cent), True)

    def is_abelian(self) -> bool:
        return len(self.center().elements) == self.order

    def __repr__(self) -> str:
        return f"FiniteGroup({self.kind}, order={self.order})"


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("n must be positive")
    table = [[(i + j) % n for j in range(n)] for i in range(n)]
    return FiniteGroup(table, kind=f"Cyclic({n})",
                       names=[f"g{i}" if i else "1" for i in range(n)])


def klein_four_group() -> FiniteGroup:
    table = [[j ^ i for j in range(4)] for i in range(4)]
    return FiniteGroup(table, kind="Z2xZ2", names=["1", "u", "v", "uv"])


def dihedral_group(n: int) -> FiniteGroup:
    """D_2n = <s,t | s^n = t^2 = 1, tst = s^-1>; index of s^i t^j is i + n*j."""
    if n < 1:
        raise ValueError("n must be positive")

    def mul(x: int, y: int) -> int:
        i, j = x % n, x // n
        m, l = y % n, y // n
        if j == 0:
            return (i + m) % n + n * l
        return (i - m) % n + n * (1 - l)

    table = [[mul(x, y) for y in range(2 * n)] for x in range(2 * n)]
    names = [(f"s{i}" if i else "1") if j == 0 else (f"s{i}t" if i else "t")
             for j in (0, 1) for i in range(n)]
    return FiniteGroup(table, kind=f"Dihedral({n})", names=names)


class QuaternionGroup(FiniteGroup):
    """Generalized quaternion (dicyclic) group Q_4n, n >= 2."""

    def __init__(self, n: int):
        if n < 2:
            raise ValueError("generalized quaternion group needs n >= 2")
        self.n = n
        m2 = 2 * n

        def mul(x: int, y: int) -> int:
            g = q_multiply(q_element(x, n), q_element(y, n), n)
            return g.index(n)

        table = [[mul(x, y) for y in range(4 * n)] for x in range(4 * n)]
        names = []
        for j in (0, 1):
            for i in range(m2):
                stem = "" if i == 0 else ("a" if i == 1 else f"a{i}")
                if j:
                    stem += "b"
                names.append(stem or "1")
        super().__init__(table, kind=f"GeneralizedQuaternion({n})", names=names)
        self.a = 1
        self.b = m2

    def a_power(self, i: int) -> int:
        return i % (2 * self.n)

    def element(self, exp_a: int, has_b: int) -> int:
        return QElement(exp_a % (2 * self.n), has_b).index(self.n)


def quaternion_group(n: int) -> QuaternionGroup:
    return QuaternionGroup(n)


def normal_subgroups(group: QuaternionGroup) -> list[SubgroupDescriptor]:
    """All normal subgroups of Q_4n, deduplicated and sorted by order.

    For n odd: 1, Q_4n and <a^{2n/k}> for k | 2n.  For n even additionally
    <a^2, b> and <a^2, ab>.
    """
    if not isinstance(group, QuaternionGroup):
        raise TypeError("normal_subgroups expects a QuaternionGroup")
    n = group.n
    m2 = 2 * n
    gen_sets: list[tuple[int, ...]] = [(), tuple([group.a, group.b])]
    for k in divisors(m2):
        gen_sets.append((group.a_power(m2 // k),))
    if n % 2 == 0:
        gen_sets.append((group.element(2, 0), group.element(0, 1)))
        gen_sets.append((group.element(2, 0), group.element(1, 1)))
    seen: dict[tuple[int, ...], SubgroupDescriptor] = {}
    for gens in gen_sets:
        sub = group.subgroup(gens)
        if sub.elements not in seen:
            seen[sub.elements] = sub
    return sorted(seen.values(), key=lambda s: (s.order, s.elements))


def quotient_group(group: FiniteGroup, sub: SubgroupDescriptor) -> FiniteGroup:
    """Coset group G/N with minimal-index coset representatives."""
    if not group.is_normal(sub.elements):
        raise ValueError("subgroup is not normal")
    elems = set(sub.elements)
    if 0 not in elems:
        raise ValueError("subgroup must contain the identity")
    rep_of: dict[int, int] = {}
    reps: list[int] = []
    for g in range(group.order):
        if g in rep_of:
            continue
        coset = sorted(group.mult(g, x) for x in elems)
        r = coset[0]
        reps.append(r)
        for y in coset:
            rep_of[y] = r
    reps.sort()
    pos = {r: i for i, r in enumerate(reps)}
    table = [[pos[rep_of[group.mult(x, y)]] for y in reps] for x in reps]
    names = [group.names[r] + "N" for r in reps]
    return FiniteGroup(table, kind=f"{group.kind}/N{len(elems)}", names=names)


def all_subgroups(group: FiniteGroup) -> list[tuple[int, ...]]:
    """Brute-force enumeration of all subgroups (closure growing).

    Oracle-grade: intended for orders <= ~50.
    """
    found = {(0,)}
    frontier = [(0,)]
    while frontier:
        h = frontier.pop()
        hset = set(h)
        for g in range(1, group.order):
            if g in hset:
                continue
            new = group.subgroup_generated(list(h) + [g])
            if new not in found:
                found.add(new)
                frontier.append(new)
    return sorted(found, key=lambda e: (len(e), e))


def _generating_sequence(group: FiniteGroup) -> list[int]:
    gens: list[int] = []
    span = {0}
    for g in range(1, group.order):
        if g not in span:
            gens.append(g)
            span = set(group.subgroup_generated(gens))
            if len(span) == group.order:
                break
    return gens


def groups_isomorphic(g1: FiniteGroup, g2: FiniteGroup) -> bool:
    """Decide isomorphism of two small groups by generator-image search."""
    if g1.order != g2.order:
        return False
    orders1 = sorted(g1.element_order(x) for x in range(g1.order))
    orders2 = sorted(g2.element_order(x) for x in range(g2.order))
    if orders1 != orders2:
        return False
    gens = _generating_sequence(g1)
    gen_orders = [g1.element_order(g) for g in gens]
    # words expressing every element of g1 over gens, via BFS
    word_parent: dict[int, tuple[int, int]] = {}  # elem -> (prev elem, gen idx)
    frontier = [0]
    seen = {0}
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = g1.mult(x, g)
                if y not in seen:
                    seen.add(y)
                    word_parent[y] = (x, gi)
                    nxt.append(y)
        frontier = nxt

    candidates = [[h for h in range(g2.order) if g2.element_order(h) == o]
                  for o in gen_orders]

    def try_images(images: list[int]) -> bool:
        phi = {0: 0}
        pending = list(word_parent.items())
        resolved = {0}
        while pending:
            progressed = False
            rest = []
            for y, (x, gi) in pending:
                if x in resolved:
                    phi[y] = g2.mult(phi[x], images[gi])
                    resolved.add(y)
                    progressed = True
                else:
                    rest.append((y, (x, gi)))
            pending = rest
            if not progressed:
                raise RuntimeError("word table inconsistent")
        if len(set(phi.values())) != g2.order:
            return False
        for x in range(g1.order):
            for y in range(g1.order):
                if phi[g1.mult(x, y)] != g2.mult(phi[x], phi[y]):
                    return False
        return True

    def backtrack(i: int, images: list[int]) -> bool:
        if i == len(gens):
            return try_images(images)
        for h in candidates[i]:
            if backtrack(i + 1, images + [h]):
                return True
        return False

    if not gens:
        return True
    return backtrack(0, [])


def divisors(m: int) -> list[int]:
    out = [d for d in range(1, m + 1) if m % d == 0]
    return out


def element_order_qe(g: QElement, n: int) -> int:
    """Order of a Q_4n element from the closed form relations."""
    if g.has_b:
        return 4  # (a^k b)^2 = a^n which has order 2
    if g.exp_a == 0:
        return 1
    return (2 * n) // gcd(g.exp_a, 2 * n)
