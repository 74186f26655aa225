"""GF(q) arithmetic, subspace enumeration and the incidence-design objects.

Field elements are the integers 0..q-1, read as base-p digit vectors
(low digit = constant coefficient).  The modulus is the lexicographically
smallest monic irreducible polynomial (coefficients compared low-to-high),
and the primitive element is the smallest generator in the same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations, product
from typing import Iterator, Sequence


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def prime_power(q: int) -> tuple[int, int] | None:
    """Return (p, k) with q = p^k, or None if q is not a prime power."""
    if q < 2:
        return None
    for p in range(2, q + 1):
        if q % p == 0:
            if not is_prime(p):
                return None
            k, m = 0, q
            while m % p == 0:
                m //= p
                k += 1
            return (p, k) if m == 1 else None
    return None


# -- polynomial helpers over GF(p), coefficient tuples low-to-high ----------

def _poly_mod(num: list[int], den: Sequence[int], p: int) -> list[int]:
    num = num[:]
    dd = len(den) - 1
    while len(num) - 1 >= dd and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dd:
            break
        shift = len(num) - 1 - dd
        c = num[-1]  # den is monic
        for i, d in enumerate(den):
            num[shift + i] = (num[shift + i] - c * d) % p
    while num and num[-1] == 0:
        num.pop()
    return num


def _poly_divisible(num: Sequence[int], den: Sequence[int], p: int) -> bool:
    return not _poly_mod(list(num), den, p)


def _monic_polys(degree: int, p: int) -> Iterator[tuple[int, ...]]:
    """Monic degree-d polynomials in lex order of (c_0, ..., c_{d-1})."""
    for low in product(range(p), repeat=degree):
        yield tuple(low) + (1,)


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    deg = len(poly) - 1
    if deg == 1:
        return True
    if poly[0] == 0:
        return False
    for d in range(1, deg // 2 + 1):
        for cand in _monic_polys(d, p):
            if _poly_divisible(poly, cand, p):
                return False
    return True


class FieldGF:
    """The finite field GF(p^k) with log/exp tables for fast arithmetic."""

    def __init__(self, p: int, k: int):
        if not is_prime(p):
            raise ValueError(f"{p} is not prime")
        if k < 1:
            raise ValueError("degree must be >= 1")
        self.p = p
        self.k = k
        self.q = p ** k
        if self.q > 1 << 16:
            raise ValueError("field too large (q > 2^16)")
        self.modulus = self._find_modulus()
        self._mul_cache: dict[tuple[int, int], int] = {}
        self.theta = self._find_primitive()
        self._exp = [1] * (self.q - 1)
        self._log = {1: 0}
        x = 1
        for h in range(1, self.q - 1):
            x = self.mul(x, self.theta)
            self._exp[h] = x
            self._log[x] = h

    # element <-> digit vector
    def digits(self, x: int) -> tuple[int, ...]:
        out = []
        for _ in range(self.k):
            out.append(x % self.p)
            x //= self.p
        return tuple(out)

    def from_digits(self, ds: Sequence[int]) -> int:
        x = 0
        for d in reversed(ds):
            x = x * self.p + d % self.p
        return x

    def _find_modulus(self) -> tuple[int, ...]:
        if self.k == 1:
            return (0, 1)
        for poly in _monic_polys(self.k, self.p):
            if _is_irreducible(poly, self.p):
                return poly
        raise RuntimeError("no irreducible polynomial found")

    def add(self, x: int, y: int) -> int:
        dx, dy = self.digits(x), self.digits(y)
        return self.from_digits([(a + b) % self.p for a, b in zip(dx, dy)])

    def neg(self, x: int) -> int:
        return self.from_digits([(-a) % self.p for a in self.digits(x)])

    def sub(self, x: int, y: int) -> int:
        return self.add(x, self.neg(y))

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        key = (x, y) if x <= y else (y, x)
        got = self._mul_cache.get(key)
        if got is not None:
            return got
        dx, dy = self.digits(x), self.digits(y)
        prod = [0] * (2 * self.k - 1)
        for i, a in enumerate(dx):
            if a:
                for j, b in enumerate(dy):
                    prod[i + j] = (prod[i + j] + a * b) % self.p
        rem = _poly_mod(prod, self.modulus, self.p)
        rem += [0] * (self.k - len(rem))
        val = self.from_digits(rem)
        self._mul_cache[key] = val
        return val

    def power(self, x: int, e: int) -> int:
        if x == 0:
            if e == 0:
                return 1
            if e < 0:
                raise ZeroDivisionError("0 has no negative powers")
            return 0
        e %= self.q - 1
        r = 1
        base = x
        while e:
            if e & 1:
                r = self.mul(r, base)
            base = self.mul(base, base)
            e >>= 1
        return r

    def inv(self, x: int) -> int:
        if x == 0:
            raise ZeroDivisionError("0 is not invertible")
        return self.power(x, self.q - 2)

    def _lex_key(self, x: int) -> tuple[int, ...]:
        return self.digits(x)

    def _find_primitive(self) -> int:
        target = self.q - 1
        for x in sorted(range(1, self.q), key=self._lex_key):
            y, order = x, 1
            while y != 1:
                y = self.mul(y, x)
                order += 1
            if order == target:
                return x
        raise RuntimeError("no primitive element found")

    def discrete_log(self, x: int) -> int:
        """h with theta^h = x; rejects x = 0."""
        if x == 0:
            raise ValueError("discrete log of zero is undefined")
        return self._log[x]

    def nonzero(self) -> range:
        return range(1, self.q)

    def __repr__(self) -> str:
        return f"GF({self.q})"


_field_cache: dict[tuple[int, int], FieldGF] = {}


def make_field(p: int, k: int = 1) -> FieldGF:
    key = (p, k)
    if key not in _field_cache:
        _field_cache[key] = FieldGF(p, k)
    return _field_cache[key]


def field_of_order(q: int) -> FieldGF:
    pk = prime_power(q)
    if pk is None:
        raise ValueError(f"{q} is not a prime power")
    return make_field(*pk)


def squares_and_nonsquares(field: FieldGF) -> tuple[frozenset[int], frozenset[int]]:
    """Partition of GF(q)* into squares S(q) and non-squares N(q); q odd."""
    if field.q % 2 == 0:
        raise ValueError("squares/non-squares split needs odd q")
    squares = frozenset(field.mul(x, x) for x in field.nonzero())
    nonsquares = frozenset(field.nonzero()) - squares
    return squares, nonsquares


# -- linear algebra over GF(q): vectors are tuples of field elements --------

def vec_add(field: FieldGF, u: Sequence[int], v: Sequence[int]) -> tuple[int, ...]:
    return tuple(field.add(a, b) for a, b in zip(u, v))

def vec_scale(field: FieldGF, c: int, v: Sequence[int]) -> tuple[int, ...]:
    return tuple(field.mul(c, a) for a in v)


def rref(field: FieldGF, rows: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Reduced row echelon form, zero rows dropped; canonical per row space."""
    mat = [list(r) for r in rows]
    if not mat:
        return ()
    ncols = len(mat[0])
    pivot_row = 0
    for col in range(ncols):
        sel = None
        for r in range(pivot_row, len(mat)):
            if mat[r][col] != 0:
                sel = r
                break
        if sel is None:
            continue
        mat[pivot_row], mat[sel] = mat[sel], mat[pivot_row]
        inv = field.inv(mat[pivot_row][col])
        mat[pivot_row] = [field.mul(inv, a) for a in mat[pivot_row]]
        for r in range(len(mat)):
            if r != pivot_row and mat[r][col] != 0:
                c = mat[r][col]
                mat[r] = [field.sub(a, field.mul(c, b))
                          for a, b in zip(mat[r], mat[pivot_row])]
        pivot_row += 1
        if pivot_row == len(mat):
            break
    out = [tuple(r) for r in mat[:pivot_row] if any(r)]
    return tuple(out)


@dataclass(frozen=True)
class Subspace:
    """Subspace of GF(q)^d given by its RREF basis (canonical)."""

    dimension: int
    basis: tuple[tuple[int, ...], ...]

    @property
    def ambient_dim(self) -> int:
        return len(self.basis[0]) if self.basis else 0


def subspace_from_vectors(field: FieldGF, vecs: Sequence[Sequence[int]],
                          ambient: int | None = None) -> Subspace:
    basis = rref(field, vecs)
    return Subspace(len(basis), basis)


def subspace_points(field: FieldGF, sub: Subspace) -> list[tuple[int, ...]]:
    """All vectors of the subspace (including zero)."""
    if not sub.basis:
        return []
    d = len(sub.basis[0])
    pts = []
    for coeffs in product(range(field.q), repeat=sub.dimension):
        v = tuple([0] * d)
        for c, row in zip(coeffs, sub.basis):
            if c:
                v = vec_add(field, v, vec_scale(field, c, row))
        pts.append(v)
    return pts


def subspace_contains(field: FieldGF, sub: Subspace, vec: Sequence[int]) -> bool:
    stacked = rref(field, list(sub.basis) + [list(vec)])
    return len(stacked) == sub.dimension


def gaussian_binomial(d: int, k: int, q: int) -> int:
    if k < 0 or k > d:
        return 0
    num = den = 1
    for i in range(k):
        num *= q ** (d - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def enumerate_subspaces(field: FieldGF, d: int, dim: int) -> list[Subspace]:
    """All dim-dimensional subspaces of GF(q)^d as canonical RREF bases.

    Enumerates reduced echelon matrices by pivot-column pattern; the count
    matches the Gaussian binomial coefficient.
    """
    if dim < 0 or dim > d:
        raise ValueError("0 <= dim <= d required")
    if dim == 0:
        return [Subspace(0, ())]
    out = []
    for pivots in combinations(range(d), dim):
        free_slots = []
        for r, pc in enumerate(pivots):
            for c in range(pc + 1, d):
                if c not in pivots:
                    free_slots.append((r, c))
        for vals in product(range(field.q), repeat=len(free_slots)):
            mat = [[0] * d for _ in range(dim)]
            for r, pc in enumerate(pivots):
                mat[r][pc] = 1
            for (r, c), v in zip(free_slots, vals):
                mat[r][c] = v
            out.append(Subspace(dim, tuple(tuple(r) for r in mat)))
    out.sort(key=lambda s: s.basis)
    return out


# -- design-theoretic objects ------------------------------------------------

def biplane_h11() -> tuple[list[int], list[frozenset[int]]]:
    """The unique symmetric (11,5,2)-design as translates of a QR block."""
    base = (1, 3, 4, 5, 9)  # quadratic residues mod 11
    points = list(range(11))
    blocks = [frozenset((x + t) % 11 for x in base) for t in range(11)]
    return points, blocks


@dataclass(frozen=True)
class AffineHyperplane:
    """Coset rep + H for an affine hyperplane x + H not through the origin."""

    hyperplane: Subspace
    rep: tuple[int, ...]
    points: frozenset[tuple[int, ...]]


def gdd_points_blocks(field: FieldGF, d: int
                      ) -> tuple[list[tuple[int, ...]], list[AffineHyperplane]]:
    """Nonzero vectors of GF(q)^d vs. affine hyperplanes off the origin.

    This is the GDD(q-1, (q^d-1)/(q-1); q^{d-1}; 0, q^{d-2}) with the dual
    property; its incidence graph underlies the quotient-family constructors.
    """
    if d < 2:
        raise ValueError("d >= 2 required")
    zero = tuple([0] * d)
    points = [v for v in product(range(field.q), repeat=d) if v != zero]
    blocks = []
    for h in enumerate_subspaces(field, d, d - 1):
        hpts = set(subspace_points(field, h))
        cosets_seen = set()
        for x in points:
            if x in hpts:
                continue
            coset = frozenset(vec_add(field, x, p) for p in hpts)
            rep = min(coset)
            if rep in cosets_seen:
                continue
            cosets_seen.add(rep)
            blocks.append(AffineHyperplane(h, rep, coset))
    blocks.sort(key=lambda b: (b.hyperplane.basis, b.rep))
    return points, blocks
