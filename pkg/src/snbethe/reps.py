"""Representation theory of the symmetric group over exact rationals:
partitions, irreducible characters, central idempotents, content polynomials,
Young's seminormal matrices on standard tableaux, and the faithful block model
of the group algebra as a direct sum of matrix algebras.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache

from .rings import BiPoly, UPoly
from .linalg import Matrix
from .permutations import (
    GroupAlgebraElement,
    Permutation,
    all_permutations,
    cycle_type,
)

Partition = tuple


def partitions_of(n: int) -> list:
    """All partitions of n in reverse-lexicographic (descending) order."""
    if n < 1:
        raise ValueError("n must be positive")

    out = []

    def rec(remaining, maxpart, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        for p in range(min(maxpart, remaining), 0, -1):
            rec(remaining - p, p, prefix + [p])

    rec(n, n, [])
    return out


def partition_parts(la, n: int) -> list:
    """Parts padded with zeros to length n."""
    return list(la) + [0] * (n - len(la))


@lru_cache(maxsize=None)
def _character_beta(la: Partition, mu: Partition) -> Fraction:
    # Murnaghan-Nakayama recursion on beta-sets: removing a border strip of
    # length k is subtracting k from one beta number, keeping them distinct.
    if not mu:
        return Fraction(1)
    m = len(la) if la else 1
    beta = [la[i] + (m - 1 - i) if i < len(la) else (m - 1 - i) for i in range(m)]
    k = mu[0]
    rest = mu[1:]
    total = Fraction(0)
    beta_set = set(beta)
    for i, b in enumerate(beta):
        nb = b - k
        if nb < 0 or nb in beta_set:
            continue
        newbeta = sorted([x for j, x in enumerate(beta) if j != i] + [nb], reverse=True)
        height = sum(1 for x in beta if nb < x < b)
        newla = tuple(
            x - (m - 1 - j) for j, x in enumerate(newbeta) if x - (m - 1 - j) > 0
        )
        total += Fraction((-1) ** height) * _character_beta(newla, rest)
    return total


def character(la, mu) -> Fraction:
    """Irreducible character value of shape la on the class of cycle type mu."""
    la = tuple(la)
    mu = tuple(sorted((m for m in mu if m), reverse=True))
    if sum(la) != sum(mu):
        raise ValueError("partition sizes differ")
    return _character_beta(la, mu)


@lru_cache(maxsize=None)
def standard_tableaux(la: Partition) -> tuple:
    """Standard tableaux of the given shape, in last-letter order: the tableau
    whose largest differing entry sits in the lower row comes first."""
    la = tuple(la)
    n = sum(la)

    results = []

    def rec(filled_rows, next_symbol):
        if next_symbol > n:
            results.append(tuple(tuple(r) for r in filled_rows))
            return
        for i in range(len(la)):
            if len(filled_rows[i]) < la[i] and (
                i == 0 or len(filled_rows[i - 1]) > len(filled_rows[i])
            ):
                filled_rows[i].append(next_symbol)
                rec(filled_rows, next_symbol + 1)
                filled_rows[i].pop()

    rec([[] for _ in la], 1)

    def rowseq(t):
        pos = {}
        for i, row in enumerate(t):
            for x in row:
                pos[x] = i
        return tuple(pos[k] for k in range(n, 0, -1))

    results.sort(key=rowseq, reverse=True)
    return tuple(results)


def tableau_positions(t) -> dict:
    """symbol -> (row, col), 1-based."""
    pos = {}
    for i, row in enumerate(t):
        for j, x in enumerate(row):
            pos[x] = (i + 1, j + 1)
    return pos


def tableau_content(t, k: int) -> int:
    i, j = tableau_positions(t)[k]
    return j - i


def dimension(la) -> int:
    return len(standard_tableaux(tuple(la)))


class IrrepAction:
    """Exact seminormal matrices of the adjacent transpositions on the
    standard-tableau basis.  Matrices act on coordinate columns; images of
    arbitrary permutations are built from a reduced word and cached."""

    def __init__(self, la):
        self.shape = tuple(la)
        self.n = sum(self.shape)
        self.tableaux = standard_tableaux(self.shape)
        self.dim = len(self.tableaux)
        self._index = {t: i for i, t in enumerate(self.tableaux)}
        self.gens = [self._gen_matrix(i) for i in range(1, self.n)]
        self._perm_cache = {Permutation.identity(self.n): Matrix.identity(self.dim)}

    def _gen_matrix(self, i: int) -> Matrix:
        d = self.dim
        rows = [[Fraction(0)] * d for _ in range(d)]
        done = set()
        for t_idx, t in enumerate(self.tableaux):
            if t_idx in done:
                continue
            pos = tableau_positions(t)
            (r1, c1), (r2, c2) = pos[i], pos[i + 1]
            if r1 == r2:
                rows[t_idx][t_idx] = Fraction(1)
                done.add(t_idx)
                continue
            if c1 == c2:
                rows[t_idx][t_idx] = Fraction(-1)
                done.add(t_idx)
                continue
            swapped = self._swap_symbols(t, i)
            s_idx = self._index[swapped]
            first, second = (t_idx, s_idx) if t_idx < s_idx else (s_idx, t_idx)
            tearly = self.tableaux[first]
            d_ax = Fraction(
                tableau_content(tearly, i + 1) - tableau_content(tearly, i)
            )
            rows[first][first] = 1 / d_ax
            rows[first][second] = 1 - 1 / d_ax**2
            rows[second][first] = Fraction(1)
            rows[second][second] = -1 / d_ax
            done.add(first)
            done.add(second)
        return Matrix(rows)

    @staticmethod
    def _swap_symbols(t, i):
        return tuple(
            tuple(i + 1 if x == i else (i if x == i + 1 else x) for x in row)
            for row in t
        )

    def matrix_of(self, p: Permutation) -> Matrix:
        cached = self._perm_cache.get(p)
        if cached is not None:
            return cached
        # left-multiplying by s_i swaps the VALUES i, i+1 in one-line notation,
        # so sorting the word back to the identity yields p = s_{i1} ... s_{ik}.
        w = list(p.images)
        word = []
        n = self.n
        pos = [0] * (n + 1)
        for idx, v in enumerate(w):
            pos[v] = idx
        changed = True
        while changed:
            changed = False
            for i in range(1, n):
                if pos[i + 1] < pos[i]:
                    word.append(i)
                    pos[i], pos[i + 1] = pos[i + 1], pos[i]
                    changed = True
        m = Matrix.identity(self.dim)
        for i in word:
            m = m * self.gens[i - 1]
        self._perm_cache[p] = m
        return m

    def matrix_of_ga(self, a: GroupAlgebraElement) -> Matrix:
        if a.n != self.n:
            raise ValueError("degree mismatch")
        acc = Matrix([[Fraction(0)] * self.dim for _ in range(self.dim)])
        for p, c in a.terms.items():
            acc = acc + self.matrix_of(p) * c
        return acc


@lru_cache(maxsize=None)
def seminormal_rep(la: Partition) -> IrrepAction:
    return IrrepAction(tuple(la))


class BlockMatrix:
    """One exact matrix per partition of n, in reverse-lexicographic order:
    the image of a group-algebra element in the direct sum of all irreducible
    matrix blocks."""

    __slots__ = ("n", "partitions", "blocks")

    def __init__(self, n: int, blocks, partitions=None):
        self.n = n
        self.partitions = list(partitions) if partitions else partitions_of(n)
        self.blocks = list(blocks)
        if len(self.blocks) != len(self.partitions):
            raise ValueError("one block per partition required")

    @classmethod
    def identity(cls, n: int) -> "BlockMatrix":
        return cls(n, [Matrix.identity(dimension(la)) for la in partitions_of(n)])

    def __add__(self, other):
        return BlockMatrix(
            self.n, [a + b for a, b in zip(self.blocks, other.blocks)], self.partitions
        )

    def __sub__(self, other):
        return BlockMatrix(
            self.n, [a - b for a, b in zip(self.blocks, other.blocks)], self.partitions
        )

    def __mul__(self, other):
        if isinstance(other, BlockMatrix):
            return BlockMatrix(
                self.n,
                [a * b for a, b in zip(self.blocks, other.blocks)],
                self.partitions,
            )
        return BlockMatrix(self.n, [b * other for b in self.blocks], self.partitions)

    def __rmul__(self, other):
        return BlockMatrix(self.n, [other * b for b in self.blocks], self.partitions)

    def __neg__(self):
        return BlockMatrix(self.n, [-b for b in self.blocks], self.partitions)

    def __eq__(self, other):
        if isinstance(other, BlockMatrix):
            return self.n == other.n and self.blocks == other.blocks
        return NotImplemented

    def __hash__(self):
        return hash((self.n, tuple(self.blocks)))

    def is_zero(self) -> bool:
        return all(b.is_zero() for b in self.blocks)

    def __bool__(self):
        return not self.is_zero()

    def flatten(self) -> list:
        out = []
        for b in self.blocks:
            out.extend(b.flatten())
        return out

    def block(self, la) -> Matrix:
        return self.blocks[self.partitions.index(tuple(la))]

    def to_json(self):
        return [
            {"partition": list(la), "matrix": b.to_json()}
            for la, b in zip(self.partitions, self.blocks)
        ]


def represent(a, la=None):
    """Image in one irreducible block (la given) or in the full block model.

    Accepts a group-algebra element, or a polynomial (UPoly/BiPoly) with
    group-algebra coefficients, in which case the result is the same
    polynomial with block-matrix coefficients.
    """
    if isinstance(a, (UPoly, BiPoly)):
        return a.map_coeffs(lambda c: represent(_as_ga_block_input(a, c), la))
    if la is not None:
        rep = seminormal_rep(tuple(la))
        if rep.n != a.n:
            raise ValueError("degree mismatch")
        return rep.matrix_of_ga(a)
    return BlockMatrix(
        a.n, [seminormal_rep(mu).matrix_of_ga(a) for mu in partitions_of(a.n)]
    )


def _as_ga_block_input(poly, c):
    if isinstance(c, GroupAlgebraElement):
        return c
    for other in (poly.coeffs if isinstance(poly, UPoly)
                  else (x for row in poly.rows for x in row)):
        if isinstance(other, GroupAlgebraElement):
            return GroupAlgebraElement.scalar(other.n, c)
    raise ValueError("polynomial has no group-algebra coefficient to fix the degree")


def represent_poly(poly: UPoly, n: int) -> list:
    """Blockwise image of a polynomial with group-algebra coefficients:
    the list of BlockMatrix coefficients, lowest degree first."""
    return [
        represent(c if isinstance(c, GroupAlgebraElement) else
                  GroupAlgebraElement.scalar(n, c))
        for c in poly.coeffs
    ]


def central_idempotent(la, n: int) -> GroupAlgebraElement:
    """chi_la = (dim/n!) sum over sigma of character(la, type(sigma)) * sigma."""
    la = tuple(la)
    if sum(la) != n:
        raise ValueError("partition size mismatch")
    d = Fraction(dimension(la), math.factorial(n))
    char_by_type = {}
    terms = {}
    for p in all_permutations(n):
        ct = cycle_type(p)
        if ct not in char_by_type:
            char_by_type[ct] = character(la, ct)
        c = d * char_by_type[ct]
        if c:
            terms[p] = c
    return GroupAlgebraElement(n, terms)


def content_poly(la, n: int) -> UPoly:
    """Monic polynomial in v whose roots are the box contents of the diagram:
    the product of (v + i - j) over boxes (i, j)."""
    la = tuple(la)
    if sum(la) != n:
        raise ValueError("partition size mismatch")
    poly = UPoly([Fraction(1)])
    for i, part in enumerate(la, start=1):
        for j in range(1, part + 1):
            poly = poly * UPoly([Fraction(i - j), Fraction(1)])
    return poly


def content_product_all(n: int) -> UPoly:
    """Sum over partitions of chi_la times the content polynomial, as a
    polynomial in v with group-algebra coefficients."""
    acc = UPoly()
    for la in partitions_of(n):
        chi = central_idempotent(la, n)
        acc = acc + content_poly(la, n).map_coeffs(lambda c, chi=chi: c * chi)
    return acc


def sum_of_dims(n: int) -> int:
    return sum(dimension(la) for la in partitions_of(n))
