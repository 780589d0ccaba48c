"""Permutations, the sparse group algebra of the symmetric group over
pluggable coefficient rings, embeddings, the antisymmetrizer, the two
antiinvolutions, and the parametrized cycle-deletion trace map.

Composition convention: in a product p*q the RIGHT factor acts first,
(p*q)(i) = p(q(i)).  This is pinned by the requirement that the product of
transpositions s(i1,i2) s(i2,i3) ... s(i_{k-1},i_k) is the increasing k-cycle
(i1 i2 ... ik); see tests.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Number
from itertools import permutations as _itperms

from .rings import UPoly


class Permutation:
    """Permutation of {1..n} in one-line notation: images[i] = image of i+1."""

    __slots__ = ("images", "_hash")

    def __init__(self, images):
        self.images = tuple(images)
        self._hash = hash(self.images)
        if sorted(self.images) != list(range(1, len(self.images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(self.images)}: {images}")

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, a: int, b: int) -> "Permutation":
        if not (1 <= a <= n and 1 <= b <= n and a != b):
            raise ValueError(f"bad transposition ({a},{b}) in degree {n}")
        im = list(range(1, n + 1))
        im[a - 1], im[b - 1] = b, a
        return cls(im)

    @classmethod
    def cycle(cls, n: int, symbols) -> "Permutation":
        im = list(range(1, n + 1))
        syms = list(symbols)
        for i, s in enumerate(syms):
            im[s - 1] = syms[(i + 1) % len(syms)]
        return cls(im)

    @property
    def degree(self) -> int:
        return len(self.images)

    def __call__(self, i: int) -> int:
        return self.images[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        # right factor acts first: (p*q)(i) = p(q(i))
        if len(self.images) != len(other.images):
            raise ValueError("degree mismatch")
        p = self.images
        return Permutation(tuple(p[j - 1] for j in other.images))

    def inverse(self) -> "Permutation":
        inv = [0] * len(self.images)
        for i, j in enumerate(self.images):
            inv[j - 1] = i + 1
        return Permutation(inv)

    def is_identity(self) -> bool:
        return all(self.images[i] == i + 1 for i in range(len(self.images)))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return self._hash

    def __lt__(self, other):
        return self.images < other.images

    def __repr__(self):
        return f"Permutation({list(self.images)})"

    def to_json(self):
        return list(self.images)


def compose(p: Permutation, q: Permutation) -> Permutation:
    return p * q


@dataclass(frozen=True)
class CycleData:
    cycles: tuple
    orbit_count: int
    sign: int


def cycle_data(p: Permutation) -> CycleData:
    """Cycle decomposition with fixed points kept as 1-cycles."""
    n = p.degree
    seen = [False] * (n + 1)
    cycles = []
    for start in range(1, n + 1):
        if seen[start]:
            continue
        cyc = [start]
        seen[start] = True
        j = p(start)
        while j != start:
            cyc.append(j)
            seen[j] = True
            j = p(j)
        cycles.append(tuple(cyc))
    c = len(cycles)
    return CycleData(tuple(cycles), c, (-1) ** (n - c))


def sign(p: Permutation) -> int:
    return cycle_data(p).sign


def cycle_type(p: Permutation) -> tuple:
    return tuple(sorted((len(c) for c in cycle_data(p).cycles), reverse=True))


def all_permutations(n: int):
    return [Permutation(im) for im in _itperms(range(1, n + 1))]


def _as_coeff_zero_test(c):
    return not c


class GroupAlgebraElement:
    """Sparse element of the group algebra of S_n: dict Permutation -> coeff.

    Coefficients may be Fractions, floats, or UPoly (auxiliary variables);
    scalars occurring in mixed arithmetic are read as scalar multiples of the
    identity permutation.  Zero coefficients are never stored.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        self.n = n
        self.terms = {}
        if terms:
            for p, c in terms.items():
                if not _as_coeff_zero_test(c):
                    self.terms[p] = c

    @classmethod
    def zero(cls, n: int) -> "GroupAlgebraElement":
        return cls(n)

    @classmethod
    def scalar(cls, n: int, c) -> "GroupAlgebraElement":
        return cls(n, {Permutation.identity(n): c})

    @classmethod
    def from_perm(cls, p: Permutation, c=Fraction(1)) -> "GroupAlgebraElement":
        return cls(p.degree, {p: c})

    def ring_one(self) -> "GroupAlgebraElement":
        return GroupAlgebraElement.scalar(self.n, Fraction(1))

    def __bool__(self):
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff(self, p: Permutation):
        return self.terms.get(p, 0)

    def _coerce(self, other) -> "GroupAlgebraElement":
        if isinstance(other, GroupAlgebraElement):
            if other.n != self.n:
                raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
            return other
        return GroupAlgebraElement.scalar(self.n, other)

    def __eq__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return self.n == other.n and self.terms == other.terms
        if isinstance(other, (Number, UPoly)):
            return self == GroupAlgebraElement.scalar(self.n, other)
        return NotImplemented

    def __hash__(self):
        return hash((self.n, frozenset(self.terms.items())))

    def __neg__(self):
        return GroupAlgebraElement(self.n, {p: -c for p, c in self.terms.items()})

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for p, c in other.terms.items():
            s = out.get(p, 0) + c
            if _as_coeff_zero_test(s):
                out.pop(p, None)
            else:
                out[p] = s
        return GroupAlgebraElement(self.n, out)

    __radd__ = __add__

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            if other.n != self.n:
                raise ValueError(f"degree mismatch: {self.n} vs {other.n}")
            out = {}
            for p, a in self.terms.items():
                pim = p.images
                for q, b in other.terms.items():
                    r = Permutation(tuple(pim[j - 1] for j in q.images))
                    s = out.get(r, 0) + a * b
                    if _as_coeff_zero_test(s):
                        out.pop(r, None)
                    else:
                        out[r] = s
            return GroupAlgebraElement(self.n, out)
        return GroupAlgebraElement(
            self.n, {p: c * other for p, c in self.terms.items()}
        )

    def __rmul__(self, other):
        return GroupAlgebraElement(
            self.n, {p: other * c for p, c in self.terms.items()}
        )

    def map_coeffs(self, f) -> "GroupAlgebraElement":
        return GroupAlgebraElement(self.n, {p: f(c) for p, c in self.terms.items()})

    def dagger(self) -> "GroupAlgebraElement":
        """Linear antiinvolution: each permutation goes to its inverse."""
        return GroupAlgebraElement(
            self.n, {p.inverse(): c for p, c in self.terms.items()}
        )

    def star(self) -> "GroupAlgebraElement":
        """Semilinear antiinvolution: inverse permutations, conjugated coefficients."""
        return GroupAlgebraElement(
            self.n, {p.inverse(): _conjugate(c) for p, c in self.terms.items()}
        )

    def support(self):
        return sorted(self.terms.keys(), key=lambda p: p.images)

    def to_json(self):
        out = []
        for p in self.support():
            c = self.terms[p]
            if isinstance(c, Fraction):
                cj = f"{c.numerator}/{c.denominator}"
            elif hasattr(c, "to_json"):
                cj = c.to_json()
            else:
                cj = c
            out.append({"perm": list(p.images), "coeff": cj})
        return out

    def __repr__(self):
        parts = [f"{c!r}*{list(p.images)}" for p, c in sorted(
            self.terms.items(), key=lambda t: t[0].images)]
        return "GA(" + (" + ".join(parts) if parts else "0") + ")"


def _conjugate(c):
    conj = getattr(c, "conjugate", None)
    if conj is not None:
        return conj()
    if isinstance(c, UPoly):
        return c.map_coeffs(_conjugate)
    return c


def ga_identity(n: int) -> GroupAlgebraElement:
    return GroupAlgebraElement.scalar(n, Fraction(1))


def ga_perm(p: Permutation) -> GroupAlgebraElement:
    return GroupAlgebraElement.from_perm(p)


def ga_transposition(n: int, a: int, b: int) -> GroupAlgebraElement:
    return ga_perm(Permutation.transposition(n, a, b))


def ga_multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    return a * b


def antisymmetrizer(m: int) -> GroupAlgebraElement:
    """(1/m!) sum of sign(s)*s over S_m; idempotent."""
    if m < 1:
        raise ValueError("antisymmetrizer needs m >= 1")
    c = Fraction(1, math.factorial(m))
    terms = {}
    for p in all_permutations(m):
        terms[p] = c * sign(p)
    return GroupAlgebraElement(m, terms)


def embed_perm(p: Permutation, positions, n: int) -> Permutation:
    pos = list(positions)
    im = list(range(1, n + 1))
    for i, r in enumerate(pos):
        im[r - 1] = pos[p(i + 1) - 1]
    return Permutation(im)


def embed(a: GroupAlgebraElement, positions, n: int) -> GroupAlgebraElement:
    """Image of a under the embedding sending symbol i to positions[i-1]."""
    pos = list(positions)
    if len(set(pos)) != len(pos):
        raise ValueError("positions must be distinct")
    if any(not (1 <= r <= n) for r in pos):
        raise ValueError("positions out of range")
    if len(pos) != a.n:
        raise ValueError("positions must match the degree of the element")
    return GroupAlgebraElement(
        n, {embed_perm(p, pos, n): c for p, c in a.terms.items()}
    )


def top_embed(a: GroupAlgebraElement, n: int, m: int) -> GroupAlgebraElement:
    """Embedding of S_m onto the last m symbols of S_{n+m}."""
    return embed(a, range(n + 1, n + m + 1), n + m)


def trace_perm(p: Permutation, n: int):
    """Delete symbols > n from the cycle record; return (residual permutation,
    number of orbits lost entirely)."""
    data = cycle_data(p)
    im = list(range(1, n + 1))
    lost = 0
    for cyc in data.cycles:
        kept = [s for s in cyc if s <= n]
        if not kept:
            lost += 1
            continue
        for i, s in enumerate(kept):
            im[s - 1] = kept[(i + 1) % len(kept)]
    return Permutation(im), lost


def trace_map(a: GroupAlgebraElement, n: int, m: int, p) -> GroupAlgebraElement:
    """Cycle-deletion trace from the group algebra of S_{n+m} down to S_n.

    Each permutation is rewritten as cycles, symbols above n are removed, and
    the term is weighted by p to the number of orbits lost.  p may be a
    Fraction, a float, or a UPoly generator (symbolic parameter); with a
    symbolic p every output coefficient is lifted into the polynomial ring.
    """
    if a.n != n + m:
        raise ValueError(f"trace_map: element has degree {a.n}, expected {n + m}")
    symbolic = isinstance(p, UPoly)
    out = GroupAlgebraElement.zero(n)
    acc = {}
    for perm, c in a.terms.items():
        tau, lost = trace_perm(perm, n)
        if symbolic:
            w = c * p ** lost
        else:
            w = c * p**lost
        s = acc.get(tau, 0) + w
        acc[tau] = s
    if symbolic:
        acc = {
            t: (c if isinstance(c, UPoly) else UPoly([c])) for t, c in acc.items()
        }
    out = GroupAlgebraElement(n, acc)
    return out


def antiinvolution(a: GroupAlgebraElement, kind: str = "dagger") -> GroupAlgebraElement:
    if kind == "dagger":
        return a.dagger()
    if kind == "star":
        return a.star()
    raise ValueError(f"unknown antiinvolution {kind!r}")


def lift_coeffs_to_upoly(a: GroupAlgebraElement) -> GroupAlgebraElement:
    """Wrap every scalar coefficient into a constant UPoly (symbolic-parameter ring)."""
    return a.map_coeffs(lambda c: c if isinstance(c, UPoly) else UPoly([c]))


def class_sum(n: int, mu) -> GroupAlgebraElement:
    """Sum of all permutations of S_n with the given cycle type."""
    mu = tuple(sorted(mu, reverse=True))
    terms = {}
    for p in all_permutations(n):
        if cycle_type(p) == mu:
            terms[p] = Fraction(1)
    return GroupAlgebraElement(n, terms)
