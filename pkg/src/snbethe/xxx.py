"""XXX-type commuting families: the trace-built generator polynomials
T_m(u; p; hbar), the p-independent family S_k(u; hbar), the ordered-product
commuting elements, the bivariate generating polynomial, the shifted-Cauchy
determinant presentation, and the residual checker for the conjectural scalar
relation family.

T_m is computed literally: form the ordered product in the group algebra of
S_{n+m} with polynomial coefficients, left-multiply by the embedded
antisymmetrizer, and push down with the cycle-deletion trace.  The binomial
transform between T and S is then available as an independent cross-check
rather than a definition.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from .rings import BiPoly, UPoly
from .linalg import det_perm_expansion
from .permutations import (
    GroupAlgebraElement,
    antisymmetrizer,
    embed,
    ga_transposition,
    lift_coeffs_to_upoly,
    top_embed,
    trace_map,
)
from .gaudin import check_commuting_family, scalar_root_poly
from .reps import partition_parts

SYMBOLIC = None  # sentinel for a symbolic trace parameter


@dataclass(frozen=True)
class XXXParams:
    """Parameters (z_1..z_n, hbar, p); p may be SYMBOLIC."""

    z: tuple
    hbar: Fraction
    p: object = SYMBOLIC

    def __post_init__(self):
        if not self.hbar:
            raise ValueError("hbar must be nonzero")

    @property
    def n(self) -> int:
        return len(self.z)

    @property
    def distinct(self) -> bool:
        return len(set(self.z)) == len(self.z)

    @property
    def hbar_separated(self) -> bool:
        """True iff z_a - z_b != hbar for all a, b (invertibility hypothesis)."""
        return all(
            self.z[a] - self.z[b] != self.hbar
            for a in range(self.n)
            for b in range(self.n)
        )


def xxx_params(z, hbar=Fraction(1), p=SYMBOLIC) -> XXXParams:
    return XXXParams(tuple(Fraction(x) for x in z), Fraction(hbar), p)


def _trace_parameter(params: XXXParams):
    if params.p is SYMBOLIC:
        return UPoly.gen()
    return params.p


def t_m_poly(params: XXXParams, m: int, p=None) -> UPoly:
    """The m-th generator polynomial, built in the group algebra of S_{n+m}
    and traced down; degree n in u.  With a symbolic p the coefficients of the
    output live in the polynomial ring in p."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    n, z, hbar = params.n, params.z, params.hbar
    if p is None:
        p = _trace_parameter(params)
    if m == 0:
        poly = scalar_root_poly(z).map_coeffs(
            lambda c: GroupAlgebraElement.scalar(n, c)
        )
        if isinstance(p, UPoly):
            poly = poly.map_coeffs(lift_coeffs_to_upoly)
        return poly
    big = n + m
    acc = UPoly([top_embed(antisymmetrizer(m), n, m)])
    for a in range(n, 0, -1):
        const = GroupAlgebraElement.scalar(big, -z[a - 1])
        for i in range(1, m + 1):
            const = const + ga_transposition(big, a, n + i) * hbar
        factor = UPoly([const, GroupAlgebraElement.scalar(big, Fraction(1))])
        acc = acc * factor
    return UPoly([trace_map(c, n, m, p) for c in acc.coeffs])


def t_m_coeffs(params: XXXParams, m: int, p=None) -> dict:
    """Coefficient table: (m, i) -> coefficient of u^(n-i), i = 0..n."""
    poly = t_m_poly(params, m, p)
    n = params.n
    return {i: poly.coeff(n - i) for i in range(n + 1)}


def s_k_poly(params: XXXParams, k: int) -> UPoly:
    """The p-independent generator polynomial of order k; zero for k > n."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    n, z, hbar = params.n, params.z, params.hbar
    if k > n:
        return UPoly()
    if k == 0:
        return scalar_root_poly(z).map_coeffs(
            lambda c: GroupAlgebraElement.scalar(n, c)
        )
    signed = antisymmetrizer(k) * Fraction(math.factorial(k))
    total = UPoly()
    for r in combinations(range(1, n + 1), k):
        acc = UPoly([embed(signed, r, n)])
        for a in range(n, 0, -1):  # ordered product, larger index to the left
            if a in r:
                continue
            const = GroupAlgebraElement.scalar(n, -z[a - 1])
            for rj in r:
                if rj < a:
                    const = const + ga_transposition(n, rj, a) * hbar
            acc = acc * UPoly([const, GroupAlgebraElement.scalar(n, Fraction(1))])
        total = total + acc
    return total * hbar**k


def s1_coeff_elements(params: XXXParams) -> list:
    """The normalized coefficients of the first-order polynomial: strips the
    powers of hbar so that the k-th entry is the sum of increasing
    (k+1)-cycles at z = 0."""
    n, hbar = params.n, params.hbar
    s1 = s_k_poly(params, 1)
    out = []
    for i in range(1, n):
        out.append(s1.coeff(n - i - 1) * (Fraction(1) / hbar ** (i + 1)))
    return out


@dataclass
class QKZFamily:
    """Ordered-product commuting elements; invertible iff parameters are
    hbar-separated."""

    params: XXXParams
    elements: list
    invertible: bool

    def __iter__(self):
        return iter(self.elements)

    def __getitem__(self, i):
        return self.elements[i]

    def __len__(self):
        return len(self.elements)


def qkz_elements(params: XXXParams) -> QKZFamily:
    """K_a as the ordered product of linear factors; verified on construction
    against the first-order polynomial evaluated at z_a (which carries one
    extra overall factor of hbar), and the full product against its closed
    scalar form."""
    n, z, hbar = params.n, params.z, params.hbar
    elems = []
    for a in range(1, n + 1):
        acc = GroupAlgebraElement.scalar(n, Fraction(1))
        for b in range(a - 1, 0, -1):
            acc = acc * (
                GroupAlgebraElement.scalar(n, z[a - 1] - z[b - 1])
                + ga_transposition(n, b, a) * hbar
            )
        for b in range(n, a, -1):
            acc = acc * (
                GroupAlgebraElement.scalar(n, z[a - 1] - z[b - 1])
                + ga_transposition(n, a, b) * hbar
            )
        elems.append(acc)
    s1 = s_k_poly(params, 1)
    for a in range(1, n + 1):
        if s1.eval_at(z[a - 1]) != elems[a - 1] * hbar:
            raise AssertionError("ordered product disagrees with S_1 at z_a")
    prod = GroupAlgebraElement.scalar(n, Fraction(1))
    for e in elems:
        prod = prod * e
    scalar = Fraction(1)
    for a in range(n):
        for b in range(n):
            if a != b:
                scalar *= z[a] - z[b] + hbar
    if prod != GroupAlgebraElement.scalar(n, scalar):
        raise AssertionError("product of the family disagrees with closed form")
    return QKZFamily(params, elems, params.hbar_separated)


def t_gen(params: XXXParams) -> BiPoly:
    """Bivariate generating polynomial at trace parameter p = n; both the
    T-expansion in v and the S-expansion in v-1 are computed and their
    equality is enforced."""
    n = params.n
    lhs = BiPoly()
    for m in range(n + 1):
        tm = t_m_poly(params, m, p=Fraction(n))
        term = BiPoly.from_upoly_u(tm) * BiPoly(
            [[0] * (n - m) + [Fraction((-1) ** m)]]
        )
        lhs = lhs + term
    rhs = BiPoly()
    vm1 = BiPoly([[Fraction(-1), Fraction(1)]])  # v - 1
    for k in range(n + 1):
        sk = s_k_poly(params, k)
        if not sk:
            continue
        term = BiPoly.from_upoly_u(sk) * vm1 ** (n - k) * Fraction((-1) ** k)
        rhs = rhs + term
    lhs_l = lhs.map_coeffs(lambda c: _lift(n, c))
    rhs_l = rhs.map_coeffs(lambda c: _lift(n, c))
    if lhs_l != rhs_l:
        raise AssertionError("the two generating expansions disagree")
    return lhs_l


def _lift(n, c):
    if isinstance(c, GroupAlgebraElement):
        return c
    return GroupAlgebraElement.scalar(n, c)


def det_P_hbar(params: XXXParams, q: UPoly) -> BiPoly:
    """Determinant presentation over the shifted Cauchy-type matrix built from
    the values of q at the parameters.  q must have pairwise commuting
    coefficients; the parameters must be distinct and hbar-separated."""
    n, z, hbar = params.n, params.z, params.hbar
    if not params.distinct:
        raise ValueError("parameters must be pairwise distinct")
    for a in range(n):
        for b in range(n):
            if z[a] - z[b] + hbar == 0:
                raise ValueError("entry denominator vanishes: z_a - z_b = -hbar")
    if not check_commuting_family(list(q.coeffs)):
        raise ValueError("coefficients of q do not pairwise commute")
    c_vals = []
    for a in range(1, n + 1):
        c = q.eval_at(z[a - 1])
        for b in range(1, n + 1):
            if b != a:
                c = c * (Fraction(1) / (z[a - 1] - z[b - 1]))
        c_vals.append(c)
    if not check_commuting_family(c_vals):
        raise ValueError("matrix entries do not pairwise commute")

    v = BiPoly([[0, Fraction(1)]])
    entries = []
    for a in range(1, n + 1):
        row = []
        for b in range(1, n + 1):
            qh = BiPoly.const(c_vals[a - 1] * (Fraction(1) / (z[a - 1] - z[b - 1] + hbar)))
            u_minus = BiPoly([[-z[a - 1]], [Fraction(1)]])
            e = u_minus * ((v if a == b else BiPoly()) - qh) - hbar * qh
            row.append(e)
        entries.append(row)
    det = det_perm_expansion(entries)
    if not isinstance(det, BiPoly):
        det = BiPoly.const(det)
    return det


def check_relations_Hh(la, params: XXXParams, qvals) -> dict:
    """Residuals of the conjectural scalar relation family: expand the
    determinant presentation in powers of u and (v - 1) at concrete values of
    the q-coefficients, report the largest lower-triangular coefficient and
    the coefficient residual of the diagonal identity."""
    la = tuple(la)
    n = sum(la)
    if params.n != n:
        raise ValueError("partition size must match the parameter count")
    qvals = list(qvals)
    if len(qvals) != n:
        raise ValueError("need n coefficient values")
    q = UPoly(list(reversed(qvals)))  # q(u) = q_1 u^{n-1} + ... + q_n
    det = det_P_hbar(params, q)
    shifted = det.subst_v_shift(1)  # coefficients in powers of w = v - 1
    offdiag = max(
        (
            abs(shifted.coeff(n - j, n - i))
            for i in range(n + 1)
            for j in range(i)
        ),
        default=Fraction(0),
    )
    lhs = UPoly()
    for i in range(n + 1):
        tail = UPoly([Fraction(1)])
        for j in range(i + 1, n + 1):
            tail = tail * UPoly([Fraction(j), Fraction(1)])
        lhs = lhs + tail * shifted.coeff(n - i, n - i)
    rhs = UPoly([Fraction(1)])
    for j, lam in enumerate(partition_parts(la, n), start=1):
        rhs = rhs * UPoly([Fraction(j - lam), Fraction(1)])
    diff = lhs - rhs
    diagonal = max((abs(c) for c in diff.coeffs), default=Fraction(0))
    return {
        "partition": la,
        "offdiag_residual": offdiag,
        "diagonal_residual": diagonal,
        "max_residual": max(offdiag, diagonal),
    }


def ts_transform(params: XXXParams, m: int, p) -> UPoly:
    """The binomial transform sum_k S_k/(m-k)! * prod_{i=1..m-k}(p - m + i);
    equals T_m for every p, which is the cross-check between the two
    construction pipelines."""
    n = params.n
    acc = UPoly()
    for k in range(0, m + 1):
        sk = s_k_poly(params, k)
        if not sk:
            continue
        w = Fraction(1, math.factorial(m - k))
        factor = None
        for i in range(1, m - k + 1):
            f = p - m + i if not isinstance(p, UPoly) else p + Fraction(i - m)
            factor = f if factor is None else factor * f
        if factor is None:
            scale = w
        else:
            scale = w * factor
        acc = acc + sk.map_coeffs(lambda c, s=scale: c * s)
    return acc


def st_transform(params: XXXParams, m: int, p) -> UPoly:
    """Inverse transform reproducing S_m from the T-family at any p."""
    acc = UPoly()
    for k in range(0, m + 1):
        tk = t_m_poly(params, k, p=p)
        w = Fraction((-1) ** (m - k), math.factorial(m - k))
        factor = None
        for i in range(1, m - k + 1):
            f = p - m + i if not isinstance(p, UPoly) else p + Fraction(i - m)
            factor = f if factor is None else factor * f
        scale = w if factor is None else w * factor
        acc = acc + tk.map_coeffs(lambda c, s=scale: c * s)
    return acc
