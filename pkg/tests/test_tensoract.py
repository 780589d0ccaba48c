"""Tensor-space cross-checks: the permutation action, partial trace, the
differential-operator coefficient table, and evaluation transfer matrices."""

import math
from fractions import Fraction

import pytest

from snbethe.rings import SeededRandom, UPoly
from snbethe.linalg import rank
from snbethe.permutations import (
    GroupAlgebraElement,
    Permutation,
    all_permutations,
    antisymmetrizer,
    trace_map,
)
from snbethe.gaudin import phi_polys, scalar_root_poly
from snbethe.xxx import t_m_poly, xxx_params
from snbethe.tensoract import (
    RF_ZERO,
    RationalFunc,
    TensorOperator,
    elementary,
    gaudin_diffop_coeffs,
    partial_trace,
    varpi,
    varpi_perm,
    yangian_transfer,
)

F = Fraction


def test_identity_and_swap():
    ident = varpi(GroupAlgebraElement.scalar(2, F(1)), 3)
    assert ident == TensorOperator.identity(3, 2)
    swap = varpi_perm(Permutation.transposition(2, 1, 2), 2)
    # the 4x4 swap matrix: basis order 11, 12, 21, 22
    assert swap.entries == {
        (0, 0): F(1), (1, 2): F(1), (2, 1): F(1), (3, 3): F(1)
    }


def test_varpi_multiplicative():
    rng = SeededRandom(5)
    perms = all_permutations(3)
    for _ in range(8):
        p, q = rng.choice(perms), rng.choice(perms)
        assert varpi_perm(p * q, 2) == varpi_perm(p, 2) * varpi_perm(q, 2)


@pytest.mark.parametrize("N,n", [(1, 2), (2, 2), (2, 3), (3, 3)])
def test_antisymmetrizer_kernel(N, n):
    img = varpi(antisymmetrizer(n), N)
    assert bool(img) == (N >= n)


def test_partial_trace_identity_and_factorized():
    X = TensorOperator.identity(2, 3)
    t = partial_trace(X, 2)
    assert t == TensorOperator.identity(2, 1) * F(4)
    # X (x) Y traces to X * tr(Y) for random small factors
    rng = SeededRandom(9)
    for _ in range(5):
        xe = {(r, c): rng.rational(3, 2) for r in range(2) for c in range(2)}
        ye = {(r, c): rng.rational(3, 2) for r in range(2) for c in range(2)}
        big = {}
        for (r1, c1), a in xe.items():
            for (r2, c2), b in ye.items():
                if a * b:
                    big[(r1 * 2 + r2, c1 * 2 + c2)] = a * b
        X2 = TensorOperator(2, 2, big)
        tr_y = ye[(0, 0)] + ye[(1, 1)]
        want = TensorOperator(2, 1, {k: v * tr_y for k, v in xe.items()})
        assert partial_trace(X2, 1) == want


def test_trace_of_swap():
    got = partial_trace(varpi_perm(Permutation.transposition(2, 1, 2), 2), 1)
    assert got == TensorOperator.identity(2, 1)


@pytest.mark.parametrize("N", [2, 3])
def test_trace_compatibility_random(N):
    rng = SeededRandom(13 + N)
    for (n, m) in ((1, 1), (2, 1), (1, 2), (2, 2), (3, 1), (2, 3), (3, 2), (1, 4)):
        if n + m > 5:
            continue
        for _ in range(4):
            sig = rng.choice(all_permutations(n + m))
            lhs = partial_trace(varpi_perm(sig, N), m)
            rhs = varpi(trace_map(GroupAlgebraElement.from_perm(sig), n, m, F(N)), N)
            assert lhs == rhs


def test_diffop_coefficients_N1():
    # N = 1, n = 2: the operator is prod(u - z_a)(d/du - sum 1/(u - z_a));
    # the order-zero coefficient row must match the first generator polynomial
    z = (F(0), F(1))
    table = gaudin_diffop_coeffs(1, 2, z)
    polys, _ = phi_polys(2, z)
    # C_{1,j} are the coefficients of Phi_1 (scalar multiples of the identity)
    for j in range(0, 2):
        c = polys[0].coeff(2 - 1 - j)
        scalar = c.coeff(Permutation.identity(2)) if isinstance(c, GroupAlgebraElement) else c
        assert table[(1, j)] == TensorOperator.identity(1, 2) * scalar
    # leading row: coefficients of the root product
    root = scalar_root_poly(z)
    for j in range(0, 3):
        assert table[(0, j)] == TensorOperator.identity(1, 2) * root.coeff(2 - j)


@pytest.mark.parametrize("N,n", [(2, 2), (3, 2), (3, 3)])
def test_schur_weyl_coefficient_match(N, n):
    z = tuple(F(v) for v in ((0, 1) if n == 2 else (0, 1, 3)))
    table = gaudin_diffop_coeffs(N, n, z)
    _, phis = phi_polys(n, z)
    for key, phi in phis.items():
        assert table[key] == varpi(phi, N)


def test_diffop_rejects_coincident_parameters():
    with pytest.raises(ValueError):
        gaudin_diffop_coeffs(2, 2, (F(1), F(1)))


@pytest.mark.parametrize("N,n", [(2, 2), (3, 3)])
def test_faithfulness(N, n):
    rows = [varpi_perm(p, N).flatten_rows() for p in all_permutations(n)]
    assert rank(rows) == math.factorial(n)


def test_transfer_m1_n1():
    T = yangian_transfer(2, 1, 1, [F(5)])
    want = RationalFunc(UPoly([F(-9), F(2)]), UPoly([F(-5), F(1)]))
    for r in range(2):
        assert T[(r, r)] == want
    assert all(r == c for (r, c) in T)


def test_transfer_top_is_scalar_on_one_factor():
    # m = N: the antisymmetrized product acts as a scalar on a single factor
    N = 2
    T = yangian_transfer(N, 1, N, [F(3)])
    diag = {k: v for k, v in T.items() if k[0] == k[1]}
    assert set(T) == set(diag)
    vals = list(diag.values())
    for v in vals[1:]:
        assert v == vals[0]


def test_transfer_matrices_commute_at_points():
    N, n = 2, 2
    x = (F(0), F(2))
    T1 = yangian_transfer(N, n, 1, x)
    T2 = yangian_transfer(N, n, 2, x)
    d = N**n

    def ev(T, u0):
        M = [[F(0)] * d for _ in range(d)]
        for (r, c), v in T.items():
            M[r][c] = v.eval_at(u0)
        return M

    def mm(A, B):
        return [
            [sum(A[i][k] * B[k][j] for k in range(d)) for j in range(d)]
            for i in range(d)
        ]

    for u0, v0 in ((F(7), F(9)), (F(1, 3), F(11, 2))):
        A, B = ev(T1, u0), ev(T2, v0)
        assert mm(A, B) == mm(B, A)


@pytest.mark.parametrize("m", [1, 2])
def test_transfer_matches_traced_family(m):
    # the traced family at rescaled argument, divided by the root product,
    # equals the evaluation image of the transfer series
    N, n = 2, 2
    z = (F(0), F(2))
    hb = F(2)
    pr = xxx_params(z, hb)
    tm = t_m_poly(pr, m, p=F(N))
    mats = [
        varpi(
            c if isinstance(c, GroupAlgebraElement) else GroupAlgebraElement.scalar(n, c),
            N,
        ) * hb**k
        for k, c in enumerate(tm.coeffs)
    ]
    Ph = scalar_root_poly(z).subst_linear(hb, F(0))
    psi = yangian_transfer(N, n, m, [x / hb for x in z])
    d = N**n
    for r in range(d):
        for c in range(d):
            numer = UPoly([mats[k].entries.get((r, c), F(0)) for k in range(len(mats))])
            assert RationalFunc(numer, Ph) == psi.get((r, c), RF_ZERO)


@pytest.mark.parametrize("n", [3, 4])
def test_heisenberg_exchange_form(n):
    from snbethe.homogeneous import local_charges

    N = 2
    lhs = varpi(local_charges(n)[0], N)
    rhs = TensorOperator.zero(N, n)
    for a in range(1, n + 1):
        nxt = a + 1 if a < n else 1
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                rhs = rhs + elementary(N, n, a, i, j) * elementary(N, n, nxt, j, i)
    assert lhs == rhs
