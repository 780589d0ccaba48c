"""Gaudin-type family: generators, generating functions, rational commuting
elements, determinant presentations, and the scalar relation checkers."""

from fractions import Fraction

import pytest

from snbethe.rings import BiPoly, SeededRandom, UPoly
from snbethe.permutations import (
    GroupAlgebraElement,
    all_permutations,
    ga_perm,
    ga_transposition,
)
from snbethe.reps import content_product_all, represent
from snbethe.gaudin import (
    ParameterSet,
    check_relations_H,
    check_relations_Ht,
    det_presentation,
    gz_spanning_set,
    jm_elements,
    kz_elements,
    phi_gen,
    phi_gen_fixed_points,
    phi_polys,
    phi_tilde,
    scalar_root_poly,
)

F = Fraction


def lift_poly(n, p):
    return p.map_coeffs(
        lambda c: c if isinstance(c, GroupAlgebraElement) else GroupAlgebraElement.scalar(n, c)
    )


def lift_bipoly(n, b):
    return b.map_coeffs(
        lambda c: c if isinstance(c, GroupAlgebraElement) else GroupAlgebraElement.scalar(n, c)
    )


def test_parameter_set_flags():
    assert ParameterSet((F(0), F(1))).distinct
    assert not ParameterSet((F(1), F(1))).distinct


def test_phi_polys_n2():
    polys, table = phi_polys(2, (F(0), F(1)))
    # (u - 1) + u = 2u - 1
    assert polys[0] == lift_poly(2, UPoly([F(-1), F(2)]))
    one = GroupAlgebraElement.scalar(2, F(1))
    assert polys[1] == UPoly([one - ga_transposition(2, 1, 2)])
    assert table[(1, 0)] == GroupAlgebraElement.scalar(2, F(2))
    assert table[(2, 0)] == one - ga_transposition(2, 1, 2)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_phi_top_is_signed_sum(n):
    # the last polynomial is constant in u: the full signed permutation sum
    from snbethe.permutations import sign

    rng = SeededRandom(5)
    z = tuple(rng.rational(6, 2) for _ in range(n))
    polys, _ = phi_polys(n, z)
    want = GroupAlgebraElement(
        n, {p: F(sign(p)) for p in all_permutations(n)}
    )
    assert polys[n - 1] == UPoly([want])


def test_phi_gen_n2_and_n1():
    g = phi_gen(2, (F(0), F(1)))
    # u(u-1)v^2 - (2u-1)v + 1 - s12
    assert g.coeff(2, 2) == F(1)
    assert g.coeff(1, 2) == F(-1)
    assert g.coeff(1, 1) == F(-2)
    assert g.coeff(0, 1) == F(1)
    assert g.coeff(0, 0) == GroupAlgebraElement.scalar(2, F(1)) - ga_transposition(2, 1, 2)
    g1 = phi_gen(1, (F(5),))
    assert g1.coeff(1, 1) == F(1)
    assert g1.coeff(0, 1) == F(-5)
    assert g1.coeff(0, 0) == F(-1)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_phi_gen_leading_v_coefficient(n):
    rng = SeededRandom(n)
    z = tuple(rng.rational(5, 2) for _ in range(n))
    g = phi_gen(n, z)
    assert g.v_coeff(n) == lift_poly(n, scalar_root_poly(z))


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_fixed_point_expansion_matches(n):
    rng = SeededRandom(n + 10)
    z = tuple(rng.rational(5, 2) for _ in range(n))
    polys, _ = phi_polys(n, z)
    acc = lift_bipoly(
        n, BiPoly.from_upoly_u(scalar_root_poly(z)) * BiPoly([[0] * n + [F(1)]])
    )
    for i, poly in enumerate(polys, start=1):
        acc = acc + lift_bipoly(
            n, BiPoly.from_upoly_u(poly) * BiPoly([[0] * (n - i) + [F((-1) ** i)]])
        )
    assert acc == lift_bipoly(n, phi_gen_fixed_points(n, z))


@pytest.mark.parametrize("n,sets", [(2, 3), (3, 3), (4, 2), (5, 1)])
def test_commutativity(n, sets):
    rng = SeededRandom(1000 + n)
    for _ in range(sets):
        z = tuple(rng.distinct_rationals(n))
        _, table = phi_polys(n, z)
        gens = list(table.values())
        for i in range(len(gens)):
            for j in range(i + 1, len(gens)):
                assert gens[i] * gens[j] == gens[j] * gens[i]


def test_kz_n2_and_n3():
    fam = kz_elements(2, (F(0), F(1)))
    t = ga_transposition(2, 1, 2)
    assert fam[0] == -t and fam[1] == t
    fam3 = kz_elements(3, (F(0), F(1), F(3)))
    want = -ga_transposition(3, 1, 2) - ga_transposition(3, 1, 3) * F(1, 3)
    assert fam3[0] == want


def test_kz_rejects_coincident_parameters():
    with pytest.raises(ValueError):
        kz_elements(2, (F(1), F(1)))


def test_kz_steep_limit_contracts_to_jm():
    # (z_a - z_1) H_a at z = (1, s, s^2) numerically approaches J_a
    n = 3
    s = F(10) ** 6
    z = (F(1), s, s * s)
    fam = kz_elements(n, z)
    jms = jm_elements(n)
    for a in range(2, n + 1):
        scaled = fam[a - 1] * (z[a - 1] - z[0])
        diff = scaled - jms[a - 1]
        err = max(abs(float(c)) for c in diff.terms.values())
        assert err < 1e-4


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generating_det_presentation(n):
    rng = SeededRandom(n + 77)
    z = tuple(rng.distinct_rationals(n))
    fam = kz_elements(n, z)
    det = det_presentation("P", n, z, list(fam))
    assert lift_bipoly(n, det) == phi_gen(n, z)


def test_det_presentation_zero_family():
    # h = 0 leaves the off-diagonal inverse-difference entries in place:
    # hand expansion gives (uv-1)((u-1)v-1) + u(u-1)
    det = det_presentation("P", 2, (F(0), F(1)), [F(0), F(0)])
    u = BiPoly([[0], [F(1)]])
    v = BiPoly([[0, F(1)]])
    one = BiPoly.const(F(1))
    want = (u * v - one) * ((u - one) * v - one) + u * (u - one)
    assert det == want


def test_det_presentation_requires_commuting_family():
    a = ga_transposition(3, 1, 2)
    b = ga_transposition(3, 2, 3)
    with pytest.raises(ValueError):
        det_presentation("P", 3, (F(0), F(1), F(3)), [a, b, a])


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_shifted_det_presentation_and_content(n):
    rng = SeededRandom(n + 99)
    z = tuple(rng.distinct_rationals(n))
    fam = (
        kz_elements(n, z)
        if n >= 2
        else [GroupAlgebraElement.zero(1)]
    )
    det = det_presentation("Ptilde", n, z, list(fam))
    assert lift_bipoly(n, det) == phi_tilde(n, z)
    det0 = det_presentation("Ptilde0", n, z, list(fam))
    assert lift_poly(n, det0) == lift_poly(n, content_product_all(n))


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_phi_tilde_edge_coefficients(n):
    rng = SeededRandom(n + 3)
    z = tuple(rng.rational(5, 2) for _ in range(n))
    pt = phi_tilde(n, z)
    pi = content_product_all(n)
    assert pt.u_coeff(n) == lift_poly(n, pi)
    zprod = F(1)
    for x in z:
        zprod *= x
    assert pt.u_coeff(0) == lift_poly(n, pi.shift_arg(F(1)) * (F((-1) ** n) * zprod))


def test_phi_tilde_n1_explicit():
    # (v+1)(u - z) - u, so the u-coefficient is v and the constant is -z(v+1)
    pt = phi_tilde(1, (F(2),))
    assert pt.u_coeff(1) == lift_poly(1, UPoly([F(0), F(1)]))
    assert pt.u_coeff(0) == lift_poly(1, UPoly([F(-2), F(-2)]))


def test_scaling_and_shift_covariance():
    rng = SeededRandom(12)
    n = 3
    z = tuple(rng.distinct_rationals(n))
    s = rng.nonzero_rational(5, 2)
    _, table = phi_polys(n, z)
    _, table_s = phi_polys(n, tuple(s * x for x in z))
    for (i, j), g in table.items():
        assert table_s[(i, j)] == g * s**j
    sh = rng.rational(5, 2)
    polys_sh = phi_polys(n, tuple(x + sh for x in z))[0]
    polys = phi_polys(n, z)[0]
    for a, b in zip(polys_sh, polys):
        assert a.shift_arg(sh) == b


def test_conjugation_equivariance():
    rng = SeededRandom(13)
    n = 4
    z = tuple(rng.distinct_rationals(n))
    for _ in range(3):
        sig = rng.choice(all_permutations(n))
        zperm = tuple(z[sig(a) - 1] for a in range(1, n + 1))
        g, ginv = ga_perm(sig), ga_perm(sig.inverse())
        for pp, p0 in zip(phi_polys(n, zperm)[0], phi_polys(n, z)[0]):
            assert pp.map_coeffs(lambda c: g * c * ginv) == p0


@pytest.mark.parametrize("n", [2, 3, 4])
def test_dagger_and_star_fix_generators(n):
    rng = SeededRandom(n)
    z = tuple(rng.rational(5, 2) for _ in range(n))
    _, table = phi_polys(n, z)
    for g in table.values():
        assert g.dagger() == g
        assert g.star() == g


def test_jm_and_gz_spanning():
    jms = jm_elements(3)
    assert not jms[0]
    assert jms[1] == ga_transposition(3, 1, 2)
    assert jms[2] == ga_transposition(3, 1, 3) + ga_transposition(3, 2, 3)
    from snbethe.spectra import algebra_span

    span = algebra_span([represent(g) for g in gz_spanning_set(3)])
    assert span.dim == 4


def test_check_relations_H_examples():
    # n = 1: the single lower coefficient is -h
    rep = check_relations_H((1,), (F(5),), [F(0)])
    assert rep["max_residual"] == 0
    # n = 2, trivial block: H_a act by sums of inverse differences
    z = (F(0), F(1))
    h = [F(-1), F(1)]
    rep = check_relations_H((2,), z, h)
    assert rep["max_residual"] == 0
    # soundness: perturbed values give a nonzero residual
    rep = check_relations_H((2,), z, [F(-1), F(1, 2)])
    assert rep["max_residual"] != 0


def test_check_relations_Ht_examples():
    rep = check_relations_Ht((1,), (F(4),), [F(0)])
    assert rep["max_residual"] == 0
    rep = check_relations_Ht((1,), (F(4),), [F(1, 3)])
    assert rep["max_residual"] != 0
