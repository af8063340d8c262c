import pytest

from dellcurves.algebra import (LaurentSeries, Poly, RatFunc, field_from_q,
                                fq_distinguished_element, fq_element_order, field_make)
from dellcurves.errors import (AlgebraMismatch, EqualRoots, EvenCharacteristic,
                               InsufficientPrecision, NonPolynomialCoords, NotTorsion,
                               OddRViolated, ScopeViolation)
from dellcurves.invariants import RamData
from dellcurves.quaternion import (MatrixRep, QuatAlgebra, Quaternion, conic_equation,
                                   cyclic_generator, matrix_embed, maximal_order_check,
                                   quat_arith, quat_conj_nr_tr, quat_order, torsion_units,
                                   uniformizer_pi, unit_norm_test, vertex_fix_check)
from conftest import place, poly, random_poly


def random_quat(rng, alg, deg=3, rational=False):
    F = alg.spec
    coords = []
    for _ in range(4):
        num = random_poly(rng, F, deg)
        den = random_poly(rng, F, 1, monic=True) if rational else Poly.const(F, 1)
        coords.append(RatFunc(num, den))
    return Quaternion(alg, coords)


def algebra_for(q):
    F = field_from_q(q)
    T = Poly.T(F)
    return QuatAlgebra(F, T * (T - 1))


@pytest.mark.parametrize("q", [3, 5, 2, 4])
def test_defining_relations(q):
    alg = algebra_for(q)
    one, i, j, k = alg.basis()
    xi = Poly.const(alg.spec, alg.xi)
    assert i * j == k
    assert j * j == alg.r
    if alg.parity == "odd":
        assert i * i == xi
        assert j * i == -k
    else:
        assert i * i + i == xi
        assert i * j == j * (i + 1)


@pytest.mark.parametrize("q", [3, 5, 2, 4])
def test_ring_axioms_on_random_triples(q, rng):
    alg = algebra_for(q)
    for _ in range(50):
        x, y, z = (random_quat(rng, alg, 2, rational=(q == 3)) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z
        cx, nx, tx = quat_conj_nr_tr(x)
        cy, ny, _ = quat_conj_nr_tr(y)
        assert (x * y).norm() == nx * ny
        assert (x * y).conj() == cy * cx
        assert x + cx == Quaternion(alg, (tx, 0, 0, 0))


def test_norm_formula_odd(F3, rng):
    alg = algebra_for(3)
    xi = alg.xi
    for _ in range(20):
        x = random_quat(rng, alg)
        a, b, c, d = x.coords
        expected = (a * a - b * b * xi) - (c * c - d * d * xi) * alg.r
        assert x.norm() == expected
    one, i, j, k = alg.basis()
    assert i.trace() == 0 and i.norm() == -xi
    assert j.norm() == -alg.r


def test_small_quaternion_facts(F3):
    alg = algebra_for(3)
    i = alg.basis()[1]
    assert (1 - i) ** 2 == i
    assert quat_arith(i, i, "add") == i * 2
    other = algebra_for(5)
    with pytest.raises(AlgebraMismatch):
        i * other.basis()[1]


def test_unit_norm_test(F3):
    tu = torsion_units(F3, 1, 0)
    alg = tu.algebra
    assert unit_norm_test(alg.one())
    assert not unit_norm_test(alg.basis()[2])
    assert unit_norm_test(tu.theta2)
    with pytest.raises(NonPolynomialCoords):
        unit_norm_test(Quaternion(alg, (RatFunc(Poly.const(F3, 1), Poly.T(F3)), 0, 0, 0)))


@pytest.mark.parametrize("q,expected_scalar", [(3, 2), (5, 1)])
def test_maximal_order(q, expected_scalar):
    F = field_from_q(q)
    ram = RamData.make(F, [place(F, 0, 1), place(F, q - 1, 1)])
    alg = QuatAlgebra(F, ram.r)
    mo = maximal_order_check(alg, ram)
    assert mo.ok
    assert mo.det == (ram.r * ram.r).scale(F.from_int(expected_scalar))
    two = F.from_int(2)
    diag = [mo.gram[t][t] for t in range(4)]
    xi = alg.xi.code
    assert diag == [Poly.const(F, two), Poly.const(F, F.mul(two, xi)), ram.r.scale(two),
                    ram.r.scale(F.neg(F.mul(two, xi)))]
    assert all(mo.gram[s][t].is_zero() for s in range(4) for t in range(4) if s != t)


def test_maximal_order_guards(F3):
    even = RamData.make(F3, [place(F3, 0, 1), place(F3, 1, 0, 1)])
    with pytest.raises(OddRViolated):
        maximal_order_check(QuatAlgebra(F3, even.r), even)
    F4 = field_from_q(4)
    ram4 = RamData.make(F4, [place(F4, 0, 1), place(F4, 1, 1)])
    with pytest.raises(EvenCharacteristic):
        maximal_order_check(QuatAlgebra(F4, ram4.r), ram4)


def test_torsion_units():
    F3 = field_from_q(3)
    tu = torsion_units(F3, 1, 0)
    assert tu.b0 == poly(F3, 2, 2) and int(tu.d0) == 1
    xi = Poly.const(F3, tu.algebra.xi)
    assert tu.theta1 * tu.theta1 == xi and tu.theta2 * tu.theta2 == xi
    F5 = field_from_q(5)
    tu = torsion_units(F5, 1, 0)
    assert tu.b0 == poly(F5, 4, 2) and int(tu.d0) == 3
    with pytest.raises(EqualRoots):
        torsion_units(F5, 2, 2)
    with pytest.raises(EvenCharacteristic):
        torsion_units(field_from_q(4), 1, 0)


@pytest.mark.parametrize("q", [3, 5, 7])
def test_cyclic_generators(q):
    F = field_from_q(q)
    tu = torsion_units(F, 1, 0)
    n = q * q - 1
    for theta in (tu.theta1, tu.theta2):
        g = cyclic_generator(theta)
        assert quat_order(g, n) == n
        assert g != tu.algebra.one()
        assert (g ** (q + 1)).coords[1:] == (RatFunc(Poly(F)),) * 3
    with pytest.raises(NotTorsion):
        cyclic_generator(tu.algebra.basis()[2])


def test_cyclic_generator_matches_gf25_model():
    # the F_25 model: a + b*theta <-> a + b*sqrt(xi) in F_5[X]/(X^2 - 2)
    F = field_from_q(5)
    tu = torsion_units(F, 1, 0)
    g = cyclic_generator(tu.theta1)
    F25 = field_make(5, 2)
    # sqrt(xi) goes to a root of X^2 = 2 in F_25, found by search
    root = next(x for x in F25.elements() if x * x == F25(2))
    a, b = int(g.coords[0].num.eval(0)), int(g.coords[1].num.eval(0))
    assert fq_element_order(F25(a) + F25(b) * root) == 24


def test_standard_generators_q3():
    F3 = field_from_q(3)
    tu = torsion_units(F3, 1, 0)
    g1, g2 = 1 - tu.theta1, 1 - tu.theta2
    minus_one = tu.algebra.one() * -1
    for g in (g1, g2):
        assert quat_order(g, 8) == 8
        assert g ** 4 == minus_one
    # the relation of the tree presentation: gamma1^{q+1} = gamma2^{q+1}
    assert g1 ** 4 == g2 ** 4
    assert [int(c.num.eval(0)) for c in cyclic_generator(tu.theta1).coords] == [1, 1, 0, 0]


def _lseries(F, ints, prec):
    return LaurentSeries.from_poly(Poly.from_ints(F, ints), prec)


def test_embedding_examples():
    F3 = field_from_q(3)
    tu = torsion_units(F3, 1, 0)
    m = matrix_embed(1 - tu.theta1, 30)
    assert [e.polynomial_part() for e in m.entries] == [Poly.const(F3, c) for c in (1, -1, 1, 1)]
    assert all(e.is_zero() or e.val == 0 and len([c for c in e.coeffs if c]) == 1 for e in m.entries)
    # gamma2: off-diagonal entries are (T+1) -+ sqrt(r) and -(T+1) -+ sqrt(r), one branch each
    s = matrix_embed(tu.algebra.basis()[2], 30).entries[0]
    T1 = _lseries(F3, [1, 1], 30)
    for branch, sign in ((1, 1), (-1, -1)):
        m2 = matrix_embed(1 - tu.theta2, 30, branch=branch)
        root = s.scale(sign)
        assert m2.entries[1].agrees(T1 + root, 30)
        assert m2.entries[2].agrees(-T1 + root, 30)
    minus = matrix_embed(1 - tu.theta2, 30, branch=-1)
    assert minus.entries[1].agrees(T1 - s, 30) and minus.entries[2].agrees(-T1 - s, 30)
    pi = uniformizer_pi(tu, 30)
    t2 = matrix_embed(tu.theta2, 30)
    assert t2.entries[0].is_zero() and t2.entries[3].is_zero()
    assert t2.entries[1].agrees(pi.inverse(), 28)
    assert t2.entries[2].agrees(pi.scale(tu.algebra.xi), 30)


@pytest.mark.parametrize("q", [3, 5])
def test_embedding_is_homomorphism(q, rng):
    alg = algebra_for(q)
    for _ in range(15):
        x, y = random_quat(rng, alg, 3), random_quat(rng, alg, 3)
        ex, ey, exy = matrix_embed(x, 40), matrix_embed(y, 40), matrix_embed(x * y, 40)
        assert (ex * ey).agrees(exy, 25)
        nr = LaurentSeries.from_ratfunc(x.norm(), 40)
        assert ex.det().agrees(nr, 25)
        if not x.norm().is_zero():
            assert (ex * ex.inverse()).agrees(MatrixRep.identity(alg.spec, 40), 20)


def test_vertex_fix_checks():
    F3 = field_from_q(3)
    tu = torsion_units(F3, 1, 0)
    pi = uniformizer_pi(tu, 30)
    I = MatrixRep.identity(F3, 30)
    W = MatrixRep.diag(LaurentSeries.const(F3, 1, 30), pi)
    t1, t2 = matrix_embed(tu.theta1, 30), matrix_embed(tu.theta2, 30)
    assert vertex_fix_check(t1, I, 30)
    assert vertex_fix_check(t2, W, 30)
    # v and w are adjacent: each unit fixes its own vertex and moves the other one
    assert not vertex_fix_check(t1, W, 30)
    assert not vertex_fix_check(t2, I, 30)
    scalar = MatrixRep.identity(F3, 30) * _lseries(F3, [1, 0, 1], 30)
    for B in (I, W):
        assert vertex_fix_check(scalar, B)
    zero = MatrixRep.identity(F3, 30) * LaurentSeries.zero(F3, 30)
    with pytest.raises(InsufficientPrecision):
        vertex_fix_check(zero, I)


def test_conic():
    F3 = field_from_q(3)
    ram = RamData.make(F3, [place(F3, 0, 1), place(F3, 2, 1)])
    c = conic_equation(ram)
    assert c.equation == "X^2 - 2*Y^2 - (T^2+2T)*Z^2 = 0"
    assert c.coefficients[1] == Poly.const(F3, 1)  # -xi = 1 mod 3
    table = {str(v): ok for v, ok in c.solubility}
    assert not table["T"] and not table["T+2"]
    assert all(ok for v, ok in table.items() if v not in ("T", "T+2"))
    F5 = field_from_q(5)
    c5 = conic_equation(RamData.make(F5, [place(F5, 0, 1), place(F5, 4, 1)]))
    assert c5.equation == "X^2 - 2*Y^2 - (T^2+4T)*Z^2 = 0"
    with pytest.raises(ScopeViolation):
        conic_equation(RamData.make(F3, [place(F3, 0, 1), place(F3, 1, 0, 1)]))
    assert fq_distinguished_element(F5) == F5(2)
