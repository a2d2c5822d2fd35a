import random
from fractions import Fraction

import pytest

from wpline import (CoordinateAlgebra, PrimeField, RationalField,
                    builtin_group_hom)

Q = RationalField()
F7 = PrimeField(7)


@pytest.fixture(scope="module")
def s442():
    return CoordinateAlgebra((4, 4, 2), Q, [1])


@pytest.fixture(scope="module")
def s333():
    return CoordinateAlgebra((3, 3, 3), Q, [1])


@pytest.fixture(scope="module")
def s2222():
    return CoordinateAlgebra((2, 2, 2, 2), Q, [1, -1])


class TestConstruction:
    def test_tail_params_get_normalized_prefix(self):
        a = CoordinateAlgebra((2, 2, 2, 2), Q, [-1])
        b = CoordinateAlgebra((2, 2, 2, 2), Q, [1, -1])
        assert a == b

    def test_first_param_must_be_one(self):
        with pytest.raises(ValueError):
            CoordinateAlgebra((3, 3, 3), Q, [2])

    def test_params_avoid_zero_one(self):
        for bad in (0, 1):
            with pytest.raises(ValueError):
                CoordinateAlgebra((2, 2, 2, 2), Q, [1, bad])

    def test_params_distinct(self):
        with pytest.raises(ValueError):
            CoordinateAlgebra((2, 2, 2, 2, 2), Q, [1, 5, 5])

    def test_param_count(self):
        with pytest.raises(ValueError):
            CoordinateAlgebra((3, 3, 3), Q, [1, 2])

    def test_length_two_weights_take_no_params(self):
        alg = CoordinateAlgebra((2, 2), Q)
        assert alg.params == ()

    def test_repr(self, s2222):
        assert repr(s2222) == "S(2,2,2,2;-1)"


class TestReduce:
    def test_squared_extra_generator(self, s442):
        z1, z2, z3 = s442.gens
        assert str(z3 * z3) == "z2^4 - z1^4"

    def test_cubed_extra_generator(self, s333):
        y1, y2, y3 = s333.gens
        assert y3 ** 3 == y2 ** 3 - y1 ** 3

    def test_canonical_monomial_is_fixed(self, s442):
        e = s442.monomial((5, 2, 1), Fraction(3, 2))
        assert e.terms == {(5, 2, 1): Fraction(3, 2)}

    def test_exponent_validation(self, s442):
        with pytest.raises(ValueError):
            s442.monomial((1, 2))
        with pytest.raises(ValueError):
            s442.monomial((-1, 0, 0))

    def test_redex_choice_is_irrelevant(self):
        alg = CoordinateAlgebra((2, 2, 2, 2), F7, [1, 2])
        exps = (1, 2, 5, 7)
        first = alg.reduce_monomial(exps, 3, redex="first")
        last = alg.reduce_monomial(exps, 3, redex="last")
        rng = random.Random(11)
        shuffled = alg.reduce_monomial(exps, 3, redex=rng.choice)
        assert first == last == shuffled


class TestMultiply:
    def test_sextic_identity_of_four_point_type(self):
        eps = F7(3)
        delta = F7(1)
        alg = CoordinateAlgebra((2, 2, 2, 2), F7, [1, eps])
        x1, x2, x3, x4 = alg.gens
        lhs = x4 ** 6
        rhs = (x2 ** 2 + (eps - 1) * x1 ** 2) ** 3 - (delta * (x1 * x2 * x3)) ** 2
        assert lhs == rhs

    def test_sextic_identity_of_three_point_type(self, s333):
        y1, y2, y3 = s333.gens
        assert y3 ** 6 == (y1 ** 3 + y2 ** 3) ** 2 - 4 * (y1 * y2) ** 3

    def test_one_is_neutral(self, s442):
        z1, z2, z3 = s442.gens
        a = z1 * z2 + 2 * z3
        assert s442.one * a == a

    def test_cross_algebra_rejected(self, s442, s333):
        with pytest.raises(ValueError):
            s442.one * s333.one

    def test_commutative_associative_random(self):
        rng = random.Random(99)
        alg = CoordinateAlgebra((6, 3, 2), F7, [1])
        for _ in range(60):
            ms = [alg.monomial(tuple(rng.randrange(0, 2 * p) for p in (6, 3, 2)),
                               rng.randint(1, 6)) for _ in range(3)]
            a, b, c = ms
            assert a * b == b * a
            assert (a * b) * c == a * (b * c)


class TestGrading:
    def test_homogeneous_sum(self, s333):
        y1, y2, y3 = s333.gens
        d = (y1 ** 3 + y2 ** 3).degree()
        assert d == s333.weights.canonical()

    def test_monomial_degree(self):
        alg = CoordinateAlgebra((2, 2, 2, 2), F7, [1, 3])
        x1, x2, x3, x4 = alg.gens
        assert (x1 * x2 * x3).degree() == alg.weights.element(0, (1, 1, 1, 0))

    def test_inhomogeneous_has_no_degree(self, s2222):
        x1, x2 = s2222.gens[0], s2222.gens[1]
        assert (x1 + x2).degree() is None

    def test_zero_degree_raises(self, s2222):
        with pytest.raises(ValueError):
            s2222.zero.degree()

    def test_degree_multiplicative_on_random_pairs(self, s2222):
        rng = random.Random(4)
        L = s2222.weights
        for _ in range(80):
            xs = []
            elems = []
            for _ in range(2):
                x = L.element(rng.randint(0, 3), tuple(rng.randrange(2) for _ in range(4)))
                basis = s2222.component_basis(x)
                elem = s2222.zero
                for e in basis:
                    elem = elem + s2222.monomial(e, rng.randint(0, 3))
                if elem.is_zero():
                    elem = s2222.monomial(basis[0])
                xs.append(x)
                elems.append(elem)
            prod = elems[0] * elems[1]
            if not prod.is_zero():
                assert prod.degree() == xs[0] + xs[1]


class TestComponents:
    def test_canonical_degree_basis(self, s2222):
        c = s2222.weights.canonical()
        assert s2222.component_basis(c) == ((0, 2, 0, 0), (2, 0, 0, 0))

    def test_dualizing_component_empty(self, s2222):
        w = s2222.weights.dualizing_element()
        assert s2222.component_basis(w) == ()
        assert s2222.dim(w) == 0

    def test_torsion_degree_single_monomial(self, s333):
        x = s333.weights.element(0, (1, 1, 0))
        assert s333.component_basis(x) == ((1, 1, 0),)

    def test_brute_force_examples(self, s2222, s442):
        assert s2222.brute_force_dim(s2222.weights.canonical()) == 2
        assert s2222.brute_force_dim(s2222.weights.dualizing_element()) == 0
        s632 = CoordinateAlgebra((6, 3, 2), Q, [1])
        assert s632.brute_force_dim(s632.weights.canonical()) == 2

    def test_dim_formula_small_window(self, s2222, s333, s442):
        s632 = CoordinateAlgebra((6, 3, 2), Q, [1])
        for alg in (s2222, s333, s442, s632):
            L = alg.weights
            for l in range(-4, 5):
                for tor in L.torsion_tuples():
                    x = L.element(l, tor)
                    assert len(alg.component_basis(x)) == x.mult() == alg.brute_force_dim(x)

    def test_restriction_subalgebra_closure(self, s2222):
        # products of components with degrees in the image land in the
        # component of the sum, so the restriction subalgebra is closed
        h = builtin_group_hom("A")
        degrees = [x for x in sorted(h.window_fibers(3),
                                     key=lambda e: (e.l, e.torsion)) if x.mult() > 0]
        for x in degrees[:6]:
            for y in degrees[:6]:
                target = set(s2222.component_basis(x + y))
                for ex in s2222.component_basis(x):
                    for ey in s2222.component_basis(y):
                        prod = s2222.monomial(ex) * s2222.monomial(ey)
                        assert set(prod.terms) <= target

    def test_wrong_group_rejected(self, s2222, s333):
        with pytest.raises(ValueError):
            s2222.component_basis(s333.weights.zero())
        with pytest.raises(ValueError):
            s2222.brute_force_dim(s333.weights.zero())


class TestSerialization:
    def test_term_order_and_signs(self, s442):
        z1, z2, z3 = s442.gens
        assert str(z3 * z3) == "z2^4 - z1^4"
        assert str(s442.zero) == "0"
        assert str(s442.one) == "1"
        assert str(2 * z1) == "2*z1"

    def test_prime_coefficients_stay_canonical(self):
        alg = CoordinateAlgebra((3, 3, 3), F7, [1])
        y1, y2, y3 = alg.gens
        assert str(y3 ** 3) == "y2^3 + 6*y1^3"

    def test_letters_by_type(self, s2222, s333, s442):
        assert str(s2222.gens[0]) == "x1"
        assert str(s333.gens[0]) == "y1"
        assert str(s442.gens[0]) == "z1"
        s632 = CoordinateAlgebra((6, 3, 2), Q, [1])
        assert str(s632.gens[2]) == "u3"
