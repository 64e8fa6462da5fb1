"""Frobenius roots: worked values, adjunction, composition, oracles."""

from __future__ import annotations

import random

import pytest

from fsing import DomainError, Ideal, Ring, ideal_root, poly_root
from fsing.oracle import monomial_root_oracle

from conftest import rand_ideal, rand_poly

R2 = Ring(p=2, var_names=("x", "y"))
R3 = Ring(p=3, var_names=("x", "y"))
R2s2 = Ring(p=2, var_names=("x",), s=2)


class TestPolyRoot:
    def test_monomial_example(self):
        x, y = R2.gens
        assert poly_root(x**3 * y**2, 1) == Ideal(R2, (x * y,))

    def test_binomial_collapses_to_unit(self):
        x, y = R2.gens
        assert poly_root(x**2 + x * y, 1).is_unit()

    def test_splits_into_component_generators(self):
        x, y = R2.gens
        assert poly_root(x**2 + y**3, 1) == Ideal(R2, (x, y))

    def test_diagonal_stays_whole(self):
        x, y = R2.gens
        assert poly_root(x**2 + y**2, 1) == Ideal(R2, (x + y,))

    def test_zero_gives_zero_ideal(self):
        assert poly_root(R2.zero, 1).is_zero()

    def test_level_zero_rejected(self):
        x, _ = R2.gens
        with pytest.raises(DomainError):
            poly_root(x, 0)
        with pytest.raises(DomainError):
            ideal_root(Ideal(R2, (x,)), 0)

    def test_respects_frobenius_step(self):
        (x,) = R2s2.gens
        # q = 4: floor(5/4) = 1
        assert poly_root(x**5, 1) == Ideal(R2s2, (x,))

    def test_unit_when_constant_term_present(self):
        x, _ = R2.gens
        assert poly_root(x + 1, 1).is_unit()


class TestIdealRoot:
    def test_level_two_floor(self):
        x, _ = R2.gens
        assert ideal_root(Ideal(R2, (x**5,)), 2) == Ideal(R2, (x,))

    def test_generator_independence(self):
        rng = random.Random(67)
        for ring in (R2, R3):
            for _ in range(25):
                ideal = rand_ideal(rng, ring, 2)
                gens = list(ideal.gens)
                if len(gens) >= 2:
                    gens[0] = gens[0] + gens[1] * rand_poly(rng, ring, 1, 1)
                gens.append(sum(gens, ring.zero))
                other = Ideal(ring, gens)
                assert other == ideal
                for e in (1, 2):
                    assert ideal_root(other, e) == ideal_root(ideal, e)

    def test_composition_law(self):
        rng = random.Random(71)
        for ring in (R2, R3):
            for _ in range(25):
                ideal = rand_ideal(rng, ring, 2)
                assert ideal_root(ideal_root(ideal, 1), 1) == ideal_root(ideal, 2)

    def test_monotone(self):
        rng = random.Random(73)
        for _ in range(25):
            small = rand_ideal(rng, R2, 2)
            extra = rand_poly(rng, R2, 2, 3)
            big = Ideal(R2, small.gens + ((extra,) if extra else ()))
            assert ideal_root(small, 1) <= ideal_root(big, 1)


class TestAdjunction:
    def test_root_bracket_galois_connection(self):
        rng = random.Random(79)
        seen_true = seen_false = 0
        for ring in (R2, R3):
            for _ in range(60):
                ideal = rand_ideal(rng, ring, 2)
                e = rng.choice((1, 2))
                if rng.random() < 0.5:
                    candidate = ideal_root(ideal, e)
                    if rng.random() < 0.5 and candidate.gens:
                        candidate = Ideal(ring, candidate.gens[1:])
                else:
                    candidate = rand_ideal(rng, ring, 2)
                lhs = ideal_root(ideal, e) <= candidate
                rhs = ideal <= candidate.bracket_power(e)
                assert lhs == rhs
                seen_true += lhs
                seen_false += not lhs
        assert seen_true and seen_false

    def test_expansion_bound(self):
        # I is always inside the bracket power of its root
        rng = random.Random(83)
        for _ in range(30):
            ideal = rand_ideal(rng, R2, 2)
            e = rng.choice((1, 2))
            assert ideal <= ideal_root(ideal, e).bracket_power(e)


class TestMonomialOracle:
    def test_floor_formula(self):
        assert monomial_root_oracle((3, 2), 2, 1) == (1, 1)
        assert monomial_root_oracle((5, 0), 2, 2) == (1, 0)
        assert monomial_root_oracle((8, 9), 3, 2) == (0, 1)

    def test_sampled_agreement_with_fast_path(self):
        rng = random.Random(89)
        for ring in (R2, R3):
            for _ in range(40):
                exps = tuple(rng.randint(0, 10) for _ in range(ring.n))
                e = rng.choice((1, 2))
                expected = ring.monomial(
                    monomial_root_oracle(exps, ring.q, e)
                )
                assert poly_root(ring.monomial(exps), e) == Ideal(ring, (expected,))
