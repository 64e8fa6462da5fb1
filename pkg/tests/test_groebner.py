"""Reduced bases, membership, equality, intersection, quotients."""

from __future__ import annotations

import random

import pytest

import fsing.groebner as groebner
from fsing import (
    DomainError,
    Ideal,
    ResourceError,
    Ring,
    RingMismatchError,
    buchberger,
    normal_form,
    poly_division,
)
from fsing.oracle import express_in_ideal

from conftest import rand_ideal, rand_poly

R2 = Ring(p=2, var_names=("x", "y"))
R3 = Ring(p=3, var_names=("x", "y"))
R5 = Ring(p=5, var_names=("x", "y"))


class TestDivision:
    def test_certified_decomposition(self):
        rng = random.Random(23)
        for ring in (R2, R3, R5):
            for _ in range(30):
                f = rand_poly(rng, ring, 4, 4)
                divisors = [
                    rand_poly(rng, ring, 3, 3, nonzero=True) for _ in range(2)
                ]
                quots, rem = poly_division(f, divisors)
                recombined = rem
                for q, d in zip(quots, divisors):
                    recombined = recombined + q * d
                assert recombined == f
                lms = [d.leading_monomial() for d in divisors]
                for m, _ in rem.terms():
                    assert not any(
                        all(a <= b for a, b in zip(lm, m)) for lm in lms
                    )

    def test_divide_by_zero_rejected(self):
        x, _ = R2.gens
        with pytest.raises(DomainError):
            poly_division(x, [R2.zero])


class TestBuchberger:
    def test_monomial_redundancy_drops(self):
        x, _ = R2.gens
        assert buchberger([x**2, x], R2) == (x,)

    def test_linear_pair_char_two(self):
        x, y = R2.gens
        assert buchberger([x + y, x], R2) == (x, y)

    def test_zero_and_unit(self):
        x, _ = R2.gens
        assert buchberger([], R2) == ()
        assert buchberger([R2.zero], R2) == ()
        assert buchberger([x, R2.one + x], R2) == (R2.one,)

    def test_textbook_pair(self):
        # classic: in F_5[x,y] grevlex, {x^2 + y, x*y + x} closes up with y^2 + y
        x, y = R5.gens
        gb = buchberger([x**2 + y, x * y + x], R5)
        ideal = Ideal(R5, (x**2 + y, x * y + x))
        assert ideal.contains(y**2 + y)
        assert set(gb) == {x**2 + y, x * y + x, y**2 + y}

    def test_budget_exhaustion(self):
        x, y = R2.gens
        with pytest.raises(ResourceError):
            buchberger([x * y + y**2, x**2], R2, max_spairs=0)

    def test_result_is_reduced(self):
        rng = random.Random(31)
        for ring in (R2, R3):
            for _ in range(40):
                ideal = rand_ideal(rng, ring, 3)
                gb = ideal.groebner()
                for i, g in enumerate(gb):
                    assert g.leading_coeff() == 1
                    others = [h for j, h in enumerate(gb) if j != i]
                    if others:
                        lms = [h.leading_monomial() for h in others]
                        for m, _ in g.terms():
                            assert not any(
                                all(a <= b for a, b in zip(lm, m)) for lm in lms
                            )

    def test_spoly_reduction_closure(self):
        # defining property: every S-pair of the basis reduces to zero
        rng = random.Random(37)
        for _ in range(25):
            ideal = rand_ideal(rng, R3, 3)
            gb = ideal.groebner()
            for i in range(len(gb)):
                for j in range(i + 1, len(gb)):
                    s = groebner._spoly(gb[i], gb[j])
                    assert not normal_form(s, list(gb))


class TestMembership:
    def test_examples(self):
        x, y = R2.gens
        assert Ideal(R2, (x + y,)).contains(x**2 + y**2)
        assert not Ideal(R2, (x**2, y**2)).contains(x * y)
        assert Ideal(R2, ()).contains(R2.zero)
        assert not Ideal(R2, ()).contains(x)

    def test_agrees_with_linear_algebra_oracle(self):
        rng = random.Random(41)
        hits = misses = 0
        for ring in (R2, R3):
            for _ in range(40):
                gens = [rand_poly(rng, ring, 2, 2, nonzero=True) for _ in range(2)]
                ideal = Ideal(ring, gens)
                f = rand_poly(rng, ring, 3, 3)
                # degree bound: certificates of degree <= 4 cover candidates
                # of degree <= 3 against generators of degree >= 1, with room
                certificate = express_in_ideal(f, gens, 4)
                member = ideal.contains(f)
                if certificate is not None:
                    recombined = ring.zero
                    for q, g in zip(certificate, gens):
                        recombined = recombined + q * g
                    assert recombined == f
                    assert member
                    hits += 1
                elif member:
                    # membership with cofactors beyond the oracle bound is
                    # possible in principle; re-check at a higher bound
                    assert express_in_ideal(f, gens, 8) is not None
                    hits += 1
                else:
                    misses += 1
        assert hits and misses

    def test_normal_form_is_canonical(self):
        x, y = R2.gens
        ideal = Ideal(R2, (x**2 + y, y**2 + x))
        f = x**3 + y**3
        g = f + (x + y) * (x**2 + y) + y * (y**2 + x)
        assert ideal.normal_form(f) == ideal.normal_form(g)


class TestIdealEquality:
    def test_unit_presentations(self):
        x, _ = R2.gens
        assert Ideal(R2, (R2.one,)) == Ideal(R2, (x, R2.one + x))

    def test_generator_shuffle(self):
        rng = random.Random(43)
        for _ in range(25):
            ideal = rand_ideal(rng, R3, 3)
            gens = list(ideal.gens)
            rng.shuffle(gens)
            x, y = R3.gens
            mixed = list(gens)
            if len(gens) >= 2:
                mixed[0] = gens[0] + gens[1]
            assert Ideal(R3, mixed) == ideal

    def test_cross_ring_equality_is_false(self):
        assert Ideal(R2, R2.gens) != Ideal(R3, R3.gens)

    def test_containment(self):
        x, y = R2.gens
        assert Ideal(R2, (x * y,)) <= Ideal(R2, (x,))
        assert not Ideal(R2, (x,)) <= Ideal(R2, (x * y,))
        assert Ideal(R2, (x,)) >= Ideal(R2, (x**2,))


class TestIntersection:
    def test_monomial_lcm(self):
        x, y = R2.gens
        lhs = Ideal(R2, (x**2 * y,))
        rhs = Ideal(R2, (x * y**2,))
        assert lhs.intersection(rhs) == Ideal(R2, (x**2 * y**2,))

    def test_with_zero_and_unit(self):
        x, _ = R2.gens
        ideal = Ideal(R2, (x,))
        assert ideal.intersection(Ideal(R2, ())).is_zero()
        assert ideal.intersection(Ideal(R2, (R2.one,))) == ideal

    def test_meet_property(self):
        rng = random.Random(47)
        for ring in (R2, R3):
            for _ in range(20):
                a = rand_ideal(rng, ring, 2)
                b = rand_ideal(rng, ring, 2)
                inter = a.intersection(b)
                assert inter <= a and inter <= b
                for g in a.gens:
                    for h in b.gens:
                        assert inter.contains(g * h)

    def test_aux_variable_name_avoids_collision(self):
        ring = Ring(p=2, var_names=("_t", "x"))
        t, x = ring.gens
        lhs = Ideal(ring, (t,))
        rhs = Ideal(ring, (x,))
        assert lhs.intersection(rhs) == Ideal(ring, (t * x,))


class TestColon:
    def test_example(self):
        x, y = R2.gens
        assert Ideal(R2, (x**2 + x * y,)).colon(x) == Ideal(R2, (x + y,))

    def test_unit_divisor(self):
        x, _ = R2.gens
        ideal = Ideal(R2, (x**2,))
        assert ideal.colon(R2.one) == ideal

    def test_zero_divisor_rejected(self):
        x, _ = R2.gens
        with pytest.raises(DomainError):
            Ideal(R2, (x,)).colon(R2.zero)

    def test_zero_ideal(self):
        x, _ = R2.gens
        assert Ideal(R2, ()).colon(x).is_zero()

    def test_adjunction(self):
        # g in (I : f) exactly when g*f in I
        rng = random.Random(53)
        for ring in (R2, R3):
            for _ in range(25):
                ideal = rand_ideal(rng, ring, 2)
                f = rand_poly(rng, ring, 2, 2, nonzero=True)
                quotient = ideal.colon(f)
                for g in quotient.gens:
                    assert ideal.contains(g * f)
                probe = rand_poly(rng, ring, 2, 2)
                assert quotient.contains(probe) == ideal.contains(probe * f)


class TestBracketPower:
    def test_level_zero_and_one(self):
        x, y = R2.gens
        ideal = Ideal(R2, (x + y, x * y))
        assert ideal.bracket_power(0) == ideal
        assert ideal.bracket_power(1) == Ideal(R2, (x**2 + y**2, x**2 * y**2))

    def test_negative_rejected(self):
        with pytest.raises(DomainError):
            Ideal(R2, R2.gens).bracket_power(-1)

    def test_cached_basis_transfer_matches_recomputation(self):
        rng = random.Random(59)
        for ring in (R2, R3):
            for _ in range(20):
                ideal = rand_ideal(rng, ring, 3)
                ideal.groebner()  # force the cache
                transferred = ideal.bracket_power(1).groebner()
                fresh = Ideal(ring, tuple(g.frobenius_power(1) for g in ideal.gens))
                assert transferred == fresh.groebner()

    def test_composition(self):
        rng = random.Random(61)
        for _ in range(15):
            ideal = rand_ideal(rng, R2, 2)
            assert ideal.bracket_power(1).bracket_power(1) == ideal.bracket_power(2)


class TestConstructionErrors:
    def test_ring_mismatch(self):
        with pytest.raises(RingMismatchError):
            Ideal(R2, (R3.gens[0],))
        with pytest.raises(RingMismatchError):
            Ideal(R2, R2.gens) + Ideal(R3, R3.gens)
        with pytest.raises(RingMismatchError):
            Ideal(R2, R2.gens).intersection(Ideal(R3, R3.gens))

    def test_zero_generators_dropped(self):
        x, _ = R2.gens
        assert Ideal(R2, (R2.zero, x, R2.zero)).gens == (x,)
