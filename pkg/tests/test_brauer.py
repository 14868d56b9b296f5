"""Brauer classes: validation, index arithmetic, restriction, construction.

Every restricted index asserted here was recomputed by hand from the local
degree tables in test_extensions (order of local_degree * invariant in Q/Z).
"""

import random

import pytest

from helpers import ff7_cubic, q_ext
from ncpbound.arith import QZ, QZ_ZERO
from ncpbound.brauer import (
    BrauerClass,
    check_lemma_2_1,
    construct_class,
    fiber_index,
    index,
    local_index,
    make_class,
    random_class,
    restricted_index,
    restricted_local_index,
    splits,
)
from ncpbound.errors import IncompleteLocalData, ValidationError
from ncpbound.extensions import find_places_with_frobenius, local_degree
from ncpbound.fields import QQ, poly_place, prime_place, real_place
from ncpbound.isolation import d_value


def qz(a, b):
    return QZ(a, b)


class TestMakeClass:
    def test_valid(self):
        alpha = make_class({prime_place(3): qz(7, 8), prime_place(7): qz(1, 8)})
        assert alpha.invariant(prime_place(3)) == qz(7, 8)
        assert alpha.invariant(prime_place(5)) == QZ_ZERO
        assert alpha.support == (prime_place(3), prime_place(7))

    def test_zero_class(self):
        assert make_class({}).is_zero()

    def test_rejects_nonzero_sum(self):
        with pytest.raises(ValidationError):
            make_class({prime_place(3): qz(1, 8)})

    def test_real_invariant_constrained(self):
        with pytest.raises(ValidationError):
            make_class({real_place(): qz(1, 4), prime_place(3): qz(3, 4)})
        alpha = make_class({real_place(): qz(1, 2), prime_place(3): qz(1, 2)})
        assert alpha.invariant(real_place()) == qz(1, 2)

    def test_duplicates_accumulate(self):
        alpha = make_class([(prime_place(3), qz(1, 2)), (prime_place(3), qz(1, 2))])
        assert alpha.is_zero()

    def test_rejects_mixed_bases(self):
        with pytest.raises(ValidationError):
            make_class({prime_place(3): qz(1, 2), poly_place(3, (0, 1)): qz(1, 2)})

    def test_rejects_non_qz(self):
        with pytest.raises(ValidationError):
            make_class({prime_place(3): 0.5, prime_place(7): 0.5})
        with pytest.raises(ValidationError):
            make_class({3: qz(1, 2), 7: qz(1, 2)})

    def test_addition_and_negation(self):
        a = make_class({prime_place(3): qz(7, 8), prime_place(7): qz(1, 8)})
        assert (a + (-a)).is_zero()
        b = a + a
        assert b.invariant(prime_place(3)) == qz(3, 4)

    def test_p_part(self):
        a = make_class({prime_place(2): qz(1, 3), prime_place(5): qz(2, 3)})
        mixed = a + make_class({prime_place(2): qz(1, 2), prime_place(5): qz(1, 2)})
        assert mixed.p_part(3).invariant(prime_place(2)) == qz(1, 3)
        assert mixed.p_part(2).invariant(prime_place(2)) == qz(1, 2)
        assert mixed.p_part(5).is_zero()


class TestIndex:
    def test_frozen(self):
        assert index(make_class({prime_place(3): qz(7, 8), prime_place(7): qz(1, 8)})) == 8
        assert index(make_class({})) == 1
        alpha = make_class(
            {prime_place(2): qz(1, 2), prime_place(5): qz(1, 3), prime_place(7): qz(1, 6)}
        )
        assert index(alpha) == 6

    def test_local_index(self):
        alpha = make_class({prime_place(2): qz(1, 2), prime_place(5): qz(1, 3),
                            prime_place(7): qz(1, 6)})
        assert local_index(alpha, prime_place(5)) == 3
        assert local_index(alpha, prime_place(11)) == 1


class TestRestriction:
    def test_restricted_local_index(self):
        M = q_ext(3, -7)
        alpha = make_class({prime_place(3): qz(7, 8), prime_place(7): qz(1, 8)})
        assert restricted_local_index(alpha, M, prime_place(7)) == 2
        assert restricted_local_index(alpha, M, prime_place(3)) == 2
        assert restricted_local_index(make_class({}), M, prime_place(7)) == 1

    def test_coprime_degree_keeps_order(self):
        M = q_ext(11)
        alpha = make_class({prime_place(3): qz(1, 3), prime_place(5): qz(2, 3)})
        assert restricted_local_index(alpha, M, prime_place(3)) == 3

    def test_restricted_index_frozen(self):
        M = q_ext(3, -7)
        assert restricted_index(
            make_class({prime_place(3): qz(7, 8), prime_place(7): qz(1, 8)}), M) == 2
        assert restricted_index(make_class({}), M) == 1
        assert restricted_index(
            make_class({prime_place(5): qz(4, 5), prime_place(11): qz(1, 5)}), M) == 5

    def test_base_mismatch(self):
        alpha = make_class({prime_place(3): qz(1, 2), prime_place(7): qz(1, 2)})
        with pytest.raises(ValidationError):
            restricted_index(alpha, ff7_cubic())

    def test_restriction_conserves_reciprocity(self):
        # sum over places of M, i.e. with multiplicity (number of places above)
        M = q_ext(3, -7)
        rng = random.Random(7)
        for _ in range(50):
            alpha = random_class(QQ, rng)
            total = QZ_ZERO
            for P in alpha.support:
                g = M.degree // local_degree(M, P)
                total = total + alpha.invariant(P).scale(local_degree(M, P) * g)
            assert total == QZ_ZERO


class TestFiberIndex:
    def test_frozen_noncrossed_product_index(self):
        M = q_ext(3, -7)
        alpha = make_class({prime_place(3): qz(7, 8), prime_place(7): qz(1, 8)})
        assert fiber_index(alpha, M, 4) == 8

    def test_zero_class(self):
        assert fiber_index(make_class({}), q_ext(3, -7), 4) == 4

    def test_formula(self):
        M = ff7_cubic()
        split = find_places_with_frobenius(M, (0, 0), count=2, bound=200)
        alpha = make_class({split[0]: qz(1, 3), split[1]: qz(2, 3)})
        assert restricted_index(alpha, M) == 3
        assert fiber_index(alpha, M, 9) == 27

    def test_incompatible_order(self):
        with pytest.raises(ValidationError):
            fiber_index(make_class({}), q_ext(3, -7), 3)
        with pytest.raises(ValidationError):
            fiber_index(make_class({}), q_ext(3, -7), 0)


class TestSplits:
    def setup_method(self):
        self.alpha = make_class({prime_place(3): qz(7, 8), prime_place(7): qz(1, 8)})

    def test_own_degrees_do_not_split(self):
        M = q_ext(3, -7)
        degrees = {P: local_degree(M, P) for P in self.alpha.support}
        assert splits(degrees, self.alpha, over="K") is False

    def test_zero_class_splits(self):
        assert splits({}, make_class({}), over="K") is True

    def test_divisible_degrees_split(self):
        assert splits({prime_place(3): 8, prime_place(7): 8}, self.alpha) is True

    def test_missing_place_is_an_error(self):
        with pytest.raises(IncompleteLocalData):
            splits({prime_place(3): 8}, self.alpha)
        assert splits({prime_place(3): 8}, self.alpha, complete=True) is False

    def test_over_M_uses_restricted_orders(self):
        M = q_ext(3, -7)
        rel = {prime_place(3): 2, prime_place(7): 2}
        assert splits(rel, self.alpha, over="M", M=M) is True
        assert splits({prime_place(3): 2, prime_place(7): 1}, self.alpha,
                      over="M", M=M) is False

    def test_argument_validation(self):
        with pytest.raises(ValidationError):
            splits({}, self.alpha, over="L", complete=True)
        with pytest.raises(ValidationError):
            splits({}, self.alpha, over="M", complete=True)

    def test_split_iff_restricted_index_one(self):
        M = q_ext(3, -7)
        rng = random.Random(11)
        for _ in range(60):
            alpha = random_class(QQ, rng)
            degrees = {P: local_degree(M, P) for P in alpha.support}
            assert splits(degrees, alpha) == (restricted_index(alpha, M) == 1)


class TestConstructClass:
    def test_frozen_biquadratic_full_set(self):
        M = q_ext(3, -7)
        alpha = construct_class(M, 2, {prime_place(3), prime_place(7)})
        assert dict(alpha.invariants) == {prime_place(3): qz(7, 8),
                                          prime_place(7): qz(1, 8)}

    def test_frozen_biquadratic_partial_set(self):
        M = q_ext(3, -7)
        alpha = construct_class(M, 2, {prime_place(7)})
        assert dict(alpha.invariants) == {prime_place(3): qz(1, 8),
                                          prime_place(7): qz(7, 8)}

    def test_frozen_odd_order(self):
        M = q_ext(3, -7)
        alpha = construct_class(M, 3, {prime_place(5)})
        assert dict(alpha.invariants) == {prime_place(2): qz(1, 3),
                                          prime_place(5): qz(2, 3)}
        assert restricted_index(alpha, M) == 3

    def test_trivial_m(self):
        assert construct_class(q_ext(3, -7), 1, set()).is_zero()

    def test_frozen_composite(self):
        M = q_ext(3, -7)
        alpha = construct_class(M, 12, {prime_place(5)})
        assert dict(alpha.invariants) == {
            prime_place(2): qz(1, 3),
            prime_place(3): qz(13, 16),
            prime_place(5): qz(19, 24),
            prime_place(7): qz(1, 16),
        }
        assert restricted_index(alpha, M) == 12
        assert restricted_local_index(alpha, M, prime_place(5)) == 12

    def test_isolated_place_balances(self):
        M = q_ext(-1, 2)
        alpha = construct_class(M, 4, {prime_place(2)})
        assert dict(alpha.invariants) == {prime_place(2): qz(7, 8),
                                          prime_place(3): qz(1, 8)}
        assert restricted_index(alpha, M) == 4
        # the gap caps what survives at the isolated place
        assert restricted_local_index(alpha, M, prime_place(2)) == 2
        assert check_lemma_2_1(alpha, M, 2)

    def test_real_place_in_set(self):
        M = q_ext(3, 17)
        alpha = construct_class(M, 2, {real_place()})
        assert dict(alpha.invariants) == {
            real_place(): qz(1, 2),
            prime_place(3): qz(3, 8),
            prime_place(17): qz(1, 8),
        }
        assert restricted_local_index(alpha, M, real_place()) == 2

    def test_complex_field_skips_real_place(self):
        M = q_ext(3, -7)
        alpha = construct_class(M, 2, {real_place()})
        assert alpha.invariant(real_place()) == QZ_ZERO
        assert restricted_index(alpha, M) == 2

    def test_parity_fix_drafts_extra_place(self):
        # odd count of order-2 terms forces one more balancing place
        M = ff7_cubic()
        S = {poly_place(7, (3, 1)), poly_place(7, (4, 1)), poly_place(7, (5, 1))}
        alpha = construct_class(M, 2, S)
        expected = {poly_place(7, (0, 1)): qz(1, 2)}
        expected.update({P: qz(1, 2) for P in S})
        assert dict(alpha.invariants) == expected
        assert restricted_index(alpha, M) == 2

    def test_divisor_constraints_met(self):
        M = q_ext(-1, 2)
        for m in (2, 3, 4, 8, 12):
            S = {prime_place(2), prime_place(5), prime_place(13)}
            alpha = construct_class(M, m, S)
            assert restricted_index(alpha, M) == m
            for P in S:
                assert restricted_local_index(alpha, M, P) % d_value(P, m, M) == 0

    def test_rejects_bad_m(self):
        with pytest.raises(ValidationError):
            construct_class(q_ext(3, -7), 0, set())
        with pytest.raises(ValidationError):
            construct_class(ff7_cubic(), 7, set())
        with pytest.raises(ValidationError):
            construct_class(ff7_cubic(), 14, set())

    def test_rejects_foreign_places(self):
        with pytest.raises(ValidationError):
            construct_class(q_ext(3, -7), 2, {poly_place(7, (0, 1))})


class TestLemma21:
    def test_spec_pair(self):
        M = q_ext(-1, 2)
        alpha = make_class({prime_place(2): qz(1, 2), prime_place(3): qz(1, 2)})
        assert check_lemma_2_1(alpha, M, 2)

    def test_zero_class(self):
        assert check_lemma_2_1(make_class({}), q_ext(-1, 2), 2)

    def test_vacuous_without_isolation(self):
        alpha = make_class({prime_place(3): qz(7, 8), prime_place(7): qz(1, 8)})
        assert check_lemma_2_1(alpha, q_ext(3, -7), 2)
        assert check_lemma_2_1(alpha, q_ext(3, -7), 5)

    def test_wild_prime_vacuous(self):
        alpha = make_class({})
        assert check_lemma_2_1(alpha, ff7_cubic(), 7)

    def test_random_classes(self):
        M = q_ext(-1, 2)
        rng = random.Random(2)
        for _ in range(200):
            assert check_lemma_2_1(random_class(QQ, rng), M, 2)


class TestRandomClass:
    def test_deterministic_and_valid(self):
        a = random_class(QQ, random.Random(5))
        b = random_class(QQ, random.Random(5))
        assert a == b
        assert isinstance(a, BrauerClass)
        total = QZ_ZERO
        for _, inv in a.invariants:
            total = total + inv
        assert total == QZ_ZERO
