import random
from fractions import Fraction
from math import comb

import pytest

from delannoy.kring import (
    IntValuedPoly,
    KClass,
    KTensorClass,
    adams,
    antipode,
    binom_at,
    concat_mul,
    counit,
    dual,
    hilbert_value,
    induce,
    inner,
    inner_tensor,
    is_lyndon,
    lambda_binomial,
    line_class,
    lyndon_weights,
    restrict,
    schur_apply,
    schur_dimension_poly,
    schwartz_class,
    shuffle_words,
)
from delannoy.linalg import matrix_rank
from delannoy.paths import enumerate_paths, weights_up_to

F = Fraction
ONE = KClass.unit()


def word(w):
    return KClass.word(w)


def random_class(rng, max_len=2, terms=3):
    pool = weights_up_to(max_len)
    coeffs = {}
    for w in rng.sample(pool, min(len(pool), terms)):
        coeffs[w] = F(rng.randint(-3, 3))
    return KClass(coeffs)


class TestConcat:
    def test_defining_relation(self):
        assert concat_mul(word("b"), word("w")) == word("bw")

    def test_unit(self):
        x = KClass({"bw": F(2), "": F(-1)})
        assert concat_mul(ONE, x) == x
        assert concat_mul(x, ONE) == x

    def test_bilinear(self):
        assert concat_mul(word("b") + ONE, word("w")) == word("bw") + word("w")

    def test_associative(self):
        rng = random.Random(1)
        for _ in range(30):
            x, y, z = (random_class(rng) for _ in range(3))
            assert concat_mul(concat_mul(x, y), z) == concat_mul(x, concat_mul(y, z))


class TestStandardProduct:
    def test_square_of_filled_letter(self):
        assert word("b") * word("b") == 2 * word("bb") + word("b")

    def test_mixed_letters(self):
        expected = word("bw") + word("wb") + word("b") + word("w") + ONE
        assert word("b") * word("w") == expected

    def test_letter_times_pair(self):
        expected = (
            2 * word("bbw")
            + word("bwb")
            + 2 * word("bw")
            + word("bb")
            + word("b")
        )
        assert word("b") * word("bw") == expected

    def test_open_square_by_duality(self):
        assert word("w") * word("w") == 2 * word("ww") + word("w")

    def test_commutative_exhaustive(self):
        for u in weights_up_to(3):
            for v in weights_up_to(3):
                assert word(u) * word(v) == word(v) * word(u)

    def test_unit(self):
        for u in weights_up_to(3):
            assert ONE * word(u) == word(u)

    def test_associative_random(self):
        rng = random.Random(2)
        for _ in range(200):
            x, y, z = (word(rng.choice(weights_up_to(3))) for _ in range(3))
            assert (x * y) * z == x * (y * z)

    def test_filtration_degree(self):
        rng = random.Random(3)
        for _ in range(40):
            x, y = random_class(rng), random_class(rng)
            prod = x * y
            if not prod.is_zero():
                assert prod.degree() <= x.degree() + y.degree()

    def test_special_products(self):
        for n in range(7):
            lhs = word("b") * word("b" * n)
            assert lhs == (n + 1) * word("b" * (n + 1)) + n * word("b" * n)

    def test_object_level_tensor_identity(self):
        for n in range(4):
            for m in range(4):
                rhs = KClass()
                for p in enumerate_paths((n, m)):
                    rhs = rhs + schwartz_class(len(p))
                assert schwartz_class(n) * schwartz_class(m) == rhs

    def test_matches_explicit_path_walk(self):
        # independent oracle: enumerate the interleavings as lattice paths and
        # concatenate one factor per step
        def collision(a, b):
            if a == b:
                return word(a)
            return word("b") + word("w") + ONE

        def path_walk_product(u, v):
            out = KClass()
            for p in enumerate_paths((len(u), len(v))):
                factor = ONE
                i = j = 0
                for su, sv in p.steps:
                    if su and sv:
                        factor = concat_mul(factor, collision(u[i], v[j]))
                        i, j = i + 1, j + 1
                    elif su:
                        factor = concat_mul(factor, word(u[i]))
                        i += 1
                    else:
                        factor = concat_mul(factor, word(v[j]))
                        j += 1
                out = out + factor
            return out

        for u in weights_up_to(3):
            for v in weights_up_to(3):
                assert word(u) * word(v) == path_walk_product(u, v)

    def test_top_degree_part_is_shuffle(self):
        for u in weights_up_to(3):
            for v in weights_up_to(3):
                top = len(u) + len(v)
                prod = word(u) * word(v)
                got = {w: c for w, c in prod.coeffs.items() if len(w) == top}
                expected = {}
                for s in shuffle_words(u, v):
                    expected[s] = expected.get(s, F(0)) + 1
                assert got == expected


class TestInductionRestriction:
    def test_induce_unit(self):
        assert induce(KTensorClass.pure(ONE, ONE)) == line_class()

    def test_induce_pair_of_words(self):
        got = induce(KTensorClass.pure(word("b"), word("w")))
        assert got == word("bbw") + word("bww") + word("bw")

    def test_iterated_induction_gives_schwartz_classes(self):
        x = ONE
        for n in range(1, 4):
            x = induce(KTensorClass.pure(x, ONE))
            assert x == schwartz_class(n)
        # multiplicities at n=2: one copy of each pair, two of each letter, one unit
        expected = KClass(
            {
                "bb": F(1), "bw": F(1), "wb": F(1), "ww": F(1),
                "b": F(2), "w": F(2), "": F(1),
            }
        )
        assert schwartz_class(2) == expected

    def test_restrict_unit(self):
        assert restrict(ONE) == KTensorClass.pure(ONE, ONE)

    def test_restrict_single_letter(self):
        got = restrict(word("b"))
        expected = (
            KTensorClass.pure(word("b"), ONE)
            + KTensorClass.pure(ONE, word("b"))
            + KTensorClass.pure(ONE, ONE)
        )
        assert got == expected

    def test_restrict_pair(self):
        got = restrict(word("bw"))
        expected = (
            KTensorClass.pure(word("bw"), ONE)
            + KTensorClass.pure(word("b"), word("w"))
            + KTensorClass.pure(ONE, word("bw"))
            + KTensorClass.pure(ONE, word("w"))
            + KTensorClass.pure(word("b"), ONE)
        )
        assert got == expected

    def test_restriction_filtration(self):
        for u in weights_up_to(3):
            for (a, b), c in restrict(word(u)).coeffs.items():
                assert len(a) + len(b) <= len(u)

    def test_restrict_is_ring_homomorphism(self):
        for u in weights_up_to(2):
            for v in weights_up_to(2):
                lhs = restrict(word(u) * word(v))
                rhs = restrict(word(u)) * restrict(word(v))
                assert lhs == rhs

    def test_frobenius_reciprocity(self):
        for u in weights_up_to(2):
            for v in weights_up_to(2):
                t = KTensorClass.pure(word(u), word(v))
                for z in weights_up_to(2):
                    assert inner(induce(t), word(z)) == inner_tensor(
                        t, restrict(word(z))
                    )

    def test_projection_formula(self):
        for x in weights_up_to(2):
            for y in weights_up_to(2):
                for z in weights_up_to(2):
                    t = KTensorClass.pure(word(y), word(z))
                    lhs = induce(restrict(word(x)) * t)
                    rhs = word(x) * induce(t)
                    assert lhs == rhs

    def test_mackey_formula(self):
        def ind_12(x, t):
            out = KTensorClass()
            for (u, v), c in t.coeffs.items():
                out = out + c * KTensorClass.pure(
                    induce(KTensorClass.pure(x, word(u))), word(v)
                )
            return out

        def ind_23(t, y):
            out = KTensorClass()
            for (u, v), c in t.coeffs.items():
                out = out + c * KTensorClass.pure(
                    word(u), induce(KTensorClass.pure(word(v), y))
                )
            return out

        for u in weights_up_to(2):
            for v in weights_up_to(2):
                x, y = word(u), word(v)
                lhs = restrict(induce(KTensorClass.pure(x, y)))
                rhs = (
                    KTensorClass.pure(x, y)
                    + ind_12(x, restrict(y))
                    + ind_23(restrict(x), y)
                )
                assert lhs == rhs


class TestCounitAntipode:
    def test_counit_values(self):
        assert counit(word("b")) == -1
        assert counit(ONE) == 1
        assert counit(induce(KTensorClass.pure(ONE, ONE))) == -1

    def test_counit_axioms(self):
        for u in weights_up_to(4):
            res = restrict(word(u))
            left = KClass()
            right = KClass()
            for (a, b), c in res.coeffs.items():
                left = left + c * counit(word(a)) * word(b)
                right = right + c * counit(word(b)) * word(a)
            assert left == word(u)
            assert right == word(u)

    def test_antipode_examples(self):
        assert antipode(word("b")) == -word("b") - 2 * ONE
        assert antipode(word("bb")) == word("bb") + 3 * word("b") + 3 * ONE
        assert antipode(word("bw")) == (
            word("wb") + 2 * word("b") + 2 * word("w") + 4 * ONE
        )
        assert antipode(ONE) == ONE

    @pytest.mark.parametrize("side", ["left", "right"])
    def test_antipode_axioms(self, side):
        for u in weights_up_to(4):
            res = restrict(word(u))
            acc = KClass()
            for (a, b), c in res.coeffs.items():
                if side == "left":
                    acc = acc + c * (antipode(word(a)) * word(b))
                else:
                    acc = acc + c * (word(a) * antipode(word(b)))
            assert acc == counit(word(u)) * ONE

    def test_antipode_leading_term(self):
        for u in weights_up_to(4):
            s = antipode(word(u))
            top = {w: c for w, c in s.coeffs.items() if len(w) == len(u)}
            assert top == {u[::-1]: F((-1) ** len(u))}

    def test_primitives_are_exactly_the_augmented_letters(self):
        def delta(x):
            return (
                restrict(x)
                - KTensorClass.pure(x, ONE)
                - KTensorClass.pure(ONE, x)
            )

        assert delta(word("b") + ONE) == KTensorClass()
        assert delta(word("w") + ONE) == KTensorClass()
        # the kernel of delta on the degree <= 2 slice has rank exactly 2
        basis_words = weights_up_to(2)
        pair_index = {}
        rows = []
        for u in basis_words:
            img = delta(word(u))
            for key in img.coeffs:
                pair_index.setdefault(key, len(pair_index))
        for u in basis_words:
            img = delta(word(u))
            row = [F(0)] * len(pair_index)
            for key, c in img.coeffs.items():
                row[pair_index[key]] = c
            rows.append(row)
        matrix = [list(col) for col in zip(*rows)]  # columns = basis classes
        assert len(basis_words) - matrix_rank(matrix) == 2


class TestDualityPairing:
    def test_dual_swaps_letters(self):
        assert dual(word("bw")) == word("wb")
        assert dual(2 * word("b") + ONE) == 2 * word("w") + ONE

    def test_orthonormal_basis(self):
        for u in weights_up_to(2):
            for v in weights_up_to(2):
                assert inner(word(u), word(v)) == (1 if u == v else 0)

    def test_pairing_with_unit(self):
        assert inner(word("b") * word("b"), ONE) == 0
        assert inner(word("b"), word("w")) == 0

    def test_adjunction(self):
        for u in weights_up_to(2):
            for v in weights_up_to(2):
                for z in weights_up_to(2):
                    lhs = inner(word(u) * word(v), word(z))
                    rhs = inner(word(v), dual(word(u)) * word(z))
                    assert lhs == rhs


class TestLambdaOperations:
    def test_exterior_powers_of_a_letter(self):
        for n in range(6):
            assert lambda_binomial(word("b"), n) == word("b" * n)
        assert lambda_binomial(word("w"), 2) == word("ww")

    def test_degenerate_indices(self):
        x = random_class(random.Random(4))
        assert lambda_binomial(x, 0) == ONE
        assert lambda_binomial(x, 1) == x

    def test_integrality_on_random_classes(self):
        rng = random.Random(5)
        for _ in range(20):
            x = random_class(rng, max_len=2, terms=3)
            for n in range(5):
                assert lambda_binomial(x, n).is_integral()

    def test_adams_fixes_basis_words(self):
        assert adams(word("b"), 2) == word("b")
        assert adams(word("bw"), 2) == word("bw")
        for i in (1, 2, 3):
            assert adams(ONE, i) == ONE
        for u in weights_up_to(2):
            for i in (2, 3):
                assert adams(word(u), i) == word(u)

    def test_adams_additive_on_samples(self):
        rng = random.Random(6)
        for _ in range(10):
            x, y = random_class(rng, 1), random_class(rng, 1)
            assert adams(x + y, 2) == adams(x, 2) + adams(y, 2)


class TestSchur:
    def test_tiny_partitions(self):
        assert schur_dimension_poly((1,)).coeffs == (0, 1)
        assert schur_dimension_poly((1, 1)).coeffs == (0, 0, 1)
        assert schur_dimension_poly((2,)).coeffs == (0, 1, 1)

    def test_hook_content_integer_valued(self):
        partitions = [
            (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1),
            (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1),
            (5,), (4, 1), (3, 2), (3, 1, 1), (2, 2, 1), (2, 1, 1, 1), (1, 1, 1, 1, 1),
        ]
        for parts in partitions:
            poly = schur_dimension_poly(parts)
            for t in range(11):
                assert poly.evaluate(t).denominator == 1
            assert all(c >= 0 for c in poly.coeffs)

    def test_schur_values_on_a_letter(self):
        assert schur_apply((1, 1), word("b")) == word("bb")
        assert schur_apply((2,), word("b")) == word("bb") + word("b")
        assert schur_apply((), word("b")) == ONE

    def test_counit_matches_poly_at_minus_one(self):
        partitions = [(1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1), (2, 2), (4,)]
        for parts in partitions:
            poly = schur_dimension_poly(parts)
            assert counit(schur_apply(parts, word("b"))) == poly.evaluate(-1)

    def test_poly_evaluation(self):
        p = IntValuedPoly((1, 2, 1))  # 1 + 2t + t(t-1)/2
        assert p.evaluate(0) == 1
        assert p.evaluate(3) == 1 + 6 + 3
        assert binom_at(F(-1), 3) == -1

    def test_rejects_bad_partitions(self):
        with pytest.raises(ValueError):
            schur_dimension_poly((1, 2))
        with pytest.raises(ValueError):
            schur_dimension_poly((0,))


class TestHilbert:
    def test_basis_words(self):
        for u in weights_up_to(3):
            for n in range(6):
                assert hilbert_value(word(u), n) == comb(n, len(u))

    def test_unit_and_line(self):
        assert hilbert_value(ONE, 4) == 1
        for n in range(7):
            assert hilbert_value(line_class(), n) == 2 * n + 1


def mobius(n):
    if n == 1:
        return 1
    result, m, p = 1, n, 2
    while p * p <= m:
        if m % p == 0:
            m //= p
            if m % p == 0:
                return 0
            result = -result
        p += 1
    if m > 1:
        result = -result
    return result


class TestLyndon:
    def test_single_letters(self):
        assert lyndon_weights(1) == ["b", "w"]

    def test_length_two(self):
        assert lyndon_weights(2) == ["bw"]

    def test_counts_match_necklace_formula(self):
        for n in range(1, 8):
            divisors = [d for d in range(1, n + 1) if n % d == 0]
            expected = sum(mobius(d) * 2 ** (n // d) for d in divisors) // n
            assert len(lyndon_weights(n)) == expected

    def test_is_lyndon(self):
        assert is_lyndon("bbw")
        assert not is_lyndon("wb")
        assert not is_lyndon("")
        assert not is_lyndon("bwbw")


class TestSerialization:
    def test_kclass_round_trip(self):
        x = KClass({"bw": F(1, 3), "": F(-2)})
        assert KClass.loads(x.dumps()) == x

    def test_kclass_json_shape(self):
        x = KClass({"bw": F(1), "b": F(-2)})
        assert x.to_json() == {
            "terms": [
                {"word": "b", "coeff": "-2/1"},
                {"word": "bw", "coeff": "1/1"},
            ]
        }

    def test_ktensor_round_trip(self):
        t = restrict(word("bw"))
        assert KTensorClass.from_json(t.to_json()) == t

    def test_rejects_bad_words(self):
        with pytest.raises(ValueError):
            KClass({"bx": F(1)})
