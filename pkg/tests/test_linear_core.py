import random
from fractions import Fraction
from itertools import product

import pytest
from hypothesis import given
from hypothesis import strategies as st

from homhopf import QQ, LinMap, PrimeField, Residue, SlotTensor, StructureTensor
from homhopf.errors import DimMismatch, ParseError, SingularMap
from homhopf.linear_core import (
    apply_structure,
    basis_vec,
    coapply_structure,
    dual_map,
    invert_map,
    kron_vec,
    pair_index,
    tensor_of_maps,
    unpair_index,
)
from homhopf.scalars import field_from_spec, is_prime

import support

GF5, GF7 = PrimeField(5), PrimeField(7)

fractions = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def matrices(n, elems=fractions):
    return st.lists(st.lists(elems, min_size=n, max_size=n), min_size=n, max_size=n)


# -- scalars ----------------------------------------------------------------------


class TestScalars:
    def test_rational_parse_normalizes(self):
        assert QQ("6/4") == Fraction(3, 2)
        assert QQ.format(QQ("-6/4")) == "-3/2"
        assert QQ.format(QQ("4/2")) == "2"

    @pytest.mark.parametrize("bad", ["0.5", "1e3", "abc", "1/0", ""])
    def test_rational_rejects_inexact_or_malformed(self, bad):
        with pytest.raises((ParseError, ZeroDivisionError)):
            QQ(bad)

    def test_floats_rejected(self):
        with pytest.raises(TypeError):
            QQ(0.5)
        with pytest.raises(TypeError):
            GF5(0.5)

    def test_gfp_arithmetic(self):
        a, b = GF7(3), GF7(5)
        assert (a + b).value == 1
        assert (a * b).value == 1
        assert (a / b * b) == a
        assert GF7(Fraction(1, 2)).value == 4

    def test_gfp_rejects_out_of_range_text(self):
        with pytest.raises(ParseError):
            GF5.parse("7")
        with pytest.raises(ParseError):
            GF5.parse("1/2")

    def test_mixed_moduli_rejected(self):
        with pytest.raises(ValueError):
            GF5(1) + GF7(1)

    def test_field_from_spec(self):
        assert field_from_spec({"kind": "rational"}) is QQ
        assert field_from_spec({"kind": "gfp", "p": 5}) == GF5
        with pytest.raises(ParseError):
            field_from_spec({"kind": "gfp", "p": 6})

    def test_primality(self):
        assert [p for p in range(30) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]

    @given(fractions, fractions, fractions)
    def test_rational_field_axioms(self, a, b, c):
        a, b, c = QQ(a), QQ(b), QQ(c)
        assert (a + b) + c == a + (b + c)
        assert a * (b + c) == a * b + a * c
        assert a + QQ.zero == a and a * QQ.one == a
        if a:
            assert a * (QQ.one / a) == QQ.one

    @given(st.sampled_from([2, 3, 5, 7, 11, 101]), st.integers(), st.integers(), st.integers())
    def test_prime_field_axioms(self, p, x, y, z):
        F = PrimeField(p)
        a, b, c = F(x), F(y), F(z)
        assert (a + b) + c == a + (b + c)
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert a - a == F.zero
        if a:
            assert a * (F.one / a) == F.one

    @given(st.lists(fractions, min_size=1, max_size=12), st.randoms())
    def test_summation_order_independent(self, xs, rnd):
        ys = list(xs)
        rnd.shuffle(ys)
        assert sum(map(QQ, xs), QQ.zero) == sum(map(QQ, ys), QQ.zero)


# -- maps -------------------------------------------------------------------------


class TestMaps:
    def test_invert_identity(self):
        assert invert_map(LinMap.identity(QQ, 2)) == LinMap.identity(QQ, 2)

    def test_invert_involution(self):
        d = LinMap.diagonal(QQ, [1, -1])
        assert invert_map(d) == d

    def test_invert_over_gf5(self):
        f = LinMap(GF5, ((1, 1), (0, 1)))
        g = invert_map(f)
        assert g == LinMap(GF5, ((1, 4), (0, 1)))
        assert f @ g == LinMap.identity(GF5, 2)

    def test_singular(self):
        with pytest.raises(SingularMap):
            invert_map(LinMap(QQ, ((1, 2), (2, 4))))
        with pytest.raises(SingularMap):
            invert_map(LinMap(GF5, ((1, 2), (3, 1))))  # det = -5

    def test_non_square_rejected(self):
        with pytest.raises((DimMismatch, SingularMap)):
            invert_map(LinMap(QQ, ((1, 0, 0), (0, 1, 0))))

    def test_tensor_of_identities(self):
        assert tensor_of_maps(LinMap.identity(QQ, 2), LinMap.identity(QQ, 2)) == LinMap.identity(QQ, 4)

    def test_tensor_of_diagonals(self):
        d = LinMap.diagonal(QQ, [1, -1])
        assert tensor_of_maps(d, d) == LinMap.diagonal(QQ, [1, -1, -1, 1])

    def test_transpose_examples(self):
        assert dual_map(LinMap.identity(QQ, 3)) == LinMap.identity(QQ, 3)
        assert dual_map(LinMap(QQ, ((0, 1), (0, 0)))) == LinMap(QQ, ((0, 0), (1, 0)))

    def test_pair_index_roundtrip(self):
        for i, j in product(range(3), range(5)):
            assert unpair_index(pair_index(i, j, 5), 5) == (i, j)

    @given(matrices(3))
    def test_invert_is_two_sided_inverse(self, rows):
        f = LinMap(QQ, rows)
        try:
            g = invert_map(f)
        except SingularMap:
            return
        assert f @ g == LinMap.identity(QQ, 3)
        assert g @ f == LinMap.identity(QQ, 3)

    @given(matrices(2), matrices(2))
    def test_tensor_of_maps_pointwise(self, a, b):
        f, g = LinMap(QQ, a), LinMap(QQ, b)
        fg = tensor_of_maps(f, g)
        for i, j in product(range(2), repeat=2):
            e = kron_vec(basis_vec(QQ, 2, i), basis_vec(QQ, 2, j))
            assert fg(e) == kron_vec(f.column(i), g.column(j))

    @given(matrices(2), matrices(2), matrices(2))
    def test_tensor_of_maps_associative(self, a, b, c):
        f, g, h = (LinMap(QQ, m) for m in (a, b, c))
        assert tensor_of_maps(tensor_of_maps(f, g), h) == tensor_of_maps(f, tensor_of_maps(g, h))

    @given(matrices(3))
    def test_dual_map_pairing(self, rows):
        f = LinMap(QQ, rows)
        ft = dual_map(f)
        for phi, v in product(range(3), repeat=2):
            lhs = ft(basis_vec(QQ, 3, phi))[v]
            rhs = f(basis_vec(QQ, 3, v))[phi]
            assert lhs == rhs


# -- structure tensors ------------------------------------------------------------


class TestStructureTensor:
    def test_kz2_product(self):
        H = support.hopf("kz2")
        g = basis_vec(QQ, 2, 1)
        assert apply_structure(H.mul, g, g) == basis_vec(QQ, 2, 0)

    def test_zero_input(self):
        H = support.hopf("sweedler-hom")
        z = (QQ.zero,) * 4
        assert apply_structure(H.mul, z, H.e(2)) == z
        assert coapply_structure(H.comul, z) == (QQ.zero,) * 16

    def test_sweedler_coproduct_of_x(self):
        H = support.hopf("sweedler-hom")
        got = coapply_structure(H.comul, H.e(2))
        # (-x) (x) g + 1 (x) (-x); pair index i * 4 + j
        want = support.vec(QQ, 16, {2 * 4 + 1: -1, 0 * 4 + 2: -1})
        assert got == want

    def test_dimension_checks(self):
        H = support.hopf("kz2")
        with pytest.raises(DimMismatch):
            apply_structure(H.mul, (1, 0, 0), (1, 0))
        with pytest.raises(DimMismatch):
            StructureTensor(QQ, (2, 2, 2), [[[0, 0]]])
        with pytest.raises(DimMismatch):
            StructureTensor.from_entries(QQ, (2, 2, 2), [(0, 0, 5, 1)])

    def test_flipped_twice(self):
        H = support.hopf("sweedler-hom")
        assert H.mul.flipped().flipped() == H.mul
        assert H.mul.flipped() != H.mul


# -- slot tensors -----------------------------------------------------------------


class TestSlotTensor:
    def test_split_then_counit_recovers_twist_inverse(self):
        H = support.hopf("sweedler-hom")
        for i in range(4):
            t = SlotTensor.basis(QQ, (4,), (i,)).split(0, H.comul)
            assert t.evaluate(0, H.counit).flat() == H.alpha_inv.column(i)

    def test_merge_places_result_at_lower_slot(self):
        H = support.hopf("kz2")
        t = SlotTensor.basis(QQ, (2, 3, 2), (1, 2, 1))
        m = t.merge(2, 0, H.mul)
        assert m.dims == (2, 3)
        assert m.data == {(0, 2): QQ.one}

    def test_fuse_unfuse_roundtrip(self):
        t = SlotTensor(QQ, (2, 3, 4), {(1, 2, 3): QQ(5), (0, 1, 0): QQ(-1)})
        f = t.fuse(1)
        assert f.dims == (2, 12)
        assert f.unfuse(1, 3, 4) == t

    def test_permute_and_swap(self):
        t = SlotTensor(QQ, (2, 3), {(1, 2): QQ.one})
        assert t.swap(0, 1).data == {(2, 1): QQ.one}
        assert t.permute((1, 0)) == t.swap(0, 1)

    def test_copairing_contracts_to_identity(self):
        # e_i paired against the dual leg of sum_j e_j (x) e^j returns e_i
        cop = SlotTensor.copairing(QQ, 3)
        for i in range(3):
            t = SlotTensor.basis(QQ, (3,), (i,)).outer(cop).contract(0, 2)
            assert t.flat() == basis_vec(QQ, 3, i)

    @given(st.lists(fractions, min_size=4, max_size=4), st.lists(fractions, min_size=4, max_size=4))
    def test_outer_matches_kron(self, x, y):
        x, y = tuple(map(QQ, x)), tuple(map(QQ, y))
        t = SlotTensor.from_vec(QQ, x).outer(SlotTensor.from_vec(QQ, y))
        assert t.flat() == kron_vec(x, y)

    def test_random_linear_combination_spot_check(self):
        # basis-level checks extend by linearity: Delta(ab) = Delta(a) Delta(b) on random elements
        H = support.hopf("sweedler-hom")
        rnd = random.Random(7)
        for _ in range(5):
            a = tuple(QQ(rnd.randint(-3, 3)) for _ in range(4))
            b = tuple(QQ(rnd.randint(-3, 3)) for _ in range(4))
            lhs = H.coproduct(H.product(a, b))
            rhs = H.coproduct(a).outer(H.coproduct(b)).merge(0, 2, H.mul).merge(1, 2, H.mul)
            assert lhs == rhs
