from itertools import product

import pytest

from homhopf import QQ, StructureTensor, check_hopf, dual_hopf, opposite_hopf
from homhopf import actions as A
from homhopf import products as P
from homhopf.errors import BicrossConditionFailure, ConstructionFailure, MatchedPairFailure
from homhopf.hom_structures import same_structure
from homhopf.linear_core import basis_vec, tensor_of_maps

import support


def data_2_5():
    d = support.doc("bicross-2-5-data")
    return P.BicrossData.from_tensors(support.hopf("bicross-2-5-B"), support.hopf("bicross-2-5-data"),
                                      d.action, d.coaction)


def trivial_data(name):
    H = support.hopf(name)
    return P.BicrossData(H, H, A.trivial_action(H, H), A.trivial_coaction(H, H))


def e(n, i):
    return basis_vec(QQ, n, i)


class TestBicrossConditions:
    def test_example_passes_all_five(self):
        rep = P.check_bicross_conditions(data_2_5())
        assert rep.passed and rep.identities == list(P.BICROSS_CONDITIONS)
        assert rep.notes == []

    @pytest.mark.parametrize("name", ["kz2", "sweedler-hom"])
    def test_trivial_data_passes(self, name):
        assert P.check_bicross_data(trivial_data(name)).passed

    def test_condition_d_exponent_irrelevant_for_example(self):
        d = data_2_5()
        for p in (2,) + P.D_VARIANT_POWERS:
            for h, b in product(range(2), repeat=2):
                lhs, rhs = P._condition_d(d, h, b, p)
                assert lhs == rhs

    def test_perturbed_coaction_caught_at_g(self):
        d = data_2_5()
        entries = list(d.coaction.coact.entries()) + [(1, 1, 1, 1)]
        co = StructureTensor.from_entries(QQ, d.coaction.coact.shape, entries)
        bad = P.BicrossData.from_tensors(d.B, d.H, d.action.act, co)
        rep = P.check_bicross_data(bad)
        assert not rep.passed
        assert any(1 in v.witness[:1] for v in rep.violations)
        with pytest.raises(BicrossConditionFailure):
            P.bicrossproduct(bad)


class TestBicrossproduct:
    def test_example_construction_fails_closed(self):
        with pytest.raises(ConstructionFailure) as exc:
            P.bicrossproduct(data_2_5())
        rep = exc.value.report
        assert rep.failed_identities() == ["comultiplication_multiplicative"]
        assert exc.value.structure.dim == 4

    def test_example_structure_values(self):
        D = P.bicrossproduct(data_2_5(), verify=False)
        assert D.coproduct(e(4, 3)).data == {(3, 1): -1, (1, 3): -1}
        # computed antipode: S(x#1) = -x#1 and S(x#g) = x#g
        assert D.antipode.column(2) == (0, 0, -1, 0)
        assert D.antipode.column(3) == (0, 0, 0, 1)
        # the antipode identities themselves hold
        from homhopf.hom_structures import check_antipode
        assert check_antipode(D).passed

    def test_sign_swapped_antipode_breaks_antipode_laws(self):
        from homhopf import LinMap
        from homhopf.hom_structures import HomHopfAlgebra, check_antipode

        D = P.bicrossproduct(data_2_5(), verify=False)
        rows = [list(r) for r in D.antipode.rows]
        rows[2][2], rows[3][3] = QQ(1), QQ(-1)  # S(x#1) = x#1, S(x#g) = -x#g
        E = HomHopfAlgebra(D.algebra, D.coalgebra, antipode=LinMap(QQ, rows))
        assert check_antipode(E).failed_identities() == ["antipode_left", "antipode_right"]

    def test_trivial_data_gives_tensor_product(self):
        d = trivial_data("kz2")
        D = P.bicrossproduct(d)
        H = d.H
        assert D.antipode == tensor_of_maps(H.antipode, H.antipode)
        assert D.mul == A.tensor_product_algebra(H, H).mul
        assert D.comul == A.tensor_product_coalgebra(H, H).comul

    def test_trivial_data_twisted(self):
        d = trivial_data("sweedler-hom")
        D = P.bicrossproduct(d)
        assert D.dim == 16
        assert D.antipode == tensor_of_maps(d.H.antipode, d.H.antipode)


class TestMirror:
    def test_kz2_action_is_counit(self):
        H = support.hopf("kz2")
        act, co = P.mirror_structure(H)
        for h, a in product(range(2), repeat=2):
            assert act.apply(e(2, h), e(2, a)) == tuple(H.counit[h] * c for c in e(2, a))
        assert co.rho(e(2, 1)).data == {(1, 0): 1}  # rho(g) = g (x) 1

    def test_sweedler_action_literal_values(self):
        H = support.hopf("sweedler-hom")
        act, _ = P.mirror_structure(H)
        # 1.x = (S(1) alpha^-1(x)) alpha(1) = (1 (-x)) 1 = x . 1 = alpha(x)... evaluated literally
        one = H.unit
        expected = H.product(H.product(H.antipode(one), H.alpha_inv(H.e(2))), H.alpha(one))
        assert act.apply(one, H.e(2)) == expected == (0, 0, -1, 0)

    def test_sweedler_action_and_coaction_checks(self):
        d = P.mirror_data(support.hopf("sweedler-hom"))
        assert A.check_module_algebra(d.action).passed
        assert A.check_comodule_coalgebra(d.coaction).passed
        assert same_structure(d.H, opposite_hopf(support.hopf("sweedler-hom")))

    def test_kz2_bicrossproduct(self):
        D = support.mirror("kz2")
        assert D.dim == 4 and check_hopf(D).passed

    def test_sweedler_bicrossproduct(self):
        D = support.mirror("sweedler-hom")
        assert D.dim == 16 and check_hopf(D).passed

    @pytest.mark.parametrize("name", ["kz2", "sweedler-hom"])
    def test_closed_formulas_agree(self, name):
        H = support.hopf(name)
        D = support.mirror(name)
        assert P.mirror_closed_product(H) == D.mul
        assert P.mirror_closed_coproduct(H) == D.comul
        assert P.compare_mirror_closed_forms(H, D).passed


class TestMatchedPair:
    def test_trivial_pair(self):
        H = support.hopf("kz2")
        assert P.check_matched_pair(P.trivial_matched_pair(H, H)).passed

    def test_trivial_pair_twisted(self):
        H = support.hopf("sweedler-hom")
        assert P.check_matched_pair(P.trivial_matched_pair(H, H)).passed

    def test_dual_pair_sweedler(self):
        p = P.dual_pair_actions(P.mirror_data(support.hopf("sweedler-hom")))
        assert P.check_matched_pair(p).passed

    def test_missing_twist_fails_module_axiom(self):
        H = support.hopf("sweedler-hom")
        good = P.trivial_matched_pair(H, H)
        # h |> a = eps(h) a, without beta
        left = StructureTensor.from_function(QQ, (4, 4, 4), lambda h, a: tuple(H.counit[h] * c for c in e(4, a)))
        bad = P.MatchedPair(H, H, left, good.right_act)
        rep = P.check_matched_pair(bad)
        assert "left_module_unit" in rep.failed_identities()

    def test_dual_pair_kz2_is_trivial_up_to_twist(self):
        H = support.hopf("kz2")
        p = P.dual_pair_actions(P.mirror_data(H))
        Hs = dual_hopf(H)
        triv = P.trivial_matched_pair(p.B, p.H)
        assert p.left_act == triv.left_act and p.right_act == triv.right_act
        assert same_structure(p.H, Hs)

    def test_pairing_sanity(self):
        H = support.hopf("sweedler-hom")
        d = P.mirror_data(H)
        p = P.dual_pair_actions(d)
        n = H.dim
        Bm2 = d.B.twist_power(-2)
        for i, j, k in product(range(n), repeat=3):
            # <h*_i <| h_j, h_k> = <h*_i, alpha^-1(h_j) . beta^-2(h_k)>, evaluated through the action map
            lhs = p.right_act.coeffs[i][j][k]
            rhs = d.action.apply(d.H.alpha_inv(e(n, j)), Bm2(e(n, k)))[i]
            assert lhs == rhs

    def test_bad_pair_refused(self):
        H = support.hopf("sweedler-hom")
        good = P.trivial_matched_pair(H, H)
        left = StructureTensor.from_function(QQ, (4, 4, 4), lambda h, a: tuple(H.counit[h] * c for c in e(4, a)))
        with pytest.raises(MatchedPairFailure):
            P.double_cross_product(P.MatchedPair(H, H, left, good.right_act))


class TestDoubleCross:
    def test_trivial_pair_gives_tensor_product(self):
        H = support.hopf("kz2")
        D = P.double_cross_product(P.trivial_matched_pair(H, H))
        assert D.mul == A.tensor_product_algebra(H, H).mul
        assert D.antipode == tensor_of_maps(H.antipode, H.antipode)

    def test_dual_pair_sweedler(self):
        p = P.dual_pair_actions(P.mirror_data(support.hopf("sweedler-hom")))
        D = P.double_cross_product(p)
        assert D.dim == 16 and check_hopf(D).passed

    def test_unit_law(self):
        H = support.hopf("sweedler-hom")
        p = P.dual_pair_actions(P.mirror_data(H))
        D = P.double_cross_product(p)
        nB, nH = p.B.dim, p.H.dim
        for b, g in product(range(nB), range(nH)):
            want = tuple(x * y for x in p.B.alpha.column(b) for y in p.H.alpha.column(g))
            assert D.product(D.unit, D.e(b * nH + g)) == want


class TestDrinfeldDouble:
    def test_sweedler_double(self):
        D = support.double("sweedler-hom")
        assert D.dim == 16 and check_hopf(D).passed
        assert D.provenance["construction"] == "drinfeld_double"

    def test_closed_matches_generic(self):
        for name in ("kz2", "sweedler-hom"):
            H = support.hopf(name)
            assert P.drinfeld_closed_product(H) == P.drinfeld_generic(H).mul

    def test_unit_and_unit_law(self):
        H = support.hopf("sweedler-hom")
        D = support.double("sweedler-hom")
        n = H.dim
        assert D.unit == tuple(u * c for u in H.unit for c in H.counit)  # 1 x eps
        a_dual = H.alpha_inv.transpose()
        for k, g in product(range(n), repeat=2):
            want = tuple(x * y for x in H.alpha.column(k) for y in a_dual.column(g))
            assert D.product(D.unit, D.e(k * n + g)) == want

    def test_antipode_identities_on_all_basis_elements(self):
        D = support.double("sweedler-hom")
        for d in range(D.dim):
            t = D.coproduct(D.e(d)).map(0, D.antipode).merge(0, 1, D.mul)
            assert t.flat() == tuple(D.counit[d] * u for u in D.unit)
