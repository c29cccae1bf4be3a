import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from maxcurve.curves import params_from_s
from maxcurve.ramification import (
    NonIntegralGenusError,
    UnknownClassError,
    delta_from_composition,
    delta_tame_general,
    filtration,
    genus_from_rh,
    i_from_filtration,
    i_sigma,
    i_sigma_tau,
)

P8 = params_from_s("suzuki-cover", 1)
P32 = params_from_s("suzuki-cover", 2)
P27 = params_from_s("ree-cover", 1)


class TestContributionValues:
    def test_suzuki_rows(self):
        assert i_sigma("tau_power", P8) == 65
        assert i_sigma("order2", P8) == 26  # m(2q0+1)+1
        assert i_sigma("order4", P8) == 6
        assert i_sigma("div_q_minus_1", P8) == 2
        assert i_sigma("div_q_plus_2q0_plus_1", P8) == 0
        assert i_sigma("div_m_plain", P8) == 0
        assert i_sigma("div_m_special_j", P8) == (0, 20)

    def test_suzuki_tau_products(self):
        assert i_sigma_tau("order2", P8) == 1
        assert i_sigma_tau("order4", P8) == 1
        assert i_sigma_tau("div_q_minus_1", P8) == 2
        assert i_sigma_tau("div_q_plus_2q0_plus_1", P8) == 0
        assert i_sigma_tau("tau_power", P8) == 65

    def test_ree_rows(self):
        assert i_sigma("tau_power", P27) == 19684
        assert i_sigma("order3_central", P27) == 704 == P27.q**2 - P27.q + 2
        assert i_sigma("order3_noncentral", P27) == 191 == 704 - P27.m * P27.q
        assert i_sigma("order9", P27) == 20
        assert i_sigma("order2", P27) == 28
        assert i_sigma("order6", P27) == 1
        assert i_sigma("div_q_minus_1", P27) == 2
        assert i_sigma("div_q_plus_1", P27) == 0
        assert i_sigma("div_q_plus_3q0_plus_1", P27) == 0
        assert i_sigma("div_m_special_j", P27) == (0, 114)

    def test_unknown_class(self):
        with pytest.raises(UnknownClassError):
            i_sigma("order3_central", P8)
        with pytest.raises(UnknownClassError):
            i_sigma("nonsense", P27)


class TestFiltration:
    def test_suzuki_jumps(self):
        filt = filtration("suzuki-cover", P8)
        labels = [(lv[0], lv[1], lv[2]) for lv in filt.levels]
        assert labels == [
            ("full_stabilizer", 8 * 8 * 7 * 5, 0),
            ("wild_order_le_4", 64, 5),
            ("involutions", 8, 25),
        ]
        assert filt.last_nontrivial_index == 25 == P8.q**2 + 1 - P8.m * P8.q

    def test_ree_jumps(self):
        filt = filtration("ree-cover", P27)
        sizes = [lv[1] for lv in filt.levels]
        ends = [lv[2] for lv in filt.levels]
        assert sizes == [27**3 * 26 * 19, 27**3, 27**2, 27]
        assert ends == [0, 19, 19 * 10, 19 * 37]
        assert filt.last_nontrivial_index == 703 == P27.q**2 - P27.q + 1

    def test_wild_values_from_filtration(self):
        # membership depth reproduces the table for every wild class
        assert i_from_filtration("order2", P8) == i_sigma("order2", P8)
        assert i_from_filtration("order4", P8) == i_sigma("order4", P8)
        assert i_from_filtration("order3_central", P27) == i_sigma("order3_central", P27)
        assert i_from_filtration("order3_noncentral", P27) == i_sigma("order3_noncentral", P27)
        assert i_from_filtration("order9", P27) == i_sigma("order9", P27)


class TestDeltaFromComposition:
    def test_empty(self):
        assert delta_from_composition([], P8) == 0

    def test_tau_only(self):
        assert delta_from_composition([("tau_power", 4)], P8) == 260

    def test_cyclic_m_gives_base_genus(self):
        delta = delta_from_composition([("tau_power", 4)], P8)
        assert genus_from_rh(390, 5, delta) == 14

    def test_with_tau_entries(self):
        comp = [("order2", 1), ("tau_power", 4), ("order2", 4, True)]
        assert delta_from_composition(comp, P8) == 26 + 260 + 4

    def test_special_pairs(self):
        assert delta_from_composition([("div_m_special_j", 4)], P8) == 80
        assert delta_from_composition([("div_m_special_j", 3)], P27) == 3 * 114

    def test_negative_multiplicity(self):
        with pytest.raises(ValueError):
            delta_from_composition([("order2", -1)], P8)


class TestGenusFromRH:
    def test_examples(self):
        assert genus_from_rh(390, 1, 0) == 196
        assert genus_from_rh(390, 5, 260) == 14
        assert genus_from_rh(19684 * 25, 19, 18 * 19684) == 3627

    def test_non_integral(self):
        with pytest.raises(NonIntegralGenusError):
            genus_from_rh(390, 7, 5)

    def test_negative(self):
        with pytest.raises(NonIntegralGenusError):
            genus_from_rh(390, 1, 1000)

    @given(st.integers(0, 10**6), st.integers(1, 10**4), st.integers(0, 10**6))
    @settings(max_examples=200, deadline=None)
    def test_round_trip(self, g, order, delta):
        two_g_minus_2 = order * (2 * g - 2) + delta
        assert genus_from_rh(two_g_minus_2, order, delta) == g


class TestDeltaTameGeneral:
    def test_examples(self):
        assert delta_tame_general(1, 0, 0, P8) == 0
        assert delta_tame_general(5, 0, 0, P8) == 260
        assert delta_tame_general(1, 17, 0, P8) == 17
        assert delta_tame_general(1, 3, 4, P8) == 7
        assert delta_tame_general(19, 0, 0, P27) == 18 * 19684

    def test_rejects_non_divisor(self):
        with pytest.raises(ValueError):
            delta_tame_general(3, 0, 0, P8)
