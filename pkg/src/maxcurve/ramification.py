"""Different-degree machinery: per-class ramification contributions i(sigma),
the higher-ramification filtration at the infinite place, and the
Riemann-Hurwitz genus solver used as the integrality oracle everywhere."""

from __future__ import annotations

from dataclasses import dataclass

from .curves import CurveParams, Family

# Class tags for the conjugacy types of nontrivial elements of the full
# automorphism group, written as sigma * tau^k with sigma in the lifted
# simple group and tau generating the central cyclic factor of order m.
SUZUKI_CLASSES = (
    "tau_power",
    "order2",
    "order4",
    "div_q_minus_1",
    "div_q_plus_2q0_plus_1",
    "div_m_plain",
    "div_m_special_j",
)

REE_CLASSES = (
    "tau_power",
    "order3_central",
    "order3_noncentral",
    "order9",
    "order2",
    "order6",
    "div_q_minus_1",
    "div_q_plus_1",
    "div_q_plus_3q0_plus_1",
    "div_m_plain",
    "div_m_special_j",
)


class UnknownClassError(ValueError):
    pass


class NonIntegralGenusError(ValueError):
    """Riemann-Hurwitz did not solve to a nonnegative integer."""


def _suzuki_table(params: CurveParams) -> dict[str, tuple[int, int]]:
    q, q0, m = params.q, params.q0, params.m
    # class -> (i(sigma), i(sigma * tau^k) for k != 0)
    return {
        "tau_power": (q * q + 1, q * q + 1),
        "order2": (m * (2 * q0 + 1) + 1, 1),
        "order4": (m + 1, 1),
        "div_q_minus_1": (2, 2),
        "div_q_plus_2q0_plus_1": (0, 0),
        "div_m_plain": (0, 0),
    }


def _ree_table(params: CurveParams) -> dict[str, tuple[int, int]]:
    q, q0, m = params.q, params.q0, params.m
    return {
        "tau_power": (q**3 + 1, q**3 + 1),
        "order3_central": (m * (q + 3 * q0 + 1) + 1, 1),
        "order3_noncentral": (m * (3 * q0 + 1) + 1, 1),
        "order9": (m + 1, 1),
        "order2": (q + 1, q + 1),
        "order6": (1, 1),
        "div_q_minus_1": (2, 2),
        "div_q_plus_1": (0, 0),
        "div_q_plus_3q0_plus_1": (0, 0),
        "div_m_plain": (0, 0),
    }


def _table(params: CurveParams) -> dict[str, tuple[int, int]]:
    return _suzuki_table(params) if params.p == 2 else _ree_table(params)


def i_sigma(cls: str, params: CurveParams):
    """Contribution of one element of the given class to the different degree.

    For the special class pairing an order-dividing-m element with the unique
    matching tau power, returns the pair (plain value, special value); the
    special value occurs for exactly one tau exponent per such element.
    """
    special = 4 * params.m if params.p == 2 else 6 * params.m
    if cls == "div_m_special_j":
        return (0, special)
    table = _table(params)
    if cls not in table:
        raise UnknownClassError(f"unknown class {cls!r} for {params.family}")
    return table[cls][0]


def i_sigma_tau(cls: str, params: CurveParams) -> int:
    """Contribution of (class element) * tau^k for k != 0, special j aside."""
    table = _table(params)
    if cls not in table:
        raise UnknownClassError(f"unknown class {cls!r} for {params.family}")
    return table[cls][1]


@dataclass(frozen=True)
class RamificationFiltration:
    """Higher ramification groups at the infinite place, recorded as
    (label, order, last index at which the subgroup persists)."""

    family: Family
    levels: tuple[tuple[str, int, int], ...]

    @property
    def last_nontrivial_index(self) -> int:
        return self.levels[-1][2]


def filtration(family: Family | str, params: CurveParams) -> RamificationFiltration:
    family = Family(family)
    q, q0, m = params.q, params.q0, params.m
    if family.char == 2:
        levels = (
            ("full_stabilizer", q * q * (q - 1) * m, 0),
            ("wild_order_le_4", q * q, m),
            ("involutions", q, m * (2 * q0 + 1)),
        )
        assert m * (2 * q0 + 1) == q * q + 1 - m * q
    else:
        levels = (
            ("full_stabilizer", q**3 * (q - 1) * m, 0),
            ("sylow3", q**3, m),
            ("derived", q * q, m * (3 * q0 + 1)),
            ("center", q, m * (q + 3 * q0 + 1)),
        )
        assert m * (q + 3 * q0 + 1) == q * q - q + 1
    return RamificationFiltration(family=family, levels=levels)


def i_from_filtration(cls: str, params: CurveParams) -> int:
    """Wild i(sigma) recomputed as the number of filtration levels containing
    the element (one fixed place, membership counted from index 0)."""
    filt = filtration(params.family, params)
    membership = {
        "order2": {"full_stabilizer", "wild_order_le_4", "involutions"},
        "order4": {"full_stabilizer", "wild_order_le_4"},
        "order3_central": {"full_stabilizer", "sylow3", "derived", "center"},
        "order3_noncentral": {"full_stabilizer", "sylow3", "derived"},
        "order9": {"full_stabilizer", "sylow3"},
    }[cls]
    total = 0
    prev_end = -1
    for label, _, last in filt.levels:
        if label in membership:
            total += last - prev_end
        prev_end = last
    return total


def delta_from_composition(composition, params: CurveParams) -> int:
    """Sum the contributions of a group's nontrivial elements.

    Entries are (class, multiplicity) or (class, multiplicity, with_tau);
    with_tau means the elements carry a nontrivial tau component, so the
    cross value from the contribution table applies.  div_m_special_j
    entries count declared special (sigma, tau^j) pairs at 4m resp. 6m.
    """
    special = 4 * params.m if params.p == 2 else 6 * params.m
    total = 0
    for entry in composition:
        cls, mult = entry[0], entry[1]
        with_tau = entry[2] if len(entry) > 2 else False
        if mult < 0:
            raise ValueError("negative multiplicity")
        if cls == "div_m_special_j":
            total += mult * special
        elif with_tau:
            total += mult * i_sigma_tau(cls, params)
        else:
            total += mult * i_sigma(cls, params)
    return total


def genus_from_rh(two_g_minus_2_cover: int, order: int, delta: int) -> int:
    """Solve |L| (2 g_L - 2) + delta = 2g - 2 for g_L; raises unless the
    result is a nonnegative integer (the validity oracle for compositions)."""
    num = two_g_minus_2_cover - delta + 2 * order
    den = 2 * order
    if num % den != 0 or num < 0:
        raise NonIntegralGenusError(
            f"RH gives genus {num}/{den}, not a nonnegative integer"
        )
    return num // den


def delta_tame_general(l_cm: int, n1: int, n2: int, params: CurveParams) -> int:
    """Different degree of a tame subgroup from its cyclic-part order and the
    fixed-place counts n1 (over the small orbit) and n2 (weighted, over the
    large orbit)."""
    if params.m % l_cm != 0:
        raise ValueError("l_cm must divide m")
    fq_places = params.q**2 + 1 if params.p == 2 else params.q**3 + 1
    return (l_cm - 1) * fq_places + l_cm * n1 + l_cm * n2
