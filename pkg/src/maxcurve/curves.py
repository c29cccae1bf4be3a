"""Parameter bookkeeping and closed-form invariants for the four curve
families: the Suzuki and Ree curves and their cyclic Kummer covers."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum


class Family(str, Enum):
    SUZUKI_BASE = "suzuki-base"
    SUZUKI_COVER = "suzuki-cover"
    REE_BASE = "ree-base"
    REE_COVER = "ree-cover"

    @property
    def char(self) -> int:
        return 2 if self in (Family.SUZUKI_BASE, Family.SUZUKI_COVER) else 3

    @property
    def is_cover(self) -> bool:
        return self in (Family.SUZUKI_COVER, Family.REE_COVER)


@dataclass(frozen=True)
class CurveParams:
    family: Family
    s: int
    q0: int
    q: int
    m: int

    @property
    def p(self) -> int:
        return self.family.char

    def __post_init__(self):
        p = self.p
        assert self.q0 == p**self.s
        assert self.q == p * self.q0**2
        assert self.m == self.q - p * self.q0 + 1
        # m divides q^2+1 (char 2) resp. q^3+1 (char 3)
        if p == 2:
            assert (self.q**2 + 1) % self.m == 0
            assert self.q**2 + 1 == (self.q + 2 * self.q0 + 1) * (self.q - 2 * self.q0 + 1)
        else:
            assert (self.q**3 + 1) % self.m == 0
            assert self.q**3 + 1 == (self.q + 1) * (self.q + 3 * self.q0 + 1) * (self.q - 3 * self.q0 + 1)


def params_from_s(family: Family | str, s: int) -> CurveParams:
    family = Family(family)
    if s < 1:
        raise ValueError("s must be >= 1")
    p = family.char
    q0 = p**s
    q = p * q0 * q0
    return CurveParams(family=family, s=s, q0=q0, q=q, m=q - p * q0 + 1)


def genus(params: CurveParams) -> int:
    q, q0 = params.q, params.q0
    if params.family is Family.SUZUKI_BASE:
        return q0 * (q - 1)
    if params.family is Family.SUZUKI_COVER:
        return (q**3 - 2 * q**2 + q) // 2
    if params.family is Family.REE_BASE:
        return 3 * q0 * (q - 1) * (q + q0 + 1) // 2
    return (q**4 - 2 * q**3 + q) // 2


def hasse_weil_target(ell: int, g: int) -> int:
    """Upper bound ell + 1 + 2g*sqrt(ell); requires ell a perfect square."""
    root = math.isqrt(ell)
    if root * root != ell:
        raise ValueError(f"{ell} is not a perfect square")
    return ell + 1 + 2 * g * root


@dataclass(frozen=True)
class HermitianCoverRecord:
    family: Family
    group_order: int
    delta: int
    in_window: bool
    excluded: bool
    window: tuple[int, int]
    genus_from_delta: int | None


def hermitian_cover_analysis(family: Family | str, params: CurveParams, group_order: int) -> HermitianCoverRecord:
    """Degree of the different for a putative Galois covering by the ambient
    Hermitian curve, with the admissible order window and exclusions.

    For the Suzuki cover: delta = q^4 - q^2 - 2 - |G| (q^3 - 2q^2 + q - 2),
    window q+1 <= |G| <= q+2.  For the Ree cover: delta = q^6 - q^3 - 2 -
    |G| (q^4 - 2q^3 + q - 2), window q^2+q+1 <= |G| <= q^2+2q+4 minus the
    ruled-out orders q^2+q+1 and q^2+2q+1.
    """
    family = Family(family)
    q = params.q
    if family is Family.SUZUKI_COVER:
        two_g_cover_minus_2 = q**4 - q**2 - 2
        two_g_minus_2 = q**3 - 2 * q**2 + q - 2
        window = (q + 1, q + 2)
        excluded = False
    elif family is Family.REE_COVER:
        two_g_cover_minus_2 = q**6 - q**3 - 2
        two_g_minus_2 = q**4 - 2 * q**3 + q - 2
        window = (q**2 + q + 1, q**2 + 2 * q + 4)
        excluded = group_order in (q**2 + q + 1, q**2 + 2 * q + 1)
    else:
        raise ValueError("only the cover families admit this analysis")
    delta = two_g_cover_minus_2 - group_order * two_g_minus_2
    in_window = window[0] <= group_order <= window[1]
    # genus of the quotient the different would force, when integral
    num = two_g_cover_minus_2 - delta + 2 * group_order
    g = num // (2 * group_order) if num % (2 * group_order) == 0 and num >= 0 else None
    return HermitianCoverRecord(
        family=family,
        group_order=group_order,
        delta=delta,
        in_window=in_window,
        excluded=excluded,
        window=window,
        genus_from_delta=g,
    )
