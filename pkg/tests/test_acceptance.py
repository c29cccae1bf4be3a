"""Acceptance suite: one test per acceptance criterion, each printing a
pass/fail line (run with -s to see them inline).

Three checks are expected to fail and document real discrepancies between
the stated values and the computation; the analysis lives in the project
verification notes:

* criterion 5 (final clause): order-5 elements of the lifted simple group
  spread their torus-product contributions as 5 fixed places at each of the
  four powers (total 20); no single power concentrates all 20.  Every
  subgroup-level different degree only consumes the total, which matches.
* criterion 7, rows F_2^12 and F_2^20: the bundled reference rows list 13
  resp. 247, but exhaustive analysis over all admissible subgroup orders
  shows no quotient with those genera exists; every other row value is
  reproduced.
"""

import time

from maxcurve import action as act
from maxcurve import catalog as cat
from maxcurve.counting import count_points
from maxcurve.curves import genus as curve_genus, hermitian_cover_analysis, params_from_s

P8 = params_from_s("suzuki-cover", 1)
P32 = params_from_s("suzuki-cover", 2)
P27 = params_from_s("ree-cover", 1)


def report(name: str, ok: bool, detail: str = "") -> None:
    print(f"[{'PASS' if ok else 'FAIL'}] {name}" + (f": {detail}" if detail else ""))
    assert ok, f"{name}: {detail}"


def test_criterion_1_suzuki_q8_maximal_count():
    t0 = time.perf_counter()
    rep = count_points("suzuki-cover", P8, 4)
    wall = time.perf_counter() - t0
    report(
        "criterion 1: point count over the quartic extension at q=8",
        rep.n_points == 29185 == 4096 + 1 + 2 * 196 * 64 and rep.is_maximal and wall < 1.0,
        f"N={rep.n_points}, wall={wall:.3f}s",
    )


def test_criterion_2_suzuki_q32_maximal_count():
    t0 = time.perf_counter()
    rep = count_points("suzuki-cover", P32, 4, threads=1)
    wall = time.perf_counter() - t0
    expected = 2**20 + 1 + 2 * 15376 * 2**10
    report(
        "criterion 2: point count over the quartic extension at q=32 (single-threaded)",
        rep.n_points == expected and rep.is_maximal and wall < 120.0,
        f"N={rep.n_points}, expected={expected}, wall={wall:.2f}s",
    )


def test_criterion_3_ree_small_extensions():
    t0 = time.perf_counter()
    counts = [count_points("ree-cover", P27, r).n_points for r in (1, 2, 3)]
    wall = time.perf_counter() - t0
    report(
        "criterion 3: no new places over the quadratic or cubic extensions at q=27",
        counts == [19684, 19684, 19684] and wall < 10.0,
        f"counts={counts}, wall={wall:.2f}s",
    )


def test_criterion_4_orbit_structure(place_set, generators):
    sizes = act.verify_orbits(place_set, list(generators.values()))
    report(
        "criterion 4: automorphism orbits at q=8",
        sizes == (65, 29120) and len(place_set) == 29185,
        f"orbit sizes={sizes}",
    )


def test_criterion_5_contribution_table(place_set, generators, simple_group_gens):
    gamma = generators["gamma"]
    checks = []
    checks.append(all(act.fixed_points(act.power(gamma, k)) == 65 for k in range(1, 5)))
    t7 = generators["torus7"]
    checks.append(act.fixed_points(t7) == 2 and act.element_order(t7) == 7)
    inv = generators["wild_c"]
    checks.append(act.fixed_points(inv) == 1 and act.element_order(inv) == 2)
    w4 = generators["wild_b"]
    checks.append(act.fixed_points(w4) == 1 and act.element_order(w4) == 4)
    e13 = act.find_element_of_order(place_set, 13, simple_group_gens)
    checks.append(act.fixed_points(e13) == 0)
    e5 = act.find_element_of_order(place_set, 5, simple_group_gens)
    checks.append(act.fixed_points(e5) == 0)
    report(
        "criterion 5: fixed-place counts match the contribution table",
        all(checks),
        f"row results={checks}",
    )


def test_criterion_5_special_pair_concentration(place_set, generators, simple_group_gens):
    """Stated claim: exactly one torus power pairs with an order-5 element
    for a single contribution of 4m = 20 fixed places.

    The computation refutes the stated per-element concentration: every
    order-5 element of the lifted simple group fixes one full fiber (5
    places) at each of the four torus powers.  The total over the powers is
    20 = 4m, which is the only quantity any different-degree formula uses,
    and all genus results are unaffected.  See the verification notes for
    the subgroup-theoretic derivation of the observed pattern.
    """
    gamma = generators["gamma"]
    patterns = []
    for seed in (20240901, 1, 2):
        e5 = act.find_element_of_order(place_set, 5, simple_group_gens, seed=seed)
        pattern = sorted(act.fixed_points(act.compose(e5, act.power(gamma, j))) for j in range(1, 5))
        patterns.append(pattern)
    stated = sorted([20, 0, 0, 0])
    ok = all(p == stated for p in patterns)
    report(
        "criterion 5 (final clause): single-power concentration of the 4m contribution",
        ok,
        f"measured patterns={patterns}; totals={[sum(p) for p in patterns]} (aggregate 4m holds); "
        "stated [0,0,0,20] does not occur",
    )


def _sweep_checks(family, s, base_genus):
    params = params_from_s(family, s)
    res = cat.spectrum(family, params)
    cover = curve_genus(params)
    ok = True
    details = []
    if res.unexplained_mismatches:
        ok = False
        details.append(f"unexplained mismatches: {[(r.spec.kind, r.spec.args) for r in res.unexplained_mismatches]}")
    for rec in res.mismatches:
        if not rec.note:
            ok = False
            details.append(f"undocumented mismatch {rec.spec}")
    if not all(0 <= rec.genus <= cover for rec in res.records):
        ok = False
        details.append("genus out of range")
    if cover not in res.genera():
        ok = False
        details.append("trivial spec does not return the cover genus")
    if base_genus not in res.genera():
        ok = False
        details.append("full-torus spec does not return the base genus")
    details.append(
        f"{len(res.records)} valid specs, {len(res.mismatches)} documented mismatches"
    )
    return ok, "; ".join(details)


def test_criterion_6_dual_path_sweeps():
    ok1, d1 = _sweep_checks("suzuki-cover", 1, 14)
    ok2, d2 = _sweep_checks("suzuki-cover", 2, 124)
    ok3, d3 = _sweep_checks("ree-cover", 1, 3627)
    report(
        "criterion 6: dual-path equality and boundary collapses on the full sweeps",
        ok1 and ok2 and ok3,
        f"s=1[{d1}] s=2[{d2}] ree[{d3}]",
    )


def test_criterion_7_reference_genera_f3_18():
    t0 = time.perf_counter()
    contained, missing = cat.table1_check("F_3^18")
    wall = time.perf_counter() - t0
    report(
        "criterion 7 (F_3^18): reference genera contained in the computed spectrum",
        contained and wall < 60.0,
        f"missing={missing}, wall={wall:.2f}s",
    )


def test_criterion_7_reference_genera_f2_12():
    """Expected failure: the bundled row lists genus 13, but no subgroup of
    the automorphism group yields a quotient of genus 13 (for every
    admissible order |L| <= 16 the required different degree is not
    attainable by any element composition).  The other three values 19, 45,
    196 are all reproduced."""
    contained, missing = cat.table1_check("F_2^12")
    others = sorted(cat.TABLE1["F_2^12"] - {13})
    spectrum_vals = set(cat.spectrum("suzuki-cover", P8).genera())
    assert all(v in spectrum_vals for v in others)
    report(
        "criterion 7 (F_2^12): reference genera contained in the computed spectrum",
        contained,
        f"missing={missing} (all other row values reproduced)",
    )


def test_criterion_7_reference_genera_f2_20():
    """Expected failure: the bundled row lists genus 247, unreachable by the
    same exhaustive analysis at q=32; the remaining 27 values are all
    reproduced."""
    contained, missing = cat.table1_check("F_2^20")
    others = sorted(cat.TABLE1["F_2^20"] - {247})
    spectrum_vals = set(cat.spectrum("suzuki-cover", P32).genera())
    assert all(v in spectrum_vals for v in others)
    report(
        "criterion 7 (F_2^20): reference genera contained in the computed spectrum",
        contained,
        f"missing={missing} (all other row values reproduced)",
    )


def test_criterion_8_hermitian_cover_identities():
    suz9 = hermitian_cover_analysis("suzuki-cover", P8, 9)
    suz10 = hermitian_cover_analysis("suzuki-cover", P8, 10)
    suz8 = hermitian_cover_analysis("suzuki-cover", P8, 8)
    ree = hermitian_cover_analysis("ree-cover", P27, (27 + 1) ** 2)
    ok = (
        suz9.in_window
        and suz10.in_window
        and not suz8.in_window
        and suz9.delta == 520 == P8.q**3 + P8.q
        and ree.delta == 3 * 27 * (27**3 + 1)
        and ree.genus_from_delta == curve_genus(P27)
        and ree.excluded
    )
    report(
        "criterion 8: ambient Hermitian covering identities",
        ok,
        f"suzuki window delta={suz9.delta}, ree delta={ree.delta}, "
        f"ree genus={ree.genus_from_delta} (= cover genus coincidence)",
    )
