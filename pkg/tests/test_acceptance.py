"""Acceptance criteria, one test per criterion at its stated tolerance.

A PASS/FAIL line per criterion is printed in the terminal summary.
"""

import filecmp
import math

import numpy as np
import pytest

from thermwerner.linalg import frobenius_dist
from thermwerner.mapping import (
    CHSH_BOUND,
    SEPARABLE_BOUND,
    WernerRegime,
    classify_werner,
    critical_constants,
    temperature_of_x,
    x_of_temperature,
    x_range,
)
from thermwerner.measures import (
    concurrence_thermal,
    concurrence_wootters,
    concurrence_xstate,
    degree_of_mixture,
    entanglement_of_formation,
    j0,
    j1,
    jsd,
)
from thermwerner.rootfind import bisect_predicate
from thermwerner.states import BellChoice, ModelParams, ground_state, maximally_mixed, thermal_state, werner_state
from thermwerner.sweep import evaluate_point, figure, read_csv

T_C = 8 / math.log(3)


@pytest.fixture(scope="module")
def figure_dirs(tmp_path_factory):
    """All five presets written twice into separate directories."""
    first = tmp_path_factory.mktemp("figs_a")
    second = tmp_path_factory.mktemp("figs_b")
    names = []
    for fig_id in range(1, 6):
        a = figure(fig_id, first)
        b = figure(fig_id, second)
        assert [p.name for p in a] == [p.name for p in b]
        names += [p.name for p in a]
    return first, second, names


def test_criterion_01_critical_temperature_independent_of_field():
    for b in (0.0, 1.0, 2.0, 4.0, 6.0):
        p = ModelParams(1.0, b)
        root = bisect_predicate(lambda t: concurrence_thermal(p, t) > 0, 1.0, 20.0, xtol=1e-13)
        assert abs(root - T_C) < 1e-9, (b, root)
        assert abs(critical_constants(p).t_c - T_C) < 1e-9


def test_criterion_02_concurrence_oracle_triangle():
    worst = 0.0
    for t in (0.5, 1, 2, 4, 6, 8, 10, 12):
        for b in (0, 1, 2, 4, 6, 8):
            p = ModelParams(1.0, b)
            rho = thermal_state(p, t)
            vals = (concurrence_wootters(rho), concurrence_xstate(rho), concurrence_thermal(p, t))
            worst = max(worst, max(vals) - min(vals))
    assert worst < 1e-9


def test_criterion_03_werner_thresholds():
    for x in (0.0, 0.1, 0.2, 0.3, 1 / 3):
        assert abs(concurrence_wootters(werner_state(x))) < 1e-10
    for x in np.linspace(1 / 3, 1.0, 41)[1:]:
        assert abs(concurrence_wootters(werner_state(x)) - (3 * x - 1) / 2) < 1e-10
    eps = 1e-12
    assert classify_werner(SEPARABLE_BOUND - eps) is WernerRegime.SEPARABLE
    assert classify_werner(SEPARABLE_BOUND) is WernerRegime.SEPARABLE
    assert classify_werner(SEPARABLE_BOUND + eps) is WernerRegime.ENTANGLED_LOCAL
    assert classify_werner(CHSH_BOUND - eps) is WernerRegime.ENTANGLED_LOCAL
    assert classify_werner(CHSH_BOUND) is WernerRegime.ENTANGLED_LOCAL
    assert classify_werner(CHSH_BOUND + eps) is WernerRegime.CHSH_VIOLATING


def test_criterion_04_mapping_transports_concurrence():
    worst_c = worst_ef = 0.0
    for b in (0.0, 1.0, 2.0, 3.0, 4.0):
        p = ModelParams(1.0, b)
        for t in np.geomspace(1e-2, 50.0, 200):
            c_werner = max(0.0, (3 * x_of_temperature(p, t) - 1) / 2)
            c_thermal = concurrence_thermal(p, t)
            worst_c = max(worst_c, abs(c_werner - c_thermal))
            worst_ef = max(worst_ef, abs(entanglement_of_formation(min(c_werner, 1.0)) - entanglement_of_formation(c_thermal)))
    assert worst_c < 1e-10
    assert worst_ef < 1e-9


def test_criterion_05a_mapping_landmarks():
    for b in (0.0, 1.0, 2.0, 3.0, 4.0, 6.0):
        assert abs(x_of_temperature(ModelParams(1.0, b), T_C) - 1 / 3) < 1e-9
    assert x_of_temperature(ModelParams(1.0, 0.0), 1e-4) > 1 - 1e-6
    assert abs(x_of_temperature(ModelParams(1.0, 4.0), 1e-4) - 2 / 3) < 1e-6


def test_criterion_05b_mapping_high_temperature_limit():
    for b in (0.0, 1.0, 2.0, 3.0, 4.0):
        x = x_of_temperature(ModelParams(1.0, b), 1e6)
        assert x < 1e-6, f"x(T=1e6, B={b}) = {x!r}"


def test_criterion_05c_inverse_round_trip():
    rng = np.random.default_rng(5)
    for b in (0.0, 2.0, 4.0):
        p = ModelParams(1.0, b)
        lo, hi = x_range(p)
        for x in rng.uniform(lo, hi, size=100):
            if not lo < x < hi:
                continue
            assert abs(x_of_temperature(p, temperature_of_x(p, x)) - x) < 1e-10


def test_criterion_06_zero_field_thermal_equals_singlet_werner():
    rng = np.random.default_rng(6)
    p = ModelParams(1.0, 0.0)
    for t in np.exp(rng.uniform(math.log(1e-2), math.log(1e3), size=50)):
        rho = thermal_state(p, t)
        w = werner_state(x_of_temperature(p, t), BellChoice.PSI_MINUS)
        assert frobenius_dist(rho.matrix, w.matrix) < 1e-10


def test_criterion_07_ground_state_trichotomy():
    expected = {3.0: (1.0, 0.0), 5.0: (0.0, 0.0)}
    for b in (3.0, 4.0, 5.0):
        p = ModelParams(1.0, b)
        assert np.max(np.abs(thermal_state(p, 1e-3).matrix - ground_state(p).matrix)) < 1e-6
        rec = evaluate_point(p, 1e-3)
        if b == 4.0:
            assert abs(rec.e_f - entanglement_of_formation(0.5)) < 1e-6
            assert rec.c_js > 0
        else:
            e_f, c_js = expected[b]
            assert abs(rec.e_f - e_f) < 1e-6 and abs(rec.c_js - c_js) < 1e-6


def test_criterion_08_degree_of_mixture():
    assert abs(degree_of_mixture(thermal_state(ModelParams(1.0, 4.0), 1e-3)) - 2.0) < 1e-4
    assert degree_of_mixture(werner_state(1.0, BellChoice.PSI_MINUS)) == pytest.approx(1.0, abs=1e-15)
    assert degree_of_mixture(np.diag([0, 0, 0, 1.0])) == 1.0
    assert degree_of_mixture(maximally_mixed()) == 4.0


def test_criterion_09_jsd_properties():
    rng = np.random.default_rng(9)
    triples = rng.dirichlet(np.ones(4), size=(1000, 3))
    for p, q, r in triples:
        d_pq, d_qr, d_pr = (math.sqrt(jsd(a, b)) for a, b in ((p, q), (q, r), (p, r)))
        assert jsd(p, q) >= 0
        assert jsd(p, p) < 1e-12
        assert d_pr <= d_pq + d_qr + 1e-12
        assert abs(jsd(p, q) - j1(p, q) / 2) < 1e-12
        assert abs(jsd(p, q) - (j0(p, q) + j0(q, p)) / 2) < 1e-12


def test_criterion_10_figure2_common_crossing(figure_dirs):
    first, _, names = figure_dirs
    fig2 = sorted(n for n in names if n.startswith("fig2_"))
    assert len(fig2) == 5
    inv_tc = math.log(3) / 8
    for name in fig2:
        rows = read_csv(first / name)
        row = min(rows, key=lambda r: abs(r["inv_t"] - inv_tc))
        assert abs(row["inv_t"] - inv_tc) < 1e-9
        assert abs(row["x_eff"] - 1 / 3) < 1e-9


def test_criterion_11_critical_field_detection(figure_dirs):
    first, _, _ = figure_dirs
    rows = read_csv(first / "fig5.csv")
    assert len(rows) == 401
    step = rows[1]["b"] - rows[0]["b"]
    best = max(rows, key=lambda r: r["c_js"])
    assert abs(best["b"] - 4.0) <= step + 1e-12


def test_criterion_12_figures_byte_identical(figure_dirs):
    first, second, names = figure_dirs
    match, mismatch, errors = filecmp.cmpfiles(first, second, names, shallow=False)
    assert not mismatch and not errors
    assert len(match) == len(names) == 16
