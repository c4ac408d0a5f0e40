# SPDX-License-Identifier: Apache-2.0
import math

import numpy as np
import pytest

import jtcal


def test_phase_helpers():
    assert jtcal.wrap_phase(-math.pi) == pytest.approx(math.pi)
    assert jtcal.parse_phase("6pi/8") == pytest.approx(6 * math.pi / 8)
    grid = jtcal.hypothesis_grid(16)
    assert len(grid) == 16 and grid[-1] == pytest.approx(math.pi)
    with pytest.raises(ValueError):
        jtcal.parse_phase("banana")


def test_coherent_gain():
    assert jtcal.coherent_gain_db(0.0) == 0.0
    assert jtcal.coherent_gain_db(math.pi / 2) == pytest.approx(-3.0103, abs=1e-3)
    assert jtcal.coherent_gain_db(math.pi) == -math.inf


def test_codebook_and_pmi():
    cb = jtcal.codebook(4)
    assert len(cb) == 16
    for w in cb:
        assert w.shape == (4, 1)
        assert np.linalg.norm(w) == pytest.approx(1.0)
    h = cb[5].conj().T
    assert jtcal.select_pmi(h, 4) == 5
    assert jtcal.select_pmi(3j * h, 4) == 5


def test_coherence_identity():
    rng = np.random.default_rng(0)
    h1 = rng.normal(size=4) + 1j * rng.normal(size=4)
    h2 = rng.normal(size=4) + 1j * rng.normal(size=4)
    c1, c2 = 1.3 * np.exp(0.4j), 0.7 * np.exp(-2.0j)
    cjt = c2 / c1
    w1, w2 = jtcal.mrt_weights(h1, h2, abs(cjt), np.angle(cjt))
    r = jtcal.received_signal(c1 * h1[None, :], c2 * h2[None, :], w1, w2, 1.0)
    assert abs(r[0, 0]) == pytest.approx(abs(c1) * (np.linalg.norm(h1) + np.linalg.norm(h2)), rel=1e-10)


def test_experiment_runs_and_is_deterministic():
    s = jtcal.Scenario()
    s.n_runs = 8
    s.period_frames = 4
    a = jtcal.run_experiment(s, 1)
    b = jtcal.run_experiment(s, 2)
    assert len(a.runs) == 8
    assert a.to_csv() == b.to_csv()
    assert 0.0 <= a.success_fraction <= 1.0
    assert sum(a.estimate_histogram) == 8
    assert a.runs[0].frames[-1].histogram.m == 4


def test_noiseless_dominance():
    s = jtcal.Scenario()
    s.snr_db = math.inf
    s.feedback_delay_frames = 0
    s.delta_phase_true = jtcal.hypothesis_grid(16)[3]
    trace = jtcal.run_calibration(s, 7)
    for f in trace.frames:
        assert f.histogram.counts[3] == f.histogram.m


def test_sweep_and_validation():
    s = jtcal.Scenario()
    s.n_runs = 4
    pts = jtcal.run_sweep(s, jtcal.SweepAxis.PERIOD, [1, 5])
    assert [p.value for p in pts] == [1, 5]
    assert len(pts[1].result.runs[0].frames) == 5
    s.ports_per_cell = 3
    with pytest.raises(ValueError):
        s.validate()


def test_link_sweep():
    cfg = jtcal.LinkSweepConfig()
    cfg.n_runs = 200
    rows = jtcal.evaluate_residual_sweep(cfg, [0.0, math.pi / 2])
    assert [r.label for r in rows] == ["fixed", "fixed", "uniform"]
    assert rows[0].gain_db == pytest.approx(0.0)
    assert rows[1].gain_db < 0.0
