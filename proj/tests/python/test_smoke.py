import json

import pytest

import vsumeval as vs


def test_version():
    assert vs.__version__ == "0.1.0"


def test_segmenters():
    assert vs.segment_uniform(180, 60) == [0, 60, 120, 180]
    assert vs.segment_uniform(30) == [0, 30]
    a = vs.segment_two_peak(5000, seed=7)
    assert a == vs.segment_two_peak(5000, seed=7)
    assert a[0] == 0 and a[-1] == 5000
    assert vs.segment_one_peak(10, seed=1) == [0, 10]
    feats = [[0.0, 1.0]] * 40 + [[5.0, -2.0]] * 25 + [[1.0, 3.0]] * 35
    assert vs.segment_kts(feats) == [0, 40, 65, 100]
    shuffled = vs.randomize_kts([0, 30, 90, 180], seed=3)
    lengths = sorted(b - a for a, b in zip(shuffled, shuffled[1:]))
    assert lengths == [30, 60, 90]


def test_selection_and_f1():
    assert vs.pool_scores([1, 1, 4, 4], [0, 2, 4]) == [1, 4]
    assert vs.pool_scores([1, 1, 4, 4], [0, 2, 4], "sum") == [2, 8]
    b = [0, 3, 5, 7]
    assert vs.knapsack_select(b, [0.9, 0.6, 0.5], 4) == [1, 2]
    assert vs.brute_force_select(b, [0.9, 0.6, 0.5], 4) == [1, 2]
    assert vs.mask_from_segments([0, 3, 6], [1]) == [0, 0, 0, 1, 1, 1]
    p, r, f = vs.f1_score([1, 1, 1, 1, 0, 0, 0, 0, 0, 0], [0, 0, 1, 1, 1, 1, 0, 0, 0, 0])
    assert (p, r, f) == pytest.approx((0.5, 0.5, 0.5))


def test_rank_and_curves():
    x = [1, 2, 3, 4, 5]
    assert vs.kendall_tau_b(x, x[::-1]) == pytest.approx(-1.0)
    assert vs.spearman_rho(x, x) == pytest.approx(1.0)
    assert vs.kendall_tau_b(x, [2] * 5) == 0.0
    upper, lower = vs.curve_bounds([0, 0, 1, 0])
    assert upper == [1, 1, 1, 1] and lower == [0, 0, 0, 1]
    assert vs.random_baseline(4) == pytest.approx([0.25, 0.5, 0.75, 1.0])
    assert vs.accumulate_curve([4, 3, 2, 1], [1, 1, 1, 1])[-1] == 1.0
    mean, half = vs.confidence_interval([1, 1, 1, 1])
    assert (mean, half) == (1.0, 0.0)


def test_errors():
    with pytest.raises(vs.DataError):
        vs.parse_json_dataset('{"videos": [{"video_id": "v", "n_frames": "x", "fps": 1}]}')
    with pytest.raises(ValueError):
        vs.f1_score([1, 0], [1, 0, 0])
    with pytest.raises(ValueError):
        vs.pool_scores([1, 2], [0, 2], "max")


def test_dataset_and_experiments():
    cfg = json.dumps({"n_videos": 2, "n_frames_min": 400, "n_frames_max": 500, "seed": 7})
    bundle = vs.synth_dataset(cfg)
    assert len(bundle) == 2
    assert bundle.video_ids == ["synth_000", "synth_001"]
    assert bundle.has_features("synth_000")
    text = bundle.to_json()
    assert vs.parse_json_dataset(text).to_json() == text

    report = vs.randomization_test(bundle, trials=5, budgets=[0.15, 0.35], human_loo=True)
    methods = [r["method"] for r in report["reports"]]
    assert methods == ["random", "random", "human-loo", "human-loo"]
    assert 0.0 <= report["reports"][0]["avg_f1"]["mean"] <= 1.0
    again = vs.randomization_test(bundle, trials=5, budgets=[0.15, 0.35], human_loo=True, jobs=3)
    assert again == report

    copy = {vid: bundle.annotations(vid)[0] for vid in bundle.video_ids}
    r = vs.rank_eval(bundle, mode="predictions", predictions=copy)
    assert r["reports"][0]["tau"] > 0.3
    rnd = vs.rank_eval(bundle, mode="random", trials=5)
    assert abs(rnd["reports"][0]["tau"]) < 0.05

    uni = vs.randomization_test(bundle, segmenter="uniform", len_frames=30, trials=2)
    assert uni["reports"][0]["config"]["segmenter"]["len_frames"] == 30
