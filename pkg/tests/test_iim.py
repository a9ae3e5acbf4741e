from collections import Counter

import numpy as np
import pytest

from itemset_synth import Dataset, IIMGenerator, greedy_cover, learn_iim
from itemset_synth.iim import (IimComponent, IimModel, generate_dataset_iim,
                               generate_transaction_iim, sample_indicator)
from itemset_synth.models import model_from_dict


def _pairs(m):
    return sorted((c.itemset, round(c.p, 12)) for c in m.components)


def _cover_cost(d, comps, penalty=2.0):
    total = 0.0
    for t in d.transactions:
        picked, uncovered = greedy_cover(t, comps)
        total += len(picked) + penalty * len(uncovered)
    return total


def test_greedy_cover_larger_first():
    comps = [IimComponent((1,), 0.9), IimComponent((2,), 0.9), IimComponent((3,), 0.9),
             IimComponent((1, 2), 0.1)]
    picked, uncovered = greedy_cover((1, 2, 3), comps)
    assert [c.itemset for c in picked] == [(1, 2), (3,)]
    assert uncovered == ()


def test_greedy_cover_empty_and_tie():
    assert greedy_cover((), [IimComponent((1,), 0.5)]) == ([], ())
    comps = [IimComponent((1, 3), 0.5), IimComponent((1, 2), 0.5)]
    picked, uncovered = greedy_cover((1, 2, 3), comps)
    assert [c.itemset for c in picked] == [(1, 2)]
    assert uncovered == (3,)


def test_learn_merges_constant_pair():
    d = Dataset([[1, 2]] * 100)
    m, history = learn_iim(d, rounds=3, return_history=True)
    assert _pairs(m) == [((1, 2), 1.0)]
    assert history[0] == 200.0 and history[-1] == 100.0
    assert _cover_cost(d, m.components) == 100.0


def test_learn_without_cooccurrence():
    d = Dataset([[1]] * 30 + [[2]] * 10)
    m, history = learn_iim(d, return_history=True)
    assert _pairs(m) == [((1,), 0.75), ((2,), 0.25)]
    assert len(set(history)) == 1


def test_learn_zero_rounds(d4):
    m = learn_iim(d4, rounds=0)
    assert _pairs(m) == [((1,), 0.75), ((2,), 0.75), ((3,), 0.75)]


@pytest.mark.parametrize("seed", range(8))
def test_cost_monotone(seed):
    rng = np.random.default_rng(seed)
    blocks = [(1, 2, 3), (4, 5), (6, 7, 8, 9)]
    rows = []
    for _ in range(80):
        t = set()
        for b in blocks:
            if rng.random() < 0.4:
                t.update(b)
        t.update(int(i) for i in rng.integers(1, 12, size=2))
        rows.append(sorted(t))
    d = Dataset(rows)
    m, history = learn_iim(d, return_history=True)
    assert all(b <= a for a, b in zip(history, history[1:]))
    assert history[-1] < history[0]
    # every item stays coverable by some component
    covered = {i for c in m.components for i in c.itemset}
    assert covered == set(d.alphabet)
    assert all(0.01 <= c.p <= 1.0 for c in m.components)


def test_generation_certain():
    m = IimModel([IimComponent((1, 2), 1.0)], (1, 2), source_size=1)
    rng = np.random.default_rng(0)
    assert {generate_transaction_iim(m, rng) for _ in range(50)} == {(1, 2)}


def _law(m, n, seed, retry=None):
    rows = sample_indicator(m, n, np.random.default_rng(seed), retry)
    c = Counter(tuple(int(i) for i in m._items[r]) for r in rows)
    return {k: v / n for k, v in c.items()}


def test_generation_two_coins():
    m = IimModel([IimComponent((1,), 0.5), IimComponent((2,), 0.5)], (1, 2), source_size=1,
                 retry_empty=False)
    f = _law(m, 100_000, 1)
    for t in [(), (1,), (2,), (1, 2)]:
        assert abs(f[t] - 0.25) <= 0.01
    f = _law(m, 100_000, 2, retry=True)
    assert () not in f
    for t in [(1,), (2,), (1, 2)]:
        assert abs(f[t] - 1 / 3) <= 0.01


def test_containment_rate():
    m = IimModel([IimComponent((1, 2), 0.3), IimComponent((3,), 0.6)], (1, 2, 3), source_size=1,
                 retry_empty=False)
    rows = sample_indicator(m, 100_000, np.random.default_rng(3))
    assert abs(rows[:, :2].all(axis=1).mean() - 0.3) <= 0.01
    assert abs(rows[:, 2].mean() - 0.6) <= 0.01


def test_model_validation():
    with pytest.raises(ValueError):
        IimModel([], (), source_size=1)
    with pytest.raises(ValueError):
        IimModel([IimComponent((1,), 0.0)], (1,), source_size=1)
    with pytest.raises(ValueError, match="duplicate"):
        IimModel([IimComponent((1,), 0.5), IimComponent((1,), 0.2)], (1,), source_size=1)


def test_dataset_generation(d4):
    gen = IIMGenerator().fit(d4)
    assert len(gen.sample(random_state=0)) == 4
    assert gen.cost_history_[0] >= gen.cost_history_[-1]
    a = generate_dataset_iim(gen.model_, 300, random_state=5)
    assert a == gen.sample(300, random_state=5, n_jobs=3)
    back = model_from_dict(gen.model_.to_dict())
    assert generate_dataset_iim(back, 300, random_state=5) == a
