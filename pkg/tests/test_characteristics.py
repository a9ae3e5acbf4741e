import itertools
import math
import xml.etree.ElementTree as ET

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from itemset_synth import CharacteristicsVector, Dataset, aggregate, characteristics, radar_data
from itemset_synth.characteristics import METRICS, read_csv, to_csv, to_json
from itemset_synth.charts import bar_chart_svg, characteristics_radar


def _naive(rows):
    """Second, loop-based computation of every metric."""
    rows = [set(t) for t in rows]
    items = sorted(set().union(*rows))
    n = len(rows)
    sup = [sum(i in r for r in rows) for i in items]
    pairs = [sum(a in r and b in r for r in rows) for a, b in itertools.combinations(items, 2)]

    def h(counts):
        counts = [c for c in counts if c]
        total = sum(counts)
        return -sum(c / total * math.log2(c / total) for c in counts) if len(counts) > 1 else 0.0

    mean = sum(sup) / len(sup)
    g = sum(abs(a - b) for a in sup for b in sup) / (2 * len(sup) ** 2 * mean)
    ats = sum(len(r) for r in rows) / n
    return dict(DS=n, AS=len(items), ATS=ats, MTS=max(len(r) for r in rows),
                Density=100 * ats / len(items), GGD=100 * g, H1=h(sup), H2=h(pairs),
                MSS=100 * max(sup) / n)


def test_d4(d4):
    c = characteristics(d4)
    assert (c.DS, c.AS, c.ATS, c.MTS, c.Density, c.MSS) == (4, 3, 2.25, 3, 75.0, 75.0)
    assert c.H1 == pytest.approx(math.log2(3))
    assert c.GGD == pytest.approx(0.0)
    # pair supports 2, 2, 2
    assert c.H2 == pytest.approx(math.log2(3))


def test_single_transaction():
    c = characteristics(Dataset([[1]]))
    assert c.as_dict() == dict(DS=1, AS=1, ATS=1, MTS=1, Density=100, GGD=0, H1=0, H2=0, MSS=100)


@settings(max_examples=60, deadline=None)
@given(st.lists(st.lists(st.integers(1, 12), min_size=1, max_size=8), min_size=1, max_size=25))
def test_matches_naive(rows):
    got = characteristics(Dataset(rows)).as_dict()
    want = _naive(rows)
    for k in METRICS:
        assert got[k] == pytest.approx(want[k], abs=1e-9), k


def test_aggregate():
    a = CharacteristicsVector(*range(1, 10))
    b = CharacteristicsVector(*range(3, 12))
    assert aggregate([a]) == a
    assert aggregate([a, a]) == a
    assert aggregate([a, b]) == CharacteristicsVector(*range(2, 11))
    with pytest.raises(ValueError):
        aggregate([])


def test_aggregate_means_ratios_per_dataset():
    d1 = Dataset([[1]])                          # density 100
    d2 = Dataset([[1], [2], [3], [4]])           # density 25
    m = aggregate([characteristics(d1), characteristics(d2)])
    assert m.Density == pytest.approx(62.5)
    assert m.Density != pytest.approx(100 * m.ATS / m.AS)


def test_csv_json_round_trip(d4):
    rows = [("d4", characteristics(d4)), ("one", characteristics(Dataset([[5]])))]
    text = to_csv(rows, precision=10)
    assert text.splitlines()[0] == "name,DS,AS,ATS,MTS,Density,GGD,H1,H2,MSS"
    back = read_csv(text)
    assert [n for n, _ in back] == ["d4", "one"]
    assert np.allclose(np.asarray(back[0][1]), np.asarray(rows[0][1]))
    assert '"Density": 75.0' in to_json(rows)


def test_radar_single_and_identical(d4):
    v = characteristics(d4)
    assert np.all(radar_data([("a", v)]).normalized == 1.0)
    chart = radar_data([("a", v), ("b", v)])
    assert np.array_equal(chart.normalized[0], chart.normalized[1])


def test_radar_min_max():
    a = CharacteristicsVector(*[0.0] * 9)
    b = CharacteristicsVector(*[10.0] * 9)
    c = CharacteristicsVector(*[2.5] * 9)
    chart = radar_data([("a", a), ("b", b), ("c", c)])
    assert chart.normalized[:, 0].tolist() == [0.0, 1.0, 0.25]
    assert len(chart.axes) == 9


def test_radar_outputs_parse(d4):
    csv_text, svg = characteristics_radar([("d4", characteristics(d4)),
                                           ("one", characteristics(Dataset([[1]])))], "demo")
    lines = csv_text.splitlines()
    assert lines[0].startswith("#min,") and lines[1].startswith("#max,")
    assert lines[2].startswith("name,DS")
    root = ET.fromstring(svg)
    polys = root.findall("{http://www.w3.org/2000/svg}polygon")
    assert len(polys) == 4 + 2       # grid rings + one polygon per series
    assert len(read_csv(csv_text)) == 2


def test_bar_chart_parses():
    svg = bar_chart_svg(["igm", "lda", "iim"], [0.2, 0.5, 0.9], [0.01, 0.05, 0.0], "f1")
    root = ET.fromstring(svg)
    assert len(root.findall("{http://www.w3.org/2000/svg}rect")) == 3


def test_empty_dataset_rejected():
    with pytest.raises(ValueError):
        characteristics(Dataset([]))
