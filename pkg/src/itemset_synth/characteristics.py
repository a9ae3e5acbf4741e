"""Per-dataset characteristic metrics.

DS, AS, ATS, MTS and Density are plain counts/means. GGD, H1, H2 and MSS
use reconstructed definitions:

* GGD: 100 x Gini coefficient of the item-support vector.
* H1:  Shannon entropy (bits) of the normalized item supports.
* H2:  Shannon entropy (bits) of the normalized supports of the 2-itemsets
  that occur at least once.
* MSS: 100 x largest item support / number of transactions.
"""
from __future__ import annotations

import csv
import io
import json
from dataclasses import astuple, dataclass, fields

import numpy as np

from .dataset import Dataset

METRICS = ("DS", "AS", "ATS", "MTS", "Density", "GGD", "H1", "H2", "MSS")


@dataclass(frozen=True)
class CharacteristicsVector:
    DS: float
    AS: float
    ATS: float
    MTS: float
    Density: float
    GGD: float
    H1: float
    H2: float
    MSS: float

    def as_dict(self) -> dict[str, float]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def __array__(self, dtype=None, copy=None):
        return np.array(astuple(self), dtype=dtype or np.float64)


def entropy_bits(counts) -> float:
    counts = np.asarray(counts, dtype=np.float64)
    counts = counts[counts > 0]
    if counts.size <= 1:
        return 0.0
    p = counts / counts.sum()
    return float(-(p * np.log2(p)).sum())


def gini(values) -> float:
    """Gini coefficient of non-negative values (0 when all equal)."""
    x = np.sort(np.asarray(values, dtype=np.float64))
    n = x.size
    if n == 0 or x.sum() == 0:
        return 0.0
    ranks = np.arange(1, n + 1)
    g = (2.0 * (ranks * x).sum()) / (n * x.sum()) - (n + 1.0) / n
    return float(max(0.0, g))


def characteristics(d: Dataset) -> CharacteristicsVector:
    if len(d) == 0:
        raise ValueError("empty dataset")
    lengths = d.lengths
    alphabet = d.alphabet
    n_items = len(alphabet)
    if n_items == 0:
        raise ValueError("dataset has no items")
    supports = np.array([d.item_supports[i] for i in alphabet], dtype=np.int64)
    b = d.to_binary_matrix().astype(np.int64)
    pair_counts = (b.T @ b)[np.triu_indices(n_items, k=1)]
    ats = float(lengths.mean())
    return CharacteristicsVector(
        DS=float(len(d)),
        AS=float(n_items),
        ATS=ats,
        MTS=float(lengths.max()),
        Density=100.0 * ats / n_items,
        GGD=100.0 * gini(supports),
        H1=entropy_bits(supports),
        H2=entropy_bits(pair_counts),
        MSS=100.0 * float(supports.max()) / len(d),
    )


def aggregate(vectors) -> CharacteristicsVector:
    """Element-wise mean of per-dataset vectors (ratios are not recomputed)."""
    vectors = list(vectors)
    if not vectors:
        raise ValueError("nothing to aggregate")
    mean = np.mean([np.asarray(v) for v in vectors], axis=0)
    return CharacteristicsVector(*(float(x) for x in mean))


def to_csv(rows, *, precision: int = 4) -> str:
    """``rows`` is an iterable of (name, CharacteristicsVector)."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("name",) + METRICS)
    for name, v in rows:
        w.writerow([name] + [f"{x:.{precision}f}" for x in astuple(v)])
    return buf.getvalue()


def to_json(rows) -> str:
    return json.dumps([{"name": name, **v.as_dict()} for name, v in rows], indent=2)


def read_csv(text: str) -> list[tuple[str, CharacteristicsVector]]:
    reader = csv.DictReader(line for line in io.StringIO(text) if not line.startswith("#"))
    return [(r["name"], CharacteristicsVector(*(float(r[m]) for m in METRICS))) for r in reader]
