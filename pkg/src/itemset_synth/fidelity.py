"""Matched precision / recall / F1 between original and synthetic data.

Every synthetic itemset Y is matched to the original itemset X maximizing
``|X & Y| / |Y|`` (precision) and every original X to the synthetic Y
maximizing ``|X & Y| / |X|`` (recall); the set scores are the means of those
maxima. Pattern fidelity applies this to frequent itemsets mined on a grid
of supports; the privacy score applies it to the raw transactions, so a high
privacy F1 means synthetic transactions closely copy real ones.
"""
from __future__ import annotations

import csv
import io
import json
import statistics
from dataclasses import dataclass

import numpy as np

from .dataset import Dataset
from .fim import FrequentItemsetSet, itemsets_of, mine_frequent

DEFAULT_GRID = tuple(round(0.1 * k, 1) for k in range(1, 10))
_BLOCK_CELLS = 4_000_000


def f1_score(precision: float, recall: float) -> float:
    if precision + recall <= 0:
        return 0.0
    return 2.0 * precision * recall / (precision + recall)


def itemset_precision(x, y) -> float:
    """``|x & y| / |y|``; 0 when ``y`` is empty."""
    y = set(y)
    return len(set(x) & y) / len(y) if y else 0.0


def itemset_recall(x, y) -> float:
    """``|x & y| / |x|``; 0 when ``x`` is empty."""
    x = set(x)
    return len(x & set(y)) / len(x) if x else 0.0


def _indicator(itemsets, index) -> np.ndarray:
    m = np.zeros((len(itemsets), len(index)), dtype=np.float64)
    for r, s in enumerate(itemsets):
        m[r, [index[i] for i in s]] = 1.0
    return m


def match_scores(syn, ori) -> tuple[float, float]:
    """(precision, recall) of ``syn`` against ``ori``.

    Both arguments are FrequentItemsetSets or sequences of itemsets. Empty
    itemsets are ignored. If either side has no itemsets the result is (0, 0).
    """
    syn = [s for s in itemsets_of(syn) if len(s)]
    ori = [s for s in itemsets_of(ori) if len(s)]
    if not syn or not ori:
        return 0.0, 0.0
    universe = sorted({i for s in syn for i in s} | {i for s in ori for i in s})
    index = {item: j for j, item in enumerate(universe)}
    a_syn = _indicator(syn, index)
    a_ori = _indicator(ori, index)
    syn_len = a_syn.sum(axis=1)
    ori_len = a_ori.sum(axis=1)
    best_for_syn = np.zeros(len(syn))
    best_for_ori = np.zeros(len(ori))
    block = max(1, _BLOCK_CELLS // len(ori))
    for lo in range(0, len(syn), block):
        inter = a_syn[lo:lo + block] @ a_ori.T
        best_for_syn[lo:lo + block] = inter.max(axis=1)
        np.maximum(best_for_ori, inter.max(axis=0), out=best_for_ori)
    return float(np.mean(best_for_syn / syn_len)), float(np.mean(best_for_ori / ori_len))


def set_precision(fi_syn, fi_ori) -> float:
    return match_scores(fi_syn, fi_ori)[0]


def set_recall(fi_syn, fi_ori) -> float:
    return match_scores(fi_syn, fi_ori)[1]


@dataclass
class LevelScore:
    minsup: float
    precision: float
    recall: float
    n_original: int
    n_synthetic: int
    flag: str = ""     # "both_empty" (excluded from means) or "synthetic_empty"

    @property
    def f1(self) -> float:
        return f1_score(self.precision, self.recall)


@dataclass
class FidelityReport:
    kind: str                  # "pattern" or "privacy"
    precision: float
    recall: float
    per_support_level: list[LevelScore] | None = None
    replica_stats: dict | None = None
    note: str = ""

    @property
    def f1(self) -> float:
        return f1_score(self.precision, self.recall)

    def to_dict(self) -> dict:
        out = {"kind": self.kind, "precision": self.precision, "recall": self.recall,
               "f1": self.f1}
        if self.per_support_level is not None:
            out["per_support_level"] = [
                {"minsup": s.minsup, "precision": s.precision, "recall": s.recall,
                 "f1": s.f1, "n_original": s.n_original, "n_synthetic": s.n_synthetic,
                 "flag": s.flag}
                for s in self.per_support_level]
        if self.replica_stats is not None:
            out["replica_stats"] = self.replica_stats
        if self.note:
            out["note"] = self.note
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def pattern_fidelity(d_ori: Dataset, d_syn: Dataset, grid=DEFAULT_GRID, *,
                     original_itemsets: dict[float, FrequentItemsetSet] | None = None
                     ) -> FidelityReport:
    """Frequent-pattern preservation averaged over a support grid.

    Per-level precisions and recalls are averaged, then one F1 is taken. A
    level where the synthetic data has no frequent itemsets scores (0, 0);
    a level where neither side has any is flagged and left out of the means
    (if every level is like that the datasets agree vacuously: (1, 1)).
    ``original_itemsets`` lets callers reuse the mining of ``d_ori``.
    """
    grid = [float(s) for s in grid]
    if not grid:
        raise ValueError("support grid is empty")
    if any(not 0.0 < s < 1.0 for s in grid):
        raise ValueError("grid values must lie in (0, 1)")
    levels = []
    for s in grid:
        fi_ori = (original_itemsets or {}).get(s)
        if fi_ori is None:
            fi_ori = mine_frequent(d_ori, s)
        fi_syn = mine_frequent(d_syn, s)
        if not fi_ori.itemsets and not fi_syn.itemsets:
            levels.append(LevelScore(s, 0.0, 0.0, 0, 0, "both_empty"))
            continue
        p, r = match_scores(fi_syn, fi_ori)
        flag = "synthetic_empty" if not fi_syn.itemsets else ""
        levels.append(LevelScore(s, p, r, len(fi_ori), len(fi_syn), flag))
    scored = [lv for lv in levels if lv.flag != "both_empty"]
    if scored:
        precision = float(np.mean([lv.precision for lv in scored]))
        recall = float(np.mean([lv.recall for lv in scored]))
    else:
        precision = recall = 1.0
    return FidelityReport("pattern", precision, recall, per_support_level=levels)


def privacy_score(d_ori: Dataset, d_syn: Dataset) -> FidelityReport:
    """Transaction-level overlap; high F1 means low privacy."""
    if len(d_ori) == 0 or len(d_syn) == 0:
        raise ValueError("both datasets must be nonempty")
    p, r = match_scores(d_syn.transactions, d_ori.transactions)
    return FidelityReport("privacy", p, r,
                          note="high f1 = synthetic transactions resemble originals (low privacy)")


def replica_summary(reports) -> dict:
    """Mean and sample standard deviation of per-replica scores."""
    reports = list(reports)
    out = {"n_replicas": len(reports)}
    for key in ("precision", "recall", "f1"):
        vals = [getattr(r, key) for r in reports]
        out[f"{key}_mean"] = float(np.mean(vals))
        out[f"{key}_std"] = float(statistics.stdev(vals)) if len(vals) > 1 else 0.0
    return out


def combine_replicas(reports) -> FidelityReport:
    """Mean report over replicas: scores averaged, F1 averaged per replica in stats."""
    reports = list(reports)
    if not reports:
        raise ValueError("no reports to combine")
    stats = replica_summary(reports)
    levels = None
    if reports[0].per_support_level is not None:
        levels = []
        for k, lv in enumerate(reports[0].per_support_level):
            group = [r.per_support_level[k] for r in reports]
            levels.append(LevelScore(lv.minsup,
                                     float(np.mean([g.precision for g in group])),
                                     float(np.mean([g.recall for g in group])),
                                     lv.n_original,
                                     round(float(np.mean([g.n_synthetic for g in group]))),
                                     ",".join(sorted({g.flag for g in group if g.flag}))))
    return FidelityReport(reports[0].kind, stats["precision_mean"], stats["recall_mean"],
                          per_support_level=levels, replica_stats=stats, note=reports[0].note)


def reports_to_csv(named_reports) -> str:
    """One row per (report, support level); privacy reports give one row each."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(("name", "kind", "minsup", "precision", "recall", "f1", "flag"))
    for name, rep in named_reports:
        if rep.per_support_level:
            for lv in rep.per_support_level:
                w.writerow((name, rep.kind, f"{lv.minsup:g}", f"{lv.precision:.6f}",
                            f"{lv.recall:.6f}", f"{lv.f1:.6f}", lv.flag))
        w.writerow((name, rep.kind, "all", f"{rep.precision:.6f}", f"{rep.recall:.6f}",
                    f"{rep.f1:.6f}", ""))
    return buf.getvalue()
