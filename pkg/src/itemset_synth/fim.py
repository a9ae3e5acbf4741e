"""Frequent itemset mining.

:func:`mine_frequent` is a depth-first Eclat over vertical tidsets, stored as
Python ints used as bitsets (intersection is ``&``, support is a popcount).
:func:`brute_force_frequent` enumerates every itemset and exists to check it.
"""
from __future__ import annotations

import json
from itertools import compress
from dataclasses import dataclass, field
from typing import Iterable, Iterator

import numpy as np

from .dataset import Dataset
from .validation import absolute_support, check_minsup

BRUTE_FORCE_MAX_ITEMS = 20


@dataclass(frozen=True, order=True)
class FrequentItemset:
    items: tuple[int, ...]
    support: int


def _canonical_key(fi: FrequentItemset):
    return (len(fi.items), fi.items)


@dataclass
class FrequentItemsetSet:
    """FI(minsup): all itemsets reaching the threshold, with exact supports.

    Itemsets are ordered by size, then lexicographically.
    """

    minsup: float
    dataset_size: int
    itemsets: list[FrequentItemset] = field(default_factory=list)

    def __post_init__(self):
        self.itemsets = sorted(self.itemsets, key=_canonical_key)

    def __len__(self) -> int:
        return len(self.itemsets)

    def __iter__(self) -> Iterator[FrequentItemset]:
        return iter(self.itemsets)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FrequentItemsetSet):
            return NotImplemented
        return (self.dataset_size == other.dataset_size
                and self.itemsets == other.itemsets)

    @property
    def threshold(self) -> int:
        return absolute_support(self.minsup, self.dataset_size)

    def as_dict(self) -> dict[tuple[int, ...], int]:
        return {fi.items: fi.support for fi in self.itemsets}

    def to_dict(self) -> dict:
        return {
            "minsup": self.minsup,
            "dataset_size": self.dataset_size,
            "itemsets": [{"items": list(fi.items), "support": fi.support}
                         for fi in self.itemsets],
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "FrequentItemsetSet":
        return cls(
            minsup=float(obj["minsup"]),
            dataset_size=int(obj["dataset_size"]),
            itemsets=[FrequentItemset(tuple(sorted(int(i) for i in e["items"])), int(e["support"]))
                      for e in obj["itemsets"]],
        )

    def to_json(self, **kwargs) -> str:
        return json.dumps(self.to_dict(), **kwargs)

    @classmethod
    def from_json(cls, text: str) -> "FrequentItemsetSet":
        return cls.from_dict(json.loads(text))


def _eclat(prefix: tuple[int, ...], siblings: list[tuple[int, int, int]],
           threshold: int, out: list[FrequentItemset]) -> None:
    for k, (item, tids, sup) in enumerate(siblings):
        itemset = prefix + (item,)
        out.append(FrequentItemset(tuple(sorted(itemset)), sup))
        children = []
        for other, other_tids, _ in siblings[k + 1:]:
            both = tids & other_tids
            s = both.bit_count()
            if s >= threshold:
                children.append((other, both, s))
        if children:
            _eclat(itemset, children, threshold, out)


def mine_frequent(d: Dataset, minsup: float) -> FrequentItemsetSet:
    """All nonempty itemsets with support >= ceil(minsup * |d|)."""
    minsup = check_minsup(minsup)
    if len(d) == 0:
        raise ValueError("empty dataset")
    threshold = absolute_support(minsup, len(d))
    roots = [(i, tids, tids.bit_count()) for i, tids in d.tidsets.items()]
    roots = [r for r in roots if r[2] >= threshold]
    # ascending support keeps the intermediate tidsets small
    roots.sort(key=lambda r: (r[2], r[0]))
    out: list[FrequentItemset] = []
    _eclat((), roots, threshold, out)
    return FrequentItemsetSet(minsup, len(d), out)


def brute_force_frequent(d: Dataset, minsup: float) -> FrequentItemsetSet:
    """Enumerate all 2^|I| - 1 itemsets and keep the frequent ones."""
    minsup = check_minsup(minsup)
    alphabet = d.alphabet
    if len(alphabet) > BRUTE_FORCE_MAX_ITEMS:
        raise ValueError(
            f"alphabet too large for brute force: {len(alphabet)} > {BRUTE_FORCE_MAX_ITEMS}")
    threshold = absolute_support(minsup, len(d))
    n_items = len(alphabet)
    if n_items == 0:
        return FrequentItemsetSet(minsup, len(d), [])
    occurrence = d.to_binary_matrix(alphabet).astype(np.float64)       # |D| x |I|
    codes = np.arange(1, 1 << n_items, dtype=np.int64)
    out = []
    for lo in range(0, len(codes), 1 << 14):
        block = codes[lo:lo + (1 << 14)]
        members = ((block[:, None] >> np.arange(n_items)) & 1).astype(np.float64)  # itemsets x |I|
        hits = occurrence @ members.T                                   # |D| x itemsets
        sizes = members.sum(axis=1)
        supports = (hits == sizes).sum(axis=0)
        rows = np.flatnonzero(supports >= threshold)
        for bits, sup in zip(members[rows].astype(bool).tolist(), supports[rows].tolist()):
            out.append(FrequentItemset(tuple(compress(alphabet, bits)), sup))
    return FrequentItemsetSet(minsup, len(d), out)


def itemsets_of(fis: FrequentItemsetSet | Iterable) -> list[tuple[int, ...]]:
    if isinstance(fis, FrequentItemsetSet):
        return [fi.items for fi in fis.itemsets]
    return [tuple(x) for x in fis]
