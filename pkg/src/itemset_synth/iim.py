"""Interesting-itemset model generator.

A model is a set of itemsets, each with an inclusion probability ``p``. A
transaction is the union of the itemsets whose independent Bernoulli(p)
trial succeeds.

Learning uses a greedy-cover structural EM, not the published IIM
inference. Starting from singletons, each round covers every transaction
greedily (largest, then most probable, then lexicographically smallest
itemset that fits the still-uncovered items), proposes unions of itemsets
that co-occur in covers, keeps a proposal only if it lowers the total cover
cost ``sum(|cover| + penalty * |uncovered|)``, and re-estimates each ``p`` as
the fraction of covers using that itemset.
"""
from __future__ import annotations

import bisect
import logging
from collections import Counter
from dataclasses import dataclass, field

import numpy as np

from .base import TransactionGenerator
from .dataset import Dataset, as_itemset
from .validation import check_positive_int, check_transactions

logger = logging.getLogger(__name__)

MAX_EMPTY_RETRIES = 1000


@dataclass(frozen=True)
class IimComponent:
    itemset: tuple[int, ...]
    p: float


@dataclass
class IimModel:
    components: list[IimComponent]
    alphabet: tuple[int, ...]
    source_size: int
    retry_empty: bool = True
    config: dict = field(default_factory=dict)
    provenance: dict = field(default_factory=dict)

    kind = "iim"

    def __post_init__(self):
        if not self.components:
            raise ValueError("IIM model needs at least one component")
        seen = set()
        for c in self.components:
            if not c.itemset:
                raise ValueError("IIM components must be nonempty")
            if not 0.0 < c.p <= 1.0:
                raise ValueError(f"component probability out of (0, 1]: {c.p}")
            if c.itemset in seen:
                raise ValueError(f"duplicate component {c.itemset}")
            seen.add(c.itemset)
        if not self.alphabet:
            self.alphabet = tuple(sorted({i for c in self.components for i in c.itemset}))
        index = {item: j for j, item in enumerate(self.alphabet)}
        self._membership = np.zeros((len(self.components), len(self.alphabet)), dtype=bool)
        for r, c in enumerate(self.components):
            self._membership[r, [index[i] for i in c.itemset]] = True
        self._p = np.array([c.p for c in self.components])
        self._items = np.array(self.alphabet, dtype=np.int64)

    def estimator_params(self) -> dict:
        params = dict(self.config)
        params["retry_empty"] = self.retry_empty
        return params

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "source_size": self.source_size,
            "retry_empty": self.retry_empty,
            "alphabet": list(self.alphabet),
            "components": [{"items": list(c.itemset), "p": c.p} for c in self.components],
            "config": self.config,
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "IimModel":
        return cls(components=[IimComponent(tuple(c["items"]), float(c["p"]))
                               for c in obj["components"]],
                   alphabet=tuple(obj.get("alphabet", ())),
                   source_size=int(obj["source_size"]),
                   retry_empty=bool(obj.get("retry_empty", True)),
                   config=dict(obj.get("config", {})),
                   provenance=dict(obj.get("provenance", {})))


def _order_key(items: tuple[int, ...], p: float):
    return (-len(items), -p, items)


def greedy_cover(t, components):
    """Greedy disjoint cover of ``t``.

    Repeatedly picks the component that fits in the uncovered items and is
    largest, then most probable, then lexicographically smallest.

    Returns
    -------
    picked : list of IimComponent
    uncovered : tuple of int
    """
    remaining = set(as_itemset(t))
    picked = []
    for c in sorted(components, key=lambda c: _order_key(tuple(c.itemset), c.p)):
        if remaining.issuperset(c.itemset):
            picked.append(c)
            remaining.difference_update(c.itemset)
    return picked, tuple(sorted(remaining))


class _CoverState:
    """Bitmask bookkeeping for the learner (items mapped to bit positions)."""

    def __init__(self, d: Dataset, penalty: float):
        self.alphabet = d.alphabet
        self.bit = {item: 1 << j for j, item in enumerate(self.alphabet)}
        self.tmasks = [self.mask(t) for t in d.transactions]
        self.tidsets = d.tidsets
        self.n = len(d)
        self.penalty = penalty
        self.items: list[tuple[int, ...]] = []   # component id -> itemset
        self.masks: list[int] = []
        self.p: list[float] = []
        self.order: list[tuple] = []             # sorted (key, component id)

    def mask(self, items) -> int:
        m = 0
        for i in items:
            m |= self.bit[i]
        return m

    def add(self, items, p) -> int:
        cid = len(self.items)
        self.items.append(items)
        self.masks.append(self.mask(items))
        self.p.append(p)
        bisect.insort(self.order, (_order_key(items, p), cid))
        return cid

    def remove(self, cid: int) -> None:
        self.order.remove((_order_key(self.items[cid], self.p[cid]), cid))

    def reorder(self, ids) -> None:
        self.order = sorted((_order_key(self.items[c], self.p[c]), c) for c in ids)

    def cover(self, tmask: int, order=None):
        picked = []
        rest = tmask
        for _, cid in (self.order if order is None else order):
            m = self.masks[cid]
            if m & rest == m:
                picked.append(cid)
                rest &= ~m
                if not rest:
                    break
        return picked, rest.bit_count()

    def cost(self, cover) -> float:
        return len(cover[0]) + self.penalty * cover[1]

    def support(self, items) -> int:
        tids = (1 << self.n) - 1
        for i in items:
            tids &= self.tidsets[i]
        return tids.bit_count()


def learn_iim(d: Dataset, rounds: int = 10, max_candidates_per_round: int = 100,
              min_p: float = 0.01, penalty: float = 2.0, *, retry_empty: bool = True,
              return_history: bool = False):
    """Learn (itemsets, probabilities) by greedy-cover structural EM.

    With ``return_history`` also returns the total cover cost at the start
    of every round and after the last one.
    """
    if len(d) == 0:
        raise ValueError("empty dataset")
    if not 0.0 < min_p <= 1.0:
        raise ValueError("min_p must be in (0, 1]")
    rounds = check_positive_int(rounds, "rounds", minimum=0)
    max_candidates_per_round = check_positive_int(max_candidates_per_round,
                                                  "max_candidates_per_round", minimum=0)
    st = _CoverState(d, penalty)
    n = st.n
    for item in st.alphabet:
        st.add((item,), d.item_supports[item] / n)
    active = set(range(len(st.items)))
    covers = [st.cover(t) for t in st.tmasks]
    total = sum(st.cost(c) for c in covers)
    history = [total]

    for rnd in range(rounds):
        # co-occurrence of component pairs inside covers
        pairs: Counter = Counter()
        for picked, _ in covers:
            if len(picked) > 1:
                ids = sorted(picked)
                for a in range(len(ids)):
                    for b in range(a + 1, len(ids)):
                        pairs[ids[a], ids[b]] += 1
        existing = {st.items[c] for c in active}
        proposals: dict[tuple[int, ...], int] = {}
        for (a, b), count in pairs.items():
            if count < min_p * n:
                continue
            union = tuple(sorted(st.items[a] + st.items[b]))
            if union not in existing and count > proposals.get(union, 0):
                proposals[union] = count
        candidates = sorted(proposals, key=lambda u: (-proposals[u], u))[:max_candidates_per_round]

        accepted = 0
        for cand in candidates:
            p_c = st.support(cand) / n
            cmask = st.mask(cand)
            affected = [j for j, t in enumerate(st.tmasks) if cmask & t == cmask]
            cid = st.add(cand, p_c)
            new = {j: st.cover(st.tmasks[j]) for j in affected}
            delta = sum(st.cost(new[j]) - st.cost(covers[j]) for j in affected)
            if delta < 0:
                for j, c in new.items():
                    covers[j] = c
                active.add(cid)
                total += delta
                accepted += 1
            else:
                st.remove(cid)

        # M-step: p = share of covers using the component, floored at min_p
        usage = Counter(c for picked, _ in covers for c in picked)
        old_p = {c: st.p[c] for c in active}
        for c in active:
            st.p[c] = max(min_p, usage[c] / n)
        st.reorder(active)
        new_covers = [st.cover(t) for t in st.tmasks]
        new_total = sum(st.cost(c) for c in new_covers)
        if new_total > total:
            # tie-break shift made covers worse; keep the previous estimates
            for c, p in old_p.items():
                st.p[c] = p
            st.reorder(active)
            history.append(total)
            logger.debug("round %d: re-estimation would raise cost, stopping", rnd)
            break
        covers, total = new_covers, new_total
        history.append(total)
        logger.debug("round %d: %d/%d candidates accepted, cost %.1f",
                     rnd, accepted, len(candidates), total)
        if accepted == 0 and all(old_p[c] == st.p[c] for c in active):
            break

    # drop rarely used itemsets, keeping singletons no other itemset covers
    usage = Counter(c for picked, _ in covers for c in picked)
    keep = {c for c in active if len(st.items[c]) > 1 and usage[c] >= min_p * n}
    covered = {i for c in keep for i in st.items[c]}
    for c in active:
        if len(st.items[c]) == 1 and (usage[c] >= min_p * n or st.items[c][0] not in covered):
            keep.add(c)
    if keep != active:
        st.reorder(keep)
        covers = [st.cover(t) for t in st.tmasks]
        usage = Counter(c for picked, _ in covers for c in picked)
        for c in keep:
            st.p[c] = max(min_p, usage[c] / n)

    components = sorted((IimComponent(st.items[c], st.p[c]) for c in keep),
                        key=lambda c: (len(c.itemset), c.itemset))
    model = IimModel(components=components, alphabet=d.alphabet, source_size=n,
                     retry_empty=retry_empty,
                     config={"rounds": rounds,
                             "max_candidates_per_round": max_candidates_per_round,
                             "min_p": min_p, "penalty": penalty},
                     provenance={"dataset": d.name})
    return (model, history) if return_history else model


def sample_indicator(m: IimModel, n: int, rng: np.random.Generator,
                     retry_empty: bool | None = None) -> np.ndarray:
    """Draw ``n`` transactions as a boolean matrix over ``m.alphabet``."""
    retry = m.retry_empty if retry_empty is None else retry_empty
    success = rng.random((n, len(m.components))) < m._p
    out = (success.astype(np.int32) @ m._membership.astype(np.int32)) > 0
    if retry:
        empty = np.flatnonzero(~out.any(axis=1))
        for _ in range(MAX_EMPTY_RETRIES - 1):
            if len(empty) == 0:
                break
            redraw = rng.random((len(empty), len(m.components))) < m._p
            out[empty] = (redraw.astype(np.int32) @ m._membership.astype(np.int32)) > 0
            empty = empty[~out[empty].any(axis=1)]
    return out


def generate_transaction_iim(m: IimModel, rng: np.random.Generator,
                             retry_empty: bool | None = None) -> tuple[int, ...]:
    row = sample_indicator(m, 1, rng, retry_empty)[0]
    return tuple(int(i) for i in m._items[row])


def generate_dataset_iim(m: IimModel, n: int | None = None, random_state=None,
                         n_jobs: int | None = None) -> Dataset:
    return IIMGenerator.from_model(m).sample(n, random_state, n_jobs)


class IIMGenerator(TransactionGenerator):
    """Interesting-itemset model generator (no minsup needed).

    Parameters
    ----------
    rounds : int
        Structural EM rounds.
    max_candidates_per_round : int
    min_p : float
        Co-occurrence threshold for proposals, floor for probabilities and
        pruning threshold for rarely used itemsets.
    penalty : float
        Cost of leaving one item uncovered.
    retry_empty : bool
        Redraw empty transactions (up to 1000 times).
    """

    def __init__(self, rounds=10, max_candidates_per_round=100, min_p=0.01, penalty=2.0,
                 retry_empty=True):
        self.rounds = rounds
        self.max_candidates_per_round = max_candidates_per_round
        self.min_p = min_p
        self.penalty = penalty
        self.retry_empty = retry_empty

    def fit(self, X, y=None):
        d = check_transactions(X)
        self.model_, self.cost_history_ = learn_iim(
            d, self.rounds, self.max_candidates_per_round, self.min_p, self.penalty,
            retry_empty=self.retry_empty, return_history=True)
        self.dataset_name_ = d.name
        return self

    def _generate_one(self, index, rng):
        return generate_transaction_iim(self.model_, rng), False
