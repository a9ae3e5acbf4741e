"""Itemset Generating Model generator.

Learning mines FI(minsup) and keeps the significant itemsets, those whose
frequency exceeds ``2**-|X|``; each keeps ``theta = sup(X)/|D|``. A
transaction is one sampled pattern part (the itemset itself with probability
theta, otherwise a uniformly chosen proper subset) joined with a noise part
(a uniform subset of the remaining universe).
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
from sklearn.utils.validation import check_is_fitted

from .base import TransactionGenerator
from .dataset import Dataset
from .exceptions import ModelDegeneracyError
from .fim import FrequentItemsetSet, mine_frequent
from .validation import check_minsup, check_transactions

NOISE_UNIVERSES = ("effective", "full")
MAX_EMPTY_RETRIES = 1000


@dataclass(frozen=True)
class IgmComponent:
    itemset: tuple[int, ...]
    theta: float
    weight: float  # selection probability among components of the same size
    support: int = 0


@dataclass
class IgmModel:
    components: list[IgmComponent]
    effective_alphabet: tuple[int, ...]
    size_weights: dict[int, float]
    source_size: int
    alphabet: tuple[int, ...] = ()
    minsup: float | None = None
    noise_universe: str = "effective"
    retry_empty: bool = False
    provenance: dict = field(default_factory=dict)

    kind = "igm"

    def __post_init__(self):
        if not self.components:
            raise ModelDegeneracyError("IGM model has no components")
        if not self.alphabet:
            self.alphabet = self.effective_alphabet
        # per-size lookup tables for two-stage sampling
        self._sizes = np.array(sorted(self.size_weights), dtype=np.int64)
        self._size_cdf = np.cumsum([self.size_weights[k] for k in self._sizes])
        self._by_size = {}
        for k in self._sizes:
            members = [c for c in self.components if len(c.itemset) == k]
            self._by_size[int(k)] = (members, np.cumsum([c.weight for c in members]))
        self._effective = np.array(self.effective_alphabet, dtype=np.int64)
        self._full = np.array(self.alphabet, dtype=np.int64)

    def estimator_params(self) -> dict:
        return {"minsup": self.minsup, "noise_universe": self.noise_universe,
                "retry_empty": self.retry_empty}

    @property
    def noise_items(self) -> np.ndarray:
        return self._full if self.noise_universe == "full" else self._effective

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "minsup": self.minsup,
            "source_size": self.source_size,
            "noise_universe": self.noise_universe,
            "retry_empty": self.retry_empty,
            "effective_alphabet": list(self.effective_alphabet),
            "alphabet": list(self.alphabet),
            "size_weights": {str(k): v for k, v in sorted(self.size_weights.items())},
            "components": [{"items": list(c.itemset), "theta": c.theta,
                            "weight": c.weight, "support": c.support}
                           for c in self.components],
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "IgmModel":
        return cls(
            components=[IgmComponent(tuple(c["items"]), float(c["theta"]), float(c["weight"]),
                                     int(c.get("support", 0)))
                        for c in obj["components"]],
            effective_alphabet=tuple(obj["effective_alphabet"]),
            size_weights={int(k): float(v) for k, v in obj["size_weights"].items()},
            source_size=int(obj["source_size"]),
            alphabet=tuple(obj.get("alphabet", ())),
            minsup=obj.get("minsup"),
            noise_universe=obj.get("noise_universe", "effective"),
            retry_empty=bool(obj.get("retry_empty", False)),
            provenance=dict(obj.get("provenance", {})),
        )


def filter_significant(fi: FrequentItemsetSet, dataset_size: int) -> list[IgmComponent]:
    """Keep the itemsets with ``sup/|D| > 2**-|X|``, theta = sup/|D|.

    The returned components carry unnormalized weights (their supports).
    """
    kept = [
        IgmComponent(f.items, f.support / dataset_size, float(f.support), f.support)
        for f in fi.itemsets
        # exact integer form of sup/n > 2**-k
        if f.support << len(f.items) > dataset_size
    ]
    if not kept:
        raise ModelDegeneracyError("no significant itemsets; lower minsup")
    return kept


def learn_igm(d: Dataset, minsup: float, *, noise_universe: str = "effective",
              retry_empty: bool = False) -> IgmModel:
    if noise_universe not in NOISE_UNIVERSES:
        raise ValueError(f"noise_universe must be one of {NOISE_UNIVERSES}")
    fi = mine_frequent(d, minsup)
    if not fi.itemsets:
        raise ModelDegeneracyError("no significant itemsets; FI(minsup) is empty, lower minsup")
    kept = filter_significant(fi, len(d))
    mass: dict[int, int] = {}
    for c in kept:
        mass[len(c.itemset)] = mass.get(len(c.itemset), 0) + c.support
    total = sum(mass.values())
    components = [IgmComponent(c.itemset, c.theta, c.support / mass[len(c.itemset)], c.support)
                  for c in kept]
    effective = sorted({i for c in kept for i in c.itemset})
    return IgmModel(
        components=components,
        effective_alphabet=tuple(effective),
        size_weights={k: m / total for k, m in sorted(mass.items())},
        source_size=len(d),
        alphabet=d.alphabet,
        minsup=minsup,
        noise_universe=noise_universe,
        retry_empty=retry_empty,
        provenance={"dataset": d.name, "minsup": minsup, "n_frequent": len(fi)},
    )


def sample_pattern(x, theta: float, rng: np.random.Generator) -> tuple[int, ...]:
    """``x`` w.p. theta, else a uniform proper subset of ``x`` (possibly empty)."""
    x = np.asarray(x, dtype=np.int64)
    if len(x) == 0:
        raise ValueError("pattern itemset must be nonempty")
    if rng.random() < theta:
        return tuple(int(i) for i in x)
    # fair coins conditioned on not keeping every item: uniform over proper subsets
    while True:
        keep = rng.random(len(x)) < 0.5
        if not keep.all():
            return tuple(int(i) for i in x[keep])


def sample_noise(x, universe, rng: np.random.Generator) -> tuple[int, ...]:
    """Uniform random subset of ``universe \\ x`` (an independent fair coin per item)."""
    universe = np.asarray(universe, dtype=np.int64)
    rest = universe[~np.isin(universe, np.asarray(x, dtype=np.int64))]
    if len(rest) == 0:
        return ()
    return tuple(int(i) for i in rest[rng.random(len(rest)) < 0.5])


def choose_component(m: IgmModel, rng: np.random.Generator) -> IgmComponent:
    k = int(m._sizes[min(np.searchsorted(m._size_cdf, rng.random() * m._size_cdf[-1], side="right"),
                         len(m._sizes) - 1)])
    members, cdf = m._by_size[k]
    j = min(int(np.searchsorted(cdf, rng.random() * cdf[-1], side="right")), len(members) - 1)
    return members[j]


def generate_transaction_igm(m: IgmModel, rng: np.random.Generator,
                             *, return_component: bool = False):
    for _ in range(MAX_EMPTY_RETRIES if m.retry_empty else 1):
        comp = choose_component(m, rng)
        pattern = sample_pattern(comp.itemset, comp.theta, rng)
        noise = sample_noise(comp.itemset, m.noise_items, rng)
        t = tuple(sorted(pattern + noise))
        if t:
            break
    return (t, comp) if return_component else t


def generate_dataset_igm(m: IgmModel, n: int | None = None, random_state=None,
                         n_jobs: int | None = None) -> Dataset:
    return IGMGenerator.from_model(m).sample(n, random_state, n_jobs)


class IGMGenerator(TransactionGenerator):
    """Itemset Generating Model as an estimator.

    Parameters
    ----------
    minsup : float
        Relative support threshold for the mining step.
    noise_universe : {"effective", "full"}
        Items eligible as noise: the union of the significant itemsets, or
        the whole training alphabet.
    retry_empty : bool
        Redraw empty transactions (up to 1000 times).
    """

    def __init__(self, minsup=0.5, noise_universe="effective", retry_empty=False):
        self.minsup = minsup
        self.noise_universe = noise_universe
        self.retry_empty = retry_empty

    def fit(self, X, y=None):
        d = check_transactions(X)
        self.model_ = learn_igm(d, check_minsup(self.minsup),
                                noise_universe=self.noise_universe,
                                retry_empty=self.retry_empty)
        self.dataset_name_ = d.name
        return self

    @property
    def components_(self):
        check_is_fitted(self, "model_")
        return self.model_.components

    def _generate_one(self, index, rng):
        return generate_transaction_igm(self.model_, rng), False
