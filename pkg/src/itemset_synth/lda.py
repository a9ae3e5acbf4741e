"""LDA over transactions: transactions are documents and items are words.

Topics are learned by collapsed Gibbs sampling. Generation replays each
training transaction's topic mixture and length: draw a topic from the
document's mixture, a word from that topic, add it to the transaction, and
repeat until the transaction reaches its original size.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numba
import numpy as np

from . import rng as rng_mod
from .base import TransactionGenerator
from .dataset import Dataset
from .exceptions import ModelDegeneracyError
from .fim import mine_frequent
from .validation import check_minsup, check_positive_int, check_transactions

ATTEMPT_CAP_FACTOR = 50
DOC_POLICIES = ("cycle", "uniform")


@numba.njit(cache=True)
def _gibbs_sweep(doc_ptr, words, z, ndt, ntw, nt, alpha, beta, vbeta, uniforms, cdf):
    n_topics = ndt.shape[1]
    for d in range(doc_ptr.shape[0] - 1):
        for idx in range(doc_ptr[d], doc_ptr[d + 1]):
            w = words[idx]
            t = z[idx]
            ndt[d, t] -= 1
            ntw[t, w] -= 1
            nt[t] -= 1
            total = 0.0
            for k in range(n_topics):
                total += (ndt[d, k] + alpha) * (ntw[k, w] + beta) / (nt[k] + vbeta)
                cdf[k] = total
            u = uniforms[idx] * total
            lo = 0
            hi = n_topics - 1
            while lo < hi:
                mid = (lo + hi) // 2
                if cdf[mid] > u:
                    hi = mid
                else:
                    lo = mid + 1
            z[idx] = lo
            ndt[d, lo] += 1
            ntw[lo, w] += 1
            nt[lo] += 1


def _check_counts(doc_ptr, z, ndt, ntw, nt, n_words):
    lengths = np.diff(doc_ptr)
    assert np.array_equal(ndt.sum(axis=1), lengths), "doc-topic counts out of sync"
    assert np.array_equal(ntw.sum(axis=1), nt), "topic-word counts out of sync"
    assert nt.sum() == len(z), "topic totals out of sync"
    assert np.array_equal(np.bincount(z, minlength=len(nt)), nt), "assignments out of sync"
    assert (ndt >= 0).all() and (ntw >= 0).all()


@dataclass
class LdaModel:
    """Learned topic structure plus the per-document lengths to replay."""

    K: int
    alpha: float
    beta: float
    doc_topic: np.ndarray      # M x K
    topic_word: np.ndarray     # K x |alphabet|
    lengths: np.ndarray        # M
    alphabet: tuple[int, ...]
    doc_policy: str = "cycle"
    provenance: dict = field(default_factory=dict)

    kind = "lda"

    def __post_init__(self):
        self.doc_topic = np.asarray(self.doc_topic, dtype=np.float64)
        self.topic_word = np.asarray(self.topic_word, dtype=np.float64)
        self.lengths = np.asarray(self.lengths, dtype=np.int64)
        self.alphabet = tuple(int(i) for i in self.alphabet)
        if self.doc_topic.shape != (len(self.lengths), self.K):
            raise ValueError("doc_topic must be M x K")
        if self.topic_word.shape != (self.K, len(self.alphabet)):
            raise ValueError("topic_word must be K x |alphabet|")
        if (self.lengths < 1).any() or (self.lengths > len(self.alphabet)).any():
            raise ValueError("transaction lengths must lie in [1, |alphabet|]")
        self._theta_cdf = np.cumsum(self.doc_topic, axis=1)
        self._phi_cdf = np.cumsum(self.topic_word, axis=1)
        self._words = np.array(self.alphabet, dtype=np.int64)

    @property
    def M(self) -> int:
        return len(self.lengths)

    @property
    def source_size(self) -> int:
        return self.M

    def estimator_params(self) -> dict:
        return {"n_topics": self.K, "alpha": self.alpha, "beta": self.beta,
                "doc_policy": self.doc_policy}

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "K": self.K,
            "alpha": self.alpha,
            "beta": self.beta,
            "doc_policy": self.doc_policy,
            "alphabet": list(self.alphabet),
            "lengths": self.lengths.tolist(),
            "doc_topic": self.doc_topic.tolist(),
            "topic_word": self.topic_word.tolist(),
            "provenance": self.provenance,
        }

    @classmethod
    def from_dict(cls, obj: dict) -> "LdaModel":
        return cls(K=int(obj["K"]), alpha=float(obj["alpha"]), beta=float(obj["beta"]),
                   doc_topic=np.array(obj["doc_topic"], dtype=np.float64),
                   topic_word=np.array(obj["topic_word"], dtype=np.float64),
                   lengths=np.array(obj["lengths"], dtype=np.int64),
                   alphabet=tuple(obj["alphabet"]),
                   doc_policy=obj.get("doc_policy", "cycle"),
                   provenance=dict(obj.get("provenance", {})))


def choose_k(d: Dataset, minsup: float) -> int:
    """Number of topics = |FI(minsup)|."""
    k = len(mine_frequent(d, minsup))
    if k == 0:
        raise ModelDegeneracyError("K would be zero; lower minsup")
    return k


def learn_lda(d: Dataset, k: int, alpha: float | None = None, beta: float = 0.01,
              iterations: int = 1000, random_state=None, *, burn_in: int = 200,
              n_avg: int = 10, check_counts: bool = False) -> LdaModel:
    """Fit topics by collapsed Gibbs sampling.

    ``alpha`` defaults to ``50/k``. The returned mixtures are posterior means
    averaged over ``n_avg`` evenly spaced post-burn-in states.
    """
    k = check_positive_int(k, "k")
    iterations = check_positive_int(iterations, "iterations")
    if len(d) == 0:
        raise ValueError("empty dataset")
    if any(len(t) == 0 for t in d.transactions):
        raise ValueError("LDA training data must not contain empty transactions")
    alpha = 50.0 / k if alpha is None else float(alpha)
    beta = float(beta)
    if alpha <= 0 or beta <= 0:
        raise ValueError("alpha and beta must be positive")
    rng = rng_mod.as_generator(random_state)

    alphabet = d.alphabet
    index = {item: j for j, item in enumerate(alphabet)}
    n_vocab = len(alphabet)
    lengths = np.array([len(t) for t in d.transactions], dtype=np.int64)
    doc_ptr = np.concatenate([[0], np.cumsum(lengths)]).astype(np.int64)
    words = np.array([index[i] for t in d.transactions for i in t], dtype=np.int64)
    n_tokens = len(words)
    doc_of = np.repeat(np.arange(len(d)), lengths)

    z = rng.integers(0, k, size=n_tokens).astype(np.int64)
    ndt = np.zeros((len(d), k), dtype=np.int64)
    ntw = np.zeros((k, n_vocab), dtype=np.int64)
    np.add.at(ndt, (doc_of, z), 1)
    np.add.at(ntw, (z, words), 1)
    nt = ntw.sum(axis=1)
    cdf = np.empty(k, dtype=np.float64)

    burn_in = min(max(0, burn_in), iterations - 1)
    kept = iterations - burn_in
    n_avg = max(1, min(n_avg, kept))
    step = kept // n_avg
    sample_at = {iterations - j * step for j in range(n_avg)}

    theta = np.zeros((len(d), k))
    phi = np.zeros((k, n_vocab))
    for it in range(1, iterations + 1):
        _gibbs_sweep(doc_ptr, words, z, ndt, ntw, nt, alpha, beta, n_vocab * beta,
                     rng.random(n_tokens), cdf)
        if check_counts:
            _check_counts(doc_ptr, z, ndt, ntw, nt, n_vocab)
        if it in sample_at:
            theta += (ndt + alpha) / (lengths[:, None] + k * alpha)
            phi += (ntw + beta) / (nt[:, None] + n_vocab * beta)
    theta /= theta.sum(axis=1, keepdims=True)
    phi /= phi.sum(axis=1, keepdims=True)
    return LdaModel(K=k, alpha=alpha, beta=beta, doc_topic=theta, topic_word=phi,
                    lengths=lengths, alphabet=alphabet,
                    provenance={"dataset": d.name, "iterations": iterations,
                                "burn_in": burn_in, "n_avg": n_avg})


def generate_transaction_lda(m: LdaModel, i: int, rng: np.random.Generator):
    """Regenerate document ``i``; returns ``(itemset, capped)``.

    ``capped`` is True when the attempt budget (50 x length) ran out before
    the transaction reached its target length.
    """
    if not 0 <= i < m.M:
        raise IndexError(f"document index {i} out of range [0, {m.M})")
    target = int(m.lengths[i])
    cap = ATTEMPT_CAP_FACTOR * target
    theta_cdf = m._theta_cdf[i]
    chosen: set[int] = set()
    attempts = 0
    while len(chosen) < target and attempts < cap:
        batch = min(cap - attempts, max(8, 2 * (target - len(chosen))))
        topics = np.searchsorted(theta_cdf, rng.random(batch) * theta_cdf[-1], side="right")
        np.minimum(topics, m.K - 1, out=topics)
        rows = m._phi_cdf[topics]
        u = rng.random(batch) * rows[:, -1]
        picks = (rows <= u[:, None]).sum(axis=1)
        np.minimum(picks, len(m.alphabet) - 1, out=picks)
        for w in picks:
            attempts += 1
            chosen.add(int(w))
            if len(chosen) == target:
                break
    items = tuple(sorted(int(m._words[w]) for w in chosen))
    return items, len(items) < target


def generate_dataset_lda(m: LdaModel, n: int | None = None, random_state=None,
                         n_jobs: int | None = None) -> Dataset:
    return LDAGenerator.from_model(m).sample(n, random_state, n_jobs)


class LDAGenerator(TransactionGenerator):
    """LDA-over-itemsets generator.

    Give either ``n_topics`` or ``minsup``; with ``minsup`` the topic count is
    the number of frequent itemsets at that support.

    Attributes
    ----------
    model_ : LdaModel
    n_warnings_ : int
        Transactions cut short by the attempt cap in the last ``sample`` call.
    """

    def __init__(self, n_topics=None, minsup=None, alpha=None, beta=0.01, n_iter=1000,
                 burn_in=200, n_avg=10, doc_policy="cycle", random_state=None):
        self.n_topics = n_topics
        self.minsup = minsup
        self.alpha = alpha
        self.beta = beta
        self.n_iter = n_iter
        self.burn_in = burn_in
        self.n_avg = n_avg
        self.doc_policy = doc_policy
        self.random_state = random_state

    def fit(self, X, y=None):
        if self.doc_policy not in DOC_POLICIES:
            raise ValueError(f"doc_policy must be one of {DOC_POLICIES}")
        d = check_transactions(X, allow_empty_transactions=False)
        if self.n_topics is None:
            if self.minsup is None:
                raise ValueError("LDAGenerator needs n_topics or minsup")
            k = choose_k(d, check_minsup(self.minsup))
        else:
            k = check_positive_int(self.n_topics, "n_topics")
        seed = rng_mod.resolve_seed(self.random_state)
        model = learn_lda(d, k, self.alpha, self.beta, self.n_iter, seed,
                          burn_in=self.burn_in, n_avg=self.n_avg)
        model.doc_policy = self.doc_policy
        model.provenance.update({"minsup": self.minsup, "seed": seed})
        if self.n_topics is None:
            model.provenance["n_frequent"] = k
        self.model_ = model
        self.dataset_name_ = d.name
        return self

    def _generate_one(self, index, rng):
        m = self.model_
        if m.doc_policy == "uniform":
            i = int(rng.integers(m.M))
        else:
            i = index % m.M
        return generate_transaction_lda(m, i, rng)
