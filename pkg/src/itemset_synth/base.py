"""Estimator base class shared by the three generators."""
from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor

from sklearn.base import BaseEstimator
from sklearn.utils.validation import check_is_fitted

from . import rng as rng_mod
from .dataset import Dataset
from .validation import check_positive_int

THREADS_ENV = "ITEMSET_SYNTH_THREADS"


def default_n_jobs() -> int:
    value = os.environ.get(THREADS_ENV)
    if not value:
        return 1
    try:
        return max(1, int(value))
    except ValueError:
        raise ValueError(f"{THREADS_ENV} must be an integer, got {value!r}") from None


class TransactionGenerator(BaseEstimator):
    """fit / sample interface for transaction generators.

    Subclasses implement ``fit`` (setting ``model_``) and
    ``_generate_one(index, rng) -> (itemset, warned)``. Transaction ``j`` of a
    sample always draws from ``rng.stream(seed, j)``, so output depends only
    on the seed, never on ``n_jobs``.
    """

    _model_cls = None

    def sample(self, n_samples: int | None = None, random_state=None,
               n_jobs: int | None = None) -> Dataset:
        """Generate a synthetic dataset.

        Parameters
        ----------
        n_samples : int, optional
            Number of transactions. Defaults to the size of the training data.
        random_state : int, numpy Generator or None
            Master seed. ``None`` draws one from OS entropy.
        n_jobs : int, optional
            Worker threads; defaults to ``$ITEMSET_SYNTH_THREADS`` or 1.
        """
        check_is_fitted(self, "model_")
        n = self.model_.source_size if n_samples is None else n_samples
        n = check_positive_int(n, "n_samples")
        seed = rng_mod.resolve_seed(random_state)
        n_jobs = default_n_jobs() if n_jobs is None else check_positive_int(n_jobs, "n_jobs")

        def work(bounds):
            lo, hi = bounds
            rows, warned = [], 0
            for j in range(lo, hi):
                t, w = self._generate_one(j, rng_mod.stream(seed, j))
                rows.append(t)
                warned += bool(w)
            return rows, warned

        if n_jobs == 1:
            chunks = [work((0, n))]
        else:
            step = max(1, -(-n // (4 * n_jobs)))
            bounds = [(lo, min(n, lo + step)) for lo in range(0, n, step)]
            with ThreadPoolExecutor(max_workers=n_jobs) as pool:
                chunks = list(pool.map(work, bounds))
        transactions = [t for rows, _ in chunks for t in rows]
        self.n_warnings_ = sum(w for _, w in chunks)
        self.last_seed_ = seed
        return Dataset(transactions, name=getattr(self, "dataset_name_", ""))

    def fit_sample(self, X, y=None, n_samples=None, random_state=None) -> Dataset:
        return self.fit(X).sample(n_samples, random_state)

    def _generate_one(self, index: int, rng):
        raise NotImplementedError

    @classmethod
    def from_model(cls, model):
        """Wrap an already-learned model in a fitted estimator."""
        est = cls(**model.estimator_params())
        est.model_ = model
        est.dataset_name_ = model.provenance.get("dataset", "")
        return est
