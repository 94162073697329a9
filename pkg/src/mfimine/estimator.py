"""scikit-learn style estimator wrapping the miner."""

from __future__ import annotations

import numpy as np
from sklearn.base import BaseEstimator, TransformerMixin
from sklearn.utils.validation import check_is_fitted

from .dataset import TransactionDb, build_vertical, resolve_minsup
from .miner import ENGINES, MinerConfig, RunStats, mine


class MaximalItemsetMiner(TransformerMixin, BaseEstimator):
    """Mine maximal frequent itemsets from transactions.

    Parameters
    ----------
    min_support : float or int, default=0.5
        Relative support in (0, 1] if a float, absolute transaction
        count if an int.
    engine : {'fastlmfi', 'profocus', 'naive'}, default='fastlmfi'
        Superset-checking engine.  The mined patterns are identical for
        every engine; the choice only affects runtime.
    pep, fhut, hutmfi, reorder : bool, default=True
        Search-space pruning toggles.  Output-invariant.
    word_width : int, default=64
        Patterns per index word in the pattern bitmaps (32 or 64 make
        sense on current hardware).

    Attributes
    ----------
    mfi_ : list of tuple
        Maximal itemsets in discovery order.  Items are external ids:
        column indices when fitted on a binary matrix, the transaction
        values themselves when fitted on an iterable of itemsets.
    supports_ : list of int
        Absolute support of each mined itemset, aligned with ``mfi_``.
    n_patterns_ : int
        Number of maximal itemsets found.
    minsup_ : int
        The resolved absolute threshold.
    stats_ : RunStats
        Cost breakdown of the mining run.

    Examples
    --------
    >>> tx = [[1, 2, 3], [1, 2, 3, 4], [2, 3, 4], [1, 3, 4], [1, 2]]
    >>> m = MaximalItemsetMiner(min_support=2).fit(tx)
    >>> sorted(m.mfi_)
    [(1, 2, 3), (1, 3, 4), (2, 3, 4)]
    """

    def __init__(self, min_support=0.5, engine="fastlmfi", pep=True,
                 fhut=True, hutmfi=True, reorder=True, word_width=64):
        self.min_support = min_support
        self.engine = engine
        self.pep = pep
        self.fhut = fhut
        self.hutmfi = hutmfi
        self.reorder = reorder
        self.word_width = word_width

    @staticmethod
    def _as_transactions(X):
        """(n_columns or None, transactions) from either input form."""
        if hasattr(X, "shape") and getattr(X, "ndim", None) == 2:
            arr = np.asarray(X)
            rows = [tuple(np.nonzero(row)[0].tolist()) for row in arr]
            return arr.shape[1], rows
        return None, [tuple(int(i) for i in row) for row in X]

    def fit(self, X, y=None):
        """Mine X and store the maximal itemsets.

        Parameters
        ----------
        X : iterable of itemsets, or 2d binary array
            Transactions.  Rows of a binary matrix are read as itemsets
            of their nonzero column indices.
        y : ignored
        """
        if self.engine not in ENGINES:
            raise ValueError(
                f"engine must be one of {ENGINES}, got {self.engine!r}"
            )
        n_cols, transactions = self._as_transactions(X)
        if n_cols is not None:
            self.n_features_in_ = n_cols
        db = TransactionDb(transactions)
        sigma = resolve_minsup(self.min_support, db.n_transactions)
        cfg = MinerConfig(minsup=sigma, engine=self.engine, pep=self.pep,
                          fhut=self.fhut, hutmfi=self.hutmfi,
                          reorder=self.reorder, word_width=self.word_width)
        vdb = build_vertical(db, sigma, width=self.word_width)
        stats = RunStats()
        store = mine(vdb, cfg, stats=stats)
        ext = vdb.ext_of_int
        self.mfi_ = [
            tuple(sorted(ext[i] for i in pat)) for pat in store.patterns
        ]
        self.supports_ = list(store.supports)
        self.n_patterns_ = store.n_patterns
        self.minsup_ = sigma
        self.stats_ = stats
        return self

    def discover(self):
        """The mined itemsets as (itemset, support) pairs."""
        check_is_fitted(self, "mfi_")
        return list(zip(self.mfi_, self.supports_))

    def transform(self, X):
        """Pattern-containment features.

        Returns a boolean array of shape (n_transactions, n_patterns_)
        whose [j, k] entry says whether transaction j contains mined
        itemset k.
        """
        check_is_fitted(self, "mfi_")
        _, transactions = self._as_transactions(X)
        out = np.zeros((len(transactions), self.n_patterns_), dtype=bool)
        psets = [frozenset(p) for p in self.mfi_]
        for j, t in enumerate(transactions):
            ts = set(t)
            for k, p in enumerate(psets):
                if p <= ts:
                    out[j, k] = True
        return out
