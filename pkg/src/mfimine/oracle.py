"""Brute-force reference for frequent and maximal itemsets.

Levelwise candidate-generate-and-test over explicit Python sets, sharing
no code with the mining engines: no bit vectors, no vertical layout, no
pruning.  Intentionally slow and guarded to small item universes; this is
ground truth for the equivalence tests, nothing more.
"""

from __future__ import annotations

from dataclasses import dataclass

from .dataset import TransactionDb

ORACLE_ITEM_GUARD = 20


class OracleGuardError(RuntimeError):
    """Raised when the item universe is too large for exhaustive search."""


@dataclass
class OracleResult:
    all_frequent: dict  # frozenset -> support
    maximal: set        # of frozensets
    minsup: int


def oracle_mfi(db: TransactionDb, minsup: int) -> OracleResult:
    """All frequent itemsets and the maximal subset, by exhaustion.

    Refuses databases with more than ORACLE_ITEM_GUARD distinct items to
    prevent accidental exponential runs.
    """
    if minsup < 1:
        raise ValueError("minsup must be >= 1")
    if db.n_items > ORACLE_ITEM_GUARD:
        raise OracleGuardError(
            f"{db.n_items} distinct items exceeds the oracle guard "
            f"of {ORACLE_ITEM_GUARD}"
        )
    tx = [frozenset(t) for t in db.transactions]

    counts = {}
    for t in tx:
        for i in t:
            counts[i] = counts.get(i, 0) + 1
    current = {
        frozenset((i,)): c for i, c in counts.items() if c >= minsup
    }
    all_frequent = dict(current)

    while current:
        candidates = _join_level(current)
        nxt = {}
        for cand in candidates:
            s = sum(1 for t in tx if cand <= t)
            if s >= minsup:
                nxt[cand] = s
        all_frequent.update(nxt)
        current = nxt

    _check_downward_closure(all_frequent)

    items = [i for i in db.items if frozenset((i,)) in all_frequent]
    maximal = _maximal_of(all_frequent, items)
    return OracleResult(all_frequent=all_frequent, maximal=maximal,
                        minsup=minsup)


def maximal_at(result: OracleResult, minsup: int) -> set:
    """Maximal itemsets at a higher threshold, from an existing result.

    Restricting all_frequent to supports >= minsup gives exactly the
    frequent sets of the raised threshold, so maximality can be recomputed
    without another exhaustive pass.
    """
    if minsup < result.minsup:
        raise ValueError(
            f"can only raise the threshold: base {result.minsup}, "
            f"asked {minsup}"
        )
    if minsup == result.minsup:
        return set(result.maximal)
    frequent = {
        x: s for x, s in result.all_frequent.items() if s >= minsup
    }
    items = sorted({i for x in frequent if len(x) == 1 for i in x})
    return _maximal_of(frequent, items)


def _join_level(current: dict) -> set:
    """Classic prefix join plus subset pruning for the next level."""
    prev = sorted(tuple(sorted(s)) for s in current)
    candidates = set()
    for a_idx in range(len(prev)):
        a = prev[a_idx]
        for b_idx in range(a_idx + 1, len(prev)):
            b = prev[b_idx]
            if a[:-1] != b[:-1]:
                break  # sorted order keeps shared prefixes contiguous
            cand = frozenset(a) | frozenset(b)
            if all(cand - {i} in current for i in cand):
                candidates.add(cand)
    return candidates


def _maximal_of(frequent: dict, items) -> set:
    return {
        x for x in frequent
        if not any(i not in x and (x | {i}) in frequent for i in items)
    }


def _check_downward_closure(all_frequent: dict) -> None:
    # oracle self-check: every proper subset one item smaller must be
    # frequent with at least the same support
    for x, s in all_frequent.items():
        if len(x) == 1:
            continue
        for i in x:
            sub = x - {i}
            if sub not in all_frequent or all_frequent[sub] < s:
                raise RuntimeError(
                    f"downward closure violated at {sorted(x)} / {i}"
                )
