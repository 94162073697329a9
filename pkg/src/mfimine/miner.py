"""Depth-first set-enumeration search for maximal frequent itemsets.

The search is parameterized by a superset-checker engine chosen with
MinerConfig.engine:

  fastlmfi  word-granular local pattern index (lind module)
  profocus  progressive-focusing pattern-id lists (profocus module)
  naive     linear scan of the whole store at every check

Engines implement a common contract: root(), propagate(state, item,
depth), absorb(state, item), subsumed(state, extra_items), increment
(state), release(state), on_new_pattern(pid), plus the counters
n_checks, n_word_ands, peak_entries, n_allocations, n_capacity_grows.
The mined output is identical for every engine and every combination of
pruning toggles; only the cost profile differs.
"""

from __future__ import annotations

import sys
import time
from dataclasses import dataclass, field

from .dataset import VerticalDb
from .lind import LindChecker
from .mfistore import MfiStore
from .profocus import PfChecker

ENGINES = ("fastlmfi", "profocus", "naive")


class NaiveState:
    __slots__ = ("head", "version", "depth")

    def __init__(self, head, version, depth):
        self.head = head
        self.version = version
        self.depth = depth


class NaiveChecker:
    """No index at all: every check is a linear scan of the store."""

    engine_id = "naive"

    def __init__(self, store):
        self.store = store
        self.n_checks = 0
        self.n_word_ands = 0  # patterns touched by the scans
        self.peak_entries = 0
        self.n_allocations = 0
        self.n_capacity_grows = 0

    def root(self) -> NaiveState:
        return NaiveState([], self.store.n_patterns, 0)

    def propagate(self, parent: NaiveState, item: int, depth: int) -> NaiveState:
        return NaiveState(parent.head + [item], self.store.n_patterns, depth)

    def absorb(self, state: NaiveState, item: int) -> None:
        state.head.append(item)

    def subsumed(self, state: NaiveState, extra_items) -> bool:
        self.n_checks += 1
        query = state.head + list(extra_items)
        hit, tested = self.store.scan_subsumed(query)
        self.n_word_ands += tested
        return hit

    def increment(self, state: NaiveState) -> None:
        state.version = self.store.n_patterns

    def release(self, state: NaiveState) -> None:
        pass

    def on_new_pattern(self, pid: int) -> None:
        pass


CHECKER_FACTORIES = {
    "fastlmfi": LindChecker,
    "profocus": PfChecker,
    "naive": NaiveChecker,
}


@dataclass
class MinerConfig:
    """Search parameters: threshold, engine, and pruning toggles."""

    minsup: int = 1
    engine: str = "fastlmfi"
    pep: bool = True
    fhut: bool = True
    hutmfi: bool = True
    reorder: bool = True
    word_width: int = 64

    def __post_init__(self):
        if self.minsup < 1:
            raise ValueError("minsup must be >= 1")
        if self.engine not in ENGINES:
            raise ValueError(
                f"unknown engine {self.engine!r}; expected one of {ENGINES}"
            )


@dataclass
class RunStats:
    """Cost breakdown of one mining run.

    superset_ms covers every checker call (index propagation and
    incrementing included), which is exactly the work the engines trade
    off against each other; all counters are monotone during a run.
    """

    total_ms: float = 0.0
    superset_ms: float = 0.0
    n_mfi: int = 0
    n_superset_checks: int = 0
    n_word_ands: int = 0
    peak_lind_entries: int = 0
    allocations: int = 0
    n_capacity_grows: int = 0
    n_nodes: int = 0
    max_depth: int = 0

    def as_dict(self) -> dict:
        return {
            "total_ms": self.total_ms,
            "superset_ms": self.superset_ms,
            "n_mfi": self.n_mfi,
            "n_superset_checks": self.n_superset_checks,
            "n_word_ands": self.n_word_ands,
            "peak_lind_entries": self.peak_lind_entries,
            "allocations": self.allocations,
            "n_capacity_grows": self.n_capacity_grows,
            "n_nodes": self.n_nodes,
            "max_depth": self.max_depth,
        }


def mine(vdb: VerticalDb, cfg: MinerConfig, stats: RunStats | None = None,
         checker_factory=None) -> MfiStore:
    """Mine all maximal frequent itemsets of vdb at cfg.minsup.

    Parameters
    ----------
    vdb : VerticalDb
        Vertical database built at the same minsup as cfg.minsup.
    cfg : MinerConfig
        Engine choice and pruning toggles; none of them change the
        output, only the work done to produce it.
    stats : RunStats, optional
        Filled in place with the run's cost breakdown.
    checker_factory : callable, optional
        store -> checker override, used by instrumented test runs.
        Defaults to the engine named in cfg.

    Returns
    -------
    MfiStore
        The maximal patterns in discovery order, with supports.
    """
    if vdb.minsup != cfg.minsup:
        raise ValueError(
            f"vdb was built at minsup={vdb.minsup}, config says {cfg.minsup}"
        )
    perf = time.perf_counter
    t_start = perf()
    store = MfiStore(vdb.n_items, width=cfg.word_width)
    if checker_factory is None:
        checker_factory = CHECKER_FACTORIES[cfg.engine]
    checker = checker_factory(store)

    cols = vdb.raw_columns()
    minsup = cfg.minsup
    use_pep = cfg.pep
    use_fhut = cfg.fhut
    use_hutmfi = cfg.hutmfi
    use_reorder = cfg.reorder
    n_trans = vdb.n_transactions
    n_items = vdb.n_items

    limit = n_items * 2 + 500
    if sys.getrecursionlimit() < limit:
        sys.setrecursionlimit(limit)

    propagate = checker.propagate
    absorb = checker.absorb
    subsumed = checker.subsumed
    increment = checker.increment
    release = checker.release
    on_new_pattern = checker.on_new_pattern
    append_pattern = store.append_pattern

    sup_time = 0.0
    n_nodes = 0
    max_depth = 0

    def search(state, tail, tids, support, depth, is_hut):
        # Returns True iff this node sits on its parent's leftmost path
        # and head + tail-at-entry is itself frequent, in which case the
        # parent may skip the remaining siblings: everything they could
        # reach is a subset of that frequent union.
        nonlocal sup_time, n_nodes, max_depth
        n_nodes += 1
        if depth > max_depth:
            max_depth = depth

        freq = []
        for x in tail:
            c = tids & cols[x]
            s = c.bit_count()
            if s >= minsup:
                freq.append((s, x, c))
        all_freq = len(freq) == len(tail)

        if use_pep and freq:
            kept = []
            for e in freq:
                if e[0] == support:
                    # same support as the head: every head transaction
                    # carries this item, move it out of the tail
                    t0 = perf()
                    absorb(state, e[1])
                    sup_time += perf() - t0
                else:
                    kept.append(e)
            freq = kept

        if use_reorder:
            freq.sort(key=_support_then_id)

        if not freq:
            # leaf: the head is a candidate maximal pattern
            if state.head:
                t0 = perf()
                is_sub = subsumed(state, ())
                sup_time += perf() - t0
                if not is_sub:
                    pid = append_pattern(state.head, support)
                    on_new_pattern(pid)
            return is_hut and all_freq

        ids = [e[1] for e in freq]
        if use_hutmfi:
            t0 = perf()
            is_sub = subsumed(state, ids)
            sup_time += perf() - t0
            if is_sub:
                # head + tail is inside a stored pattern: nothing below
                # can be maximal, and being a subset of a frequent
                # pattern it is frequent whenever all extensions were
                return is_hut and all_freq

        first_h = False
        for i, (s, x, c) in enumerate(freq):
            t0 = perf()
            child = propagate(state, x, depth + 1)
            sup_time += perf() - t0
            h = search(child, ids[i + 1:], c, s, depth + 1, i == 0)
            release(child)
            if state.version != store.n_patterns:
                t0 = perf()
                increment(state)
                sup_time += perf() - t0
            if i == 0:
                first_h = h
                if use_fhut and h:
                    # leftmost subtree's full head-union-tail is
                    # frequent; the siblings only reach subsets of it
                    break
        return is_hut and all_freq and first_h

    t0 = perf()
    root_state = checker.root()
    sup_time += perf() - t0
    root_tids = (1 << n_trans) - 1
    search(root_state, list(range(n_items)), root_tids, n_trans, 0, True)
    release(root_state)

    if stats is not None:
        stats.total_ms = (perf() - t_start) * 1000.0
        stats.superset_ms = sup_time * 1000.0
        stats.n_mfi = store.n_patterns
        stats.n_superset_checks = checker.n_checks
        stats.n_word_ands = checker.n_word_ands
        stats.peak_lind_entries = checker.peak_entries
        stats.allocations = checker.n_allocations
        stats.n_capacity_grows = checker.n_capacity_grows
        stats.n_nodes = n_nodes
        stats.max_depth = max_depth
    return store


def _support_then_id(e):
    return (e[0], e[1])


def mine_transactions(transactions, minsup, **cfg_kwargs) -> list:
    """Convenience wrapper: mine a list of transactions directly.

    minsup may be absolute (int) or relative (float).  Returns a list of
    (itemset tuple in external ids, support) pairs in discovery order.
    """
    from .dataset import TransactionDb, build_vertical, resolve_minsup

    db = TransactionDb(transactions)
    sigma = resolve_minsup(minsup, db.n_transactions)
    cfg = MinerConfig(minsup=sigma, **cfg_kwargs)
    vdb = build_vertical(db, sigma, width=cfg.word_width)
    store = mine(vdb, cfg)
    ext = vdb.ext_of_int
    return [
        (tuple(sorted(ext[i] for i in pat)), sup)
        for pat, sup in zip(store.patterns, store.supports)
    ]
