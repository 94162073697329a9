"""Progressive-focusing baseline engine.

Per node, a plain list of the ids of stored patterns containing the
node's head.  Child construction keeps the classic two-step shape this
technique is known by: first project the parent list (membership flags),
then place the survivors into a freshly materialized child list.  The two
passes and the per-node allocation are deliberate; they are the cost
structure the word-granular engine is benchmarked against, so they must
not be fused or pooled away.
"""

from __future__ import annotations


class PfState:
    __slots__ = ("ids", "head", "version", "depth")

    def __init__(self, ids, head, version, depth):
        self.ids = ids
        self.head = head
        self.version = version
        self.depth = depth


class PfChecker:
    """Superset-checker engine over per-node pattern-id lists."""

    engine_id = "profocus"

    def __init__(self, store):
        self.store = store
        self.n_checks = 0
        self.n_word_ands = 0  # pattern-granular membership tests
        self.peak_entries = 0
        self.n_allocations = 0
        self.n_capacity_grows = 0

    def _note(self, ids) -> None:
        if len(ids) > self.peak_entries:
            self.peak_entries = len(ids)

    def root(self) -> PfState:
        self.n_allocations += 1
        ids = list(range(self.store.n_patterns))
        self._note(ids)
        return PfState(ids, [], self.store.n_patterns, 0)

    def propagate(self, parent: PfState, item: int, depth: int) -> PfState:
        """Two-step child list: project, then place."""
        masks = self.store._pattern_masks
        bit = 1 << item
        pids = parent.ids
        # step 1: project the parent list against the new head item
        flags = [masks[p] & bit != 0 for p in pids]
        # step 2: push and place the survivors into the child list
        ids = [p for p, f in zip(pids, flags) if f]
        self.n_word_ands += len(pids)
        self.n_allocations += 1
        self._note(ids)
        return PfState(ids, parent.head + [item], parent.version, depth)

    def absorb(self, state: PfState, item: int) -> None:
        masks = self.store._pattern_masks
        bit = 1 << item
        pids = state.ids
        flags = [masks[p] & bit != 0 for p in pids]
        state.ids = [p for p, f in zip(pids, flags) if f]
        self.n_word_ands += len(pids)
        self.n_allocations += 1
        state.head.append(item)

    def subsumed(self, state: PfState, extra_items) -> bool:
        """True iff some listed pattern contains all extra_items.

        Head containment is already guaranteed by list construction.
        """
        self.n_checks += 1
        q = 0
        for x in extra_items:
            q |= 1 << x
        masks = self.store._pattern_masks
        tested = 0
        hit = False
        for p in state.ids:
            tested += 1
            if q & ~masks[p] == 0:
                hit = True
                break
        self.n_word_ands += tested
        return hit

    def increment(self, state: PfState) -> None:
        """Append every pattern id stored since the last sync.

        All of them were found in this node's subtree and therefore
        contain the head.
        """
        v1 = self.store.n_patterns
        if state.version == v1:
            return
        state.ids.extend(range(state.version, v1))
        state.version = v1
        self._note(state.ids)

    def release(self, state: PfState) -> None:
        pass

    def on_new_pattern(self, pid: int) -> None:
        pass
