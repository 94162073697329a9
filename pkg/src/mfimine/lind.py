"""Word-granular local maximal-pattern index (the fastlmfi engine).

Each search node carries a LIND: a list of (word_id, mask) entries into
the store's pattern bitmaps.  A set bit in an entry's mask marks a stored
pattern that contains the node's whole head, so a child index is one
word-AND per surviving entry, subsumption checking is a short AND chain
over the entries, and an empty index means the head is a new maximal
pattern.

Entry buffers are pooled per DFS depth: a single branch is live at any
time, so one buffer per level serves every node at that depth for the
whole run.
"""

from __future__ import annotations


class LindState:
    """One node's index.

    word_ids/masks are parallel pooled lists; only the first ``n`` slots
    are meaningful.  ``version`` is the store size this state last synced
    with, and ``head`` the items ANDed into the masks so far.
    """

    __slots__ = ("word_ids", "masks", "n", "head", "version", "depth", "live")

    def __init__(self):
        self.word_ids = []
        self.masks = []
        self.n = 0
        self.head = []
        self.version = 0
        self.depth = 0
        self.live = False


class LindPool:
    """Per-depth reusable LindState buffers.

    At most one state per depth may be live (DFS discipline); violating
    that or exceeding the level bound is an internal error.  Buffer
    capacity follows the store's word count and only ever grows.
    """

    def __init__(self, max_levels: int):
        self.max_levels = max_levels
        self._levels = []
        self.n_allocations = 0
        self.n_capacity_grows = 0

    def acquire(self, depth: int, capacity: int) -> LindState:
        if depth >= self.max_levels:
            raise RuntimeError(
                f"depth {depth} exceeds level bound {self.max_levels}"
            )
        while len(self._levels) <= depth:
            state = LindState()
            state.depth = len(self._levels)
            self._levels.append(state)
            self.n_allocations += 1
        state = self._levels[depth]
        if state.live:
            raise RuntimeError(f"depth {depth} buffer is already live")
        if capacity > len(state.word_ids):
            self.ensure_capacity(state, capacity)
        state.live = True
        state.n = 0
        state.head = []
        state.version = 0
        return state

    def ensure_capacity(self, state: LindState, capacity: int) -> None:
        grow = capacity - len(state.word_ids)
        if grow > 0:
            state.word_ids.extend([0] * grow)
            state.masks.extend([0] * grow)
            self.n_capacity_grows += 1

    def release(self, state: LindState) -> None:
        state.live = False


class LindChecker:
    """Superset-checker engine over pooled word-granular indexes."""

    engine_id = "fastlmfi"

    def __init__(self, store):
        self.store = store
        self.pool = LindPool(store.n_items + 1)
        self.n_checks = 0
        self.n_word_ands = 0
        self.peak_entries = 0

    @property
    def n_allocations(self) -> int:
        return self.pool.n_allocations

    @property
    def n_capacity_grows(self) -> int:
        return self.pool.n_capacity_grows

    def root(self) -> LindState:
        """Empty-head state: every live store word, validity-masked."""
        store = self.store
        wc = store.word_count()
        state = self.pool.acquire(0, wc)
        wi = state.word_ids
        ms = state.masks
        k = 0
        for w in range(wc):
            m = store.valid_mask(w)
            if m:
                wi[k] = w
                ms[k] = m
                k += 1
        state.n = k
        state.version = store.n_patterns
        if k > self.peak_entries:
            self.peak_entries = k
        return state

    def propagate(self, parent: LindState, item: int, depth: int) -> LindState:
        """Child index for head + {item}: one AND per parent entry.

        Zero masks are dropped, so child word_ids are a subset of the
        parent's and the entry list only ever shrinks down a branch.
        """
        store = self.store
        assert parent.version == store.n_patterns, "parent index is stale"
        child = self.pool.acquire(depth, store.word_count())
        iw = store._item_words[item]
        pwi = parent.word_ids
        pms = parent.masks
        cwi = child.word_ids
        cms = child.masks
        k = 0
        for j in range(parent.n):
            w = pwi[j]
            m = pms[j] & iw[w]
            if m:
                cwi[k] = w
                cms[k] = m
                k += 1
        self.n_word_ands += parent.n
        child.n = k
        child.head = parent.head + [item]
        child.version = parent.version
        if k > self.peak_entries:
            self.peak_entries = k
        return child

    def absorb(self, state: LindState, item: int) -> None:
        """AND an item into the state in place (tail item moved to head)."""
        iw = self.store._item_words[item]
        wi = state.word_ids
        ms = state.masks
        k = 0
        for j in range(state.n):
            w = wi[j]
            m = ms[j] & iw[w]
            if m:
                wi[k] = w
                ms[k] = m
                k += 1
        self.n_word_ands += state.n
        state.n = k
        state.head.append(item)

    def subsumed(self, state: LindState, extra_items) -> bool:
        """True iff some indexed pattern contains head + extra_items.

        With no extra items this is just index non-emptiness: the masks
        already encode head containment.
        """
        self.n_checks += 1
        if not extra_items:
            return state.n > 0
        store = self.store
        iws = [store._item_words[x] for x in extra_items]
        wi = state.word_ids
        ms = state.masks
        ands = 0
        hit = False
        for j in range(state.n):
            w = wi[j]
            m = ms[j]
            for iw in iws:
                m &= iw[w]
                ands += 1
                if not m:
                    break
            if m:
                hit = True
                break
        self.n_word_ands += ands
        return hit

    def increment(self, state: LindState) -> None:
        """Fold patterns stored since state.version into the index.

        New pattern ids are a contiguous suffix, so only words from the
        version boundary onward are touched; masks are recomputed as the
        AND of the head items' words restricted to the new bits, which
        keeps mask correctness independent of any assumption about what
        the subtree stored.  A surviving boundary word merges into the
        last entry when present (existing word ids never exceed it).
        """
        store = self.store
        v0 = state.version
        v1 = store.n_patterns
        if v0 == v1:
            return
        W = store.width
        wc = store.word_count()
        if wc > len(state.word_ids):
            self.pool.ensure_capacity(state, wc)
        item_words = store._item_words
        head = state.head
        wi = state.word_ids
        ms = state.masks
        ands = 0
        for w in range(v0 // W, (v1 - 1) // W + 1):
            lo = v0 - w * W
            if lo < 0:
                lo = 0
            hi = v1 - w * W
            if hi > W:
                hi = W
            m = (1 << hi) - (1 << lo)
            for h in head:
                m &= item_words[h][w]
                ands += 1
                if not m:
                    break
            if m:
                k = state.n
                if k and wi[k - 1] == w:
                    ms[k - 1] |= m
                else:
                    wi[k] = w
                    ms[k] = m
                    state.n = k + 1
        self.n_word_ands += ands
        state.version = v1
        if state.n > self.peak_entries:
            self.peak_entries = state.n

    def release(self, state: LindState) -> None:
        self.pool.release(state)

    def on_new_pattern(self, pid: int) -> None:
        """No-op: ancestor indexes catch up in increment()."""

    def entries(self, state: LindState) -> list:
        """Live (word_id, mask) pairs, for tests and debugging."""
        return [
            (state.word_ids[j], state.masks[j]) for j in range(state.n)
        ]
