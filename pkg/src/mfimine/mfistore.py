"""Global store of mined maximal patterns.

Patterns live twice: as an append-ordered list of itemsets (internal ids)
and as per-item vertical bitmaps with one bit per stored pattern.  Word w
of an item's bitmap covers pattern ids [w*W, (w+1)*W); ids are never
reused, so word positions handed out to the index layer stay stable as
the store grows.
"""

from __future__ import annotations

from .bitvec import BitVec


class MfiStore:

    def __init__(self, n_items: int, width: int = 64):
        if n_items < 0:
            raise ValueError("n_items must be >= 0")
        if width <= 0:
            raise ValueError("width must be positive")
        self.n_items = n_items
        self.width = width
        self.n_patterns = 0
        self.patterns = []
        self.supports = []
        # per-item word lists; all items grow in lockstep, one word at a
        # time, whenever a pattern id crosses a word boundary
        self._item_words = [[] for _ in range(n_items)]
        # per-pattern item mask, for the pattern-granular engines and the
        # naive scan
        self._pattern_masks = []

    def __len__(self) -> int:
        return self.n_patterns

    def append_pattern(self, itemset, support: int = 0) -> int:
        """Append a pattern, growing every item's bitmap; returns its id.

        The caller is responsible for having checked non-subsumption
        first; nothing is validated here beyond non-emptiness.
        """
        items = tuple(sorted(set(itemset)))
        if not items:
            raise ValueError("cannot store an empty pattern")
        if items[0] < 0 or items[-1] >= self.n_items:
            raise ValueError(f"item id out of range in {items!r}")
        pid = self.n_patterns
        w, bitpos = divmod(pid, self.width)
        if bitpos == 0:
            for wl in self._item_words:
                wl.append(0)
        bit = 1 << bitpos
        mask = 0
        for i in items:
            self._item_words[i][w] |= bit
            mask |= 1 << i
        self.patterns.append(items)
        self.supports.append(support)
        self._pattern_masks.append(mask)
        self.n_patterns = pid + 1
        return pid

    def pattern(self, pid: int) -> tuple:
        return self.patterns[pid]

    def support(self, pid: int) -> int:
        return self.supports[pid]

    def word_count(self) -> int:
        return (self.n_patterns + self.width - 1) // self.width

    def item_word(self, i: int, w: int) -> int:
        """Word w of item i's pattern bitmap."""
        return self._item_words[i][w]

    def item_bits(self, i: int) -> BitVec:
        """Item i's pattern bitmap assembled as a BitVec (debug/tests)."""
        v = BitVec(self.n_patterns, self.width)
        acc = 0
        for w, word in enumerate(self._item_words[i]):
            acc |= word << (w * self.width)
        v._v = acc
        return v

    def valid_mask(self, w: int) -> int:
        """Mask of live pattern bits in word w (the last word is partial)."""
        k = self.n_patterns - w * self.width
        if k <= 0:
            return 0
        if k >= self.width:
            return (1 << self.width) - 1
        return (1 << k) - 1

    def scan_subsumed(self, itemset) -> tuple:
        """Linear superset scan; returns (hit, patterns tested).

        Scans newest-first: during mining the most recently stored
        patterns are the likeliest supersets of the current candidate.
        """
        q = 0
        for i in itemset:
            q |= 1 << i
        masks = self._pattern_masks
        tested = 0
        for k in range(len(masks) - 1, -1, -1):
            tested += 1
            if q & ~masks[k] == 0:
                return True, tested
        return False, tested

    def naive_subsumed(self, itemset) -> bool:
        """True iff some stored pattern is a superset of itemset."""
        return self.scan_subsumed(itemset)[0]

    def check_consistency(self) -> None:
        """Verify list/bitmap agreement and pairwise non-subsumption.

        Debug/verify-mode helper, quadratic in the store size.
        """
        for pid, items in enumerate(self.patterns):
            w, bitpos = divmod(pid, self.width)
            members = frozenset(items)
            for i in range(self.n_items):
                has_bit = (self._item_words[i][w] >> bitpos) & 1 == 1
                if has_bit != (i in members):
                    raise AssertionError(
                        f"bitmap/list mismatch at pattern {pid}, item {i}"
                    )
        masks = self._pattern_masks
        for a in range(self.n_patterns):
            for b in range(self.n_patterns):
                if a != b and masks[a] & ~masks[b] == 0:
                    raise AssertionError(
                        f"pattern {a} is subsumed by pattern {b}"
                    )
