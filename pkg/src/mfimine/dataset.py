"""FIMI flat-file parsing and the vertical (per-item bitmap) database.

The input format is one transaction per line, whitespace-separated
non-negative integer item ids.  The vertical build drops infrequent items
and re-indexes the survivors by increasing support, which is also the
root-level search order of the miner.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil

from .bitvec import BitVec


class FimiParseError(ValueError):
    """Raised for non-integer tokens; carries the 1-based line number."""

    def __init__(self, lineno: int, token: str):
        super().__init__(f"line {lineno}: invalid item token {token!r}")
        self.lineno = lineno


class TransactionDb:
    """Horizontal transaction list in external item ids.

    Each transaction is stored sorted ascending with duplicates removed.
    ``items`` is the sorted tuple of distinct external ids seen.
    """

    __slots__ = ("transactions", "items", "n_items")

    def __init__(self, transactions):
        txs = []
        seen = set()
        for t in transactions:
            tt = tuple(sorted(set(t)))
            txs.append(tt)
            seen.update(tt)
        self.transactions = tuple(txs)
        self.items = tuple(sorted(seen))
        self.n_items = len(self.items)

    @property
    def n_transactions(self) -> int:
        return len(self.transactions)

    def __repr__(self) -> str:
        return (
            f"TransactionDb(n_transactions={self.n_transactions}, "
            f"n_items={self.n_items})"
        )


def parse_fimi(source) -> TransactionDb:
    """Parse FIMI text into a TransactionDb.

    Parameters
    ----------
    source : str or iterable of str
        The file content as a single string, or an iterable of lines
        (an open file object works).  Blank lines are skipped; \\r\\n
        line endings are tolerated.

    Raises
    ------
    FimiParseError
        On a non-integer or negative token, with the line number.
    """
    if isinstance(source, str):
        lines = source.splitlines()
    else:
        lines = source
    transactions = []
    for lineno, line in enumerate(lines, start=1):
        tokens = line.split()
        if not tokens:
            continue
        row = []
        for tok in tokens:
            try:
                item = int(tok, 10)
            except ValueError:
                raise FimiParseError(lineno, tok) from None
            if item < 0:
                raise FimiParseError(lineno, tok)
            row.append(item)
        transactions.append(row)
    return TransactionDb(transactions)


class VerticalDb:
    """Per-item bit vectors over transactions, pruned at minsup.

    Internal item ids are assigned by increasing support, ties broken by
    ascending external id.  ``columns[i]`` has bit j set iff transaction j
    contains the item; ``ext_of_int[i]`` maps back to the external id.
    """

    __slots__ = (
        "columns",
        "item_support",
        "ext_of_int",
        "minsup",
        "n_transactions",
        "n_items",
        "width",
    )

    def __init__(self, columns, item_support, ext_of_int, minsup,
                 n_transactions, width):
        self.columns = columns
        self.item_support = item_support
        self.ext_of_int = ext_of_int
        self.minsup = minsup
        self.n_transactions = n_transactions
        self.n_items = len(columns)
        self.width = width

    def raw_columns(self) -> list:
        """Column bit vectors as plain ints, for the mining hot path."""
        return [c.value for c in self.columns]

    def __repr__(self) -> str:
        return (
            f"VerticalDb(n_items={self.n_items}, "
            f"n_transactions={self.n_transactions}, minsup={self.minsup})"
        )


def build_vertical(db: TransactionDb, minsup: int, width: int = 64) -> VerticalDb:
    """Build the pruned, support-ordered vertical database.

    Items with support < minsup are dropped.  minsup is an absolute count
    and must be >= 1 (0 would make every itemset frequent).
    """
    if minsup < 1:
        raise ValueError("minsup must be >= 1")
    support = {}
    for t in db.transactions:
        for e in t:
            support[e] = support.get(e, 0) + 1
    kept = sorted(
        (e for e, s in support.items() if s >= minsup),
        key=lambda e: (support[e], e),
    )
    int_of = {e: i for i, e in enumerate(kept)}
    n = db.n_transactions
    columns = [BitVec(n, width) for _ in kept]
    for j, t in enumerate(db.transactions):
        bit = 1 << j
        for e in t:
            i = int_of.get(e)
            if i is not None:
                columns[i]._v |= bit
    return VerticalDb(
        columns=columns,
        item_support=[support[e] for e in kept],
        ext_of_int=tuple(kept),
        minsup=minsup,
        n_transactions=n,
        width=width,
    )


def resolve_minsup(value, n_transactions: int) -> int:
    """Turn an absolute (int) or relative (float) threshold into a count.

    A relative fraction r in (0, 1] maps to ceil(r * n_transactions).
    The fraction is taken at its decimal face value (0.3 of 10 rows is 3,
    not 4), so the arithmetic goes through Fraction rather than binary
    floats.
    """
    if isinstance(value, bool):
        raise ValueError(f"minsup must be int or float, got {value!r}")
    if isinstance(value, int):
        if value < 1:
            raise ValueError("absolute minsup must be >= 1")
        return value
    if isinstance(value, float):
        if not 0.0 < value <= 1.0:
            raise ValueError("relative minsup must be in (0, 1]")
        count = ceil(Fraction(str(value)) * n_transactions)
        return max(1, count)
    raise ValueError(f"minsup must be int or float, got {type(value).__name__}")
