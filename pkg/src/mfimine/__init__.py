"""Maximal frequent itemset mining with indexed superset checking."""

from .bitvec import BitVec, and_into
from .dataset import (
    FimiParseError,
    TransactionDb,
    VerticalDb,
    build_vertical,
    parse_fimi,
    resolve_minsup,
)
from .estimator import MaximalItemsetMiner
from .mfistore import MfiStore
from .miner import ENGINES, MinerConfig, RunStats, mine, mine_transactions
from .oracle import OracleGuardError, OracleResult, maximal_at, oracle_mfi

__version__ = "0.1.0"

__all__ = [
    "BitVec",
    "and_into",
    "FimiParseError",
    "TransactionDb",
    "VerticalDb",
    "build_vertical",
    "parse_fimi",
    "resolve_minsup",
    "MaximalItemsetMiner",
    "MfiStore",
    "ENGINES",
    "MinerConfig",
    "RunStats",
    "mine",
    "mine_transactions",
    "OracleGuardError",
    "OracleResult",
    "maximal_at",
    "oracle_mfi",
    "__version__",
]
