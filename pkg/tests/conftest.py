import os

import pytest

from mfimine import TransactionDb

# five transactions over items 1..4; minsup 2 gives maximal
# {123, 134, 234}, minsup 4 gives {1, 2, 3}
D1_TRANSACTIONS = [
    [1, 2, 3],
    [1, 2, 3, 4],
    [2, 3, 4],
    [1, 3, 4],
    [1, 2],
]

DATA_DIR = os.path.join(os.path.dirname(__file__), os.pardir, "data")


@pytest.fixture
def d1():
    return TransactionDb(D1_TRANSACTIONS)


@pytest.fixture(scope="session")
def data_dir():
    path = os.path.abspath(DATA_DIR)
    if not os.path.isdir(path):
        pytest.fail(f"benchmark data directory missing: {path}")
    return path


def mine_ext(db, sigma, **cfg_kwargs):
    """Mine and return the set of patterns in external ids."""
    from mfimine import MinerConfig, build_vertical, mine

    cfg = MinerConfig(minsup=sigma, **cfg_kwargs)
    vdb = build_vertical(db, sigma, width=cfg.word_width)
    store = mine(vdb, cfg)
    ext = vdb.ext_of_int
    return {tuple(sorted(ext[i] for i in pat)) for pat in store.patterns}
