import random

import pytest

from mfimine import TransactionDb, maximal_at, oracle_mfi
from mfimine.oracle import ORACLE_ITEM_GUARD, OracleGuardError


def fs(*items):
    return frozenset(items)


class TestD1:
    def test_maximal_and_count(self, d1):
        res = oracle_mfi(d1, 2)
        assert res.maximal == {fs(1, 2, 3), fs(1, 3, 4), fs(2, 3, 4)}
        assert len(res.all_frequent) == 13

    def test_supports(self, d1):
        res = oracle_mfi(d1, 2)
        assert res.all_frequent[fs(1)] == 4
        assert res.all_frequent[fs(4)] == 3
        assert res.all_frequent[fs(1, 2, 3)] == 2

    def test_minsup_above_everything(self, d1):
        res = oracle_mfi(d1, d1.n_transactions + 1)
        assert res.all_frequent == {}
        assert res.maximal == set()

    def test_single_transaction(self):
        db = TransactionDb([[7]])
        res = oracle_mfi(db, 1)
        assert res.maximal == {fs(7)}


class TestGuards:
    def test_item_guard(self):
        db = TransactionDb([[i] for i in range(ORACLE_ITEM_GUARD + 1)])
        with pytest.raises(OracleGuardError):
            oracle_mfi(db, 1)

    def test_minsup_validation(self, d1):
        with pytest.raises(ValueError):
            oracle_mfi(d1, 0)


class TestProperties:
    def test_every_frequent_has_maximal_superset(self):
        rng = random.Random(77)
        for _ in range(20):
            rows = [
                [i for i in range(8) if rng.random() < 0.5]
                for _ in range(rng.randint(1, 20))
            ]
            db = TransactionDb(rows)
            sigma = rng.randint(1, max(1, db.n_transactions // 2))
            res = oracle_mfi(db, sigma)
            assert len(res.maximal) <= len(res.all_frequent)
            for x in res.all_frequent:
                assert any(x <= m for m in res.maximal)
            # no maximal itemset inside another
            for a in res.maximal:
                for b in res.maximal:
                    assert a == b or not a < b


class TestMaximalAt:
    def test_matches_direct_runs(self):
        rng = random.Random(909)
        for _ in range(15):
            rows = [
                [i for i in range(9) if rng.random() < 0.5]
                for _ in range(rng.randint(1, 25))
            ]
            db = TransactionDb(rows)
            base = oracle_mfi(db, 1)
            for sigma in range(1, db.n_transactions + 1):
                derived = maximal_at(base, sigma)
                direct = oracle_mfi(db, sigma).maximal
                assert derived == direct

    def test_cannot_lower_threshold(self, d1):
        base = oracle_mfi(d1, 2)
        with pytest.raises(ValueError):
            maximal_at(base, 1)
