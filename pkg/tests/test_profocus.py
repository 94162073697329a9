import random

from mfimine import MfiStore, MinerConfig, TransactionDb, build_vertical, mine
from mfimine.profocus import PfChecker

from instrumentation import CrossCheckedPf

ABC = (0, 1, 2)
ACD = (0, 2, 3)
BCD = (1, 2, 3)


def d1_checker():
    store = MfiStore(5)
    for pat in (ABC, ACD, BCD):
        store.append_pattern(pat, support=2)
    return PfChecker(store), store


class TestChild:
    def test_project_item_a(self):
        checker, _ = d1_checker()
        root = checker.root()
        assert root.ids == [0, 1, 2]
        a = checker.propagate(root, 0, 1)
        assert a.ids == [0, 1]

    def test_project_chain(self):
        checker, _ = d1_checker()
        root = checker.root()
        a = checker.propagate(root, 0, 1)
        ab = checker.propagate(a, 1, 2)
        assert ab.ids == [0]

    def test_empty_parent(self):
        checker, _ = d1_checker()
        root = checker.root()
        e = checker.propagate(root, 4, 1)
        assert e.ids == []
        assert checker.propagate(e, 0, 2).ids == []

    def test_every_listed_pattern_contains_head(self):
        checker, store = d1_checker()
        root = checker.root()
        for item in range(4):
            child = checker.propagate(root, item, 1)
            for pid in child.ids:
                assert item in store.pattern(pid)

    def test_allocation_per_child(self):
        checker, _ = d1_checker()
        root = checker.root()
        before = checker.n_allocations
        checker.propagate(root, 0, 1)
        checker.propagate(root, 1, 1)
        assert checker.n_allocations == before + 2


class TestSubsumed:
    def test_single_extra(self):
        checker, _ = d1_checker()
        root = checker.root()
        a = checker.propagate(root, 0, 1)
        ab = checker.propagate(a, 1, 2)
        assert checker.subsumed(ab, (2,)) is True  # ABC

    def test_extra_pair_via_bcd(self):
        checker, _ = d1_checker()
        root = checker.root()
        c = checker.propagate(root, 2, 1)
        assert c.ids == [0, 1, 2]
        assert checker.subsumed(c, (1, 3)) is True  # BCD holds C,B,D

    def test_empty_list(self):
        checker, _ = d1_checker()
        root = checker.root()
        e = checker.propagate(root, 4, 1)
        assert checker.subsumed(e, ()) is False


class TestIncrement:
    def test_appends_new_ids(self):
        checker, store = d1_checker()
        root = checker.root()
        store.append_pattern((0, 1, 3))
        checker.increment(root)
        assert root.ids == [0, 1, 2, 3]

    def test_noop_when_current(self):
        checker, _ = d1_checker()
        root = checker.root()
        checker.increment(root)
        assert root.ids == [0, 1, 2]


def test_agreement_with_naive_on_random_run():
    rng = random.Random(4242)
    rows = [[i for i in range(10) if rng.random() < 0.45] for _ in range(35)]
    db = TransactionDb(rows)
    vdb = build_vertical(db, 3)
    holder = {}

    def factory(store):
        holder["c"] = CrossCheckedPf(store)
        return holder["c"]

    mine(vdb, MinerConfig(minsup=3, engine="profocus"), checker_factory=factory)
    assert holder["c"].n_compared > 0
