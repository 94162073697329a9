import pytest
from hypothesis import given
from hypothesis import strategies as st

from mfimine import (
    FimiParseError,
    TransactionDb,
    build_vertical,
    parse_fimi,
    resolve_minsup,
)


class TestParseFimi:
    def test_two_lines(self):
        db = parse_fimi("1 2 3\n2 3\n")
        assert db.n_transactions == 2
        assert db.n_items == 3
        assert db.transactions == ((1, 2, 3), (2, 3))

    def test_blank_lines_skipped(self):
        db = parse_fimi("1 2\n\n\n3\n")
        assert db.n_transactions == 2

    def test_duplicates_collapsed_and_sorted(self):
        db = parse_fimi("5 1 5 3\n")
        assert db.transactions == ((1, 3, 5),)

    def test_crlf(self):
        db = parse_fimi("1 2\r\n3\r\n")
        assert db.n_transactions == 2
        assert db.transactions[0] == (1, 2)

    def test_empty_input(self):
        db = parse_fimi("")
        assert db.n_transactions == 0
        assert db.n_items == 0

    def test_non_integer_token(self):
        with pytest.raises(FimiParseError) as err:
            parse_fimi("1 2\n3 x\n")
        assert "line 2" in str(err.value)

    def test_negative_token(self):
        with pytest.raises(FimiParseError):
            parse_fimi("1 -2\n")

    def test_file_object(self, tmp_path):
        p = tmp_path / "t.dat"
        p.write_text("7 9\n9\n")
        with open(p) as fh:
            db = parse_fimi(fh)
        assert db.n_transactions == 2
        assert db.items == (7, 9)


class TestBuildVertical:
    def test_d1_minsup_2(self, d1):
        vdb = build_vertical(d1, 2)
        assert vdb.n_items == 4
        by_ext = dict(zip(vdb.ext_of_int, vdb.item_support))
        assert by_ext == {1: 4, 2: 4, 3: 4, 4: 3}
        # ordered by increasing support, ties by external id
        assert vdb.ext_of_int == (4, 1, 2, 3)

    def test_d1_minsup_5_drops_everything(self, d1):
        vdb = build_vertical(d1, 5)
        assert vdb.n_items == 0

    def test_minsup_1_keeps_all(self, d1):
        vdb = build_vertical(d1, 1)
        assert vdb.n_items == d1.n_items

    def test_minsup_0_rejected(self, d1):
        with pytest.raises(ValueError):
            build_vertical(d1, 0)

    def test_column_popcount_is_support(self, d1):
        vdb = build_vertical(d1, 2)
        for col, sup in zip(vdb.columns, vdb.item_support):
            assert col.popcount() == sup


@given(
    st.lists(
        st.lists(st.integers(min_value=0, max_value=15), max_size=8),
        min_size=1,
        max_size=20,
    ),
    st.integers(min_value=1, max_value=5),
)
def test_vertical_round_trip(rows, minsup):
    db = TransactionDb(rows)
    vdb = build_vertical(db, minsup)
    int_of = {e: i for i, e in enumerate(vdb.ext_of_int)}
    # bit j of columns[i] is set iff item i is in transaction j
    for j, t in enumerate(db.transactions):
        members = set(t)
        for e, i in int_of.items():
            assert vdb.columns[i].test(j) == (e in members)
    # support totals match retained transaction lengths
    total = sum(vdb.item_support)
    kept = set(int_of)
    assert total == sum(len(kept & set(t)) for t in db.transactions)
    # internal order is by increasing support
    assert vdb.item_support == sorted(vdb.item_support)


class TestResolveMinsup:
    def test_relative_half_of_8124(self):
        assert resolve_minsup(0.5, 8124) == 4062

    def test_relative_tiny(self):
        assert resolve_minsup(0.001, 100) == 1

    def test_absolute_identity(self):
        assert resolve_minsup(7, 1000) == 7

    def test_decimal_face_value(self):
        # 0.3 of 10 is 3 even though float 0.3 is slightly above 3/10
        assert resolve_minsup(0.3, 10) == 3

    def test_full_fraction(self):
        assert resolve_minsup(1.0, 3196) == 3196

    def test_ceil_rounds_up(self):
        assert resolve_minsup(0.3, 8124) == 2438

    def test_bad_values(self):
        for bad in (0, -3, 0.0, -0.5, 1.5, True, "0.5", None):
            with pytest.raises(ValueError):
                resolve_minsup(bad, 100)
