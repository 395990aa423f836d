import pytest

from rppcrystal.errors import NotContained, NotWeaklyDecreasing
from rppcrystal.shapes import (
    Partition, conjugate, make_partition, parse_shape, partitions_of, skew, skew_corpus,
    subpartitions,
)


def test_make_partition():
    assert make_partition((3, 2, 2)) == (3, 2, 2)
    assert make_partition(()) == ()
    assert make_partition((2, 1, 0, 0)) == (2, 1)
    with pytest.raises(NotWeaklyDecreasing):
        make_partition((2, 3))


def test_partition_size_and_length():
    p = Partition((3, 2, 2))
    assert p.size == 7
    assert p.length == 3
    assert p.part(4) == 0


@pytest.mark.parametrize("p, expected", [((3, 1), (2, 1, 1)), ((), ()), ((2, 2), (2, 2))])
def test_conjugate(p, expected):
    assert conjugate(p) == expected


def test_conjugate_involution_exhaustive():
    for n in range(13):
        for p in partitions_of(n):
            assert conjugate(conjugate(p)) == p


def test_partition_counts():
    assert [sum(1 for _ in partitions_of(n)) for n in range(8)] == [1, 1, 2, 3, 5, 7, 11, 15]


def test_skew_cells():
    assert set(skew((2, 1), (1,)).cells) == {(1, 2), (2, 1)}
    assert len(skew((4, 4, 4, 4, 3, 3, 2), (2, 1)).cells) == 21
    assert skew((2, 1), (2, 1)).cells == ()
    with pytest.raises(NotContained):
        skew((1,), (2,))
    with pytest.raises(NotContained):
        skew((1,), (1, 1))


def test_parse_shape():
    sh = parse_shape("4,4,4,4,3,3,2/2,1")
    assert sh.outer == (4, 4, 4, 4, 3, 3, 2) and sh.inner == (2, 1)
    assert parse_shape("3,1").inner == ()
    assert parse_shape("0").size == 0
    with pytest.raises(NotContained):
        parse_shape("2/3")


def test_subpartitions_of_square():
    assert sorted(subpartitions((2, 2))) == sorted(
        [(), (1,), (2,), (1, 1), (2, 1), (2, 2)]
    )


def test_column_geometry_over_corpus():
    for sh in skew_corpus(7):
        assert len(sh.cells) == sh.outer.size - sh.inner.size
        spans = {}
        for c in range(1, sh.n_cols + 1):
            rows = sorted(r for r, cc in sh.cells if cc == c)
            assert list(sh.column_range(c)) == rows
            if rows:
                assert rows == list(range(rows[0], rows[-1] + 1))
                spans[c] = (rows[0], rows[-1])
        for c in spans:
            if c + 1 in spans:
                assert spans[c + 1][0] <= spans[c][0]
                assert spans[c + 1][1] <= spans[c][1]
