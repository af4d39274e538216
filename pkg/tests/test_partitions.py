import pytest

from qgrass.partitions import (
    EMPTY,
    Partition,
    dual_partition,
    format_partition,
    parse_partition,
    partitions_in_rectangle,
    partitions_with_rows,
    remove_n_rim,
)


def test_normalization_and_validation():
    assert Partition((3, 1, 0, 0)).parts == (3, 1)
    assert Partition(()).parts == ()
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_rim_walk_examples():
    out = remove_n_rim(Partition((3, 1)), 4, 1)
    assert out.kind == "hook" and out.remainder == EMPTY and out.height == 2

    out = remove_n_rim(Partition((3, 1)), 3, 1)
    assert out.kind == "illegal-rim"

    out = remove_n_rim(Partition((4,)), 5, 1)
    assert out.kind == "no-rim"

    # start from the second row
    out = remove_n_rim(Partition((3, 2)), 2, 2)
    assert out.kind == "hook" and out.remainder == Partition((3,)) and out.height == 1


def test_rim_walk_rejects_bad_start_row():
    with pytest.raises(ValueError):
        remove_n_rim(Partition((2, 1)), 2, 3)
    with pytest.raises(ValueError):
        remove_n_rim(Partition((2, 1)), 2, 0)


def test_rim_hook_size_and_containment_property():
    for rho in partitions_with_rows(9, 3) + partitions_with_rows(7, 4):
        for n in (2, 3, 4, 5):
            for row in range(1, len(rho) + 1):
                out = remove_n_rim(rho, n, row)
                if out.kind != "hook":
                    continue
                assert out.remainder.size + n == rho.size
                assert rho.contains(out.remainder)
                assert 1 <= out.height <= len(rho)


def test_dual_examples():
    assert dual_partition(EMPTY, 2, 4) == Partition((2, 2))
    assert dual_partition(Partition((2, 1)), 2, 4) == Partition((1,))
    assert dual_partition(Partition((1,)), 1, 5) == Partition((3,))
    with pytest.raises(ValueError):
        dual_partition(Partition((3,)), 2, 4)


def test_dual_is_involution_with_complementary_size():
    for r, n in [(2, 4), (2, 5), (3, 6)]:
        for mu in partitions_in_rectangle(r, n - r):
            dd = dual_partition(mu, r, n)
            assert dual_partition(dd, r, n) == mu
            assert mu.size + dd.size == r * (n - r)


def test_rectangle_enumeration_counts():
    # C(n, r) Schubert classes on G(r, n)
    assert len(partitions_in_rectangle(2, 2)) == 6
    assert len(partitions_in_rectangle(2, 3)) == 10
    assert len(partitions_in_rectangle(3, 3)) == 20


def test_parse_and_format():
    assert parse_partition("2,1") == Partition((2, 1))
    assert parse_partition("0") == EMPTY
    assert parse_partition("") == EMPTY
    assert format_partition(Partition((2, 1))) == "2,1"
    with pytest.raises(ValueError):
        parse_partition("2,x")
    with pytest.raises(ValueError):
        parse_partition("1,2")
