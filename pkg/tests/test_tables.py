import pytest

from rp2conf import tables


@pytest.mark.parametrize("name", list(tables.CHECKS))
def test_golden_table(name):
    check = tables.CHECKS[name]()
    assert check.rows
    assert check.ok, "\n".join(check.diffs)


def test_errata_are_reported():
    check = tables.line_conic_walls()
    assert [e.split(":")[0] for e in check.errata] == ["I137"]


def test_same_cycle():
    assert tables.same_cycle([1, 2, 3, 4], [3, 2, 1, 4])
    assert not tables.same_cycle([1, 2, 3, 4], [1, 3, 2, 4])
    assert tables.same_cycle([], [])
