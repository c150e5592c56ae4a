import numpy as np
import pytest

from hyperlap.errors import DomainError
from hyperlap.grids import MAX_POINTS, canonical_name, parse_grid, parse_scalar, parse_values


def test_scalar_real():
    assert parse_scalar("2.5") == 2.5
    assert isinstance(parse_scalar("3"), float)
    assert parse_scalar("-1e-3") == -1e-3


def test_scalar_complex():
    assert parse_scalar("1+0.5j") == 1 + 0.5j
    assert parse_scalar("1+0.5i") == 1 + 0.5j
    assert parse_scalar("2i") == 2j
    assert parse_scalar(" -0.5j ") == -0.5j


def test_scalar_bad():
    for bad in ("", "abc", "1..2", "1+j+i"):
        with pytest.raises(DomainError):
            parse_scalar(bad)


def test_values_range():
    vals = parse_values("2:6:5")
    np.testing.assert_allclose(vals, [2.0, 3.0, 4.0, 5.0, 6.0])
    assert all(isinstance(v, float) for v in vals)


def test_values_single_count():
    assert parse_values("3:7:1") == [3.0]


def test_values_list():
    assert parse_values("0.5,1,1.5") == [0.5, 1.0, 1.5]
    assert parse_values("1+2j,3") == [1 + 2j, 3.0]


def test_values_bad_range():
    with pytest.raises(DomainError):
        parse_values("1:2")
    with pytest.raises(DomainError):
        parse_values("1:2:0")
    with pytest.raises(DomainError):
        parse_values("1:2:x")
    with pytest.raises(DomainError):
        parse_values("1j:2:3")


def test_canonical_name_aliases():
    assert canonical_name("nu") == "ν"
    assert canonical_name("beta") == "β"
    assert canonical_name("NU", known=("ν",)) == "ν"
    # names already in the catalog spelling pass through
    assert canonical_name("ν", known=("ν",)) == "ν"
    # aliases only rewrite when the target is a known parameter
    assert canonical_name("nu", known=("s", "m")) == "nu"
    assert canonical_name("s") == "s"


def test_grid_cross_product_order():
    grid = parse_grid("s=1,2;m=3,4")
    assert grid == (
        {"s": 1.0, "m": 3.0},
        {"s": 1.0, "m": 4.0},
        {"s": 2.0, "m": 3.0},
        {"s": 2.0, "m": 4.0},
    )


def test_grid_aliases_and_ranges():
    grid = parse_grid("nu=0.5:1.5:3;s=4", param_names=("ν", "s"))
    assert len(grid) == 3
    assert set(grid[0]) == {"ν", "s"}
    np.testing.assert_allclose([g["ν"] for g in grid], [0.5, 1.0, 1.5])


def test_grid_duplicate_parameter():
    with pytest.raises(DomainError):
        parse_grid("s=1;s=2")
    # duplicates introduced by alias folding are caught too
    with pytest.raises(DomainError):
        parse_grid("nu=1;ν=2", param_names=("ν",))


def test_grid_point_cap():
    spec = ";".join(f"p{k}=1:2:101" for k in range(3))
    assert len(parse_grid("a=1:2:101;b=1:2:101")) == 101 * 101
    with pytest.raises(DomainError):
        parse_grid(spec)
    assert 101**3 > MAX_POINTS


def test_grid_bad_assignment():
    with pytest.raises(DomainError):
        parse_grid("s:1,2")
    with pytest.raises(DomainError):
        parse_grid("s=")


def test_grid_empty_chunks_skipped():
    grid = parse_grid("s=1; ;m=2;")
    assert grid == ({"s": 1.0, "m": 2.0},)
