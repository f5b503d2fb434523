import math

import pytest

import goldbach


@pytest.fixture(scope="module")
def table():
    return goldbach.build_sieve(100_000)


def test_count_gp(table):
    count, pairs = goldbach.count_gp(80, table, True)
    assert count == 4
    assert [tuple(p) for p in pairs] == [(7, 73), (13, 67), (19, 61), (37, 43)]


def test_table(table):
    assert table.count == 9592
    assert 99991 in table
    assert not table.is_prime(99999)


def test_estimates():
    assert goldbach.egp(80) == pytest.approx(80 / 21, rel=1e-12)
    assert goldbach.li(10) == pytest.approx(6.16559950478729794, rel=1e-12)
    assert goldbach.Li(2) == 0.0
    assert goldbach.alpha(1_000_000, 331) == pytest.approx(1.2713435190202278, rel=1e-9)


def test_scan(table):
    recs = goldbach.scan(4, 1000, table, workers=2)
    assert len(recs) == 499
    assert recs[38].two_n == 80 and recs[38].gp_count == 4
    assert all(r.gp_count >= 1 for r in recs)


def test_errors(table):
    with pytest.raises(ValueError):
        goldbach.count_gp(81, table)
    with pytest.raises(ValueError):
        goldbach.li(0.5)


def test_run_cli():
    code, out, err = goldbach.run_cli(["estimate", "--even", "80", "--method", "egp"])
    assert code == 0 and out == "3.809524\n"
    code, _, err = goldbach.run_cli(["count", "--even", "81"])
    assert code == 1 and err
    assert math.isfinite(goldbach.trpf(1e4, 31.0, 2))
