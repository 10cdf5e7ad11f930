from fractions import Fraction

import pytest

from bwfamily.polynomial import cyclotomic, euler_phi, substitute_power
from bwfamily.scanner import (
    ScanSpec,
    ScanSpecError,
    admissible_d,
    inequality_filter,
    reduce_theorem2_parameters,
    run_scan,
    scan_theorem1,
    scan_theorem2,
    theorem1_i_degrees,
)


def test_inequality_filter():
    assert inequality_filter(7, 2, 14) is False  # 11 < phi(14) = 6 fails
    assert inequality_filter(7, 11, 77) is True  # 56 < phi(77) = 60
    with pytest.raises(ValueError):
        inequality_filter(7, 2, 15)


def test_inequality_filter_values():
    # (p - 2) Q + 1 < phi(k)
    for p, Q, k in [(7, 11, 77), (7, 13, 91), (11, 13, 143), (7, 3, 21)]:
        assert inequality_filter(p, Q, k) == ((p - 2) * Q + 1 < euler_phi(k))


@pytest.mark.parametrize("d,k,expected", [(4, 5, (2, 2)), (3, 6, (1, 3)), (9, 3, (1, 9)), (5, 3, (5, 1)), (12, 5, (6, 2))])
def test_reduce_theorem2_parameters(d, k, expected):
    dr, e = reduce_theorem2_parameters(d, k)
    assert (dr, e) == expected
    assert cyclotomic(d * k) == substitute_power(cyclotomic(dr * k), e)


def test_admissible_d_and_degrees():
    assert admissible_d(6, 60) == [1, 5, 7]
    assert theorem1_i_degrees(11) == [1, 2, 3, 4, 6, 7, 11, 14, 22]


def test_spec_validation():
    with pytest.raises(ScanSpecError):
        run_scan(ScanSpec("theorem1_i", k_set=(5,)))
    with pytest.raises(ScanSpecError):
        run_scan(ScanSpec("theorem1_ii", p_set=(5,)))
    with pytest.raises(ScanSpecError):
        run_scan(ScanSpec("theorem2", k_set=(3,), d_set=(4,)))
    with pytest.raises(ScanSpecError):
        run_scan(ScanSpec("bogus"))
    with pytest.raises(ScanSpecError):
        run_scan(ScanSpec("theorem1_i", k_set=(7,), D_policy=4))
    with pytest.raises(ScanSpecError):
        scan_theorem2(ScanSpec("theorem1_i", k_set=(7,)))
    with pytest.raises(ScanSpecError):
        scan_theorem1(ScanSpec("theorem2", k_set=(3,)))


def test_theorem1_small_k():
    report = scan_theorem1(ScanSpec("theorem1_i", k_set=(1, 2, 7, 14)))
    per_k = report.per_k()
    assert per_k[1]["examined"] == 0 and "rho >= 2" in per_k[1]["note"]
    assert per_k[7]["min_rho"] == Fraction(4, 3)
    assert per_k[14]["min_rho"] == Fraction(4, 3)
    assert report.confirmed


def test_rows_are_reduced_and_rho_consistent():
    report = scan_theorem2(ScanSpec("theorem2", k_set=(4, 9), dk_max=40))
    assert report.rows
    for row in report.rows:
        phi = euler_phi(row.l)
        assert row.deg_t < phi and row.deg_y < phi
        assert row.rho == Fraction(2 * max(row.deg_t, row.deg_y), phi)


def test_rho_one_pairs_at_d1_are_excluded_by_condition_ii():
    report = scan_theorem2(ScanSpec("theorem2", k_set=(3, 4, 6), d_set=(1,)))
    assert report.violations == []
    excluded = {(e["k"], e["d"]) for e in report.rho_one_excluded}
    assert excluded == {(3, 1), (4, 1), (6, 1)}
    assert all(any("reducible" in r for r in e["reasons"]) for e in report.rho_one_excluded)


def test_threads_do_not_change_results():
    spec = ScanSpec("theorem1_i", k_set=(7, 11, 19))
    a = run_scan(spec, threads=1)
    b = run_scan(spec, threads=2)
    assert a.to_json() == b.to_json()
    assert a.to_tsv() == b.to_tsv()


def test_tsv_columns():
    report = run_scan(ScanSpec("theorem1_i", k_set=(7,)))
    lines = report.to_tsv().splitlines()
    assert lines[0] == "k\td\tD\tg\tdeg_t\tdeg_y\trho"
    assert len(lines) == 1 + report.candidates_examined
    assert lines[1].startswith("7\t1\t7\t1\t")


def test_fixed_D_policy():
    report = run_scan(ScanSpec("theorem1_i", k_set=(7, 11), D_policy=7))
    assert {row.k for row in report.rows} == {7}
