from fractions import Fraction

import chordcount as cc

CATALAN = [1, 1, 2, 5, 14, 42, 132]


def row_count(rows, **match):
    total = 0
    for row in rows:
        if all(row[k] == v for k, v in match.items()):
            total += row["count"]
    return total


def test_square_gluings():
    rows = cc.evolve_table("point", "orientable", max_k=2, one_backbone=4)
    assert row_count(rows, k=2, g_or_h=0) == 2
    assert row_count(rows, k=2, g_or_h=1) == 1


def test_oracle_matches_evolution_on_the_square():
    oracle = cc.oracle_table([4], 2)
    assert sum(r["count"] for r in oracle) == 3


def test_one_backbone_recursion_value():
    assert cc.one_backbone_count(1, 2, [(0, 1)]) == 1


def test_validate_type():
    assert cc.validate_type("orientable", 0, 1, 0, [(2, 1)], [(0, 2)],
                            [(1, 1), (2, 1)])
    assert not cc.validate_type("orientable", 0, 1, 0, [(2, 1)], [(0, 2)],
                                [(1, 2)])


def test_genus0_length_gf_catalan():
    coeffs = cc.genus0_length_gf([1] * 8, 7)
    assert coeffs == [Fraction(c) for c in CATALAN]


def test_free_add_keeps_the_semicircle():
    semi = cc.semicircle_moments(8)
    assert cc.free_add(semi, [1], 8) == semi


def test_exact_moment_symbols():
    poly = cc.exact_moment(2, "orientable")
    assert "N^2" in poly and "p*s^2" in poly


def test_trace_sampler_close_to_exact():
    mean, stderr = cc.sample_trace_powers("hermitian", 3, 0, 0.0, 2,
                                          samples=20000, seed=3)
    assert abs(mean - 9.0) <= 4 * stderr


def test_golden_suite_passes():
    results = cc.run_checks("golden")
    assert results and all(r["pass"] for r in results)
