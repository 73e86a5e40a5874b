import random
from itertools import product

import pytest

from monotri import (
    AdmissibleRow,
    BudgetExceededError,
    EnumerationLimits,
    Triangle,
    dmt_admissible_rows,
    enumerate_dmt,
    enumerate_gmt,
    enumerate_mt,
    gmt_admissible_rows,
    mt_admissible_rows,
    row_sign_changes,
    sc_statistic,
    signed_gmt_count,
    validate_dmt,
    validate_gmt,
    validate_monotone_triangle,
)
from oracles import gmt_ok, gmt_set_brute, mt_count_brute, sc_brute, signed_gmt_brute


def brute_admissible(k):
    """Window-box filter through the two-row fragment conditions, excluding
    rows with three consecutive equal entries."""
    m = len(k)
    windows = [range(min(k[j], k[j + 1]), max(k[j], k[j + 1]) + 1) for j in range(m - 1)]
    out = []
    for l in product(*windows):
        if any(l[j] == l[j + 1] == l[j + 2] for j in range(len(l) - 2)):
            continue
        if gmt_ok([l, tuple(k)]):
            out.append((l, sc_brute([l, tuple(k)])))
    return out


class TestGmtAdmissibleRows:
    def test_worked_example(self):
        assert gmt_admissible_rows((4, 2, 1, 3)) == [
            AdmissibleRow((2, 2, 1), 1),
            AdmissibleRow((2, 2, 3), 1),
            AdmissibleRow((3, 1, 1), 2),
        ]

    def test_increasing_pair(self):
        assert gmt_admissible_rows((1, 2)) == [AdmissibleRow((1,), 0), AdmissibleRow((2,), 0)]

    def test_descending_pair_forces_single_newcomer(self):
        assert gmt_admissible_rows((3, 1)) == [AdmissibleRow((2,), 1)]

    def test_too_short_rejected(self):
        with pytest.raises(ValueError):
            gmt_admissible_rows((5,))

    def test_matches_window_filter(self):
        rng = random.Random(42)
        rows = [tuple(rng.randint(-4, 4) for _ in range(n)) for n in (2, 3, 4, 5) for _ in range(30)]
        rows += [(4, 2, 1, 3), (2, 4, 0), (0, 3, 3, -1), (2, 0, 3, 0), (1, 1, 1, 1)]
        for k in rows:
            assert list(gmt_admissible_rows(k)) == brute_admissible(k), k

    def test_contribution_matches_fragment_statistic(self):
        rng = random.Random(7)
        for _ in range(50):
            n = rng.choice([2, 3, 4])
            k = tuple(rng.randint(-3, 3) for _ in range(n))
            for row, sc in gmt_admissible_rows(k):
                assert sc == sc_brute([row, k])
                assert sc == row_sign_changes(k, row)
                if n == 2:
                    assert sc == sc_statistic(Triangle([row, k])).sc

    def test_strictly_increasing_case_reduces_to_interlacing(self):
        for k in [(1, 2), (1, 3, 5), (0, 2, 3, 7)]:
            expected = [AdmissibleRow(r, 0) for r in mt_admissible_rows(k)]
            assert gmt_admissible_rows(k) == expected


class TestMtAdmissibleRows:
    def test_small_windows(self):
        assert mt_admissible_rows((1, 3)) == [(1,), (2,), (3,)]
        assert mt_admissible_rows((1, 2)) == [(1,), (2,)]

    def test_interlacing_with_strictness(self):
        assert mt_admissible_rows((2, 4, 5)) == [(2, 4), (2, 5), (3, 4), (3, 5), (4, 5)]

    def test_non_increasing_rejected(self):
        with pytest.raises(ValueError):
            mt_admissible_rows((2, 2))


class TestDmtAdmissibleRows:
    def test_non_decreasing_rejected(self):
        with pytest.raises(ValueError):
            dmt_admissible_rows((1, 2))

    def test_doubled_bottom(self):
        assert dmt_admissible_rows((1, 1)) == [(1,)]
        assert dmt_admissible_rows((2, 1)) == []


class TestEnumeration:
    def test_four_triangles_in_order_with_signs(self):
        triangles = list(enumerate_gmt((4, 2, 1, 3)))
        assert [t.rows for t in triangles] == [
            ((2,), (2, 2), (2, 2, 1), (4, 2, 1, 3)),
            ((2,), (2, 3), (2, 2, 3), (4, 2, 1, 3)),
            ((3,), (2, 3), (2, 2, 3), (4, 2, 1, 3)),
            ((1,), (1, 1), (3, 1, 1), (4, 2, 1, 3)),
        ]
        assert [sc_statistic(t).sign for t in triangles] == [1, -1, -1, -1]

    def test_single_entry_bottom(self):
        assert len(list(enumerate_gmt((5,)))) == 1

    def test_gmt_outputs_are_valid(self):
        for t in enumerate_gmt((3, 0, 2)):
            assert validate_gmt(t)

    def test_gmt_matches_box_enumeration(self):
        for bottom in [(4, 2, 1, 3), (2, 4, 0), (1, 1, 2), (2, 2)]:
            expected = sorted(tuple(r) for r in gmt_set_brute(bottom))
            got = sorted(t.rows for t in enumerate_gmt(bottom))
            assert got == [tuple(map(tuple, rows)) for rows in expected]

    def test_mt_count_seven(self):
        triangles = list(enumerate_mt((1, 2, 3)))
        assert len(triangles) == 7 == mt_count_brute((1, 2, 3))
        for t in triangles:
            assert validate_monotone_triangle(t)

    def test_mt_is_gmt_for_increasing_bottom(self):
        assert [t.rows for t in enumerate_mt((1, 2, 3))] == [t.rows for t in enumerate_gmt((1, 2, 3))]

    def test_mt_large_golden_count(self):
        assert sum(1 for _ in enumerate_mt((2, 4, 5, 8, 9))) == 16939

    def test_mt_requires_increasing(self):
        with pytest.raises(ValueError):
            list(enumerate_mt((2, 1)))

    def test_dmt_examples(self):
        assert len(list(enumerate_dmt((1, 1)))) == 1
        assert list(enumerate_dmt((2, 1))) == list(enumerate_gmt((2, 1))) == []
        for t in enumerate_dmt((2, 2, 1)):
            assert validate_dmt(t)

    def test_dmt_set_equals_gmt_set(self):
        for bottom in [(2, 1), (3, 2, 1), (2, 2, 1), (1, 1, 1), (3, 1, 1, 0)]:
            dmt = sorted(t.rows for t in enumerate_dmt(bottom))
            gmt = sorted(t.rows for t in enumerate_gmt(bottom))
            assert dmt == gmt

    def test_dmt_signed_count_matches(self):
        triangles = list(enumerate_dmt((3, 2, 1)))
        assert sum(sc_statistic(t).sign for t in triangles) == signed_gmt_count((3, 2, 1)) == -1

    def test_dmt_requires_decreasing(self):
        with pytest.raises(ValueError):
            list(enumerate_dmt((1, 2)))

    def test_determinism(self):
        first = [t.rows for t in enumerate_gmt((3, 0, 2, 1))]
        second = [t.rows for t in enumerate_gmt((3, 0, 2, 1))]
        assert first == second


class TestBudgets:
    def test_triangle_budget(self):
        limits = EnumerationLimits(max_triangles=2)
        stream = enumerate_gmt((4, 2, 1, 3), limits)
        assert next(stream).n == 4
        assert next(stream).n == 4
        with pytest.raises(BudgetExceededError):
            next(stream)

    def test_row_budget(self):
        limits = EnumerationLimits(max_rows_generated=3)
        with pytest.raises(BudgetExceededError):
            list(enumerate_mt((2, 4, 5, 8, 9), limits))

    def test_budgets_must_be_positive(self):
        with pytest.raises(ValueError):
            EnumerationLimits(max_triangles=0)

    def test_normal_completion_is_not_an_error(self):
        limits = EnumerationLimits(max_triangles=4)
        assert len(list(enumerate_gmt((4, 2, 1, 3), limits))) == 4


class TestSignedCount:
    def test_golden_values(self):
        assert signed_gmt_count((4, 2, 1, 3)) == -2
        assert signed_gmt_count((2, 4, 5, 8, 9)) == 16939
        assert signed_gmt_count((3, 1)) == -1

    def test_matches_box_enumeration(self):
        rng = random.Random(3)
        for _ in range(25):
            n = rng.choice([2, 3])
            k = tuple(rng.randint(-2, 2) for _ in range(n))
            assert signed_gmt_count(k) == signed_gmt_brute(k), k

    def test_matches_sign_sum_of_stream(self):
        for bottom in [(4, 2, 1, 3), (2, 4, 0), (0, 0, 1)]:
            total = sum(sc_statistic(t).sign for t in enumerate_gmt(bottom))
            assert signed_gmt_count(bottom) == total


class TestStructuralProperties:
    def test_penultimate_rows_are_admissible(self):
        # every penultimate row of a complete triangle is admissible with the
        # same contribution; admissible rows missing from the stream have no
        # completion at all
        for bottom in [(4, 2, 1, 3), (2, 4, 0), (1, 3, 2)]:
            admissible = dict(gmt_admissible_rows(bottom))
            seen = set()
            for t in enumerate_gmt(bottom):
                pen = t.rows[-2]
                seen.add(pen)
                assert pen in admissible
                assert row_sign_changes(bottom, pen) == admissible[pen]
            for row in set(admissible) - seen:
                assert list(enumerate_gmt(row)) == []

    def test_sign_changes_accumulate_along_levels(self):
        for bottom in [(4, 2, 1, 3), (3, 0, 2, 1)]:
            for t in enumerate_gmt(bottom):
                per_level = sum(
                    row_sign_changes(t.rows[i + 1], t.rows[i]) for i in range(t.n - 1)
                )
                assert per_level == sc_statistic(t).sc
