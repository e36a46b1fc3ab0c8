from __future__ import annotations

import pytest

from critickit import (
    SearchLimits,
    build_graph,
    check_excess_lemma,
    check_full_extension_lemma,
    check_induction_lemma,
    check_join_preserves,
    check_pair_reduction,
    clique,
    cycle,
    generate_ekab,
    join,
)
from critickit.lemmas import partial_injections


def test_partial_injection_counts():
    assert len(partial_injections(2, 2)) == 7
    assert len(partial_injections(3, 2)) == 13
    assert len(partial_injections(3, 3)) == 34
    assert partial_injections(2, 2)[0] == ()


# ------------------------------------------------------------------- excess


def test_excess_c5_oversized_profile():
    report = check_excess_lemma(cycle(5), (3, 2, 2, 2, 2))
    assert report.outcome == "all_pass"
    assert report.mode == "exhaustive"
    assert report.checked == 13 * 7 * 7 * 7 * 13


def test_excess_c5_flat_profile():
    report = check_excess_lemma(cycle(5), (2, 2, 2, 2, 2))
    assert report.outcome == "all_pass"
    assert report.checked == 7**5


def test_excess_k3_flat_profile():
    report = check_excess_lemma(clique(3), (2, 2, 2))
    assert report.outcome == "all_pass"
    assert report.checked == 7**3


def test_excess_skips_non_robust_graph():
    report = check_excess_lemma(cycle(4), (1, 1, 1, 1))
    assert report.outcome == "skipped_precondition"


def test_excess_skips_undersized_profile():
    report = check_excess_lemma(cycle(5), (1, 2, 2, 2, 2))
    assert report.outcome == "skipped_precondition"


def test_excess_sampling_mode_is_deterministic():
    limits = SearchLimits(max_nodes=20_000)
    first = check_excess_lemma(cycle(5), (2, 2, 2, 2, 3), limits)
    second = check_excess_lemma(cycle(5), (2, 2, 2, 2, 3), limits)
    assert first.mode.startswith("sampled:")
    assert first == second


# ----------------------------------------------------------- full extension


def test_full_extension_c5():
    report = check_full_extension_lemma(cycle(5))
    assert report.outcome == "all_pass"
    assert report.checked >= 7**5


def test_full_extension_k3():
    report = check_full_extension_lemma(clique(3))
    assert report.outcome == "all_pass"
    assert report.checked >= 7**3


def test_full_extension_skips_non_critical():
    report = check_full_extension_lemma(cycle(4))
    assert report.outcome == "skipped_precondition"


# --------------------------------------------------------------------- pair


def test_pair_e422():
    # X1 vertex 0 and Y1 vertex 3 share only the apex; the reduced graph is
    # the 5-cycle in disguise
    report = check_pair_reduction(generate_ekab(4, 2, 2), 0, 3)
    assert report.outcome == "all_pass"
    assert report.checked == 6**5


def test_pair_c5_antipodal_skips():
    report = check_pair_reduction(cycle(5), 0, 2)
    assert report.outcome == "skipped_precondition"


def test_pair_adjacent_skips():
    report = check_pair_reduction(cycle(5), 0, 1)
    assert report.outcome == "skipped_precondition"
    assert "adjacent" in report.detail


def test_pair_two_common_neighbors_skips():
    report = check_pair_reduction(cycle(4), 0, 2)
    assert report.outcome == "skipped_precondition"
    assert "common neighbors" in report.detail


# ---------------------------------------------------------------- induction


def test_induction_wheel_apex():
    report = check_induction_lemma(join(cycle(5), clique(1)), [5])
    assert report.outcome == "all_pass"
    assert report.checked >= 6**5


def test_induction_c5_single_vertex_skips():
    report = check_induction_lemma(cycle(5), [0])
    assert report.outcome == "skipped_precondition"


def test_induction_dependent_set_skips():
    report = check_induction_lemma(cycle(5), [0, 1])
    assert report.outcome == "skipped_precondition"
    assert "independent" in report.detail


# --------------------------------------------------------------------- join


def test_join_c5_t1():
    report = check_join_preserves(cycle(5), 1)
    assert report.outcome == "all_pass"
    assert report.checked == 6**5


def test_join_k2_t1():
    report = check_join_preserves(clique(2), 1)
    assert report.outcome == "all_pass"


def test_join_c5_t2_truncates():
    report = check_join_preserves(cycle(5), 2)
    assert report.outcome == "truncated"


def test_join_skips_non_robust_base():
    report = check_join_preserves(cycle(4), 1)
    assert report.outcome == "skipped_precondition"


# ------------------------------------------------------------------ reports


def test_report_document_shape():
    report = check_full_extension_lemma(clique(3))
    doc = report.to_doc()
    assert doc["schema"] == "critickit/lemma-report/1"
    assert doc["outcome"] == "all_pass"
    assert doc["counterexample"] is None
    assert doc["lemma"] == "full-extension"


def test_reports_are_deterministic():
    a = check_full_extension_lemma(cycle(5))
    b = check_full_extension_lemma(cycle(5))
    assert a == b
