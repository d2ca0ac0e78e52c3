from fractions import Fraction

import pytest

from mlz.matroids import (
    catalog,
    direct_sum,
    uniform,
    validate_bases,
)
from mlz.morphisms import validate_morphism
from mlz.verify import (
    mason_basis_check,
    mason_indep_check,
    morphism_suite,
    survey,
    theorem_suite,
)

TWO_CLASS = validate_bases(4, [[1, 3], [1, 4], [2, 3], [2, 4]])
SUM_M = direct_sum(uniform(2, 3), uniform(1, 1))


# -- basis-count inequality ---------------------------------------------------------


def test_mason_basis_two_class_equality():
    rep = mason_basis_check(TWO_CLASS, 1, 3)
    assert (rep.count_bases, rep.count_i, rep.count_j, rep.count_ij) == (4, 2, 2, 1)
    assert rep.lhs == 4 and rep.rhs == 4
    assert rep.equal and rep.predicted_equal and rep.consistent and rep.applicable


def test_mason_basis_uniform_strict():
    rep = mason_basis_check(uniform(2, 3), 1, 2)
    assert rep.lhs == 3 and rep.rhs == 4
    assert not rep.equal and not rep.predicted_equal and rep.consistent


def test_mason_basis_parallel_pair_strict():
    rep = mason_basis_check(TWO_CLASS, 1, 2)
    assert rep.count_ij == 0 and rep.lhs == 0
    assert rep.lhs < rep.rhs
    assert not rep.predicted_equal and rep.consistent


def test_mason_basis_loop_degenerate_row():
    m = direct_sum(uniform(0, 1), uniform(2, 3))
    rep = mason_basis_check(m, 1, 2)
    assert not rep.applicable
    assert rep.lhs == 0 and rep.rhs == 0


def test_mason_basis_weighted_two_class_keeps_equality():
    a = (Fraction(1, 2), 3, Fraction(5, 7), 2)
    rep = mason_basis_check(TWO_CLASS, 1, 3, a)
    assert rep.equal  # product structure keeps the weighted case tight


def test_mason_basis_rejects_bad_input():
    with pytest.raises(ValueError):
        mason_basis_check(uniform(2, 3), 1, 1)
    with pytest.raises(Exception):
        mason_basis_check(uniform(1, 2), 1, 2)
    with pytest.raises(ValueError):
        mason_basis_check(uniform(2, 3), 1, 2, (0, 1, 1))


# -- independent-count inequality ------------------------------------------------------


def test_mason_indep_uniform_equality():
    rep = mason_indep_check(uniform(3, 4), 2)
    assert rep.lhs == 1 and rep.rhs == 1
    assert rep.equal and rep.predicted_equal and rep.consistent


def test_mason_indep_direct_sum_strict():
    rep = mason_indep_check(SUM_M, 2)
    assert rep.lhs == Fraction(3, 4) and rep.rhs == 1
    assert not rep.equal and not rep.predicted_equal and rep.consistent


def test_mason_indep_top_level_strict():
    rep = mason_indep_check(SUM_M, 3)
    assert rep.lhs == 0 and rep.rhs == Fraction(9, 16)
    assert not rep.equal and rep.consistent


def test_mason_indep_free_matroid_all_equal():
    for k in (1, 2, 3):
        rep = mason_indep_check(uniform(3, 3), k)
        assert rep.equal and rep.predicted_equal and rep.consistent


def test_mason_indep_weighted_free_is_strict_but_unasserted():
    a = (Fraction(1, 2), 1, 2)
    rep = mason_indep_check(uniform(3, 3), 2, a)
    assert rep.lhs < rep.rhs  # Newton inequality is strict off the diagonal
    assert rep.predicted_equal  # girth is infinite; equality only at ones


def test_mason_indep_range_checked():
    with pytest.raises(ValueError):
        mason_indep_check(uniform(2, 3), 0)
    with pytest.raises(ValueError):
        mason_indep_check(uniform(2, 3), 3)


# -- suites ------------------------------------------------------------------------------


def test_theorem_suite_uniform_2_3():
    suite = theorem_suite(uniform(2, 3), seed=7)
    assert not suite.failures
    by_name = {r.name: r for r in suite.rows}
    assert by_name["gradient-rank-basis"].status == "pass"
    assert by_name["gradient-rank-reduced-uniform"].status == "pass"
    assert by_name["hessian-basis-signature"].status == "pass"
    assert by_name["hessian-reduced-signature"].status == "skip"


def test_theorem_suite_direct_sum():
    suite = theorem_suite(SUM_M, seed=7)
    assert not suite.failures
    by_name = {r.name: r for r in suite.rows}
    assert by_name["gradient-rank-reduced"].status == "pass"
    assert by_name["hessian-reduced-signature"].status == "pass"


def test_theorem_suite_with_loop_records_vanishing():
    m = direct_sum(uniform(0, 1), uniform(2, 3))
    suite = theorem_suite(m, seed=7)
    assert not suite.failures
    by_name = {r.name: r for r in suite.rows}
    assert by_name["loop-partials-vanish"].detail == "loops=1"
    assert by_name["gradient-rank-basis"].status == "skip"


def test_theorem_suite_deterministic():
    rows1 = theorem_suite(uniform(2, 4), seed=5).rows
    rows2 = theorem_suite(uniform(2, 4), seed=5).rows
    assert rows1 == rows2


def test_morphism_suite_final_example():
    phi = validate_morphism(uniform(3, 3), uniform(1, 1), [1, 1, 1])
    suite = morphism_suite(phi, seed=3)
    assert not suite.failures
    by_name = {r.name: r for r in suite.rows}
    assert "classes=-" in by_name["degeneracy-trichotomy"].detail
    assert "grad_rank=4" in by_name["degeneracy-trichotomy"].detail
    recorded = by_name["reduced-point-verdicts"].detail
    assert "@(0,1,1,1):slp1=False" in recorded


def test_morphism_suite_case_b():
    loop_coloop = direct_sum(uniform(0, 1), uniform(1, 1))
    phi = validate_morphism(uniform(2, 3), loop_coloop, [1, 2, 2])
    suite = morphism_suite(phi, seed=3)
    assert not suite.failures
    by_name = {r.name: r for r in suite.rows}
    assert "classes=B" in by_name["degeneracy-trichotomy"].detail
    assert by_name["annihilator-exact"].status == "pass"


def test_morphism_suite_identity_records_shape():
    m = uniform(2, 3)
    phi = validate_morphism(m, m, [1, 2, 3])
    suite = morphism_suite(phi, seed=3)
    assert not suite.failures
    by_name = {r.name: r for r in suite.rows}
    assert by_name["equal-rank-shape"].status == "pass"
    assert "classes=A" in by_name["degeneracy-trichotomy"].detail


def test_morphism_suite_non_simple_source_checks_sufficiency_only():
    src = direct_sum(uniform(1, 2), uniform(1, 1))  # elements 1,2 parallel
    target = direct_sum(uniform(0, 1), uniform(1, 1))
    phi = validate_morphism(src, target, [1, 1, 2])
    suite = morphism_suite(phi, seed=3)
    assert not suite.failures
    by_name = {r.name: r for r in suite.rows}
    assert "degeneracy-trichotomy" not in by_name
    assert by_name["degeneracy-sufficiency"].status == "pass"
    assert "classes=C" in by_name["degeneracy-sufficiency"].detail


# -- survey -------------------------------------------------------------------------------


@pytest.fixture(scope="module")
def survey2():
    return survey(2, seed=9)


def test_survey_no_counterexamples(survey2):
    assert survey2.ok
    assert survey2.matroid_count == 7  # 2 on one element, 5 on two


def test_survey_deterministic(survey2):
    again = survey(2, seed=9)
    assert "\n".join(survey2.to_jsonl_lines()) == "\n".join(again.to_jsonl_lines())


def test_survey_seed_changes_stream():
    a = survey(2, seed=1, morphisms=False)
    b = survey(2, seed=2, morphisms=False)
    assert a.ok and b.ok


def test_survey_formats(survey2):
    tsv = survey2.to_tsv()
    assert tsv.startswith("check\tpass\tfail\tskip\trecorded")
    assert "counterexamples\t0" in tsv
    text = survey2.to_text()
    assert "counterexamples: 0" in text
    lines = list(survey2.to_jsonl_lines())
    assert lines[0].startswith('{"counterexamples":0')


def test_survey_equality_catalogs_match_predicates():
    rep = survey(4, seed=1, morphisms=False)
    assert rep.ok
    # every recorded basis-count equality names a two-class matroid pair
    for entry in rep.equality_star:
        _, n, idx = entry["scope"].split(":")
        m = catalog(int(n))[int(idx)]
        i, j = entry["i"], entry["j"]
        assert len(m.parallel_decomposition.classes) == 2
        assert m.rank_of((1 << (i - 1)) | (1 << (j - 1))) == 2
    # every recorded indep-count equality happens strictly below the girth
    for entry in rep.equality_star2:
        _, n, idx = entry["scope"].split(":")
        m = catalog(int(n))[int(idx)]
        assert entry["k"] + 1 < m.girth


def test_survey_bounds():
    from mlz.matroids import MatroidError

    with pytest.raises(MatroidError):
        survey(7, seed=1)
