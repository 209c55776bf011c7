import pytest

from conftest import sweep_and_fixtures
from gammasemi.constructors import fixture
from gammasemi.theoremcheck import INAPPLICABLE, PROBLEMS, PROVED, STATEMENTS, check, check_all


def test_union_of_groups_check_on_gz3():
    r = check(fixture("GZ3"), "T1.10")
    assert r.verdict == "holds"
    assert len(r.detail) == 4 and all(r.detail.values())
    assert r.line() == "T1.10\tholds\t-"


def test_two_zero_forms_check_on_b5():
    r = check(fixture("B5"), "T2.22")
    assert r.verdict == "holds" and all(r.detail.values())


def test_irregular_class_check_on_n2():
    assert check(fixture("N2"), "C2.23").verdict == "holds"


@pytest.mark.parametrize("fid", ["T1", "B5", "N2"])
def test_check_all_fixture(fid):
    reports = check_all(fixture(fid))
    assert [r.statement for r in reports] == list(STATEMENTS)
    assert not any(r.violated for r in reports)


def test_t1_everything_applicable_holds():
    assert all(r.verdict == "holds" for r in check_all(fixture("T1")))


def test_zero_statements_inapplicable_without_zero():
    assert check(fixture("LZ2"), "T2.22").verdict == INAPPLICABLE
    assert check(fixture("LZ2"), "T1.10").verdict == "holds"


def test_unknown_statement():
    with pytest.raises(KeyError):
        check(fixture("T1"), "T9.9")


def test_proved_statements_hold_on_sweep():
    bad = [(M.flat(), r.statement) for M in sweep_and_fixtures() for r in check_all(M) if r.statement in PROVED and r.violated]
    assert bad == []


def test_problem_counterexamples_name_witness():
    reports = [check(M, p) for M in sweep_and_fixtures() for p in PROBLEMS]
    for r in reports:
        if r.violated:
            assert r.witness and "=>" in r.witness.get("direction", "=>")


def test_report_json_shape():
    d = check(fixture("B5"), "T2.25").as_dict()
    assert set(d) == {"statement", "verdict", "witness", "detail"}
