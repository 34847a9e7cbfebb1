import pytest

import hookdet


def test_block_matrix_and_det():
    mat = hookdet.block_matrix("A", 3, 2)
    assert mat["order"] == 6
    assert hookdet.det(mat) == hookdet.block_formula("A", 3, 2)


def test_hook_formula():
    assert hookdet.hook_formula("C", 1) == "x[1,1,1]"


def test_hook_matrix_entries():
    mat = hookdet.hook_matrix("A", 2)
    assert mat["entries"] == [["x[1,1,2]", "x[1,1,2]"], ["x[1,1,2]", "x[1,1,1]"]]


def test_verify_family():
    report = hookdet.verify_family("G", 2, 2, evals=5)
    assert report["symbolic_ok"]
    assert report["derivation_ok"]
    assert report["eval_checks"] == 5


def test_lgv_report():
    report = hookdet.lgv_report(3, 2)
    assert report["systems"] == 36
    assert report["all_length_one"]
    assert report["signed_sum_equals_det"]


def test_gamma_dot():
    assert hookdet.gamma_dot(1, 1).startswith("digraph")


def test_suite():
    result = hookdet.run_suite("hooks")
    assert all(suite["ok"] for suite in result["suites"])


def test_errors_surface():
    with pytest.raises(hookdet.HookdetError):
        hookdet.hook_matrix("Q", 2)
    with pytest.raises(hookdet.HookdetError):
        hookdet.verify_family("A", 5, 3)
