"""Acceptance battery: one test per criterion, each producing a single
pass/fail line.  A failing criterion here is a finding, not a test bug; the
line carries the witness."""

import conftest

from radhom.verification import (bundled_jobs_dir, criterion_1, criterion_2,
                                 criterion_3, criterion_4, criterion_5,
                                 criterion_6, criterion_7, criterion_8,
                                 criterion_9, criterion_10)


def _record(result):
    conftest.ACCEPTANCE_LINES.append(result.line)
    print(result.line)
    assert result.ok, result.line


def test_criterion_01_radical_ideal_semiring():
    _record(criterion_1())


def test_criterion_02_radical_semimodule_and_oracle():
    _record(criterion_2())


def test_criterion_03_functor_laws():
    _record(criterion_3())


def test_criterion_04_homotopy_transport():
    _record(criterion_4())


def test_criterion_05_snake_and_two_of_three():
    _record(criterion_5())


def test_criterion_06_naturality():
    _record(criterion_6())


def test_criterion_07_line_resolutions():
    _record(criterion_7())


def test_criterion_08_lifting_and_kernel_witnesses():
    _record(criterion_8())


def test_criterion_09_cli_determinism():
    _record(criterion_9(bundled_jobs_dir()))


def test_criterion_10_homology_desk_values():
    _record(criterion_10())
