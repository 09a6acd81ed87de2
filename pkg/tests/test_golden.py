import pytest

from golden.cases import EXPECTED, JOBS_VARIANTS, cases, render, run_case

CASES = cases()


@pytest.mark.parametrize("name,argv,has_jobs", CASES, ids=[c[0] for c in CASES])
def test_golden(name, argv, has_jobs):
    expected = (EXPECTED / f"{name}.out").read_text()
    first = render(*run_case(argv))
    assert first == expected
    assert render(*run_case(argv)) == first
    if has_jobs:
        for j in JOBS_VARIANTS[1:]:
            assert render(*run_case(argv + ["--jobs", j])) == expected, j
