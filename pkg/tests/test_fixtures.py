import pytest

from qfgraph.fixtures import EXAMPLE_NAMES, KNOWN_STATUS, run_example


@pytest.mark.parametrize("name", EXAMPLE_NAMES)
def test_example_reproductions_pass(name):
    report = run_example(name)
    failed = [c.label for c in report.checks if not c.passed]
    assert not failed, failed
    assert report.lines()


def test_known_status_table():
    'hand-established statuses are reported but never fed into the engine'
    assert KNOWN_STATUS == {"cosubpt": "not_prime", "cesubpt": "prime"}
    assert run_example("cosubpt").known_status == "not_prime"
    assert run_example("cesubpt").known_status == "prime"
    assert run_example("newprimex").known_status is None


def test_unknown_example_name():
    with pytest.raises(ValueError):
        run_example("nosuch")
