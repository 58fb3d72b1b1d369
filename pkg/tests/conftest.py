import pytest

from tractlab.experiments import ExperimentConfig, run_condition

MC_SEED = 42
MC_SAMPLES = 5000


@pytest.fixture(scope="session")
def mc_runs():
    """C1 and C2 datasets of the two 4-tube models, computed once per session."""
    cache = {}

    def get(model, condition):
        key = (model, condition)
        if key not in cache:
            cache[key] = run_condition(ExperimentConfig(model, condition, MC_SAMPLES, MC_SEED))
        return cache[key]

    return get


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
