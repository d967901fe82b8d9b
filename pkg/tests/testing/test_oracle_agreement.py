import time

import pytest

from raag_piling_utils.testing.oracle import (
    all_group_specs,
    find_disagreements,
    print_failed_cases,
    scaling_instance,
)
from raag_piling_utils.utils.conjugacy import is_conjugate
from raag_piling_utils.utils.metrics_utils import loglog_slope
from raag_piling_utils.utils.raag_setup import env_float, env_int, env_list

ORACLE_SPECS = all_group_specs(3)
oracle_word_len = env_int("RAAG_TEST_ORACLE_WORD_LEN", 2)
oracle_conj_len = env_int("RAAG_TEST_ORACLE_CONJ_LEN", 3)
scaling_max_seconds = env_float("RAAG_TEST_SCALING_MAX_SECONDS", 10.0)


def _decide(force_general):
    def decide(w1, w2, spec):
        return is_conjugate(w1, w2, spec, force_general=force_general).conjugate

    return decide


@pytest.mark.parametrize("spec", ORACLE_SPECS, ids=lambda s: s.commuting_string() or "free")
@pytest.mark.parametrize("force_general", [False, True])
def test_agrees_with_oracle(spec, force_general):
    failed_cases = find_disagreements(
        spec, oracle_word_len, oracle_conj_len, _decide(force_general)
    )
    print_failed_cases(spec, failed_cases)
    assert failed_cases == []


@pytest.mark.slow
@pytest.mark.parametrize("spec", ORACLE_SPECS, ids=lambda s: s.commuting_string() or "free")
def test_agrees_with_oracle_exhaustive(spec):
    failed_cases = find_disagreements(spec, 3, 4, _decide(False))
    print_failed_cases(spec, failed_cases)
    assert failed_cases == []


def _scaling_lengths(runslow):
    default = "1000,10000,100000" if runslow else "250,1000,4000"
    return env_list("RAAG_TEST_SCALING_LENGTHS", default)


def test_linear_scaling(runslow):
    lengths = _scaling_lengths(runslow)
    seconds = []
    for length in lengths:
        spec, w1, w2 = scaling_instance(length, seed=length)
        best = None
        for _ in range(3):
            start = time.perf_counter()
            result = is_conjugate(w1, w2, spec)
            elapsed = time.perf_counter() - start
            best = elapsed if best is None else min(best, elapsed)
        assert result.conjugate
        seconds.append(best)

    assert seconds[-1] <= scaling_max_seconds
    if len(lengths) > 1:
        assert loglog_slope(lengths, seconds) <= 1.3
