import pytest

from shorqjit.arithmetic import mod_exp
from shorqjit.core.exceptions import InvalidArgumentError, PreconditionError
from shorqjit.driver import ProgramCache, check_preconditions, find_candidate_order, shors_algorithm
from shorqjit.schemas import AttemptOutcome, FactoringResult, OptimizationFlags

SEED_SUITE = list(range(10))


def _assert_factored(result: FactoringResult, p: int, q: int) -> None:
    assert result.success
    assert (result.p, result.q) == (p, q)
    assert result.p * result.q == result.N
    assert result.attempts


def _assert_root_implication(result: FactoringResult) -> None:
    """Toda raíz no trivial de un orden par válido da los factores."""
    N = result.N
    for trace in result.attempts:
        r = trace.candidate_r
        if r is None or r % 2 or mod_exp(trace.a, r, N) != 1:
            continue
        root = mod_exp(trace.a, r // 2, N)
        if root not in (1, N - 1):
            assert trace.outcome == AttemptOutcome.FACTORS_FOUND
            assert trace.p * trace.q == N


def test_factor_15(cache):
    result = shors_algorithm(15, seed=1, cache=cache)
    _assert_factored(result, 3, 5)
    _assert_root_implication(result)


def test_gcd_shortcut(cache):
    result = shors_algorithm(21, a=14, seed=0, cache=cache)
    _assert_factored(result, 3, 7)
    assert result.attempts[0].shortcut
    assert result.attempts[0].outcome == AttemptOutcome.SHORTCUT
    assert result.programs_built == 0


@pytest.mark.parametrize("seed", SEED_SUITE)
def test_factor_15_seed_suite(cache, seed):
    result = shors_algorithm(15, seed=seed, cache=cache)
    _assert_factored(result, 3, 5)
    _assert_root_implication(result)
    assert len(result.attempts) <= 32


@pytest.mark.parametrize("seed", SEED_SUITE[:3])
def test_factor_21(cache, seed):
    result = shors_algorithm(21, seed=seed, cache=cache)
    _assert_factored(result, 3, 7)
    _assert_root_implication(result)


@pytest.mark.slow
@pytest.mark.parametrize("N, p, q", [(21, 3, 7), (33, 3, 11), (35, 5, 7)])
@pytest.mark.parametrize("seed", SEED_SUITE)
def test_factor_seed_suite_slow(cache, N, p, q, seed):
    result = shors_algorithm(N, seed=seed, cache=cache)
    _assert_factored(result, p, q)
    _assert_root_implication(result)


def test_factor_without_optimizations(cache):
    result = shors_algorithm(15, seed=3, flags=OptimizationFlags.baseline(), t=6, cache=cache)
    _assert_factored(result, 3, 5)


def test_program_built_once_per_bit_width(cache):
    first = shors_algorithm(15, a=7, seed=2, cache=cache)
    second = shors_algorithm(15, a=2, seed=5, cache=cache)
    assert cache.builds == 1
    assert (first.programs_built, second.programs_built) == (1, 0)
    assert len(cache) == 1 and 4 in cache


def test_cache_hit_records_zero_construction_time(cache):
    _, built = cache.get(4)
    program, hit = cache.get(4)
    assert built > 0
    assert hit == 0.0
    assert cache.builds == 1
    assert cache.hits == 1
    assert program is cache.entry(4).program


def test_find_candidate_order(cache):
    candidates = [find_candidate_order(15, 7, t=8, seed=seed, cache=cache) for seed in range(10)]
    assert set(candidates) <= {None, 4}
    assert 4 in candidates
    find_candidate_order(15, 2, t=8, seed=0, cache=cache)
    assert cache.builds == 1


def test_failed_attempts_are_reported(cache):
    # a = 14 ≡ -1 (mód 15): orden 2 con raíz trivial en cada intento
    result = shors_algorithm(15, a=14, seed=0, max_attempts=3, cache=cache)
    assert not result.success
    assert len(result.attempts) == 3
    assert all(trace.outcome != AttemptOutcome.FACTORS_FOUND for trace in result.attempts)


def test_single_attempt_budget(cache):
    result = shors_algorithm(15, a=14, seed=0, max_attempts=1, cache=cache)
    assert not result.success
    assert len(result.attempts) == 1


@pytest.mark.parametrize("max_attempts", [0, -1])
def test_attempt_budget_must_be_positive(cache, max_attempts):
    with pytest.raises(InvalidArgumentError):
        shors_algorithm(15, seed=0, max_attempts=max_attempts, cache=cache)
    assert cache.builds == 0


@pytest.mark.parametrize("N", [16, 9, 25, 27, 3])
def test_preconditions(N):
    with pytest.raises(PreconditionError):
        check_preconditions(N)
    with pytest.raises(PreconditionError):
        shors_algorithm(N)
