import pytest

from shorqjit.arithmetic import brute_force_order, gcd
from shorqjit.bench import count_program
from shorqjit.core.exceptions import InvalidArgumentError
from shorqjit.optimizer import (
    InstanceParams,
    build_plan,
    or_mask,
    orbit,
    overflow_flags,
    precompute_powers,
    reachable_values,
)
from shorqjit.schemas import ElisionPlan, IterationMode, OptimizationFlags
from shorqjit.simulator import enumerate_branches, outcome_distribution
from tests.conftest import assert_same_distribution

FLAG_NAMES = list(OptimizationFlags.model_fields)


def _distribution(program, N, a, t, flags):
    return outcome_distribution(enumerate_branches(program, InstanceParams.bind(N, a, t=t, flags=flags)))


@pytest.mark.parametrize("a, N, t, expected", [(7, 15, 4, [7, 4, 1, 1]), (2, 15, 4, [2, 4, 1, 1])])
def test_precompute_powers(a, N, t, expected):
    powers, inverses = precompute_powers(a, N, t)
    assert powers == expected
    assert all(p * q % N == 1 for p, q in zip(powers, inverses))
    assert all(powers[k + 1] == powers[k] ** 2 % N for k in range(t - 1))


def test_precompute_powers_degenerate_base():
    powers, _ = precompute_powers(1, 15, 3)
    assert powers == [1, 1, 1]


def test_precompute_powers_requires_coprime():
    with pytest.raises(InvalidArgumentError):
        precompute_powers(6, 15, 4)


@pytest.mark.parametrize("a, N, k, expected", [
    (7, 15, 0, {1}),
    (7, 15, 2, {1, 7, 4, 13}),
    (7, 15, 5, {1, 7, 4, 13}),
    (2, 21, 1, {1, 2}),
])
def test_reachable_values(a, N, k, expected):
    assert reachable_values(a, N, k) == expected


@pytest.mark.parametrize("N", [15, 21, 33, 35])
def test_reachable_cardinality(N):
    for a in (value for value in range(2, N) if gcd(value, N) == 1):
        order = brute_force_order(a, N)
        for k in range(6):
            assert len(reachable_values(a, N, k)) == min(2**k, order)


@pytest.mark.parametrize("values, expected", [({1, 7}, 0b0111), ({1}, 0b0001), ({1, 7, 4, 13}, 0b1111)])
def test_or_mask(values, expected):
    assert or_mask(values, 4) == expected


def test_or_mask_rejects_wide_values():
    with pytest.raises(InvalidArgumentError):
        or_mask({16}, 4)


def test_overflow_flags_first_adder_never_overflows():
    flags = overflow_flags({1, 7, 4, 13}, 7, 15, 4)
    assert flags[0] is False
    assert any(flags)


def test_orbit_closes_under_multiplier():
    assert orbit({1}, 4, 15, 8, cap=100) == {1, 4}
    assert orbit({1}, 7, 15, 3, cap=100) == {1, 7, 4}
    assert orbit({1, 2, 3}, 2, 15, 4, cap=2) is None


def test_plan_with_flags_off_is_full_circuit():
    plan = build_plan(7, 15, 4, 4, OptimizationFlags.none())
    for iteration in plan.iterations:
        assert iteration.mode == IterationMode.FULL
        assert iteration.multiplier == 7
        assert all(iteration.keep_forward) and all(iteration.keep_inverse)
        assert all(iteration.overflow_forward) and all(iteration.overflow_inverse)
    assert [it.repetitions for it in plan.iterations] == [8, 4, 2, 1]


def test_plan_or_mask_elision_for_base_two():
    flags = OptimizationFlags(use_precomputed_powers=True, elide_adders_by_or_mask=True)
    plan = build_plan(2, 15, 4, 4, flags)
    # Iteración k aplica a^{2^{t-1-k}}: 1, 1, 4, 2
    assert [it.multiplier for it in plan.iterations] == [1, 1, 4, 2]
    assert plan.iterations[0].keep_forward == [True, False, False, False]
    assert plan.iterations[2].or_mask == 0b0001
    assert plan.iterations[2].keep_forward == [True, False, False, False]
    assert plan.iterations[3].or_mask == 0b0101
    assert plan.iterations[3].keep_forward == [True, False, True, False]


def test_plan_all_flags_for_base_two():
    plan = build_plan(2, 15, 4, 4, OptimizationFlags.all())
    modes = [it.mode for it in plan.iterations]
    assert modes == [IterationMode.SKIP, IterationMode.SKIP, IterationMode.ADD, IterationMode.FULL]
    assert plan.iterations[2].addend == 3
    last = plan.iterations[3]
    assert last.keep_forward == [True, False, True, False]
    assert last.keep_inverse == [True, True, False, True]
    assert last.overflow_forward == [False] * 4
    assert last.overflow_inverse == [False] * 4


def test_plan_first_addition_without_skipping():
    flags = OptimizationFlags(use_precomputed_powers=True, first_iteration_as_addition=True)
    plan = build_plan(7, 15, 4, 4, flags)
    assert [it.mode for it in plan.iterations] == [IterationMode.ADD] * 3 + [IterationMode.FULL]
    assert [it.addend for it in plan.iterations[:3]] == [0, 0, 3]


def test_plan_is_pure_and_serializable():
    plan = build_plan(5, 21, 5, 6, OptimizationFlags.all())
    assert build_plan(5 + 21, 21, 5, 6, OptimizationFlags.all()) == plan
    assert ElisionPlan.model_validate_json(plan.model_dump_json()) == plan


def test_plan_cap_falls_back_to_full_checks():
    plan = build_plan(2, 21, 5, 6, OptimizationFlags.all(), cap=1)
    assert plan.capped
    late = plan.iterations[-1]
    assert all(late.keep_forward) and all(late.overflow_forward)


def test_plan_rejects_modulus_wider_than_program():
    with pytest.raises(InvalidArgumentError):
        build_plan(2, 21, 4, 4, OptimizationFlags.all())


def test_bind_validates_base():
    with pytest.raises(InvalidArgumentError):
        InstanceParams.bind(15, 5)
    with pytest.raises(InvalidArgumentError):
        InstanceParams.bind(15, 1)
    params = InstanceParams.bind(15, 7)
    assert params.t == 8
    assert len(params.bindings()["modes"]) == 8


@pytest.mark.parametrize("a", [2, 4, 7, 8, 11, 13])
def test_plan_soundness_n15(qpe_programs, a):
    program = qpe_programs(4)
    optimized = _distribution(program, 15, a, 5, OptimizationFlags.all())
    assert_same_distribution(optimized, _distribution(program, 15, a, 5, OptimizationFlags.none()))
    assert_same_distribution(optimized, _distribution(program, 15, a, 5, OptimizationFlags.baseline()))


@pytest.mark.parametrize("a", [2, 4, 5, 8])
def test_plan_soundness_n21(qpe_programs, a):
    program = qpe_programs(5)
    optimized = _distribution(program, 21, a, 4, OptimizationFlags.all())
    assert_same_distribution(optimized, _distribution(program, 21, a, 4, OptimizationFlags.baseline()))


@pytest.mark.slow
@pytest.mark.parametrize("N, a", [(21, 2), (21, 5), (33, 5), (35, 2)])
def test_plan_soundness_unoptimized(qpe_programs, N, a):
    program = qpe_programs(N.bit_length())
    optimized = _distribution(program, N, a, 4, OptimizationFlags.all())
    assert_same_distribution(optimized, _distribution(program, N, a, 4, OptimizationFlags.none()))


@pytest.mark.parametrize("name", FLAG_NAMES)
def test_each_flag_alone_is_sound(qpe_programs, name):
    program = qpe_programs(4)
    reference = _distribution(program, 15, 7, 4, OptimizationFlags.baseline())
    flags = OptimizationFlags(**{"use_precomputed_powers": True, name: True})
    assert_same_distribution(reference, _distribution(program, 15, 7, 4, flags))


@pytest.mark.parametrize("N, a", [(15, 7), (15, 2), (21, 2), (21, 4)])
@pytest.mark.parametrize("name", FLAG_NAMES)
def test_monotonicity(qpe_programs, N, a, name):
    program = qpe_programs(N.bit_length())
    t = 5

    def total(flags: OptimizationFlags) -> int:
        return count_program(program, InstanceParams.bind(N, a, t=t, flags=flags)).total

    if name != "use_precomputed_powers":
        # Sin potencias precalculadas el multiplicador cambia y las elisiones no son comparables
        everything = OptimizationFlags.all()
        assert total(everything) <= total(everything.model_copy(update={name: False}))
    nothing = OptimizationFlags.none()
    assert total(nothing.model_copy(update={name: True})) <= total(nothing)
