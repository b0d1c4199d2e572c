# Simulador de vector de estado con medición intermedia y realimentación clásica

from shorqjit.simulator.rng import make_generator, spawn_generators
from shorqjit.simulator.runner import (
    SamplingVisitor,
    enumerate_branches,
    outcome_distribution,
    run_sampled,
    simulate,
)
from shorqjit.simulator.statevector import StateVector

__all__ = [
    "SamplingVisitor",
    "StateVector",
    "enumerate_branches",
    "make_generator",
    "outcome_distribution",
    "run_sampled",
    "simulate",
    "spawn_generators",
]
