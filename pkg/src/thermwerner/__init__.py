"""Thermal entanglement of the two-qubit Heisenberg antiferromagnet and its Werner-state map."""

from .exceptions import ConvergenceError, DomainError, ValidationError
from .linalg import EigenDecomposition, eigh, frobenius_dist, mat_fn, matmul, trace
from .mapping import (
    CriticalConstants,
    MapResult,
    WernerRegime,
    classify_werner,
    critical_constants,
    effective_temperature,
    map_temperature,
    temperature_of_x,
    x_of_temperature,
)
from .measures import (
    concurrence_thermal,
    concurrence_wootters,
    concurrence_xstate,
    degree_of_mixture,
    entanglement_of_formation,
    entropic_nontriviality,
    j0,
    j1,
    jsd,
    kl_divergence,
    normalized_entropy,
    quantum_jsd,
    shannon_entropy,
    von_neumann_entropy,
)
from .states import (
    BellChoice,
    DensityMatrix,
    ModelParams,
    ground_state,
    hamiltonian,
    maximally_mixed,
    thermal_state,
    thermal_state_expm,
    werner_state,
)
from .sweep import (
    MeasureRecord,
    SweepSpec,
    emit_csv,
    emit_svg,
    evaluate_point,
    evaluate_werner,
    figure,
    run_sweep,
)

__version__ = "0.1.0"
