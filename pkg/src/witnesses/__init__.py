"""Symbolic boundary witnesses and their checker."""

from src.witnesses.points import FormalBoundaryPoint
from src.witnesses.model import (
    WitnessType,
    WitnessArc,
    WitnessCircle,
    Involution,
    SymbolicWitness,
    JoinOfCantorSets,
    witness_from_dict,
)
from src.witnesses.builders import (
    WitnessBuilder,
    theta_from_k33,
    theta_witness,
    k33_boundary_witness,
    fig5right_witness,
    pi_witness,
)
from src.witnesses.verify import WitnessVerifier, verify_witness, obstruction_check, matches_type

__all__ = [
    'FormalBoundaryPoint',
    'WitnessType',
    'WitnessArc',
    'WitnessCircle',
    'Involution',
    'SymbolicWitness',
    'JoinOfCantorSets',
    'witness_from_dict',
    'WitnessBuilder',
    'theta_from_k33',
    'theta_witness',
    'k33_boundary_witness',
    'fig5right_witness',
    'pi_witness',
    'WitnessVerifier',
    'verify_witness',
    'obstruction_check',
    'matches_type',
]
