"""Probabilistic inclusion of literals for concept learning, a baseline
Tsetlin Machine, and the exact theory oracle behind the convergence
analysis."""

from .automata import Action, InitPolicy
from .boolean import Sample, clause_eval, format_mask, literal_value, make_sample
from .estimators import PCLClassifier, TsetlinMachineClassifier
from .machine import PCLClause, PCLMachine, converged_to
from .theory import (LiteralClass, SampleClass, TargetConjunction,
                     freq_closed_form, freq_enumerate, mixture_exceeds_half,
                     reinforcement_probs, convergence_condition)
from .tm import TMMachine

__all__ = [
    "Action", "InitPolicy", "Sample", "clause_eval", "format_mask",
    "literal_value", "make_sample", "PCLClassifier",
    "TsetlinMachineClassifier", "PCLClause", "PCLMachine", "converged_to",
    "LiteralClass", "SampleClass", "TargetConjunction", "freq_closed_form",
    "freq_enumerate", "mixture_exceeds_half", "reinforcement_probs",
    "convergence_condition", "TMMachine",
]

__version__ = "0.1.0"
