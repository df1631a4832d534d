"""Asymptotic states of a dissipatively coupled two-qubit semigroup.

Thin wrapper around the compiled extension; see the README for the model
conventions and the CLI for the full report pipeline.
"""

try:
    from ._qsd import (
        KossakowskiModel,
        asymptotic_state,
        classify,
        evolve,
        expm,
        kron,
        model_from_blocks,
        model_from_preset,
        partial_trace_ancilla,
        rates,
        verify_entangled,
        verify_product,
    )
except ImportError:  # extension on PYTHONPATH next to the build tree
    from _qsd import (
        KossakowskiModel,
        asymptotic_state,
        classify,
        evolve,
        expm,
        kron,
        model_from_blocks,
        model_from_preset,
        partial_trace_ancilla,
        rates,
        verify_entangled,
        verify_product,
    )

__all__ = [
    "KossakowskiModel",
    "asymptotic_state",
    "classify",
    "evolve",
    "expm",
    "kron",
    "model_from_blocks",
    "model_from_preset",
    "partial_trace_ancilla",
    "rates",
    "verify_entangled",
    "verify_product",
]
