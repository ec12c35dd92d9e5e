"""Degradability analysis and quantum capacity of channels with a small
environment: Kraus/Choi/transfer representations, the transfer-matrix and
H-matrix degradability criteria, the closed-form qubit capacity, and
seeded Haar sampling experiments."""

from ._core import (
    Channel,
    apply,
    binary_entropy,
    bottleneck_bound,
    capacity_or_bounds,
    channel_from_json,
    channel_to_json,
    classify,
    coherent_information,
    compose,
    conjugate_channel,
    convex_mixture,
    convex_upper_bound,
    degradable_fraction,
    from_isometry,
    from_normal_form,
    h_matrix,
    haar_random_channel,
    identity_channel,
    is_antidegradable,
    is_degradable,
    is_degradable_via_h,
    jamiolkowski,
    kraus_rank,
    partial_trace,
    qubit_capacity,
    single_letter_capacity,
    transfer_matrix,
    twist_diagonalize,
    validate,
    von_neumann_entropy,
    __version__,
)

__all__ = [
    "Channel",
    "apply",
    "binary_entropy",
    "bottleneck_bound",
    "capacity_or_bounds",
    "channel_from_json",
    "channel_to_json",
    "classify",
    "coherent_information",
    "compose",
    "conjugate_channel",
    "convex_mixture",
    "convex_upper_bound",
    "degradable_fraction",
    "from_isometry",
    "from_normal_form",
    "h_matrix",
    "haar_random_channel",
    "identity_channel",
    "is_antidegradable",
    "is_degradable",
    "is_degradable_via_h",
    "jamiolkowski",
    "kraus_rank",
    "partial_trace",
    "qubit_capacity",
    "single_letter_capacity",
    "transfer_matrix",
    "twist_diagonalize",
    "validate",
    "von_neumann_entropy",
    "__version__",
]
