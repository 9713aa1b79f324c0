"""Cover arrays and binary string inference from them."""

from .core import BorderArray, CoverArray, alphabet_size, border_array, extend_border
from .covers import (
    is_cover,
    list_all_covers,
    maximal_cover_array_oracle,
    minimal_cover_array,
    minimal_cover_array_oracle,
)
from .enumeration import (
    all_valid_cover_arrays,
    canonical_strings,
    distinct_cover_arrays,
    fibonacci_word,
)
from .sima import (
    ComponentLabeling,
    CoverGraph,
    InferenceResult,
    InvalidCoverArray,
    build_cover_graph,
    connected_components,
    infer,
)
from .transform import max_to_min, prune
from .validate import ValidationReport, validate

__all__ = [
    "BorderArray",
    "ComponentLabeling",
    "CoverArray",
    "CoverGraph",
    "InferenceResult",
    "InvalidCoverArray",
    "ValidationReport",
    "all_valid_cover_arrays",
    "alphabet_size",
    "border_array",
    "build_cover_graph",
    "canonical_strings",
    "connected_components",
    "distinct_cover_arrays",
    "extend_border",
    "fibonacci_word",
    "infer",
    "is_cover",
    "list_all_covers",
    "max_to_min",
    "maximal_cover_array_oracle",
    "minimal_cover_array",
    "minimal_cover_array_oracle",
    "prune",
    "validate",
]
