"""Executable versions of classic partition bijections and Gale's Hex argument."""

from .bijections import (
    BinaryWord,
    BoxedPartition,
    Exceptional,
    LatticePath,
    Move,
    Moved,
    SymbolCountMismatch,
    conjugate,
    conjugate_formula,
    count_inversions,
    franklin_apply,
    franklin_classify,
    lattice_path,
    path_decode,
    path_encode,
)
from .core import (
    DistinctPartition,
    EmptyPartition,
    NonPositivePart,
    OrderViolation,
    ParseError,
    Partition,
    RenderMode,
    base_length,
    make_partition,
    parse_partition,
    render_ferrers,
    slope_length,
)
from .series import (
    OrderMismatch,
    TruncatedSeries,
    euler_product,
    gaussian_binomial,
    inversion_polynomial,
    pentagonal_series,
    series_add,
    series_mul,
)

__version__ = "0.1.0"
