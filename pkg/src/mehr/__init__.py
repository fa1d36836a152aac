"""Monte Carlo discovery of large maximal empty hyper-rectangles in numeric data."""

from .errors import ConfigurationError, ContractViolation, DataError, MehrError, OracleSizeError
from .expansion import (
    ExpansionStrategy,
    RandomSource,
    create_mehr,
    expand_equal_rounds,
    expand_max_per_dimension,
    expand_random_amounts,
    sample_query_point,
    seed_rectangle,
)
from .geometry import (
    Direction,
    HyperRect,
    PointSet,
    Projections,
    blocking_limit,
    contains_interior,
    is_empty,
    is_maximal,
    volume,
)
from .ingest import CleaningLog, RawTable, clean_and_normalize, load_csv, load_points
from .oracle import OracleResult, enumerate_all_mehrs
from .rules import Condition, Rule, bounding_dimension_frequencies, extract_rule
from .search import (
    SearchConfig,
    SearchReport,
    before_best_summary,
    find_mehrs,
    generate_rectangles,
    merge_reports,
    rank,
    rank_rects,
)

__all__ = [
    "CleaningLog",
    "Condition",
    "ConfigurationError",
    "ContractViolation",
    "DataError",
    "Direction",
    "ExpansionStrategy",
    "HyperRect",
    "MehrError",
    "OracleResult",
    "OracleSizeError",
    "PointSet",
    "Projections",
    "RandomSource",
    "RawTable",
    "Rule",
    "SearchConfig",
    "SearchReport",
    "before_best_summary",
    "blocking_limit",
    "bounding_dimension_frequencies",
    "clean_and_normalize",
    "contains_interior",
    "create_mehr",
    "enumerate_all_mehrs",
    "expand_equal_rounds",
    "expand_max_per_dimension",
    "expand_random_amounts",
    "extract_rule",
    "find_mehrs",
    "generate_rectangles",
    "is_empty",
    "is_maximal",
    "load_csv",
    "load_points",
    "merge_reports",
    "rank",
    "rank_rects",
    "sample_query_point",
    "seed_rectangle",
    "volume",
]
