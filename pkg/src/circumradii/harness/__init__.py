"""Instance generation, experiments, extremal search and the CLI."""

from .experiments import (
    ExperimentRecord,
    constructed_gap_records,
    experiment_bezout,
    experiment_gap_cases,
    experiment_small_cases,
    verify_record_certificate,
)
from .generate import GenerationTimeout, GeneratorConfig, derive_seed, generate_instance
from .pointset_io import PointSetFormatError, format_pointset, load_pointset, parse_pointset, save_pointset
from .search import search_extremal
