from .settings import ConfigStore, Settings
from .log_sink import LogLine, LogSink
from .validators import validate_seed, validate_settings
from .manifest import (
    MANIFEST_SUFFIX,
    RunManifest,
    artifact_mismatches,
    hash_artifacts,
    manifest_path_for,
    read_manifest,
    sha256_file,
    write_manifest,
)
from .bench import (
    DEFAULT_TRIALS,
    ERDOS,
    PREFATTACH,
    SUITE_COLUMNS,
    SUITES,
    UNIFORM,
    BenchOptions,
    bench_erdos,
    bench_prefattach,
    bench_uniform,
    mean_ci,
    run_suite,
    trial_seed,
    write_bench_csv,
)
from .controller import GADGET_KINDS, TRANSFORM_KINDS, LigController

__all__ = [
    "Settings",
    "ConfigStore",
    "LogLine",
    "LogSink",
    "validate_settings",
    "validate_seed",
    "MANIFEST_SUFFIX",
    "RunManifest",
    "sha256_file",
    "hash_artifacts",
    "manifest_path_for",
    "write_manifest",
    "read_manifest",
    "artifact_mismatches",
    "UNIFORM",
    "PREFATTACH",
    "ERDOS",
    "SUITES",
    "SUITE_COLUMNS",
    "DEFAULT_TRIALS",
    "BenchOptions",
    "bench_uniform",
    "bench_prefattach",
    "bench_erdos",
    "mean_ci",
    "run_suite",
    "trial_seed",
    "write_bench_csv",
    "GADGET_KINDS",
    "TRANSFORM_KINDS",
    "LigController",
]
