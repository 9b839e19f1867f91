from .harness import (
    FAMILY_CLAIMS,
    ReproReport,
    ReproRun,
    paper_equalizer_set,
    run_full_repro,
    verify_empty_w_claims,
    verify_table,
    verify_theorem,
)
from .tables import TABLES

__all__ = [
    "TABLES",
    "FAMILY_CLAIMS",
    "ReproReport",
    "ReproRun",
    "paper_equalizer_set",
    "run_full_repro",
    "verify_empty_w_claims",
    "verify_table",
    "verify_theorem",
]
