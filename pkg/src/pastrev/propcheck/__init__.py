"""Seeded, reproducible property checks for every proven statement, plus
diagnostics that reproduce known misprints."""
from .harness import (ERRATUM, THEOREM, WITNESS, PropertyReport, PropertySpec, registry,
                      reports_json, run_all, run_property, suite_passed)

__all__ = ["ERRATUM", "THEOREM", "WITNESS", "PropertyReport", "PropertySpec", "registry",
           "reports_json", "run_all", "run_property", "suite_passed"]
