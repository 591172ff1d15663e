"""Exception catalogs: named tournaments, path exceptions, families,
biexceptions and cycle exceptions."""

from .biexceptions import BiexceptionInstance, biexception_instances, derived_path
from .export import catalog_json, catalog_records
from .families import FAMILIES, FamilyInstance, FamilySpec, family_instances, instantiate_family
from .figures import exception_tournament, figure_names, figure_variants
from .matching import ExceptionMatch, is_exception, is_grunbaum_exception, match_all, match_biexception, match_exception
from .records import (
    CORRECTIONS,
    BiexceptionRecord,
    CycleExceptionRecord,
    ExceptionRecord,
    biexception_records,
    cycle_exceptions,
    finite_path_exceptions,
)

__all__ = [
    "CORRECTIONS",
    "BiexceptionInstance",
    "BiexceptionRecord",
    "CycleExceptionRecord",
    "ExceptionMatch",
    "ExceptionRecord",
    "FAMILIES",
    "FamilyInstance",
    "FamilySpec",
    "biexception_instances",
    "biexception_records",
    "catalog_json",
    "catalog_records",
    "cycle_exceptions",
    "derived_path",
    "exception_tournament",
    "family_instances",
    "figure_names",
    "figure_variants",
    "finite_path_exceptions",
    "instantiate_family",
    "is_exception",
    "is_grunbaum_exception",
    "match_all",
    "match_biexception",
    "match_exception",
]
