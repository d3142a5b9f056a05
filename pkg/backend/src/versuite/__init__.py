from .grid import GridCase, GridSpec, iter_cases, monomials_of_weight
from .equivalence import ComparisonEntry, ComparisonStatus, EquivalenceReport, equivalence_report
from .asymptotics import AsymptoticReport, AsymptoticVerdict, asymptotic_extract, divided_differences
from .verlinde_paths import MapCountReport, mapcount_report, verlinde_mapcount, verlinde_ratio
from .vanishing import VanishingVerdict, vanishing_check
from .cache import CacheEntry, ResultCache, cache_get, cache_put
from .cli import run_cli

__all__ = [
    "GridCase",
    "GridSpec",
    "iter_cases",
    "monomials_of_weight",
    "ComparisonEntry",
    "ComparisonStatus",
    "EquivalenceReport",
    "equivalence_report",
    "AsymptoticReport",
    "AsymptoticVerdict",
    "asymptotic_extract",
    "divided_differences",
    "MapCountReport",
    "mapcount_report",
    "verlinde_mapcount",
    "verlinde_ratio",
    "VanishingVerdict",
    "vanishing_check",
    "CacheEntry",
    "ResultCache",
    "cache_get",
    "cache_put",
    "run_cli",
]
