"""Prometheus metrics definitions and duration measurement decorator.

Histograms time the expensive entry points (proof search, countermodel
search, exhaustive axiom checks, derivation checking, corpus sweeps); a
Counter tracks how many proof-search nodes have been expanded.
"""

import functools

from prometheus_client import Counter, Histogram

proof_search_duration_seconds = Histogram(
    "proof_search_duration_seconds", "Duration of a single backward proof search"
)
countermodel_search_duration_seconds = Histogram(
    "countermodel_search_duration_seconds", "Duration of a countermodel search over a catalog"
)
axiom_check_duration_seconds = Histogram(
    "axiom_check_duration_seconds", "Duration of exhaustive axiom checks on a finite structure"
)
derivation_check_duration_seconds = Histogram(
    "derivation_check_duration_seconds", "Duration of derivation checking"
)
sweep_duration_seconds = Histogram("sweep_duration_seconds", "Duration of a corpus sweep")

search_nodes_total = Counter("search_nodes_total", "Proof-search nodes expanded")


def measure_duration(metric):
    """Decorator to measure execution duration of a function using the provided Prometheus Histogram metric.

    Args:
        metric (Histogram): Prometheus Histogram to record execution time.

    Returns:
        Callable: A decorator that wraps a function to measure and record its execution duration.
    """

    def decorator(func):
        @functools.wraps(func)
        def wrapper(*args, **kwargs):
            with metric.time():
                return func(*args, **kwargs)

        return wrapper

    return decorator
