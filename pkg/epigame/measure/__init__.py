from .operations import (
    TotalExpectationReport,
    conditional_expectation,
    equivalent,
    expectation,
    is_measurable,
    join,
    posterior,
    total_expectation_check,
)
from .space import (
    Event,
    FiniteSpace,
    Measure,
    Partition,
)
from .types import (
    Rational,
    format_rational,
    parse_rational,
)

__all__ = [
    "Event",
    "FiniteSpace",
    "Measure",
    "Partition",
    "Rational",
    "TotalExpectationReport",
    "conditional_expectation",
    "equivalent",
    "expectation",
    "format_rational",
    "is_measurable",
    "join",
    "parse_rational",
    "posterior",
    "total_expectation_check",
]
