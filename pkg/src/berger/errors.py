"""Exception hierarchy. Every error carries a stable machine-readable ``code``."""


class BergerError(Exception):
    code = "error"


class DomainError(BergerError, ValueError):
    """Input lies outside the domain where an operation is defined."""

    code = "domain_error"


class UnsupportedSignature(BergerError, ValueError):
    """No tabulated closed form exists for this signature pattern."""

    code = "unsupported_signature"


class DegenerateTorus(DomainError):
    code = "degenerate_torus"


class IndefiniteInducedMetric(DomainError):
    code = "indefinite_induced_metric"


class DegenerateInducedMetric(DomainError):
    code = "degenerate_induced_metric"


class HypothesisViolated(DomainError):
    code = "hypothesis_violated"


class NoSolution(DomainError):
    code = "no_solution"
