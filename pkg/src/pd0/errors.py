"""Exception types and the violation record shared by all validators."""

from dataclasses import dataclass, field


class ParseError(ValueError):
    """Malformed input file. ``location`` is a JSON-pointer-style path."""

    def __init__(self, message, location=""):
        self.location = location
        super().__init__(f"{location or '/'}: {message}")


class InvalidGroupError(ValueError):
    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


class ConventionDiscrepancy(RuntimeError):
    """A synthesized CRT pentuple failed its own constraint check."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


class InternalInconsistency(RuntimeError):
    """An identity that must hold along the reduction chain failed."""

    def __init__(self, violation):
        self.violation = violation
        super().__init__(str(violation))


class ConstraintViolation(ValueError):
    """Input rejected because it is off the constraint surface."""

    def __init__(self, violations):
        self.violations = list(violations)
        super().__init__("; ".join(str(v) for v in self.violations))


@dataclass(frozen=True)
class Violation:
    constraint: str
    witness: tuple = ()
    detail: str = ""
    extra: dict = field(default_factory=dict, compare=False)

    def __str__(self):
        s = self.constraint
        if self.witness:
            s += f" at {self.witness}"
        if self.detail:
            s += f": {self.detail}"
        return s

    def to_json(self):
        return {
            "constraint": self.constraint,
            "witness": [int(w) if not isinstance(w, str) else w for w in self.witness],
            "detail": self.detail,
        }
