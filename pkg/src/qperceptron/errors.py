"""Exception hierarchy shared by all modules."""


class QPerceptronError(ValueError):
    """Base class for every error raised by this package."""


class UnnormalizableError(QPerceptronError):
    pass


class UnmeasurableStateError(QPerceptronError):
    pass


class ArityError(QPerceptronError):
    pass


class OutputOperatorError(QPerceptronError):
    pass


class StepSizeError(QPerceptronError):
    pass


class WiringError(QPerceptronError):
    pass


class ConfigError(QPerceptronError):
    pass


class PatternError(QPerceptronError):
    """Malformed pattern file; carries the offending location when known."""

    def __init__(self, message, *, path=None, field=None, line=None):
        parts = []
        if path is not None:
            parts.append(str(path))
        if line is not None:
            parts.append(f"line {line}")
        if field is not None:
            parts.append(f"field {field!r}")
        prefix = ": ".join(parts)
        super().__init__(f"{prefix}: {message}" if prefix else message)
        self.path = path
        self.field = field
        self.line = line
