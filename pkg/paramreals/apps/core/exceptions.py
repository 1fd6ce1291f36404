class ParamRealsError(Exception):
    pass


class BrokenNameError(ParamRealsError):
    """A name answered something its representation does not allow"""

    pass


class FuelExhausted(ParamRealsError):
    def __init__(self, message, fuel=None):
        super().__init__(message)
        self.fuel = fuel


class DecodeError(ParamRealsError):
    pass


class TableRangeError(ParamRealsError):
    pass


class NonMonotoneTableError(ParamRealsError):
    pass


class BoundViolation(ParamRealsError):
    pass


class DomainError(ParamRealsError):
    pass


class FormatError(ParamRealsError):
    def __init__(self, message, path=None, line=None):
        location = ":".join(str(part) for part in (path, line) if part is not None)
        super().__init__(f"{location}: {message}" if location else message)
        self.path = path
        self.line = line


class ExpressionSyntaxError(ParamRealsError):
    def __init__(self, message, offset):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class ScopeError(ParamRealsError):
    pass


class NodeCapExceeded(ParamRealsError):
    def __init__(self, message, trace=None):
        super().__init__(message)
        self.trace = trace
