"""Exception types shared across the package."""


class LDCError(Exception):
    pass


class ParseError(LDCError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class ModeError(LDCError):
    pass


class TypeMismatch(LDCError):
    def __init__(self, message, path=()):
        where = "/".join(path) if path else "<root>"
        super().__init__(f"{message} (at {where})")
        self.message = message
        self.path = tuple(path)


class LengthMismatch(LDCError):
    pass


class AlphabetMismatch(LDCError):
    pass


class InternalTypeError(LDCError):
    pass


class DomainError(LDCError):
    pass


class NotSpiderTyped(LDCError):
    pass


class UnknownVertex(LDCError):
    pass


class VerificationFailure(LDCError):
    pass
