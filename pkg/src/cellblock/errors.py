class DomainError(ValueError):
    """Input is well-formed but outside an operation's domain."""


class PreconditionError(DomainError):
    pass


class TheoremViolation(DomainError):
    """An exhaustively checked statement failed; never expected in practice."""


class ChordSyntaxError(DomainError):
    def __init__(self, text: str, pos: int, msg: str):
        self.text, self.pos = text, pos
        super().__init__(f"{msg} at position {pos} in {text!r}\n  {text}\n  {' ' * pos}^")
