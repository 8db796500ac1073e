"""Exception types shared across the package."""


class RinglabError(Exception):
    """Base class for every package-specific error."""


class ParseError(RinglabError):
    """Malformed ring spec, element string, polynomial, or input file."""


class MixedRings(RinglabError):
    """Operands belong to two different ring handles."""


class UnsupportedSpec(RinglabError):
    """Spec parses but names a ring or operation outside the supported set."""


class AxiomViolation(RinglabError):
    """A table ring failed the exhaustive ring-axiom check at load time."""


class TooLarge(RinglabError):
    """Finite ring exceeds the configured enumeration bound."""


class NotBezout(RinglabError):
    """No Bezout gcd witness exists (or is computable) for the request."""


class NotComaximal(RinglabError):
    """A pair required to be comaximal is not."""


class ZeroInput(RinglabError):
    """An argument required to be nonzero was zero."""


class ZeroIntegerPart(RinglabError):
    """Dual-integer adequacy asked for an element with zero integer part."""


class NotFZA(RinglabError):
    """Requested a feckly-zero-adequate witness in a ring that has none."""


class NoDecomposition(RinglabError):
    """No pi-regular decomposition exists for the element."""


class NoResidue(RinglabError):
    """No residue shift r with (b + a*r) comaximal to c exists."""


class ReductionFailed(RinglabError):
    """Diagonal reduction hit an irreducible block.

    Attributes:
        witness: the offending submatrix (a RingMatrix), when available.
        reason: short description of the failed step.
    """

    def __init__(self, reason, witness=None):
        super().__init__(reason)
        self.reason = reason
        self.witness = witness
