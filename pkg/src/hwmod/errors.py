"""Exception hierarchy.

Every error raised by the library derives from :class:`HwmodError`, which is
itself a ``ValueError`` so callers that only care about bad input can catch
that.
"""


class HwmodError(ValueError):
    """Base class for all library errors."""


class LengthMismatch(HwmodError):
    pass


class AlgebraMismatch(HwmodError):
    pass


class NotKDominant(HwmodError):
    pass


class IndexOutOfRange(HwmodError):
    pass


class NotSchmidShape(HwmodError):
    pass


class EmptyChain(HwmodError):
    pass


class ParamOutOfRange(HwmodError):
    pass


class NotConstructible(HwmodError):
    """No PRV-product recipe is known for the requested highest weight."""


class MixedParity(HwmodError):
    pass


class NotRegularForK(HwmodError):
    pass


class NotRhoCharacter(HwmodError):
    pass


class NotHookBuildable(HwmodError):
    pass


class RankTooLarge(HwmodError):
    pass


class ParseError(HwmodError):
    pass
