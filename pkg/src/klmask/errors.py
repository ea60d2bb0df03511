"""Exception types raised by klmask.

Every domain error derives from :class:`KLMaskError`, so the CLI can map the
whole family to exit code 1 while still reporting the specific class name.
"""


class KLMaskError(ValueError):
    """Base class for domain errors."""


class InvalidPermutation(KLMaskError):
    def __init__(self, message, position=None):
        super().__init__(message)
        self.position = position


class RankMismatch(KLMaskError):
    pass


class LetterOutOfRange(KLMaskError):
    pass


class NotReduced(KLMaskError):
    pass


class CapExceeded(KLMaskError):
    pass


class LengthCapExceeded(CapExceeded):
    pass


class RankCapExceeded(CapExceeded):
    pass


class NotMaximallyClustered(KLMaskError):
    pass


class NotMCHexagonAvoiding(KLMaskError):
    pass


class NotABraidCluster(KLMaskError):
    pass


class NoClusters(KLMaskError):
    pass


class MaskLengthMismatch(KLMaskError):
    pass


class No10StarInstance(KLMaskError):
    pass


class NotInClass(KLMaskError):
    pass
