class YoungCMError(Exception):
    pass


class InvalidPartition(YoungCMError, ValueError):
    pass


class InvalidWord(YoungCMError, ValueError):
    pass


class NotACorner(YoungCMError):
    pass


class PredicateViolated(YoungCMError):
    pass


class NonCoprimeConfig(YoungCMError, ValueError):
    pass


class KOutOfRange(YoungCMError, ValueError):
    pass


class NotInDomain(YoungCMError):
    pass


class NotOnHyperplane(YoungCMError):
    pass


class AmbiguousPath(YoungCMError):
    pass


class CapExceeded(YoungCMError):
    pass


class NotComparable(YoungCMError):
    pass


class WindowEmpty(YoungCMError, ValueError):
    pass
