"""Exception hierarchy. Every error raised on bad input derives from SifreError."""


class SifreError(ValueError):
    pass


class EmptyInput(SifreError):
    pass


class NonPositiveGenerator(SifreError):
    pass


class NonMinimalInput(SifreError):
    pass


class ContentNotOne(SifreError):
    pass


class DimensionMismatch(SifreError):
    pass


class DegreeNotInSemigroup(SifreError):
    pass


# construction of gluings and extensions

class NotCoprime(SifreError):
    pass


class DegreeIsGenerator(SifreError):
    pass


class GeneratorOverlap(SifreError):
    pass


class NotMember(SifreError):
    pass


class NotMinimal(SifreError):
    pass


class CoprimalityFailure(SifreError):
    pass


class InvalidWeights(SifreError):
    pass


# classification

class NotSymmetric(SifreError):
    pass


class NotPseudoSymmetric(SifreError):
    pass


class NotThreeGenerated(SifreError):
    pass


class IsSymmetric(SifreError):
    pass


class ConstraintViolation(SifreError):
    pass


class NotMinimallyFourGenerated(SifreError):
    pass
