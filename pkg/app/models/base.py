class AlgebraError(ValueError):
    """Root of every input or domain error raised by the algebra layer."""


class DegreeCapError(AlgebraError):
    pass


class RingMismatchError(AlgebraError):
    pass


class FieldMismatchError(AlgebraError):
    pass
