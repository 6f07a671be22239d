"""
Exception hierarchy for cyclo
"""


class CycloError(Exception):
    """Base exception for all cyclo errors"""
    pass


class ContractViolation(CycloError):
    """Raised when an operation is called outside its precondition"""
    pass


class ExactnessError(CycloError, ArithmeticError):
    """Raised when an exact computation produces a value it provably cannot"""
    pass


class InvalidAdjacency(CycloError, ValueError):
    """Raised when a matrix entry is not a valid Hermitian adjacency entry"""
    pass


class NotAdjacencyClass(CycloError, ValueError):
    """Raised when a matrix leaves the alphabet {0, 1, -1, i, -i}"""
    pass


class BadRoot(CycloError, ValueError):
    """Raised when a root vector does not have squared norm 2"""
    pass


class ParamRange(CycloError, ValueError):
    """Raised when a catalog parameter is outside its valid range"""
    pass


class CapExceeded(CycloError):
    """Raised when a search or enumeration exceeds its size cap"""
    pass


class TheoremViolation(CycloError):
    """Raised when a certified bound holds but the promised witness is missing"""
    pass


class NotInTables(CycloError, LookupError):
    """Raised when a catalog reference has no lattice label"""
    pass


class FormatError(CycloError, ValueError):
    """Raised when an input document is malformed"""
    pass
