"""Exception types shared across the package."""


class ExactAlgebraError(Exception):
    """Base class for all package-specific errors."""


class CtxMismatch(ExactAlgebraError):
    """Operands belong to different field contexts."""


class CompositeModulus(ExactAlgebraError):
    """Prime field requested with a composite characteristic."""


class ReducibleModulus(ExactAlgebraError):
    """Extension requested with a reducible modulus."""


class DivisionByZero(ExactAlgebraError, ZeroDivisionError):
    """Division by the zero element or the zero polynomial."""


class NonCoprimeModuli(ExactAlgebraError):
    """CRT moduli share a nonconstant common divisor."""


class ZeroPolynomial(ExactAlgebraError):
    """Operation undefined for the zero polynomial."""


class UnsupportedField(ExactAlgebraError):
    """The operation is not available over this field."""


class NotAnExtension(ExactAlgebraError):
    """An extension field was expected."""


class NotSquare(ExactAlgebraError):
    """A square matrix was expected."""


class SizeMismatch(ExactAlgebraError):
    """Dimensions of the operands do not agree."""


class SingularMatrix(ExactAlgebraError):
    """Inverse of a singular matrix requested."""


class NotIrreducible(ExactAlgebraError):
    """An irreducible polynomial was expected."""


class NonSquarefreeDerivativeUnit(ExactAlgebraError):
    """Newton step ran into a non-invertible derivative value."""


class TooLarge(ExactAlgebraError):
    """Brute-force enumeration would exceed the guard bound."""


class OddPermutation(ExactAlgebraError):
    """An even permutation was expected."""


class ParseError(ExactAlgebraError):
    """Malformed textual or JSON input."""


class UnknownSuite(ExactAlgebraError):
    """Verification suite name not recognized."""


class VerificationError(ExactAlgebraError):
    """A certificate or internal invariant failed re-verification."""
