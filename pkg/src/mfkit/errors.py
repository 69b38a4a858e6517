"""Exception types shared across the package."""


class MFKitError(Exception):
    """Base class for all mfkit errors."""


class PolyParseError(MFKitError):
    """Polynomial text does not conform to the grammar.

    Carries the character position of the offending token.
    """

    def __init__(self, message, position):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class DegreeGuardExceeded(MFKitError):
    """An intermediate Groebner leading term exceeded the degree cap."""


class NotZeroDimensional(MFKitError):
    """Quotient by the submodule is not a finite-dimensional vector space."""


class NotHomFinite(MFKitError):
    """Hom computation hit an infinite-dimensional quotient.

    Raised when the hypersurface is not isolated-singular at the origin
    (or the input is otherwise invalid).
    """


class NotScalarPlusNilpotent(MFKitError):
    """Matrix is not scalar-plus-nilpotent; the unique eigenvalue is undefined."""


class MixedHypersurface(MFKitError):
    """Operands are matrix factorizations of different polynomials."""


class PreconditionViolated(MFKitError):
    """An operation was called outside its stated hypotheses."""


class SocleEmpty(MFKitError):
    """The stacked pairing matrix has trivial kernel; no AR connecting morphism."""


class NotASummand(MFKitError):
    """Requested summand has multiplicity zero."""


class UnrecognizedSummand(MFKitError):
    """Decomposition against the candidate list fails the dimension check."""


class NonClosure(MFKitError):
    """Knitting did not reach closure within the step budget."""


class NoScalarBlock(MFKitError):
    """Neither block pattern of the size-reduction lemma matches."""


class InvalidTypeCombination(MFKitError):
    """The (series, n, r, characteristic) combination is not in the catalog."""


class IndexOutOfRange(MFKitError, IndexError):
    """Catalog index outside 1..n."""
