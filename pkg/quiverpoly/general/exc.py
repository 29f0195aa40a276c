"""Non-standard exception types used in quiverpoly.

Every error caused by user input or by an exhausted resource limit derives from QuiverPolyError
and carries the exit status that the command-line interface uses for it.
"""


class QuiverPolyError(Exception):

    """Base class of all errors reported by quiverpoly."""

    exit_code = 2


class NotDynkin(QuiverPolyError):

    """Underlying graph of a quiver is not a simply-laced Dynkin diagram."""


class LabellingError(QuiverPolyError):

    """Vertex labelling of a D or E type quiver is missing or is not a diagram isomorphism."""


class DimensionMismatch(QuiverPolyError, ValueError):

    """Vectors of incompatible lengths or values were combined."""


class DocumentError(QuiverPolyError):

    """Input document is malformed."""


class MixedVertexSchurBasis(QuiverPolyError):

    """Schur basis was requested while some vertex owns more than one nonempty alphabet."""


class ConstructionFailed(QuiverPolyError):

    """No directed partition could be constructed automatically."""


class SchurFormMissing(QuiverPolyError):

    """Operation needs a Schur-basis form which was not computed."""


class WindowUnsound(QuiverPolyError):

    """Generating function cannot be expanded within the given exponent window."""


class SearchSpaceTooLarge(QuiverPolyError):

    """Enumeration exceeded its configured cap."""

    exit_code = 4


class TermLimitExceeded(QuiverPolyError):

    """Intermediate Laurent term map exceeded its configured cap."""

    exit_code = 4


class VerificationMismatch(QuiverPolyError):

    """Independent computations of the same class disagree."""

    exit_code = 3
