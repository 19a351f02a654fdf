"""Exception hierarchy shared by all subsystems."""


class SalemLatticesError(Exception):
    """Base class for all domain errors raised by this package."""


class NonExactDivision(SalemLatticesError):
    """Polynomial divmod requested over the integers but the result has denominators."""


class DegreeBoundExceeded(SalemLatticesError):
    """Input degree above the supported desk-scale bound."""


class ToleranceNotReached(SalemLatticesError):
    """Certified refinement stalled before reaching the requested width."""


class ZeroEntry(SalemLatticesError):
    """A synthesized or supplied parameter entry is exactly zero."""


class IncomparableEntries(SalemLatticesError):
    """Two entries could not be ordered within the interval refinement budget."""


class IndecomposabilityViolated(SalemLatticesError):
    """The parameter vector fails the indecomposability preconditions."""


class UndecidableComparison(SalemLatticesError):
    """A sign question involves products of symbols and the declared
    linear-independence assumptions do not settle it."""


class NoInvariantForm(SalemLatticesError):
    """The space of invariant antisymmetric forms contains no nondegenerate element."""


class ModelMismatch(SalemLatticesError):
    """Group elements from different models or parameter sets were combined."""


class InexactPath(SalemLatticesError):
    """Exact arithmetic requested where only the numeric model is defined."""


class NotInLattice(SalemLatticesError):
    """A construction precondition (membership in a lattice) is violated."""


class ClosureViolation(SalemLatticesError):
    """A product of lattice generators left the membership set.

    Indicates an implementation bug: the constructions are closed by theorem.
    """

    def __init__(self, message, word=None, element=None):
        super().__init__(message)
        self.word = word
        self.element = element


class InternalInconsistency(SalemLatticesError):
    """Two independent computations of the same quantity disagree."""
