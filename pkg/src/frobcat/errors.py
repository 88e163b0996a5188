"""Exception hierarchy for frobcat.

Every error raised by the library derives from :class:`FrobcatError`, so
callers can catch one type at the boundary.  Checker code converts the
structural errors (:class:`TypeMismatch`, :class:`MalformedTable`) into
failing report entries instead of crashing, so a report is produced even
for ill-typed candidate data.
"""

from __future__ import annotations


class FrobcatError(Exception):
    """Base class for all frobcat errors."""


class MalformedTable(FrobcatError):
    """A table-backed category references an unknown morphism or object id,
    or a table row has the wrong shape."""


class TypeMismatch(FrobcatError):
    """An expression composes or compares morphisms whose domains and
    codomains do not line up.

    Carries the offending expression (when known) so reports can show
    exactly which sub-term failed to type-check.
    """

    def __init__(self, message: str, expr=None):
        super().__init__(message)
        self.expr = expr


class UnboundRef(FrobcatError):
    """An expression references a named morphism, functor, or transformation
    component that is not bound in the evaluation environment."""


class NotFound(FrobcatError):
    """A search (for a dual, a structure map, an isomorphism, ...) exhausted
    its scope without finding a candidate."""


class HintInvalid(FrobcatError):
    """User-supplied candidate data (a dual assignment, a structure map)
    failed verification against its defining equations."""


class MissingStructure(FrobcatError):
    """An operation needs structure data (monoidal / comonoidal structure on
    a functor, duals on a category) that the input does not carry."""


class ScopeTooLarge(FrobcatError):
    """An exhaustive enumeration was requested over a scope too large to
    enumerate; re-run with hints or a smaller instance."""


class CoherenceFailure(FrobcatError):
    """A defining coherence equation failed during construction of a derived
    structure (so the construction cannot proceed)."""


class NotInvertible(FrobcatError):
    """A morphism that a construction must invert has no two-sided inverse
    in scope."""


class InverseFailure(FrobcatError):
    """A claimed inverse failed one of its two composite-identity checks."""


class SnakeFailure(FrobcatError):
    """A candidate dual pair failed one of the two triangle ("snake")
    identities."""


class CommonCompositeMismatch(FrobcatError):
    """Two formulas that must define the same morphism evaluated to
    different values."""


class StructuresDisagree(FrobcatError):
    """Two independent derivation routes produced different structure maps
    where agreement is required."""


class FrobeniusFailure(FrobcatError):
    """A synthesized or supplied pair of monoidal and comonoidal structures
    failed the interaction law that makes the functor Frobenius monoidal."""
