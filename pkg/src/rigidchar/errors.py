"""Exception types shared across the package."""


class RigidCharError(Exception):
    """Base class for all errors raised by this package."""


class RankOutOfRange(RigidCharError):
    """Series/rank combination outside the supported classical range."""


class DimensionMismatch(RigidCharError):
    """Vector length does not match the rank of the root system."""


class NotDominant(RigidCharError):
    """A dominant weight was required but a non-dominant one was given."""


class MissingFamilyRow(RigidCharError):
    """Peeling needed a character row that the family does not contain."""


class ZeroDenominator(RigidCharError):
    """The multiplicity recursion hit a vanishing denominator (a bug)."""


class SupportFull(RigidCharError):
    """The difference touches every simple root, so no proper subdiagram exists."""


class SupportNotFull(RigidCharError):
    """A full-support root vector was required."""


class InternalCaseGap(RigidCharError):
    """None of the reconstruction's case branches applies."""


class WindowTooWide(RigidCharError):
    """The peeling window has full support, so its queries are not licensed."""


class OracleRefused(RigidCharError):
    """A boundary-oracle query fell outside the clause's declared domain."""


class InsufficientCoverage(RigidCharError):
    """The family table does not cover all rows needed by the check."""


class NoViolationFound(RigidCharError):
    """A perturbed family survived the bounded condition sweep."""
