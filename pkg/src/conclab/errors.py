"""Exception hierarchy.

Everything user-facing derives from ConclabError; the CLI maps these to
exit code 2.  Verdicts from the obstruction pipelines are values, never
exceptions.
"""


class ConclabError(Exception):
    """Base class for all errors raised by this package."""


class ValidationError(ConclabError):
    """Malformed or out-of-contract input (bad JSON, wrong field, bad
    parameter range).  Messages include a field path where applicable."""


class DegenerateFormError(ConclabError):
    """The Seifert pencil det(t*A - A^T) vanishes identically; signature
    data is undefined for such a matrix."""


class JumpEvaluationError(ConclabError):
    """Signature evaluation was requested exactly at a jump point."""


class NotLSpaceKnotError(ConclabError):
    """The polynomial fails the staircase coefficient test, so torsion
    coefficients do not compute correction terms for it."""


class SurgeryCoefficientError(ConclabError):
    """Surgery coefficient below the large-surgery threshold 2g - 1."""


class SizeBoundError(ConclabError):
    """Desk-scale enumeration bound exceeded."""


class CoprimalityError(ConclabError):
    """gcd(|H_1(M_0)|, q) != 1: the chosen companion polynomial is
    incompatible with q and the q-primary part is not what the model
    assumes."""


class FamilyChoiceError(ConclabError):
    """The covering parameter q is not an allowed choice for the given
    polynomial collection (q must avoid the excluded primes)."""


class MissingDataError(ConclabError):
    """An externally supplied correction-term table is required but was
    not given or does not cover the needed elements."""
