"""Exception hierarchy.  Every domain error carries a stable machine-readable ``code``."""


class ProjStructError(Exception):
    code = "domain_error"


class PoleAtCenter(ProjStructError):
    code = "pole_at_center"


class DivisionByZeroConstantTerm(ProjStructError, ZeroDivisionError):
    code = "division_by_zero_constant_term"


class NonzeroConstantTerm(ProjStructError):
    code = "nonzero_constant_term"


class NotInvertible(ProjStructError):
    code = "not_invertible"


class NotLocallyInjective(ProjStructError):
    code = "not_locally_injective"


class DimensionMismatch(ProjStructError):
    code = "dimension_mismatch"


class NoRotationOrder(ProjStructError):
    code = "no_rotation_order"


class ExcludedCase(ProjStructError):
    code = "excluded_case"


class NegativeDimension(ProjStructError):
    code = "negative_dimension"


class NotHyperbolic(ProjStructError):
    code = "not_hyperbolic"


class InfiniteEnumeration(ProjStructError):
    code = "infinite_enumeration"


class IncompatibleMultiplier(ProjStructError):
    code = "incompatible_multiplier"


class Disconnected(ProjStructError):
    code = "disconnected"


class GroupTooLarge(ProjStructError):
    code = "group_too_large"


class GenusTooSmall(ProjStructError):
    code = "genus_too_small"


class ParseError(ProjStructError):
    code = "parse_error"
