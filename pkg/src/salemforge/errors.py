"""Exception types shared across the package."""


class DomainError(ValueError):
    """An input lies outside the domain of an operation."""


class InternalError(RuntimeError):
    """An exact identity that must hold failed; indicates an arithmetic bug."""


class NotLoxodromic(ValueError):
    """A numeric orbit did not grow linearly (elliptic or parabolic element)."""


class VahlenViolation(ValueError):
    """A 2x2 Clifford matrix fails one of the Vahlen conditions.

    ``condition`` names the violated condition: ``"pseudo_determinant"``,
    ``"ab_star_vector"``, ``"cd_star_vector"`` or ``"algebra"``.
    """

    def __init__(self, condition, detail=""):
        self.condition = condition
        self.detail = detail
        super().__init__(f"{condition}: {detail}" if detail else condition)
