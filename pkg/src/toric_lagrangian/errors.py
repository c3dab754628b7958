"""Exception types shared across the package."""


class RankDeficiencyError(ValueError):
    """A basis or Jacobian that must have full rank does not."""


class ValidationError(ValueError):
    """A quadric system fails one of the admissibility checks.

    ``system`` names the offending system (``"gamma"``, ``"delta"``,
    ``"stacked"`` or ``None`` when used standalone) and ``condition`` is one
    of ``"a"``, ``"b"``, ``"c"``, ``"delzant"`` or ``"dim_S"``.
    """

    def __init__(self, condition, message="", system=None):
        self.condition = condition
        self.system = system
        where = f"{system}: " if system else ""
        super().__init__(f"{where}condition ({condition}) failed" + (f": {message}" if message else ""))


class SamplingError(RuntimeError):
    """No admissible interior sample could be drawn."""
