from enum import Enum


class ProjectBand(Enum):
    """
    Project size bands from which an actual project cost is drawn.

    Amounts are in thousands. ANY first picks one of the three bands at
    random and then draws the cost from it.
    """

    SMALL = "small"
    MEDIUM = "medium"
    LARGE = "large"
    ANY = "any"

    @property
    def cost_range(self) -> tuple[float, float]:
        """Inclusive (low, high) cost range of a concrete band"""
        if self is ProjectBand.ANY:
            raise ValueError("The 'any' band has no single cost range")
        return BAND_RANGES[self]

    @classmethod
    def concrete(cls) -> list["ProjectBand"]:
        return [cls.SMALL, cls.MEDIUM, cls.LARGE]


BAND_RANGES: dict[ProjectBand, tuple[float, float]] = {
    ProjectBand.SMALL: (100.0, 500.0),
    ProjectBand.MEDIUM: (501.0, 900.0),
    ProjectBand.LARGE: (901.0, 1300.0),
}
