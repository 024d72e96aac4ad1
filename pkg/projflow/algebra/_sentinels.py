from typing import Final


class _NotHomogeneousType:
    """Sentinel for a rational function with no homogeneity degree."""

    def __repr__(self):
        return "<NOT_HOMOGENEOUS>"

    def __bool__(self) -> bool:
        return False


class _AnyDegreeType:
    """Sentinel for the zero function, homogeneous of every degree."""

    def __repr__(self):
        return "<ANY_DEGREE>"

    def __bool__(self) -> bool:
        return False


NOT_HOMOGENEOUS: Final[_NotHomogeneousType] = _NotHomogeneousType()
ANY_DEGREE: Final[_AnyDegreeType] = _AnyDegreeType()
