try:
    from enum import StrEnum
except ImportError:  # Python < 3.11
    from enum import Enum

    class StrEnum(str, Enum):
        def __str__(self) -> str:
            return str(self.value)

        def __format__(self, format_spec: str) -> str:
            return str(self.value).__format__(format_spec)

        @staticmethod
        def _generate_next_value_(name, start, count, last_values):
            return name.lower()


class Verdict(StrEnum):
    """
    Outcome of the c.s.c. decision procedure.

    Members:
        YES      : The set lies on the boundary of a centrally symmetric convex
                   body; a verified witness center accompanies the verdict.
        NO       : No admissible center exists.
        REJECTED : The input is weakly but not strictly convex, which the
                   region constructions do not handle.

    Usage:
        >>> Verdict.YES
        <Verdict.YES: 'YES'>
        >>> str(Verdict.REJECTED)
        'REJECTED'
    """

    YES = "YES"
    NO = "NO"
    REJECTED = "REJECTED"


class PointStatus(StrEnum):
    """
    Position of an input point relative to the convex hull of its set.

    Usage:
        >>> PointStatus.ON_EDGE
        <PointStatus.ON_EDGE: 'on_edge'>
    """

    VERTEX = "vertex"
    ON_EDGE = "on_edge"
    INTERIOR = "interior"
