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


class Algorithm(StrEnum):
    """
    Enumeration of the constructions available for the admissible-center region.

    The value is the name accepted on the command line (``--algorithm``).

    Members:
        NAIVE   : Intersects the triangle regions of every 3-subset of the set.
        TALLEST : Intersects only the regions of the tallest triangles, one
                  (or more, on ties) per hull edge.

    Usage:
        >>> Algorithm.NAIVE
        <Algorithm.NAIVE: 'naive'>
        >>> str(Algorithm.TALLEST)
        'tallest'
    """

    NAIVE = "naive"
    TALLEST = "tallest"
