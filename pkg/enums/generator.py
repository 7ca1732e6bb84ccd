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


class CandidateGenerator(StrEnum):
    """
    Families of candidate point sets explored by the counterexample search.

    Members:
        PERTURBED_NINEGON : Regular n-gon with every third vertex pulled towards
                            the center, then perturbed.
        SYMMETRIC_NGON    : Regular n-gon (n divisible by 3) with radii that
                            repeat with period n/3, giving threefold symmetry,
                            then perturbed.
        RANDOM_CONVEX     : Random strictly convex polygon.

    Usage:
        >>> CandidateGenerator.RANDOM_CONVEX
        <CandidateGenerator.RANDOM_CONVEX: 'random-convex'>
    """

    PERTURBED_NINEGON = "perturbed-ninegon"
    SYMMETRIC_NGON = "symmetric-ngon"
    RANDOM_CONVEX = "random-convex"


class TrialOutcome(StrEnum):
    """
    Classification of a single search trial; the statistics count these.
    """

    FOUND = "found"
    NOT_STRICTLY_CONVEX = "not_strictly_convex"
    FULL_SET_CSC = "full_set_csc"
    SUBSET_NOT_CSC = "subset_not_csc"
