import itertools
import math
from collections.abc import Iterator, Sequence

from lrcsim import exceptions, logging
from lrcsim.config import get_limits


class Subsets:
    """
    Canonical enumeration of coordinate subsets.

    Subsets are visited by increasing cardinality, and lexicographically
    within each cardinality.
    """

    @staticmethod
    def count(n_items: int, max_size: int, min_size: int = 0) -> int:
        """
        Count the subsets visited by `Subsets.canonical`.

        Args:
            n_items: The number of items to pick from.
            max_size: The largest subset size.
            min_size: The smallest subset size.

        Returns:
            The number of subsets with size in [min_size, max_size].
        """

        return sum(math.comb(n_items, s) for s in range(min_size, max_size + 1))

    @staticmethod
    def check_budget(n_items: int, max_size: int, min_size: int = 0) -> int:
        """
        Make sure that a search fits the combinatorial budget.

        Args:
            n_items: The number of items to pick from.
            max_size: The largest subset size.
            min_size: The smallest subset size.

        Returns:
            The number of subsets the search visits.

        Raises:
            TooLarge: If the number of subsets exceeds the active limit.
        """

        count = Subsets.count(n_items=n_items, max_size=max_size, min_size=min_size)
        limit = get_limits().max_subsets

        if count > limit:
            msg = "Searching {} subsets exceeds the budget of {}"
            raise exceptions.TooLarge(msg.format(count, limit))

        logging.debug(msg=f"Visiting up to {count} subsets of {n_items} coordinates")

        return count

    @staticmethod
    def canonical(
        items: Sequence[int], max_size: int, min_size: int = 0
    ) -> Iterator[tuple[int, ...]]:
        """
        Enumerate the subsets of the given items in the canonical order.

        Args:
            items: The items to pick from.
            max_size: The largest subset size.
            min_size: The smallest subset size.

        Yields:
            The subsets, as sorted tuples.
        """

        items = sorted(items)

        for size in range(min_size, min(max_size, len(items)) + 1):
            yield from itertools.combinations(items, size)
