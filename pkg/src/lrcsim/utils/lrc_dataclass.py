import abc
import dataclasses
from typing import Any

import jax
import jax_dataclasses

try:
    from typing import Self
except ImportError:
    from typing_extensions import Self


@jax_dataclasses.pytree_dataclass
class LrcDataclass(abc.ABC):
    """Class extending `jax_dataclasses.pytree_dataclass` instances with utilities."""

    @staticmethod
    def signature(tree: Any) -> tuple:
        """
        Describe what a PyTree holds, ignoring the number of codewords.

        Args:
            tree: The PyTree to consider.

        Returns:
            The tree structure, which includes the static fields (e.g. the
            alphabet size), and the trailing shape of each array leaf.
        """

        leaves, structure = jax.tree_util.tree_flatten(tree)

        return structure, tuple(
            tuple(leaf.shape[1:]) if hasattr(leaf, "shape") else None
            for leaf in leaves
        )

    def replace(self: Self, validate: bool = False, **kwargs) -> Self:
        """
        Return a new object replacing the specified fields with new values.

        Args:
            validate: Whether to check that the new object holds codes with the
                same alphabet and block-length.
            **kwargs: The fields to replace.

        Returns:
            A new object with the specified fields replaced.

        Raises:
            ValueError: If the validation fails.
        """

        obj = dataclasses.replace(self, **kwargs)

        if validate and LrcDataclass.signature(obj) != LrcDataclass.signature(self):
            msg = "Replacing {} changes the alphabet or the block-length of {}"
            raise ValueError(msg.format(sorted(kwargs), type(self).__name__))

        return obj
