"""Lines, lattices and point counts certifying the Picard number of the quintic S_a."""

from .counting import TOOL_VERSION as __version__

__all__ = ["__version__"]
