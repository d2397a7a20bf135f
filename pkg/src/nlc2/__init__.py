"""Recognition, canonical decomposition, and isomorphism for NLC-width-2 graphs."""

from .graphs import (
    Graph,
    build,
    complement,
    partial_complement,
    induced,
    connected_components,
    co_connected_components,
    is_module,
)

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "build",
    "complement",
    "partial_complement",
    "induced",
    "connected_components",
    "co_connected_components",
    "is_module",
]
