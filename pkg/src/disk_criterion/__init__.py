"""disk-criterion: decide whether a planar cubical set is a closed disk, and parameterize its boundary."""

__version__ = "0.1.0"
