"""Frame codes: binary and Z4 code constructions, markings and framed VOA decompositions."""

__version__ = "0.1.0"
