"""Local hole detection in binary images through short-filtration persistence."""

__version__ = "0.3.0"
