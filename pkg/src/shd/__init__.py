"""Combinatorics of balanced sutured Heegaard diagrams."""
__version__ = "0.1.0"
