"""Exact Murnaghan-Nakayama rules for Macdonald polynomials, with Kostka and Green tables."""

__version__ = "0.1.0"
