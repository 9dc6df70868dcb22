"""Periodic Dedekind sums over cyclotomic fields."""

__version__ = "0.1.0"
