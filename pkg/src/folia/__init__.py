"""Exact toolkit for singular holomorphic foliations on surfaces."""

__version__ = "0.1.0"
