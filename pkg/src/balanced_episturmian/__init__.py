"""Balanced episturmian words."""

from importlib.metadata import version

__version__ = version("balanced-episturmian")
