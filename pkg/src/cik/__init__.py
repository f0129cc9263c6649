"""Exact and numeric toolkit for the functions v^j/(1-e^-v) and their derivatives."""

from .combinatorics import RouteDisagreement, bernoulli, stirling2

__version__ = "0.1.0"
