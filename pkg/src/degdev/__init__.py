"""Degree deviation, regularization and spectral inequality audits for graphs."""

__version__ = "0.1.0"
