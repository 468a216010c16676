"""Betti degrees and SIFRE criteria for numerical and affine semigroup rings."""

__version__ = "0.1.0"
