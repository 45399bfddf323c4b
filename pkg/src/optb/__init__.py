"""Generalized torsion in once-punctured torus bundle groups."""

__version__ = "0.1.0"
