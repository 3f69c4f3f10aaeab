"""Presentations, oracles and numerics for discriminant complements of Weierstrass fibrations."""

__version__ = "0.1.0"
