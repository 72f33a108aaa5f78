"""Folding Coxeter graphs along symmetry groups and deciding when the
orbit sums of positive roots match the folded root system."""

__version__ = "0.1.0"
