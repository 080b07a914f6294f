"""Generalized minimum distance functions, v-numbers and Reed-Muller-type codes."""

__version__ = "0.1.0"
