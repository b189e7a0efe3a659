"""Entanglement monotones of bipartite qudit states from statistical
correlators (mutual predictability, mutual information, Pearson
correlation), analytically and from measured coincidence matrices."""

from .numerics import USING_COMPILED_KERNEL

__all__ = ["USING_COMPILED_KERNEL"]
__version__ = "0.1.0"
