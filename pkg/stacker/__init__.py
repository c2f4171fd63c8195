"""
stacker: stackable and autostackable group structures as bounded complete prefix-rewriting
systems, with automata certificates, van Kampen diagrams and independent word-problem oracles.
"""

from .manager import StackingManager

__version__ = "0.1.0"
__all__ = ["StackingManager"]
