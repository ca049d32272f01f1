"""Exact classification of extended magical sl2-triples of real forms of
simple complex Lie algebras, with Slodowy-slice moduli dimension arithmetic."""

__version__ = "0.1.0"
