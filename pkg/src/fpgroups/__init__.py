"""Exact tools for finitely presented groups.

Free-group words, Thue systems, named presentation families, small
cancellation and Dehn reduction, van Kampen diagrams, homology of
presentation complexes and unimodular symmetric forms.
"""
from fpgroups._kernels import BACKEND
from fpgroups.presentations import Presentation, deficiency
from fpgroups.rewriting import ThueSystem
from fpgroups.words import IDENTITY, Word, format_word, parse_word

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "IDENTITY",
    "Presentation",
    "ThueSystem",
    "Word",
    "deficiency",
    "format_word",
    "parse_word",
]
