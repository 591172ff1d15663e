"""Oriented paths and cycles in tournaments: embeddings, exception catalogues
and exhaustive verification."""

from __future__ import annotations

__version__ = "0.1.0"
