"""HTTP facade over the index engine."""

from .app import create_app

__all__ = ["create_app"]
