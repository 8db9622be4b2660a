"""Command-line front end: JSON/TOML problem documents in, reports out."""
from .dispatch import run
from .main import main

__all__ = ["main", "run"]
