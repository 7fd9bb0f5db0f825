"""FastAPI service wrapping the snacap core package."""

from .app import app, create_app

__all__ = ["app", "create_app"]
