from app.routes.cli import cli

__all__ = [
    "cli"
]
