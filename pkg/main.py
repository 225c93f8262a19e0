"""Entry point for hmcat."""

from hmcat.cli import app

if __name__ == "__main__":
    app()
