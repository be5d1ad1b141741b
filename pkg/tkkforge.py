"""
Entry point: python tkkforge.py <subcommand> ...
"""
from cli.main import app

if __name__ == "__main__":
    app()
