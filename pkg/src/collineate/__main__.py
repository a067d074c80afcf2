"""
Allow running collineate as a module: python -m collineate
"""

from collineate.main import cli

if __name__ == "__main__":
    cli()
