"""
Main entry point for the gmdual package when executed as a module.

This allows running the package with `python -m gmdual`.
"""

from gmdual.cli import main

if __name__ == '__main__':
    main()
