#!/usr/bin/env python3
"""isovset - finite isovariant simplicial sets.

Entry point for the command-line application.
"""

import sys

from cli import run


def main():
    """Main entry point for the application."""
    sys.exit(run())


if __name__ == "__main__":
    main()
