#!/usr/bin/env python3
"""
Graph coloring toolkit - Main Entry Point

Runs one command of the command-line front-end and exits with its code.
"""
import sys

from cli.commands import main

if __name__ == "__main__":
    sys.exit(main())
