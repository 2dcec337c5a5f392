#!/usr/bin/env python3
"""
Launcher for the command-line tool: ``python run_cli.py <command> ...``.
Exit status comes from ``src.cli.main.run`` (0 ok, 1 domain error, 2 usage).
"""
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

from src.cli.main import main

if __name__ == "__main__":
    main()
