#!/usr/bin/env python3

import sys
from pathlib import Path

root_path = Path(__file__).parent
sys.path.insert(0, str(root_path))

from src.cli.cli import main

if __name__ == "__main__":
    sys.exit(main())
