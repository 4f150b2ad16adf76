import sys

from src.cli_core import main


if __name__ == "__main__":
    sys.exit(main())
