import sys

from ddhooks.v1.cli import main

if __name__ == "__main__":
    sys.exit(main())
