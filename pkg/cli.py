import sys

from adapters.cli.argparse_adapter import main

if __name__ == "__main__":
    sys.exit(main())
