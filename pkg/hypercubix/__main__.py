import sys

from hypercubix.cli.cli import main

sys.exit(main())
