import sys

from orthogoval.cli import main

sys.exit(main())
