import sys

from gapsets.cli import main

sys.exit(main())
