import sys

from powersums.cli import main

sys.exit(main())
