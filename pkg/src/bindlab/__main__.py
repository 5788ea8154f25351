import sys

from bindlab.cli import main

sys.exit(main())
