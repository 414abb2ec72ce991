import sys

from legalsum.cli import main

sys.exit(main())
