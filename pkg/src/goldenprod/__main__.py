import sys

from goldenprod.cli import main

sys.exit(main())
