import sys

from polychain.cli import main

sys.exit(main())
