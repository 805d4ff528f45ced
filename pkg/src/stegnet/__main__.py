import sys

from stegnet.cli import main

sys.exit(main())
