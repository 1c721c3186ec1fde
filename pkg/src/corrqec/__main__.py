import sys

from corrqec.cli import main

sys.exit(main())
