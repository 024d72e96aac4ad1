import sys

from projflow.cli import main

sys.exit(main())
