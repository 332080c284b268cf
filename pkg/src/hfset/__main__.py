import sys

from hfset.cli.main import main

sys.exit(main())
