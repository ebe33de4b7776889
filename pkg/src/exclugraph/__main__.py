import sys

from exclugraph.cli.main import main

sys.exit(main())
