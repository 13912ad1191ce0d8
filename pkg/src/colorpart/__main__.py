import sys

from colorpart.cli import main

sys.exit(main())
