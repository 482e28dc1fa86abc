import sys

from mixsim.cli import main

sys.exit(main())
