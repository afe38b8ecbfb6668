import sys

from polarity.main import main

sys.exit(main())
