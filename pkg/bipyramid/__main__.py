import sys

from bipyramid.main import main

sys.exit(main())
