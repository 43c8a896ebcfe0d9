import sys

from bvquery.cli import main

sys.exit(main(len(sys.argv), sys.argv))
