"""Print the degree 2 and 4 presentation for the two-circle example with normals v, w, -v, -w.

    python scripts/two_circle_presentation.py [template]
"""

import sys

from toric_origami.cli import main

if __name__ == "__main__":
    path = sys.argv[1] if len(sys.argv) > 1 else "t_figure1"
    sys.exit(main(["ring4d", path]))
