"""Small template families for tests and experiments."""

from .polytope import DelzantPolytope
from .template import OrigamiTemplate

# square [0,4]^2 with its four corners cut off; the cuts are pairwise disjoint
OCTAGON = (
    ((1, 0), 0), ((0, 1), 0), ((-1, 0), 4), ((0, -1), 4),
    ((1, 1), -1), ((-1, -1), 7), ((1, -1), 3), ((-1, 1), 3),
)
OCTAGON_DIAGONALS = (4, 5, 6, 7)

# {0 <= x <= 3, 0 <= y <= 3, 1 <= x + y <= 5}
HEXAGON = (((0, 1), 0), ((-1, 0), 3), ((-1, -1), 5), ((0, -1), 3), ((1, 0), 0), ((1, 1), -1))


def polygon(rows, label=""):
    normals = [r[0] for r in rows]
    offsets = [r[1] for r in rows]
    return DelzantPolytope.from_inequalities(normals, offsets, label)


def octagon_template(num, edges, label="octagons"):
    """``num`` copies of the octagon; each edge ``(u, v, c)`` folds diagonal ``c``."""
    p = polygon(OCTAGON, "octagon")
    fe = [(u, OCTAGON_DIAGONALS[c], v, OCTAGON_DIAGONALS[c]) for u, v, c in edges]
    return OrigamiTemplate(2, (p,) * num, tuple(fe), label)


def hexagon_ring(k, label=None):
    """Ring of ``k`` (even) hexagons alternating the two diagonal folds; k = 2 gives a bigon."""
    p = polygon(HEXAGON, "H")
    edges = [(i, 2 if i % 2 == 0 else 5, (i + 1) % k, 2 if i % 2 == 0 else 5)
             for i in range(k)]
    return OrigamiTemplate(2, (p,) * k, tuple(edges), label or f"ring{k}")


def hexagon_chain(k, label=None):
    p = polygon(HEXAGON, "H")
    edges = [(i, 2 if i % 2 == 0 else 5, i + 1, 2 if i % 2 == 0 else 5)
             for i in range(k - 1)]
    return OrigamiTemplate(2, (p,) * k, tuple(edges), label or f"chain{k}")


def box(n, size=1):
    rows = []
    for i in range(n):
        e = [0] * n
        e[i] = 1
        rows.append((tuple(e), 0))
        rows.append((tuple(-x for x in e), size))
    return DelzantPolytope.from_inequalities([r[0] for r in rows], [r[1] for r in rows], f"box{n}")


def box_chain(n, k):
    """``k`` unit n-cubes folded alternately along x_n = 1 and x_n = 0."""
    p = box(n)
    top, bottom = 2 * n - 1, 2 * n - 2
    edges = [(i, top if i % 2 == 0 else bottom, i + 1, top if i % 2 == 0 else bottom)
             for i in range(k - 1)]
    return OrigamiTemplate(n, (p,) * k, tuple(edges), f"boxchain{n}x{k}")


def prism_template(k, ring):
    """Hexagonal prisms folded along the diagonal side facets."""
    rows = [((a, b, 0), c) for (a, b), c in HEXAGON] + [((0, 0, 1), 0), ((0, 0, -1), 1)]
    p = DelzantPolytope.from_inequalities([r[0] for r in rows], [r[1] for r in rows], "prism")
    m = k if ring else k - 1
    edges = [(i, 2 if i % 2 == 0 else 5, (i + 1) % k, 2 if i % 2 == 0 else 5)
             for i in range(m)]
    return OrigamiTemplate(3, (p,) * k, tuple(edges), f"prism{'ring' if ring else 'chain'}{k}")


def hirzebruch(k):
    """Hirzebruch trapezoid with normals (1,0), (0,1), (-1,-k), (0,-1)."""
    return polygon((((1, 0), 0), ((0, 1), 0), ((-1, -k), 2 + 2 * k), ((0, -1), 2)),
                   f"hirzebruch{k}")
