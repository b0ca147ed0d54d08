"""Integral simplicial homology via boundary matrices and Smith normal form."""

from dataclasses import dataclass

from .errors import DimensionError, StructuralError
from .exact_linalg import smith_normal_form


@dataclass(frozen=True)
class ChainComplex:
    dims: tuple
    # boundaries[k] is the matrix of d_k : C_k -> C_{k-1}, rows indexed by
    # (k-1)-simplices; boundaries[0] is the augmentation when reduced
    boundaries: tuple
    augmented: bool
    simplices: tuple = ()


@dataclass(frozen=True)
class HomologyProfile:
    ranks: tuple    # free rank of H_i (reduced when `reduced`)
    torsion: tuple  # invariant factors > 1 per degree
    reduced: bool = True

    def rank(self, i):
        return self.ranks[i] if 0 <= i < len(self.ranks) else 0

    @property
    def torsion_free(self):
        return not any(self.torsion)

    @property
    def euler_characteristic(self):
        return sum((-1) ** i * b for i, b in enumerate(self.ranks))

    def padded(self, length):
        r = tuple(self.ranks[:length]) + (0,) * (length - len(self.ranks))
        t = tuple(self.torsion[:length]) + ((),) * (length - len(self.torsion))
        return HomologyProfile(r, t, self.reduced)

    def __str__(self):
        h = "H~" if self.reduced else "H"
        parts = []
        for i, (b, tor) in enumerate(zip(self.ranks, self.torsion)):
            terms = ([f"Z^{b}"] if b else []) + [f"Z/{d}" for d in tor]
            parts.append(f"{h}_{i} = {' + '.join(terms) or '0'}")
        return ", ".join(parts)


def chain_complex(simplices, reduced=False, order=None):
    """Simplicial chain complex of a complex given by its list of simplices.

    ``simplices`` may be an OrderComplex or any iterable of vertex tuples
    closed under taking faces. Vertices inside a simplex are ordered by
    ``order`` (a key function; default: their natural order), and the face
    dropping position ``j`` gets sign ``(-1)**j``.
    """
    if hasattr(simplices, "simplices"):
        simplices = simplices.simplices
    key = order or (lambda x: x)
    by_dim = {}
    for s in simplices:
        s = tuple(sorted(s, key=key))
        by_dim.setdefault(len(s) - 1, set()).add(s)
    top = max(by_dim, default=-1)
    cells = [sorted(by_dim.get(k, ()), key=lambda s: [key(x) for x in s])
             for k in range(top + 1)]
    index = [{s: i for i, s in enumerate(c)} for c in cells]
    mats = []
    if reduced:
        mats.append([[1] * len(cells[0])] if cells else [])
    else:
        mats.append([])
    for k in range(1, top + 1):
        m = [[0] * len(cells[k]) for _ in cells[k - 1]]
        for col, s in enumerate(cells[k]):
            for j in range(len(s)):
                face = s[:j] + s[j + 1:]
                row = index[k - 1].get(face)
                if row is None:
                    raise DimensionError(f"face {face} of {s} is missing")
                m[row][col] = -1 if j % 2 else 1
        mats.append(m)
    for k in range(1, len(mats)):
        _assert_composite_zero(mats[k - 1], mats[k], k)
    return ChainComplex(tuple(len(c) for c in cells), tuple(mats), reduced,
                        tuple(tuple(c) for c in cells))


def _assert_composite_zero(lower, upper, k):
    if not lower or not upper:
        return
    cols = len(upper[0])
    for row in lower:
        nz = [(j, x) for j, x in enumerate(row) if x]
        for c in range(cols):
            if sum(x * upper[j][c] for j, x in nz):
                raise StructuralError(f"boundary maps d_{k - 1} d_{k} do not compose to 0")


def homology(cc):
    """Free ranks and torsion of each homology group of ``cc``."""
    snf = []
    for m in cc.boundaries:
        snf.append(smith_normal_form(m) if m and m[0] else [])
    snf.append([])
    ranks, torsion = [], []
    for i, dim in enumerate(cc.dims):
        rk_out = len(snf[i]) if i > 0 or cc.augmented else 0
        rk_in = len(snf[i + 1])
        ranks.append(dim - rk_out - rk_in)
        torsion.append(tuple(d for d in snf[i + 1] if d > 1))
    return HomologyProfile(tuple(ranks), tuple(torsion), cc.augmented)


def expected_dual_homology(n, b1):
    """Reduced homology of the connected sum of S^(n-1) with b1 copies of S^1 x S^(n-2).

    Degrees 0..n-1; always torsion-free.
    """
    if n < 2:
        raise DimensionError("expected dual homology needs n >= 2")
    if b1 < 0:
        raise DimensionError("b1 must be nonnegative")
    r = [0] * n
    if n == 2:
        r[0], r[1] = b1, b1 + 1
    else:
        r[1] += b1
        r[n - 2] += b1
        r[n - 1] += 1
    return HomologyProfile(tuple(r), ((),) * n, True)
