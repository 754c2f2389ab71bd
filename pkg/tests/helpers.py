"""Independent oracles and exhaustive enumerators shared by the tests.

Everything here is deliberately naive: Fraction-based elimination, cofactor
determinants, brute-force enumeration.  The point is to agree with the
package through different code paths.
"""

from fractions import Fraction
from typing import Iterable, Sequence

from binheight.hibi import Poset
from binheight.linalg import IntegerMatrix, smith_normal_form
from binheight.polyomino import CellCollection
from binheight.toric import ToricConfiguration

LETTERS = "abcdefgh"


def cofactor_det(rows: Sequence[Sequence[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [[r[k] for k in range(n) if k != j] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * cofactor_det(minor)
    return total


def naive_rank(rows: Iterable[Sequence[int]]) -> int:
    work = [[Fraction(x) for x in r] for r in rows]
    rank = 0
    cols = len(work[0]) if work else 0
    for c in range(cols):
        pivot = None
        for i in range(rank, len(work)):
            if work[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        work[rank], work[pivot] = work[pivot], work[rank]
        pr = work[rank]
        for i in range(len(work)):
            if i != rank and work[i][c]:
                f = work[i][c] / pr[c]
                work[i] = [a - f * b for a, b in zip(work[i], pr)]
        rank += 1
    return rank


def lattice_member(vectors: Sequence[Sequence[int]], target: Sequence[int]) -> bool:
    """Membership of target in the integer row span of arbitrary vectors.

    Solves x*M = target through the Smith form: with U*M*V = D the system
    becomes y*D = target*V, solvable over the integers iff each coordinate
    of target*V is divisible by the matching divisor (zero past the rank).
    """
    vecs = [list(v) for v in vectors]
    if not vecs:
        return not any(target)
    m = IntegerMatrix.from_rows(vecs)
    d = smith_normal_form(m)
    tv = [
        sum(target[i] * d.v.entry(i, j) for i in range(m.cols))
        for j in range(m.cols)
    ]
    for j, val in enumerate(tv):
        if j < len(d.divisors):
            if val % d.divisors[j]:
                return False
        elif val:
            return False
    return True


def labeled_posets(n: int) -> list[frozenset[tuple[int, int]]]:
    """All strict partial orders on {0..n-1}, as sets of (lower, upper) pairs.

    Built by recursive extension: each poset on k elements restricts to one
    on k-1, and the new element is determined by its down-set and up-set.
    """
    if n == 0:
        return [frozenset()]
    out = []
    new = n - 1
    for rel in labeled_posets(n - 1):
        down_sets = []
        up_sets = []
        for bits in range(1 << (n - 1)):
            s = {i for i in range(n - 1) if bits >> i & 1}
            if all(a in s for (a, b) in rel if b in s):
                down_sets.append(s)
            if all(b in s for (a, b) in rel if a in s):
                up_sets.append(s)
        for d in down_sets:
            for u in up_sets:
                if d & u:
                    continue
                if all((a, b) in rel for a in d for b in u):
                    out.append(
                        rel
                        | {(a, new) for a in d}
                        | {(new, b) for b in u}
                    )
    return out


def poset_from_relation(n: int, rel: Iterable[tuple[int, int]]) -> Poset:
    labels = tuple(LETTERS[:n])
    return Poset(
        elements=labels,
        covers=tuple((labels[a], labels[b]) for a, b in sorted(rel)),
    )


def fixed_polyominoes(max_cells: int) -> dict[int, list[tuple[tuple[int, int], ...]]]:
    """Edge-connected cell sets up to translation, keyed by cell count."""

    def canon(cells):
        x0 = min(c[0] for c in cells)
        y0 = min(c[1] for c in cells)
        return tuple(sorted((x - x0, y - y0) for x, y in cells))

    sizes: dict[int, set] = {1: {canon([(0, 0)])}}
    for k in range(2, max_cells + 1):
        grown = set()
        for p in sizes[k - 1]:
            for (x, y) in p:
                for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1)):
                    nb = (x + dx, y + dy)
                    if nb not in p:
                        grown.add(canon(list(p) + [nb]))
        sizes[k] = grown
    return {k: sorted(v) for k, v in sizes.items()}


def coordinate_configuration(collection: CellCollection) -> ToricConfiguration:
    """0/1 configuration with one row per x-line and per y-line of vertices.

    The vertex (x, y) maps to e_x + e_y, which kills every inner 2-minor;
    whether the minors span the whole kernel depends on the shape and is
    certified (or rejected) at presentation construction.
    """
    xs = sorted({v[0] for v in collection.vertices})
    ys = sorted({v[1] for v in collection.vertices})
    xi = {x: k for k, x in enumerate(xs)}
    yi = {y: k for k, y in enumerate(ys)}
    height = len(xs) + len(ys)
    cols = []
    for (x, y) in collection.vertices:
        col = [0] * height
        col[xi[x]] = 1
        col[len(xs) + yi[y]] = 1
        cols.append(col)
    return ToricConfiguration(
        IntegerMatrix.from_rows(
            [[c[i] for c in cols] for i in range(height)], cols=len(cols)
        )
    )
