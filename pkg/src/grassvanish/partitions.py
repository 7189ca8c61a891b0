"""Partitions as plain tuples of positive integers, weakly decreasing.

Trailing zeros are never stored; helpers that need fixed-length vectors pad
at the call site with :func:`pad`.
"""

from collections import Counter
from math import comb, prod


def partition(parts):
    """Normalize an iterable of nonnegative integers into a partition tuple.

    Raises ValueError if the nonzero parts are not weakly decreasing or if a
    part is negative.
    """
    parts = tuple(int(x) for x in parts)
    if any(x < 0 for x in parts):
        raise ValueError(f"negative part in {parts}")
    if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
        raise ValueError(f"parts not weakly decreasing: {parts}")
    end = len(parts)
    while end and parts[end - 1] == 0:
        end -= 1
    return parts[:end]


def pad(lam, n):
    """Return ``lam`` as a list of exactly ``n`` entries, zero padded."""
    if len(lam) > n:
        raise ValueError(f"{lam} has more than {n} parts")
    return list(lam) + [0] * (n - len(lam))


def weight(lam):
    return sum(lam)


def conjugate(lam):
    if not lam:
        return ()
    return tuple(sum(1 for x in lam if x > j) for j in range(lam[0]))


def hook_table(lam):
    """Hook lengths, one list per row: h(i,j) = lam_i - j + lam*_j - i + 1."""
    conj = conjugate(lam)
    return [[lam[i] - j + conj[j] - i - 1 for j in range(lam[i])] for i in range(len(lam))]


def hooks(lam):
    """All hook lengths of ``lam`` as a flat list, row by row."""
    return [h for row in hook_table(lam) for h in row]


def durfee_rank(lam):
    d = 0
    while d < len(lam) and lam[d] >= d + 1:
        d += 1
    return d


def contains(small, big):
    """True iff ``small`` fits inside ``big`` (missing parts read as 0)."""
    if len(small) > len(big):
        return False
    return all(x <= y for x, y in zip(small, big))


def insert_parts(lam, m):
    """The lam(m) construction: m copies of the Durfee rank after row rank."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    d = durfee_rank(lam)
    return lam[:d] + (d,) * m + lam[d:] if d else lam


def enumerate_box(rows, cols):
    """Yield every partition in a rows x cols box, by weight then lex order."""
    if rows < 1 or cols < 1:
        raise ValueError("box dimensions must be positive")

    def fill(n, length, cap):
        if n == 0:
            yield ()
            return
        if length == 0:
            return
        for first in range(1, min(n, cap) + 1):
            for rest in fill(n - first, length - 1, first):
                yield (first,) + rest

    for n in range(rows * cols + 1):
        yield from sorted(fill(n, rows, cols))


def box_count(rows, cols):
    return comb(rows + cols, rows)


def _strips(shape, size, prev_counts, max_length):
    """Horizontal strips of ``size`` cells added to ``shape`` obeying the
    lattice condition against the previous label's per-row counts.

    Yields (new_shape, per-row counts of the new label).
    """
    n_rows = min(len(shape) + 1, max_length)
    cur = list(shape) + [0]

    def rec(j, left, cum_new, cum_prev, added):
        if left == 0:
            yield added
            return
        if j >= n_rows:
            return
        cap = left if j == 0 else min(left, cur[j - 1] - cur[j])
        if prev_counts is not None:
            # cells of this label in rows <= j never outnumber the previous
            # label's cells in rows < j
            cap = min(cap, cum_prev - cum_new)
        for x in range(cap, -1, -1):
            prev_here = prev_counts[j] if prev_counts is not None and j < len(prev_counts) else 0
            yield from rec(j + 1, left - x, cum_new + x, cum_prev + prev_here, added + [x])

    for added in rec(0, size, 0, 0, []):
        new = [cur[i] + (added[i] if i < len(added) else 0) for i in range(len(cur))]
        yield partition(new), added


def lr_product(lam, mu, max_length=None):
    """Littlewood-Richardson coefficients of s_lam * s_mu.

    Enumerates LR skew tableaux strip by strip: the cells labelled k form a
    horizontal strip and the reverse reading word stays a lattice word.
    Only shapes with at most ``max_length`` rows are kept.
    """
    if max_length is None:
        max_length = len(lam) + len(mu)
    out = Counter()
    if len(lam) > max_length:
        return out

    def rec(shape, k, prev_counts):
        if k == len(mu):
            out[shape] += 1
            return
        for new, counts in _strips(shape, mu[k], prev_counts, max_length):
            rec(new, k + 1, counts)

    rec(lam, 0, None)
    return out


def bracket_to_partition(shape, e):
    """Convert bracket data to a partition of at most ``e`` rows.

    ``[a, b]`` is the rank-1 shape with first part a+1 and first column e-b.
    ``[a, b, c, d]`` is the rank-2 shape with first parts a+2, b+2 and first
    two columns e-c, e-d.
    """
    if len(shape) == 2:
        a, b = shape
        if a < 0 or not 0 <= b <= e - 1:
            raise ValueError(f"invalid rank-1 bracket {list(shape)} for e={e}")
        return (a + 1,) + (1,) * (e - b - 1)
    if len(shape) == 4:
        a, b, c, d = shape
        if not (a >= b >= 0 and 0 <= c <= d <= e - 2):
            raise ValueError(f"invalid rank-2 bracket {list(shape)} for e={e}")
        return (a + 2, b + 2) + (2,) * (e - d - 2) + (1,) * (d - c)
    raise ValueError(f"bracket must have 2 or 4 entries, got {list(shape)}")


def hook_functor(alpha, beta):
    """Shape of Z^{alpha,beta}: (beta - alpha, 1^alpha)."""
    if not 0 <= alpha < beta:
        raise ValueError("need 0 <= alpha < beta")
    return (beta - alpha,) + (1,) * alpha


def schur_dimension(lam, e):
    """Dimension of the GL(e) Schur module, by the hook-content formula."""
    if len(lam) > e:
        raise ValueError(f"{lam} has more than {e} rows")
    table = hook_table(lam)
    num = prod(e + j - i for i in range(len(lam)) for j in range(lam[i]))
    den = prod(h for row in table for h in row)
    return num // den
