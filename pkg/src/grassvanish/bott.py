"""Independent recomputation of Grassmannian line bundle cohomology via Bott.

Omega^p of G(r,e) splits as a sum over lam in the r x (e-r) box with
|lam| = p. Twisting by det(Q)^l, with Q the rank-r quotient, a component
carries the GL(e) weight

    (l - lam_r, ..., l - lam_1, lam*_1, ..., lam*_{e-r})

with the quotient block first. This orientation is pinned by
oracle_table(1, 2, 1) == {(0, 0): {(1, 0): 1}}.
"""

from collections import Counter

from .partitions import conjugate, enumerate_box, pad


def cotangent_components(r, e, p):
    if not 0 <= p <= r * (e - r):
        raise ValueError(f"p={p} outside [0, {r * (e - r)}]")
    return [(lam, conjugate(lam)) for lam in enumerate_box(r, e - r) if sum(lam) == p]


def bott_step(c):
    """Dotted Weyl action: return (q, dominant weight) or None if singular."""
    e = len(c)
    v = [c[i] + e - 1 - i for i in range(e)]
    if len(set(v)) < e:
        return None
    q = sum(1 for i in range(e) for j in range(i + 1, e) if v[i] < v[j])
    s = sorted(v, reverse=True)
    return q, tuple(s[i] - (e - 1 - i) for i in range(e))


def block_weight(lam, r, e, l):
    quotient = [l - x for x in reversed(pad(lam, r))]
    return tuple(quotient + pad(conjugate(lam), e - r))


def oracle_table(r, e, l):
    if not 1 <= r < e:
        raise ValueError(f"need 1 <= r < e, got r={r}, e={e}")
    table = {}
    for p in range(r * (e - r) + 1):
        for lam, _ in cotangent_components(r, e, p):
            res = bott_step(block_weight(lam, r, e, l))
            if res is not None:
                q, dom = res
                table.setdefault((p, q), Counter())[dom] += 1
    return table
