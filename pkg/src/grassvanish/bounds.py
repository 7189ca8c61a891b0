"""Closed-form vanishing bounds and the counting functions they use."""

from functools import cache
from itertools import combinations


def triangle(x):
    """t(x) = x(x+1)/2."""
    if x < 0:
        raise ValueError("t(x) needs x >= 0")
    return x * (x + 1) // 2


def choose2(k):
    return k * (k - 1) // 2


def delta(x):
    """The integer d with C(d, 2) <= x < C(d + 1, 2); delta(0) = 1."""
    if x < 0:
        raise ValueError("delta needs x >= 0")
    d = 1
    while choose2(d + 1) <= x:
        d += 1
    return d


def order_key(x, sigma):
    """Sort key on pairs (x, sigma): (delta(x) + sigma, x - C(delta(x), 2), sigma)."""
    d = delta(x)
    return d + sigma, x - choose2(d), sigma


def first_pairs(count):
    """The ``count`` smallest pairs of N^2 under order_key, walked level by level."""
    out = []
    level = 1
    while len(out) < count:
        # delta(x) <= level exactly when x < C(level + 1, 2)
        row = [(x, level - delta(x)) for x in range(choose2(level + 1))]
        out += sorted(row, key=lambda p: order_key(*p))
        level += 1
    return out[:count]


def _bound(n, m, sigma, a, e, k):
    if m > n:
        raise ValueError(f"index {m} exceeds n={n}")
    return n - m + (delta(n - m) + sigma) * (a * e - k + 2 * sigma) - sigma * (sigma + 1)


def bound_Q(n, p, sigma, a, e, k):
    """Threshold on q: H^{p,q} vanishes for q above this value."""
    return _bound(n, p, sigma, a, e, k)


def bound_P(n, q, sigma, a, e, k):
    """Threshold on p: H^{p,q} vanishes for p above this value."""
    return _bound(n, q, sigma, a, e, k)


def vanishes(n, p, q, sigma, a, e, k):
    if p > n or q > n:
        return True
    d = min(delta(n - p), delta(n - q))
    return p + q > n + (d + sigma) * (a * e - k + 2 * sigma) - sigma * (sigma + 1)


def symmetric_form(n, p, r, sigma, tau):
    return n - p + r * (sigma + tau) + sigma * (tau - 1)


def bracket_pair_bound(a, b, c, d, r, s):
    if r < 1 or s < 1:
        raise ValueError("r and s must be positive")
    return (r - 1) * a + r * b + (s - 1) * c + s * d


def pi_rs(r, s):
    """pi_{r,s} = s(2r - s + 1)/2."""
    if not 0 <= s <= r:
        raise ValueError(f"need 0 <= s <= r, got r={r}, s={s}")
    return s * (2 * r - s + 1) // 2


@cache
def n_s_count(r, s, pi):
    """Number of s-element subsets of {1..r} with element sum pi."""
    if not 0 <= s <= r:
        raise ValueError(f"need 0 <= s <= r, got r={r}, s={s}")
    return sum(1 for c in combinations(range(1, r + 1), s) if sum(c) == pi)


def n_s_product(r, ss, pi):
    """Convolution of n_{s_i} over all splittings pi = sum pi_i."""
    return _n_s_distribution(r, tuple(ss)).get(pi, 0)


@cache
def _n_s_distribution(r, ss):
    dist = {0: 1}
    for s in ss:
        top = pi_rs(r, s)
        nxt = {}
        for base, m in dist.items():
            for x in range(top + 1):
                v = n_s_count(r, s, x)
                if v:
                    nxt[base + x] = nxt.get(base + x, 0) + m * v
        dist = nxt
    return dist
