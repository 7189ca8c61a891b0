"""Cohomology formulas for line bundles on two-step flag varieties and products.

A factor is a pair (s, l) with 0 < s < r < e; it has k = r*l + s and
lambda = l - 1. Results are keyed by alpha, the component being the hook
functor Z^{k - alpha - 1, k} applied to V.
"""

from functools import cache
from itertools import product

from .bounds import n_s_product, pi_rs, triangle


class OutOfWindow(ValueError):
    """The closed formula is not asserted for this p; distinct from a zero group."""


def _check(e, r, factors):
    if not factors:
        raise ValueError("need at least one factor")
    for s, l in factors:
        if not 0 < s < r < e:
            raise ValueError(f"need 0 < s < r < e, got s={s}, r={r}, e={e}")
        if l < 1:
            raise ValueError(f"need l >= 1, got {l}")


def window_floor(r, factors):
    """Smallest pi for which the formula is asserted: sum pi_{r,s_i} - k + l."""
    k = sum(r * l + s for s, l in factors)
    return sum(pi_rs(r, s) for s, _ in factors) - k + sum(l for _, l in factors)


def _pi(r, factors, p):
    pi = p - sum(l - 1 for _, l in factors) * triangle(r)
    if pi < window_floor(r, factors):
        raise OutOfWindow(f"p={p} lies below the validity window")
    return pi


def single_flag_cohomology(e, r, s, l, p, q):
    """Map alpha -> multiplicity n_s(pi + r*alpha) for H^{p,q}; empty if zero."""
    _check(e, r, [(s, l)])
    pi = _pi(r, [(s, l)], p)
    k = r * l + s
    alpha = q - p + r * (l - 1) + s
    if not 0 <= alpha <= min(l, k - 1):
        return {}
    m = n_s_product(r, [s], pi + r * alpha)
    return {alpha: m} if m else {}


def product_flag_cohomology(e, r, factors, p, q):
    """Return (sigma, multiplicity, alpha tuples) or None when the group is zero.

    sigma = q + r*lambda + s - p with lambda and s summed over factors; the
    multiplicity n_s(pi + r*sigma) is shared by every alpha tuple with sum
    sigma and 0 <= alpha_i <= min(l_i, k_i - 1).
    """
    _check(e, r, factors)
    pi = _pi(r, factors, p)
    lam = sum(l - 1 for _, l in factors)
    sigma = q + r * lam + sum(s for s, _ in factors) - p
    if sigma < 0:
        return None
    caps = [range(min(l, r * l + s - 1) + 1) for s, l in factors]
    alphas = [a for a in product(*caps) if sum(a) == sigma]
    if not alphas:
        return None
    m = n_s_product(r, [s for s, _ in factors], pi + r * sigma)
    if not m:
        return None
    return sigma, m, alphas


def envelopes(r, factors):
    """(P_max, Q_max) beyond which every group vanishes."""
    lam = sum(l - 1 for _, l in factors)
    pis = sum(pi_rs(r, s) for s, _ in factors)
    return lam * triangle(r) + pis, lam * triangle(r - 1) + pis - sum(s for s, _ in factors)


def containment_holds(e, r, factors, p, q, sigma):
    """If p >= P_max - r*sigma or q >= Q_max - (r-1)*sigma, components have sum alpha <= sigma."""
    p_max, q_max = envelopes(r, factors)
    if p < p_max - r * sigma and q < q_max - (r - 1) * sigma:
        return True
    res = product_flag_cohomology(e, r, factors, p, q)
    return res is None or res[0] <= sigma


@cache
def _factor_column(e, r, s, l, p):
    """alpha -> (q, multiplicity) for one factor at fixed p, or None if out of window.

    The returned dict is shared through the cache and must not be mutated.
    """
    try:
        _pi(r, [(s, l)], p)
    except OutOfWindow:
        return None
    base = p - r * (l - 1) - s
    out = {}
    for alpha in range(min(l, r * l + s - 1) + 1):
        q = base + alpha
        if q >= 0:
            out.update((a, (q, m)) for a, m in single_flag_cohomology(e, r, s, l, p, q).items())
    return out


def kunneth_split(e, r, factors, p, q):
    """Combine single-factor formulas over all splittings p = sum p_i, q = sum q_i.

    All p_i, q_i are nonnegative. Returns (map alpha tuple -> multiplicity,
    determined); ``determined`` is False when a splitting needs a factor
    outside its window while the other factors could contribute.
    """
    _check(e, r, factors)
    total = {}
    determined = True

    def splits(x, parts):
        if parts == 1:
            yield (x,)
            return
        for first in range(x + 1):
            for rest in splits(x - first, parts - 1):
                yield (first,) + rest

    for ps in splits(p, len(factors)):
        cols = [_factor_column(e, r, s, l, pi_) for (s, l), pi_ in zip(factors, ps)]
        known = [c for c in cols if c is not None]
        if len(known) < len(cols):
            if all(known):
                determined = False
            continue
        for combo in product(*(c.items() for c in cols)):
            if sum(qm[0] for _, qm in combo) != q:
                continue
            alphas = tuple(a for a, _ in combo)
            mult = 1
            for _, (_, m) in combo:
                mult *= m
            total[alphas] = total.get(alphas, 0) + mult
    return total, determined


def product_as_map(e, r, factors, p, q):
    """product_flag_cohomology as a map alpha tuple -> multiplicity."""
    res = product_flag_cohomology(e, r, factors, p, q)
    if res is None:
        return {}
    _, m, alphas = res
    return {a: m for a in alphas}
