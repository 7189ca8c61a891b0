"""Maximal weight of l-admissible partitions in an r x (n - r) box.

The maximizers are hats of the family

    mu(a, alpha, beta, c, gamma) = (a^{alpha(l-a)}, (a-1)^{beta(l-a+1)}, c^gamma)

and two local moves (A and B) on h_minus vectors push any admissible
partition toward that family while increasing the hat weight.
"""

from typing import NamedTuple

from .admissible import hat, is_admissible
from .partitions import enumerate_box, pad, partition


class FamilyParams(NamedTuple):
    a: int
    alpha: int
    beta: int
    c: int
    gamma: int


def canonical(params, l, r=None):
    """Pick one representative among parameters giving the same partition.

    gamma = 0 forces c = 0 and alpha + beta = 0 forces a = c. When c = 0 the
    gamma trailing parts are zero rows; given r, gamma then pads the family
    to exactly r rows.
    """
    a, alpha, beta, c, gamma = params
    if gamma == 0:
        c = 0
    if alpha + beta == 0:
        a = c
    if c == 0 and r is not None:
        gamma = r - alpha * (l - a) - beta * (l - a + 1)
    return FamilyParams(a, alpha, beta, c, gamma)


def family_length(params, l):
    """Row count including zero rows: (alpha + beta)(l - a) + beta + gamma."""
    a, alpha, beta, _, gamma = params
    return (alpha + beta) * (l - a) + beta + gamma


def check_params(params, l):
    """Raise ValueError unless params describe a valid family member.

    gamma <= l - a is enforced only for c > 0; zero rows are free padding.
    """
    a, alpha, beta, c, gamma = params
    if min(params) < 0:
        raise ValueError(f"negative parameter in {tuple(params)}")
    if alpha + beta > 0 and not 1 <= a <= l - 1:
        raise ValueError(f"a={a} must lie in [1, {l - 1}]")
    if c > a or c > l - 1:
        raise ValueError(f"need c <= a and c <= l - 1, got {tuple(params)}")
    if c > 0 and gamma > l - a:
        raise ValueError(f"need gamma <= l - a, got {tuple(params)}")
    if c > 0 and (gamma, c) == (l - a, a):
        raise ValueError("gamma = l - a with c = a is the excluded normalization")
    if beta and gamma and c > a - 1:
        raise ValueError(f"c={c} exceeds a - 1 after a beta block")


def family_partition(params, l):
    check_params(params, l)
    a, alpha, beta, c, gamma = params
    parts = [a] * (alpha * (l - a)) + [a - 1] * (beta * (l - a + 1)) + [c] * gamma
    return partition(parts)


def family_first_part(params, l, r):
    """First part of the hat of the family partition: (alpha+beta)a - beta + c."""
    params = canonical(params, l)
    if len(family_partition(params, l)) > r:
        raise ValueError(f"family partition has more than {r} rows")
    a, alpha, beta, c, _ = params
    return (alpha + beta) * a - beta + c


def family_params(r, l):
    """Every canonical parameter tuple whose family has exactly r rows."""
    for a in range(l):
        m = l - a
        for alpha in range(r // m + 1 if a else 1):
            for beta in range((r - alpha * m) // (m + 1) + 1 if a else 1):
                left = r - alpha * m - beta * (m + 1)
                cs = [0] + (list(range(1, a + 1)) if 0 < left <= m else [])
                for c in cs:
                    if alpha + beta == 0 and c != a:
                        continue
                    params = FamilyParams(a, alpha, beta, c, left)
                    try:
                        family_partition(params, l)
                    except ValueError:
                        continue
                    yield params


def parse_family(nu, l, r):
    """Canonical r-row parameter tuples whose family partition equals ``nu``."""
    nu = partition(nu)
    return [p for p in family_params(r, l) if family_partition(p, l) == nu]


def a_sequence(nu, l, r):
    """a_1 = 1, a_{i+1} = min(a_i + l - nu_{a_i}, r + 1), 1-based."""
    v = pad(nu, r)
    seq = [1]
    while seq[-1] <= r:
        seq.append(min(seq[-1] + l - v[seq[-1] - 1], r + 1))
    return seq


def flatten(nu, l, r):
    """Copy nu_{a_i} over each run [a_i, a_{i+1} - 1]."""
    v = pad(nu, r)
    seq = a_sequence(nu, l, r)
    out = []
    for start, stop in zip(seq, seq[1:]):
        out += [v[start - 1]] * (stop - start)
    return partition(out)


def transform_A(nu, i, a, b, l, r):
    """Rows i..i+m-1 equal to a become a-1, rows i+m..i+2m equal to b become b+1.

    Rows are 0-based and m = l - a. Requires 1 <= a, b <= a - 2.
    """
    v = pad(nu, r)
    m = l - a
    if a < 1 or b < 0 or b > a - 2 or i < 0 or i + 2 * m + 1 > r:
        raise ValueError("transformation A does not apply")
    top, low = range(i, i + m), range(i + m, i + 2 * m + 1)
    if any(v[j] != a for j in top) or any(v[j] != b for j in low):
        raise ValueError("transformation A does not apply")
    for j in top:
        v[j] = a - 1
    for j in low:
        v[j] = b + 1
    return partition(v)


def transform_B(nu, i, a, b, beta, l, r):
    """Blocks (a+1)^{m-1} a^{beta m} b^m become a^{(1+beta)m-1} (b+1)^m, m = l - a."""
    v = pad(nu, r)
    m = l - a
    if beta < 1 or a + 1 > l - 1 or not 0 <= b < a or i < 0 or i + (2 + beta) * m - 1 > r:
        raise ValueError("transformation B does not apply")
    first = range(i, i + m - 1)
    middle = range(i + m - 1, i + (1 + beta) * m - 1)
    last = range(i + (1 + beta) * m - 1, i + (2 + beta) * m - 1)
    if (
        any(v[j] != a + 1 for j in first)
        or any(v[j] != a for j in middle)
        or any(v[j] != b for j in last)
    ):
        raise ValueError("transformation B does not apply")
    for j in list(first) + list(middle):
        v[j] = a
    for j in last:
        v[j] = b + 1
    return partition(v)


def hat_weight(nu, l, r):
    return sum(hat(nu, l, r))


def hat_first(nu, l, r):
    lam = hat(nu, l, r)
    return lam[0] if lam else 0


def a_instances(nu, l, r):
    """Yield (i, a, b, result) for every applicable transformation A."""
    for i in range(r):
        for a in range(1, l):
            for b in range(a - 1):
                try:
                    yield i, a, b, transform_A(nu, i, a, b, l, r)
                except ValueError:
                    pass


def b_instances(nu, l, r):
    """Yield (i, a, b, beta, result) for every applicable transformation B."""
    for i in range(r):
        for a in range(1, l):
            for b in range(a):
                for beta in range(1, r + 1):
                    try:
                        yield i, a, b, beta, transform_B(nu, i, a, b, beta, l, r)
                    except ValueError:
                        pass


def _cell_additions(nu, l, r):
    v = pad(nu, r)
    for j in range(r - 1, -1, -1):
        if v[j] < l - 1 and (j == 0 or v[j - 1] > v[j]):
            w = v[:]
            w[j] += 1
            yield partition(w)


def climb_step(nu, r, n, l):
    """One greedy move or None at a fixpoint.

    Order: cell additions bottom row first (while the hat still fits in the
    r x (n - r) box), then A at the smallest i, then B.
    """
    for cand in _cell_additions(nu, l, r):
        if hat_first(cand, l, r) <= n - r:
            return cand
    for *_, cand in a_instances(nu, l, r):
        return cand
    for *_, cand in b_instances(nu, l, r):
        return cand
    return None


def climb(nu, r, n, l):
    """Apply climb_step until a fixpoint; return the list of visited nu."""
    path = [partition(nu)]
    while (nxt := climb_step(path[-1], r, n, l)) is not None:
        path.append(nxt)
    return path


def family_candidates(r, n, l):
    """Canonical r-row params whose hat lies in the r x (n - r) box."""
    for params in family_params(r, l):
        if hat_first(family_partition(params, l), l, r) <= n - r:
            yield params


def euclid_holds(params, n, l):
    return params.alpha + params.beta == n // l and params.gamma + params.c == n % l


def maximize(r, n, l):
    """Best family member in the box: returns (params, pmax).

    Ties in weight prefer params obeying the Euclidean division of n by l,
    then family partitions with exactly r rows, then the smallest tuple.
    """
    if not 1 <= r < n or l < 2:
        raise ValueError(f"need 1 <= r < n and l >= 2, got r={r}, n={n}, l={l}")
    best = None
    for params in family_candidates(r, n, l):
        nu = family_partition(params, l)
        key = (
            -hat_weight(nu, l, r),
            not euclid_holds(params, n, l),
            len(nu) != r,
            params,
        )
        if best is None or key < best:
            best = key
    return best[3], -best[0]


def brute_pmax(r, n, l):
    return max(sum(lam) for lam in enumerate_box(r, n - r) if is_admissible(lam, l))
