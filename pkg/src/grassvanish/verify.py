"""Property suites. Each returns a list of failure witnesses; empty means pass."""

from itertools import combinations, product
from math import comb

from . import bounds, degeneracy, extremal, flags
from .admissible import admissible_in_box, enumerate_admissible, h_minus, hat, is_admissible
from .bott import oracle_table
from .grassmann import cohomology_table
from .partitions import contains, enumerate_box, hook_table, insert_parts, lr_product


def bijection(max_r=4, ls=range(2, 6)):
    out = []
    for r in range(1, max_r + 1):
        for l in ls:
            nus = list(enumerate_box(r, l - 1))
            if len(nus) != comb(r + l - 1, r):
                out.append(("box count", r, l, len(nus)))
            for nu in nus:
                lam = hat(nu, l, r)
                if not is_admissible(lam, l) or len(lam) > r:
                    out.append(("hat not admissible", r, l, nu, lam))
                elif h_minus(lam, l, r) != tuple(nu) + (0,) * (r - len(nu)):
                    out.append(("h_minus(hat(nu)) != nu", r, l, nu, lam))
            lams = admissible_in_box(r, r * (l - 1), l)
            if len(lams) != comb(r + l - 1, r):
                out.append(("admissible count", r, l, len(lams)))
            for lam in lams:
                if hat(h_minus(lam, l, r), l, r) != lam:
                    out.append(("hat(h_minus(lam)) != lam", r, l, lam))
    return out


def snow_vs_bott(max_e=6, max_l=4):
    out = []
    for e in range(2, max_e + 1):
        for r in range(1, e):
            for l in range(1, max_l + 1):
                snow, bott = cohomology_table(r, e, l), oracle_table(r, e, l)
                if snow != bott:
                    out.append((r, e, l, table_diff(snow, bott)))
    return out


def table_diff(left, right):
    """(p, q, weight, left multiplicity, right multiplicity) where they differ."""
    rows = []
    for key in sorted(set(left) | set(right)):
        lw, rw = left.get(key, {}), right.get(key, {})
        for w in sorted(set(lw) | set(rw)):
            if lw.get(w, 0) != rw.get(w, 0):
                rows.append((*key, w, lw.get(w, 0), rw.get(w, 0)))
    return rows


def pmax(max_n=12, ls=range(2, 7)):
    """Brute force against the family maximum, plus the Euclidean identity."""
    out = []
    for n in range(2, max_n + 1):
        for r in range(1, n):
            for l in ls:
                params, best = extremal.maximize(r, n, l)
                brute = extremal.brute_pmax(r, n, l)
                if best != brute:
                    out.append(("weight", r, n, l, best, brute))
                if not extremal.euclid_holds(params, n, l):
                    out.append(("euclid", r, n, l, tuple(params), divmod(n, l)))
    return out


def kl_admissible(max_box=6, max_l=4, max_k=3):
    out = []
    lams = list(enumerate_box(max_box, max_box))
    for l in range(1, max_l + 1):
        for lam in lams:
            if is_admissible(lam, l):
                out += [(lam, l, k) for k in range(1, max_k + 1) if not is_admissible(lam, k * l)]
    return out


def monotonicity(max_r=4, ls=range(2, 6)):
    out = []
    for r in range(1, max_r + 1):
        for l in ls:
            nus = list(enumerate_box(r, l - 1))
            hats = {nu: hat(nu, l, r) for nu in nus}
            for a, b in product(nus, nus):
                if contains(a, b) and not contains(hats[a], hats[b]):
                    out.append((r, l, a, b))
    return out


def transform_gains(max_r=6, max_l=5):
    out = []
    for r in range(1, max_r + 1):
        for l in range(2, max_l + 1):
            for nu in enumerate_box(r, l - 1):
                w, first = extremal.hat_weight(nu, l, r), extremal.hat_first(nu, l, r)
                for i, a, b, new in extremal.a_instances(nu, l, r):
                    gain = extremal.hat_weight(new, l, r) - w
                    if gain < l - a + 1 or extremal.hat_first(new, l, r) != first:
                        out.append(("A", r, l, nu, i, a, b, gain))
                for i, a, b, beta, new in extremal.b_instances(nu, l, r):
                    gain = extremal.hat_weight(new, l, r) - w
                    if gain < 2 * (l - a) or extremal.hat_first(new, l, r) != first:
                        out.append(("B", r, l, nu, i, a, b, beta, gain))
    return out


TABLE_ORDER = [(0, 0), (1, 0), (0, 1), (2, 0), (3, 0), (1, 1), (0, 2), (4, 0), (2, 1), (5, 0)]


def order_lemma(max_x=200, max_sigma=10, max_mu=60):
    out = []
    if bounds.first_pairs(10) != TABLE_ORDER:
        out.append(("first ten", bounds.first_pairs(10)))
    for x in range(max_x + 1):
        d = bounds.delta(x)
        for sigma in range(max_sigma + 1):
            key = bounds.order_key(x, sigma)
            for mu in range(-(x // d), max_mu + 1):
                if mu == 0:
                    continue
                if not bounds.order_key(x + mu * d, sigma - mu) < key:
                    out.append((x, sigma, mu))
    return out


def symmetric_identity(max_gap=20, max_sigma=8, max_slack=8):
    out = []
    for gap in range(max_gap + 1):
        n, p = gap + 5, 5
        for sigma in range(max_sigma + 1):
            for slack in range(max_slack + 1):
                # slack = ae - k, realized with a = 1, e = slack + 1, k = 1
                q_bound = bounds.bound_Q(n, p, sigma, 1, slack + 1, 1)
                sym = bounds.symmetric_form(n, p, bounds.delta(gap), sigma, slack + sigma)
                if q_bound != sym:
                    out.append((gap, sigma, slack, q_bound, sym))
    return out


def _flag_grid(max_r=4, max_l=3):
    for r in range(2, max_r + 1):
        single = [(s, l) for s in range(1, r) for l in range(1, max_l + 1)]
        for fs in [[f] for f in single] + [[f, g] for f in single for g in single]:
            yield r, fs


def flag_envelopes(max_r=4, max_l=3, margin=3):
    out = []
    for r, fs in _flag_grid(max_r, max_l):
        e = r + 1
        p_max, q_max = flags.envelopes(r, fs)
        for p, q in product(range(p_max + margin + 1), range(q_max + margin + 1)):
            try:
                got = flags.product_as_map(e, r, fs, p, q)
            except flags.OutOfWindow:
                continue
            if got and (p > p_max or q > q_max):
                out.append(("envelope", r, fs, p, q))
            for sigma in range(margin + 1):
                if not flags.containment_holds(e, r, fs, p, q, sigma):
                    out.append(("containment", r, fs, p, q, sigma))
    return out


def subset_convolution(max_r=5):
    """n_s_product against direct counting of subset tuples."""
    out = []
    for r in range(1, max_r + 1):
        for ss in [(s,) for s in range(r + 1)] + list(product(range(r + 1), repeat=2)):
            subsets = [list(combinations(range(1, r + 1), s)) for s in ss]
            counts = {}
            for tup in product(*subsets):
                key = sum(sum(c) for c in tup)
                counts[key] = counts.get(key, 0) + 1
            top = sum(bounds.pi_rs(r, s) for s in ss) + sum(s * (s + 1) // 2 for s in ss)
            for pi in range(-1, top + 2):
                if bounds.n_s_product(r, ss, pi) != counts.get(pi, 0):
                    out.append((r, ss, pi))
    return out


def kunneth(max_r=4, max_l=3, margin=3):
    """Product formula against single-factor formulas over honest splittings."""
    out = []
    for r, fs in _flag_grid(max_r, max_l):
        if len(fs) < 2:
            continue
        e = r + 1
        p_max, q_max = flags.envelopes(r, fs)
        for p, q in product(range(p_max + margin + 1), range(q_max + margin + 1)):
            try:
                got = flags.product_as_map(e, r, fs, p, q)
            except flags.OutOfWindow:
                continue
            split, determined = flags.kunneth_split(e, r, fs, p, q)
            if determined and split != got:
                out.append((r, tuple(fs), p, q, split, got))
    return out


def tables():
    return degeneracy.verify_tables()


def lr_identities(es=range(2, 9)):
    out = []
    for e in es:
        out += degeneracy.lr_identity_checks(e)
    return out


def resolution(max_e=8, max_corank=4):
    out = []
    for e in range(2, max_e + 1):
        terms = degeneracy.resolution_terms(e, e - 1, 1)
        expected = [degeneracy.ResolutionTerm(1, (2,) * e, -e)]
        if terms != expected:
            out.append(("corank one", e, terms))
    for e in range(2, max_e + 1):
        for k in range(max(1, e - max_corank), e):
            top = degeneracy.triangle(e - k)
            for i in range(3 * top + 5):
                terms = degeneracy.resolution_terms(e, k, i)
                if terms and not 0 <= i <= top:
                    out.append(("index range", e, k, i, terms))
                for t in terms:
                    if degeneracy.rebuild(degeneracy.is_k_symmetric(t.lam, k), k) != t.lam:
                        out.append(("round trip", e, k, t.lam))
    return out


def examples():
    """Worked examples: hook figure, insertion, flattening, the rank-3 LR identity."""
    out = []
    if hook_table((4, 2, 1)) != [[6, 4, 2, 1], [3, 1], [1]]:
        out.append("hook table of (4,2,1)")
    if insert_parts((3, 2, 1), 2) != (3, 2, 2, 2, 1):
        out.append("(3,2,1)(2)")
    if extremal.flatten((3, 2, 2, 1, 1, 1), 5, 6) != (3, 3, 2, 2, 2, 1):
        out.append("flatten (3,2,2,1,1,1) at l=5")
    if lr_product((2, 1, 1), (1, 1), 3) != {(2, 2, 2): 1, (3, 2, 1): 1}:
        out.append("[1,0]x[0,1] at e=3")
    if [r.lam for r in enumerate_admissible(3, 5, 4) if r.lam == (4, 2, 1)] != [(4, 2, 1)]:
        out.append("(4,2,1) missing from the 5-admissible records")
    return out


SUITES = {
    "bijection": bijection,
    "snow-vs-bott": snow_vs_bott,
    "pmax": pmax,
    "tables": tables,
    "lr-identities": lr_identities,
    "kl-admissible": kl_admissible,
    "monotonicity": monotonicity,
    "transforms": transform_gains,
    "order": order_lemma,
    "symmetric-form": symmetric_identity,
    "flag-envelopes": flag_envelopes,
    "subset-convolution": subset_convolution,
    "kunneth": kunneth,
    "resolution": resolution,
    "examples": examples,
}
