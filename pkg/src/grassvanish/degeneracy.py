"""Bookkeeping for resolutions of symmetric degeneracy loci.

A (k-1)-symmetric partition is (2l, mu, mu*) with k-1 extra parts equal to
the Durfee rank 2l inserted after row 2l. The resolution term R^i collects
those with |mu| + l(2l - 1) = i, each twisted by L^{-l(2l+k-1)}.
"""

from collections import Counter
from importlib.resources import files
from typing import NamedTuple

from .bounds import triangle
from .partitions import (
    bracket_to_partition,
    conjugate,
    durfee_rank,
    insert_parts,
    lr_product,
    pad,
    partition,
)


class SymmetricDecomposition(NamedTuple):
    l: int
    mu: tuple


class ResolutionTerm(NamedTuple):
    i: int
    lam: tuple
    twist: int


class TableRow(NamedTuple):
    e: int
    k: int
    lam: tuple
    q0: tuple
    bound: int
    tags: tuple
    params: tuple


class Statement(NamedTuple):
    level: str
    brackets: tuple
    bound: int


def build_symmetric(l, mu):
    """(2l, mu, mu*): lam_i = 2l + mu_i for i <= 2l, followed by mu*."""
    mu = partition(mu)
    if len(mu) > 2 * l:
        raise ValueError(f"{mu} has more than {2 * l} parts")
    return partition([2 * l + x for x in pad(mu, 2 * l)] + list(conjugate(mu)))


def is_k_symmetric(lam, k):
    """Return the decomposition of a (k-1)-symmetric ``lam``, else None."""
    if k < 1:
        raise ValueError("k must be at least 1")
    lam = partition(lam)
    d = durfee_rank(lam)
    if d % 2:
        return None
    if d == 0:
        return SymmetricDecomposition(0, ()) if not lam else None
    inserted = lam[d : d + k - 1]
    if len(inserted) != k - 1 or any(x != d for x in inserted):
        return None
    base = lam[:d] + lam[d + k - 1 :]
    l = d // 2
    mu = partition(x - d for x in base[:d])
    if build_symmetric(l, mu) != base:
        return None
    return SymmetricDecomposition(l, mu)


def rebuild(decomp, k):
    return insert_parts(build_symmetric(*decomp), k - 1)


def i_of(lam, k):
    decomp = is_k_symmetric(lam, k)
    if decomp is None:
        raise ValueError(f"{lam} is not {k - 1}-symmetric")
    return sum(decomp.mu) + decomp.l * (2 * decomp.l - 1)


def twist(l, k):
    return -l * (2 * l + k - 1)


def k0_insert(decomp):
    """The k = 0 shape: nu_{2l} = mu*_1 + mu_{2l}, the rest as in (2l, mu, mu*)."""
    l, mu = decomp
    mu = partition(mu)
    if l < 1 or len(mu) > 2 * l:
        raise ValueError(f"need l >= 1 and at most {2 * l} parts in {mu}")
    m = pad(mu, 2 * l)
    conj = pad(conjugate(mu), 1)
    nu = [2 * l + x for x in m[: 2 * l - 1]] + [conj[0] + m[2 * l - 1]] + conj[1:]
    return partition(nu)


def _partitions_of(n, max_len):
    def rec(left, length, cap):
        if left == 0:
            yield ()
            return
        if length == 0:
            return
        for first in range(min(left, cap), 0, -1):
            for rest in rec(left - first, length - 1, first):
                yield (first,) + rest

    return rec(n, max_len, n)


def resolution_terms(e, k, i):
    """Terms of R^i that fit in e rows; k = 0 uses k0_insert."""
    if not 0 <= k < e:
        raise ValueError(f"need 0 <= k < e, got k={k}, e={e}")
    if i == 0:
        return [ResolutionTerm(0, (), 0)]
    out = []
    l = 1
    while l * (2 * l - 1) <= i:
        for mu in _partitions_of(i - l * (2 * l - 1), 2 * l):
            decomp = SymmetricDecomposition(l, mu)
            lam = k0_insert(decomp) if k == 0 else rebuild(decomp, k)
            if len(lam) <= e:
                out.append(ResolutionTerm(i, lam, twist(l, k)))
        l += 1
    return sorted(out, key=lambda t: (t.twist, t.lam), reverse=True)


def rho(n, e, k):
    if e <= k:
        raise ValueError("need e > k")
    return n - triangle(e - k)


def _need(cond, message):
    if not cond:
        raise ValueError(message)


def lemma_statements(tag, params=None):
    """Bracket products and bounds asserted by each lemma, first one is the default.

    Each statement is (degree level, bracket shapes, bound): the group at
    that level vanishes for q above the bound.
    """
    p = dict(params or {})
    a, b, c, d = (p.get(x) for x in "abcd")
    if tag == "l1":
        _need(c is not None and d is not None and 0 <= c <= d, "l1 needs 0 <= c <= d")
        return [
            Statement("n", ((1, c + 1), (0, d)), 2 * c + d + 2),
            Statement("n-1", ((0, c), (0, d)), 2 * c + d + 1),
        ]
    if tag == "l1+":
        _need(c is not None and c > 0, "l1+ needs c > 0")
        return [
            Statement("n", ((1, 0, c, c + 1),), 3 * c + 1),
            Statement("n-1", ((0, 0, c, c),), 3 * c),
        ]
    if tag == "l2":
        _need(a is not None and b is not None and min(a, b) >= 0, "l2 needs a, b >= 0")
        return [
            Statement("n", ((a, 0), (b + 1, 1)), a + 2),
            Statement("n-1", ((a, 0), (b, 0)), a + 1),
        ]
    if tag == "l2+":
        _need(a is not None and a > 0, "l2+ needs a > 0")
        return [
            Statement("n", ((a + 1, a, 0, 1),), a + 1),
            Statement("n-1", ((a, a, 0, 0),), a),
        ]
    if tag == "l3":
        _need(c is not None and c >= 0, "l3 needs c >= 0")
        return [
            Statement("n", ((1, c + 1), (1, c + 1)), 4 * c + 4),
            Statement("n", ((2, c + 2), (0, c)), 4 * c + 4),
            Statement("n-1", ((1, c + 1), (0, c)), 4 * c + 3),
        ]
    if tag == "l4":
        _need(a is not None and a >= 0, "l4 needs a >= 0")
        return [
            Statement("n", ((a + 1, 1), (a + 1, 1)), 2 * a + 4),
            Statement("n", ((a + 2, 2), (a, 0)), 2 * a + 4),
            Statement("n-1", ((a + 1, 1), (a, 0)), 2 * a + 3),
        ]
    if tag in ("l5", "n-2", "l6"):
        _need(
            a is not None and c is not None and min(a, c) >= 0 and (a - c) % 2 == 0,
            f"{tag} needs a, c >= 0 of equal parity",
        )
        if tag == "l5":
            return [
                Statement("n", ((a, 0), (1, c + 1)), 2 * c + 2),
                Statement("n", ((a + 1, 1), (0, c)), a + 2),
                Statement("n-1", ((a, 0), (0, c)), max(a, 2 * c) + 1),
            ]
        if tag == "n-2":
            return [Statement("n-2", ((a, 0), (0, c)), a + 2 * c + 2)]
        return [Statement("n", ((a + 1, 1), (1, c + 1)), a + 2 * c + 4)]
    if tag == "l7":
        return [Statement("n", ((2, 1), (1, 2)), 6)]
    raise ValueError(f"unknown lemma tag {tag!r}")


def lemma_bound(tag, params=None, statement=0):
    return lemma_statements(tag, params)[statement].bound


def bracket_product(brackets, e):
    """LR decomposition of the tensor product of bracket shapes in GL(e)."""
    out = Counter({(): 1})
    for shape in brackets:
        lam = bracket_to_partition(shape, e)
        nxt = Counter()
        for nu, m in out.items():
            for rho_, m2 in lr_product(nu, lam, e).items():
                nxt[rho_] += m * m2
        out = nxt
    return out


def _parse_params(text):
    if text == "-":
        return {}
    return {k: int(v) for k, v in (item.split("=") for item in text.split(","))}


def parse_table(text):
    rows = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        e, k, lam, q0, bound, tags, params = line.split()
        rows.append(
            TableRow(
                int(e),
                int(k),
                partition(int(x) for x in lam.split(",")),
                tuple(int(x) for x in q0.split(";")),
                int(bound),
                tuple(tags.split(";")),
                tuple(_parse_params(x) for x in params.split(";")),
            )
        )
    return rows


def load_tables():
    return parse_table(files("grassvanish").joinpath("data/q0_tables.txt").read_text())


def verify_row(row):
    """Return a list of failure messages for one table row (empty when it passes)."""
    name = f"e={row.e} {row.lam}"
    errors = []
    try:
        i = i_of(row.lam, row.k)
    except ValueError as exc:
        return [f"{name}: {exc}"]
    expected = triangle(row.e - row.k) + 1 - i
    if row.bound != expected:
        errors.append(f"{name}: printed bound {row.bound} but t(e-k)+1-i = {expected}")
    if not len(row.q0) == len(row.tags) == len(row.params):
        return errors + [f"{name}: q0, tags and params are not aligned"]
    for q0, tag, params in zip(row.q0, row.tags, row.params):
        if q0 > expected:
            errors.append(f"{name}: q0={q0} exceeds bound {expected}")
        if tag == "A'":
            continue
        try:
            st = lemma_statements(tag, params)[0]
        except ValueError as exc:
            errors.append(f"{name}: {exc}")
            continue
        if st.bound != q0:
            errors.append(f"{name}: {tag}{params} gives {st.bound}, table says {q0}")
        try:
            product_ = bracket_product(st.brackets, row.e)
        except ValueError as exc:
            errors.append(f"{name}: {exc}")
            continue
        if product_[row.lam] == 0:
            errors.append(f"{name}: not a component of {tag} brackets {st.brackets}")
    return errors


def verify_tables(rows=None):
    """Check every row; return the list of failure messages."""
    rows = load_tables() if rows is None else rows
    return [msg for row in rows for msg in verify_row(row)]


def _is_type_0_0(lam):
    """Shapes [0,0,x,y]: first two parts equal 2."""
    return len(lam) >= 2 and lam[0] == lam[1] == 2


def _difference(lhs, rhs):
    keys = set(lhs) | set(rhs)
    return {k: lhs[k] - rhs[k] for k in keys if lhs[k] != rhs[k]}


def _sum_brackets(shapes, e):
    return Counter(bracket_to_partition(s, e) for s in shapes)


def lr_identity_checks(e, max_c=3):
    """Check the decompositions used in the lemma proofs; return failure messages.

    Parameters are restricted to ranges where every bracket is a valid shape
    in rank e.
    """
    errors = []

    def check(label, lhs, rhs, rest_ok):
        diff = _difference(lhs, rhs)
        bad = {k: v for k, v in diff.items() if not rest_ok(k, v)}
        if bad:
            errors.append(f"e={e} {label}: unexpected components {sorted(bad.items())}")

    def exact(lam, m):
        return False

    def remainder(lam, m):
        return m > 0 and _is_type_0_0(lam)

    if e >= 2:
        check(
            "[1,0]x[0,1]",
            bracket_product(((1, 0), (0, 1)), e),
            Counter({(2,) * e: 1, (3,) + (2,) * (e - 2) + (1,): 1}),
            exact,
        )
    for c in range(max_c + 1):
        for d in range(c + 1, max_c + 2):
            if e < c + d + 3:
                continue
            check(
                f"[1,{c + 1}]x[0,{d}]",
                bracket_product(((1, c + 1), (0, d)), e),
                _sum_brackets([(1, 0, x, d + c + 1 - x) for x in range(c + 2)], e),
                remainder,
            )
            check(
                f"[0,{c}]x[1,{d + 1}]",
                bracket_product(((0, c), (1, d + 1)), e),
                _sum_brackets([(1, 0, x, c + d + 1 - x) for x in range(c + 1)], e),
                remainder,
            )
    for c in range(1, max_c + 1):
        if e < c + 4:
            continue
        rhs = bracket_product(((1, c + 2), (0, c - 1)), e) + _sum_brackets([(1, 0, c, c + 1)], e)
        check(f"[1,{c + 1}]x[0,{c}]", bracket_product(((1, c + 1), (0, c)), e), rhs, remainder)
        rhs = bracket_product(((0, c - 1), (0, c + 1)), e) + _sum_brackets([(0, 0, c, c)], e)
        check(f"[0,{c}]x[0,{c}]", bracket_product(((0, c), (0, c)), e), rhs, exact)
    for c in range(max_c + 1):
        if e < c + 3:
            continue
        big = bracket_product(((1, c + 1), (1, c + 1)), e)
        small = bracket_product(((2, c + 2), (0, c)), e)
        missing = {k: v for k, v in small.items() if big[k] < v}
        if missing:
            errors.append(f"e={e} [1,{c + 1}]^2 does not contain [2,{c + 2}]x[0,{c}]: {missing}")
    return errors
