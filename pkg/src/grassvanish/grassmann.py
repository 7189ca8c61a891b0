"""Nonvanishing H^{p,q}(G(r,e), O(l)) from l-admissible partitions.

A table maps (p, q) to a Counter of weight vectors of length e. O(1) is the
determinant of the rank-r quotient bundle.
"""

from collections import Counter

from .admissible import enumerate_admissible


def _check(r, e, l):
    if not 1 <= r < e:
        raise ValueError(f"need 1 <= r < e, got r={r}, e={e}")
    if l < 1:
        raise ValueError(f"need l >= 1, got {l}")


def snow_weight(rec, e):
    """Sort the r values l - h_minus_i together with the e - r values v_minus_j."""
    if len(rec.v_minus) != e - rec.r:
        raise ValueError("record v_minus must be padded to e - r")
    return tuple(sorted([rec.l - x for x in rec.h_minus] + list(rec.v_minus), reverse=True))


def cohomology_table(r, e, l):
    _check(r, e, l)
    table = {}
    for rec in enumerate_admissible(r, l, e - r):
        table.setdefault((rec.p, rec.q), Counter())[snow_weight(rec, e)] += 1
    return table


def p_max(r, e, l):
    return max(p for p, _ in cohomology_table(r, e, l))


def table_rows(table):
    """Flatten a table to sorted (p, q, weight, multiplicity) rows."""
    return sorted((p, q, w, m) for (p, q), ws in table.items() for w, m in ws.items())
