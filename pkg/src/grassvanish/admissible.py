"""l-admissible partitions and the bijection with the (l-1) x r box."""

from typing import NamedTuple

from .partitions import conjugate, enumerate_box, hook_table, hooks, pad, partition


class AdmissibleRecord(NamedTuple):
    lam: tuple
    l: int
    r: int
    h_minus: tuple
    v_minus: tuple
    p: int
    q: int


def _check_l(l):
    if l < 1:
        raise ValueError(f"l must be at least 1, got {l}")


def is_admissible(lam, l):
    """True iff no hook of ``lam`` equals ``l``."""
    _check_l(l)
    return l not in hooks(lam)


def has_hook(lam, d):
    return d in hooks(lam)


def h_minus(lam, l, r):
    """Per-row count of cells with hook < l, padded to length r."""
    if len(lam) > r:
        raise ValueError(f"{lam} has more than {r} rows")
    counts = [sum(1 for h in row if h < l) for row in hook_table(lam)]
    return tuple(pad(counts, r))


def v_minus(lam, l, width):
    """h_minus of the conjugate, padded to ``width`` entries."""
    return h_minus(conjugate(lam), l, width)


def hat(nu, l, r):
    """The unique l-admissible partition with at most r rows whose h_minus is nu.

    Bottom-up recursion lam_i = lam_{i + l - nu_i} + nu_i, rows past r are 0.
    """
    _check_l(l)
    nu = pad(nu, r)
    if any(not 0 <= x <= l - 1 for x in nu):
        raise ValueError(f"entries of {nu} must lie in [0, {l - 1}]")
    if any(nu[i] < nu[i + 1] for i in range(r - 1)):
        raise ValueError(f"{nu} is not weakly decreasing")
    lam = [0] * (r + l + 1)
    for i in range(r - 1, -1, -1):
        lam[i] = lam[i + l - nu[i]] + nu[i]
    return partition(lam[:r])


def count_big_hooks(lam, l):
    return sum(1 for h in hooks(lam) if h > l)


def pq_of(nu, l, r):
    lam = hat(nu, l, r)
    return sum(lam), count_big_hooks(lam, l)


def record(lam, l, r, width=None):
    """Build the AdmissibleRecord of an l-admissible ``lam``.

    ``width`` fixes the padding of v_minus; it defaults to lam_1.
    """
    if not is_admissible(lam, l):
        raise ValueError(f"{lam} is not {l}-admissible")
    if width is None:
        width = lam[0] if lam else 0
    return AdmissibleRecord(
        lam, l, r, h_minus(lam, l, r), v_minus(lam, l, width), sum(lam), count_big_hooks(lam, l)
    )


def enumerate_admissible(r, l, width=None):
    """Yield records for hat(nu) over the (l-1) x r box of nu.

    With ``width`` only those with first part <= width are kept, and v_minus
    is padded to ``width``.
    """
    _check_l(l)
    nus = [()] if l == 1 else enumerate_box(r, l - 1)
    for nu in nus:
        lam = hat(nu, l, r)
        if width is not None and lam and lam[0] > width:
            continue
        yield record(lam, l, r, width)


def admissible_in_box(r, w, l):
    """Box-filter path: scan the r x w box and keep admissible partitions."""
    return [lam for lam in enumerate_box(r, w) if is_admissible(lam, l)]
