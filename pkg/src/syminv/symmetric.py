"""Square-root-free inversion of symmetric matrices.

Both variants run the modified Gaussian elimination of ``modgauss`` but
exploit symmetry so that only the lower triangle of the inverse is ever
computed; the upper triangle is mirrored at the end.  Neither variant
evaluates a square root.

Variant 1 works in two stages.  Stage one runs the elimination with only
the last solution component required, freezing each row right after its
pivot step; the frozen row i then holds the last row of the inverse of
the leading (i+1)-block, and F is exactly lower triangular.  Stage two
walks k = 1..n-1 and adds the rank-one correction
outer(row_k / f_kk, row_k) to the leading k-block, turning it from the
inverse of the leading k-block into the corresponding block of the full
inverse.  Cost: n^3/3 + n^2/2 + n/6 plus n^3/6 + n^2/2 - 2n/3, i.e.
n^3/2 + n^2 - n/2 multiplications and divisions.

Variant 2 fuses the two stages into a single sweep: at step k the pivot
row is normalized, the rows below are updated through the column of
coefficients written into column k, and the same rank-one correction is
accumulated into the leading k-block immediately.  Cost: n^3/2 + n^2/2.

Neither variant swaps rows (a swap would break the symmetric structure
the rank-one corrections rely on), so a numerically zero leading minor
raises ZeroPivot; ``invert_symmetric_robust`` falls back to the
swapping elimination in that case.
"""

from __future__ import annotations

import numpy as np

from . import modgauss
from .errors import InvalidArgument, NotSymmetric, ZeroPivot
from .matcore import (
    OpCounter,
    RequiredSet,
    SymmetryCheck,
    as_matrix,
    frobenius_norm,
    mirror_lower,
)


def _checked_symmetric(a, symmetry=None) -> np.ndarray:
    a = as_matrix(a)
    check = SymmetryCheck() if symmetry is None else symmetry
    if not check.passes(a):
        raise NotSymmetric("input matrix is not symmetric")
    return a


def lower_stage(a, counter=None, pivot_tol=None) -> np.ndarray:
    """Stage one of variant 1: elimination with only the last row required.

    Returns an exactly lower-triangular F whose row i is the last row of
    the inverse of the leading (i+1) x (i+1) block of a.  Costs
    n^3/3 + n^2/2 + n/6 multiplications and divisions.
    """
    a = _checked_symmetric(a)
    n = a.shape[0]
    return modgauss.eliminate(a, RequiredSet.trailing(n, 1), counter,
                              pivot_tol, allow_swaps=False)


def complete_lower(f, counter=None) -> np.ndarray:
    """Stage two of variant 1: rank-one completion of the stage-one rows.

    Mutates nothing; returns a new matrix whose lower triangle is the
    lower triangle of the full inverse.  Costs n^3/6 + n^2/2 - 2n/3.
    """
    f = as_matrix(f)
    n = f.shape[0]
    cnt = counter if counter is not None else OpCounter()
    out = f.copy()
    for k in range(1, n):
        row = out[k, :k]
        u = row / out[k, k]
        cnt.add_muldiv(k)
        # Only the lower half of the rank-one correction is meaningful;
        # the strict upper entries stay exactly zero.
        out[:k, :k] += np.tril(np.outer(u, row))
        cnt.add_muldiv(k * (k + 1) // 2)
    return out


def invert_v1_parts(a, counter=None, pivot_tol=None):
    """Variant 1 with its intermediates: (stage-one F, completed F, inverse).

    The completed F is exactly lower triangular; the inverse equals
    F + (F - diag(F))^T.
    """
    a = _checked_symmetric(a)
    cnt = counter if counter is not None else OpCounter()
    stage1 = lower_stage(a, cnt, pivot_tol)
    final = complete_lower(stage1, cnt)
    return stage1, final, mirror_lower(final)


def invert_v1(a, counter=None, pivot_tol=None) -> np.ndarray:
    """Two-stage square-root-free symmetric inversion.

    Costs n^3/2 + n^2 - n/2 multiplications and divisions, no square
    roots.  Raises ZeroPivot when a leading principal minor is
    numerically zero (no row swaps are attempted).
    """
    return invert_v1_parts(a, counter, pivot_tol)[2]


# Above this order invert_v2 evaluates the sweep through its triangular
# factors (see _invert_v2_blocked): same pivots, same inverse up to
# rounding, but GEMM-dominated instead of memory-bound rank-one updates.
_SWEEP_LIMIT = 64

_BLOCK = 64


def _ldl_nopiv_blocked(a, tol, block=_BLOCK):
    """Unit-lower/diagonal factorization, no pivoting, no square roots.

    Right-looking with blocked trailing updates.  The pivots equal the
    sweep's leading-minor ratios in exact arithmetic, so the same inputs
    raise ZeroPivot at the same step.  Returns (strictly lower factor,
    diagonal vector).
    """
    n = a.shape[0]
    work = a.copy()
    d = np.empty(n)
    for s in range(0, n, block):
        e = min(s + block, n)
        for j in range(s, e):
            dj = float(work[j, j])
            if abs(dj) <= tol:
                raise ZeroPivot(j)
            d[j] = dj
            w = work[j + 1:e, j].copy()
            work[j + 1:, j] /= dj
            if j + 1 < e:
                work[j + 1:, j + 1:e] -= np.outer(work[j + 1:, j], w)
        if e < n:
            panel = work[e:, s:e]
            work[e:, e:] -= (panel * d[s:e]) @ panel.T
    return np.tril(work, -1), d


def _unit_lower_inverse(l_strict, block=_BLOCK):
    """Invert I + l_strict (unit lower triangular), block column by block."""
    n = l_strict.shape[0]
    m = np.zeros((n, n))
    for s in range(0, n, block):
        e = min(s + block, n)
        blk = np.eye(e - s)
        for i in range(1, e - s):
            blk[i, :i] = -(l_strict[s + i, s:s + i] @ blk[:i, :i])
        m[s:e, s:e] = blk
        if s:
            m[s:e, :s] = -blk @ (l_strict[s:e, :s] @ m[:s, :s])
    return m


def _invert_v2_blocked(a, cnt, tol):
    """Factor-form evaluation of the single sweep for large orders.

    The sweep's normalized pivot rows are exactly the rows of the
    inverse unit-lower factor scaled by the pivot reciprocals, and its
    rank-one completions sum to the symmetric recombination of that
    factor.  Evaluating those three pieces directly turns the whole
    computation into blocked matrix products while keeping the same
    pivots, the same failure step, and the same inverse up to rounding.
    """
    n = a.shape[0]
    l_strict, d = _ldl_nopiv_blocked(a, tol)
    m = _unit_lower_inverse(l_strict)
    inv = m.T @ (m * (1.0 / d)[:, None])
    # Cost model of the sweep, step by step (identical to the explicit
    # loop below): pivot-row products, the reciprocal, the row scaling,
    # the column of coefficients, and the two rank-one updates.
    for k in range(n):
        cnt.add_muldiv((n - k) * k + 1 + k + (n - k - 1)
                       + (n - k - 1) * k + k * (k + 1) // 2)
    return mirror_lower(inv)


def invert_v2(a, counter=None, pivot_tol=None) -> np.ndarray:
    """Single-sweep square-root-free symmetric inversion.

    Costs n^3/2 + n^2/2 multiplications and divisions, no square roots.
    Raises ZeroPivot when a leading principal minor is numerically zero.
    Orders above _SWEEP_LIMIT are evaluated through the sweep's
    triangular-factor form, which is much faster and identical up to
    rounding; below the limit the explicit sweep runs, and its lower
    triangle agrees bitwise with invert_v2_reference.
    """
    a = _checked_symmetric(a)
    cnt = counter if counter is not None else OpCounter()
    tol = modgauss.default_pivot_tol(a) if pivot_tol is None else float(pivot_tol)
    n = a.shape[0]
    if n > _SWEEP_LIMIT:
        return _invert_v2_blocked(a, cnt, tol)
    f = np.eye(n)
    for k in range(n):
        old = f[k, :k].copy()
        # Row k of A doubles as column k (symmetry), keeping reads contiguous;
        # the trailing a[k, k:] term is each unpivoted row's identity entry
        # times A[i, k] — an uncounted addition.
        d = f[k:, :k] @ a[k, :k] + a[k, k:]
        cnt.add_muldiv((n - k) * k)
        g = float(d[0])
        if abs(g) <= tol:
            raise ZeroPivot(k)
        r = 1.0 / g
        cnt.add_muldiv(1)
        new_row = old * r
        f[k, :k] = new_row
        f[k, k] = r
        cnt.add_muldiv(k)
        c = d[1:] * (-r)
        f[k + 1:, k] = c
        cnt.add_muldiv(n - k - 1)
        f[k + 1:, :k] += np.outer(c, old)
        cnt.add_muldiv((n - k - 1) * k)
        # Rank-one completion of the leading block.  Only the lower half is
        # counted (and ever read again); the full outer product is cheaper
        # to apply than masking, and the upper half is discarded below.
        f[:k, :k] += np.outer(new_row, old)
        cnt.add_muldiv(k * (k + 1) // 2)
    return mirror_lower(f)


def invert_v2_reference(a, counter=None, pivot_tol=None) -> np.ndarray:
    """Column-by-column formulation of the single-sweep variant.

    Applies exactly the same scalar products as invert_v2 but ordered
    column-wise, writing the normalized pivot values into column k first
    and mirroring them into row k at the end of the step.  Kept as a
    cross-check: its lower triangle agrees bitwise with invert_v2's.
    """
    a = _checked_symmetric(a)
    cnt = counter if counter is not None else OpCounter()
    tol = modgauss.default_pivot_tol(a) if pivot_tol is None else float(pivot_tol)
    n = a.shape[0]
    f = np.eye(n)
    for k in range(n):
        old = f[k, :k].copy()
        d = f[k:, :k] @ a[k, :k] + a[k, k:]
        cnt.add_muldiv((n - k) * k)
        g = float(d[0])
        if abs(g) <= tol:
            raise ZeroPivot(k)
        r = 1.0 / g
        cnt.add_muldiv(1)
        f[:k, k] = old * r
        f[k, k] = r
        cnt.add_muldiv(k)
        f[k + 1:, k] = d[1:] * (-r)
        cnt.add_muldiv(n - k - 1)
        for c in range(k):
            f[c:k, c] += f[c:k, k] * old[c]
            f[k + 1:, c] += f[k + 1:, k] * old[c]
            cnt.add_muldiv((k - c) + (n - k - 1))
        f[k, :k] = f[:k, k]
    return mirror_lower(f)


def lemma1_check(a, m, tolerance=None) -> bool:
    """Leading-block inverse property of the elimination.

    Runs m+1 full-required steps (no swaps) and checks that the leading
    (m+1)-block of F inverts the leading (m+1)-block of a within
    1e-9 * (1 + frobenius_norm(block of a)); for symmetric input the
    F block must itself be symmetric within the same tolerance.
    """
    a = as_matrix(a)
    n = a.shape[0]
    if not 0 <= m < n:
        raise InvalidArgument(f"step index {m} out of range [0, {n - 1}]")
    state = modgauss.EliminationState.start(a)
    for _ in range(m + 1):
        state = modgauss.eliminate_step(state, allow_swaps=False)
    size = m + 1
    block = state.f[:size, :size]
    sub = a[:size, :size]
    tol = 1e-9 * (1.0 + frobenius_norm(sub)) if tolerance is None else float(tolerance)
    if frobenius_norm(block @ sub - np.eye(size)) > tol:
        return False
    if SymmetryCheck().passes(a) and frobenius_norm(block - block.T) > tol:
        return False
    return True


def lemma2_check(a, m, tolerance=1e-10) -> bool:
    """Rank-one structure of one elimination step.

    Checks that F^{m+1} minus (F^m with row m zeroed) equals
    outer(column m of F^{m+1}, row m of F^m), entrywise within
    tolerance * (1 + |expected entry|).
    """
    a = as_matrix(a)
    n = a.shape[0]
    if not 0 <= m < n:
        raise InvalidArgument(f"step index {m} out of range [0, {n - 1}]")
    state = modgauss.EliminationState.start(a)
    for _ in range(m):
        state = modgauss.eliminate_step(state, allow_swaps=False)
    after = modgauss.eliminate_step(state, allow_swaps=False)
    zeroed = state.f.copy()
    zeroed[m, :] = 0.0
    delta = after.f - zeroed
    expected = np.outer(after.f[:, m], state.f[m, :])
    dev = np.abs(delta - expected)
    return bool((dev <= tolerance * (1.0 + np.abs(expected))).all())


def invert_symmetric_robust(a, counter=None, pivot_tol=None) -> np.ndarray:
    """Symmetric inversion that survives zero leading minors.

    Tries the single-sweep variant first; if a leading minor is
    numerically zero, falls back to the row-swapping elimination and
    symmetrizes its result as (R + R^T) / 2, which costs n^2 extra
    multiplications.  Only the operations of the path that produced the
    result are added to the counter.
    """
    a = _checked_symmetric(a)
    cnt = counter if counter is not None else OpCounter()
    attempt = OpCounter()
    try:
        inv = invert_v2(a, attempt, pivot_tol)
    except ZeroPivot:
        pass
    else:
        cnt.merge(attempt)
        return inv
    raw = modgauss.invert(a, cnt, pivot_tol, allow_swaps=True)
    inv = (raw + raw.T) * 0.5
    cnt.add_muldiv(a.shape[0] ** 2)
    return inv
