"""Matrix inversion and partial solves by a modified Gaussian elimination.

Instead of reducing A, the elimination evolves an auxiliary matrix F
(starting from the identity) so that after step k every still-active row
i of F satisfies F[i] @ A[:, j] == delta_ij for the pivoted columns
j <= k.  After all n steps F is A^-1.  Rows whose solution component the
caller never asked for are frozen right after their own pivot step,
which is where the savings of the partial solve come from.

Cost model: only scalar multiplications and divisions are tallied
(additions and subtractions are free).  Tallies follow the row-profile
structure of F — a pivoted row carries nonzeros in the pivoted columns
only, an unpivoted row additionally carries its untouched identity entry
— so a full inversion costs exactly n^3 and a trailing-p partial solve
costs n^3/3 + n^2/2 + n/6 + p^2 n − p n − p^3/3 + p^2/2 − p/6 for the
elimination, provided no pivot swap occurs.  After a swap the profile
structure is gone; the remaining steps run (and are tallied) at full row
width, so swap-bearing runs are excluded from count validation.
"""

from __future__ import annotations

import dataclasses
from dataclasses import dataclass

import numpy as np

from .errors import DimensionMismatch, InvalidArgument, SingularMatrix, ZeroPivot
from .matcore import OpCounter, RequiredSet, as_matrix, as_vector, frobenius_norm


def default_pivot_tol(a) -> float:
    """Near-zero pivot threshold, scaled by the largest entry magnitude."""
    a = np.asarray(a, dtype=np.float64)
    return 1e-12 * (1.0 + float(np.abs(a).max()))


def _coerce_required(required, n: int) -> RequiredSet:
    if required is None:
        req = RequiredSet.full(n)
    elif isinstance(required, RequiredSet):
        req = required
    else:
        req = RequiredSet(required)
    req.mask(n)  # raises IndexOutOfRange if any index exceeds n
    return req


def _run_step(a, f, k, rows, pivot_tol, counter, allow_swaps, swaps) -> None:
    """Apply elimination step k to f in place.

    rows holds the sorted indices of the active rows (always including
    every row >= k).  swaps is the mutable swap log; a non-empty log
    means the profile structure is broken and full-width arithmetic is
    used and tallied.
    """
    n = a.shape[0]
    acol = a[:, k]
    m = int(rows.size)
    lo = int(rows[0])
    tail = m == n - lo  # active rows form one contiguous trailing block
    dense = bool(swaps)
    kpos = int(np.searchsorted(rows, k))

    window = f[lo:] if tail else f[rows]
    if dense:
        d = window @ acol
        counter.add_muldiv(m * n)
    else:
        d = window[:, :k] @ acol[:k]
        # Unpivoted rows still hold their identity entry at (i, i), which
        # contributes 1 * A[i, k]: an uncounted addition, not a multiply.
        d[kpos:] += acol[k:]
        counter.add_muldiv(m * k)

    g = float(d[kpos])
    if abs(g) <= pivot_tol:
        if not allow_swaps:
            raise ZeroPivot(k)
        jrel = -1
        if kpos + 1 < m:
            jrel = kpos + 1 + int(np.argmax(np.abs(d[kpos + 1:])))
            if abs(float(d[jrel])) <= pivot_tol:
                jrel = -1
        if jrel < 0:
            raise SingularMatrix(
                f"no usable pivot at elimination step {k}: matrix is singular"
            )
        j = int(rows[jrel])
        f[[k, j]] = f[[j, k]]
        d[kpos], d[jrel] = float(d[jrel]), g
        swaps.append((k, j))
        dense = True
        g = float(d[kpos])

    r = 1.0 / g
    counter.add_muldiv(1)
    if dense:
        f[k, :] *= r
        counter.add_muldiv(n)
        hi = n
    else:
        f[k, :k] *= r
        f[k, k] = r  # the identity entry becomes the reciprocal: no multiply
        counter.add_muldiv(k)
        hi = k + 1

    pivot_row = f[k, :hi]
    if tail:
        f[lo:k, :hi] -= np.outer(d[:kpos], pivot_row)
        f[k + 1:, :hi] -= np.outer(d[kpos + 1:], pivot_row)
    else:
        others = np.delete(rows, kpos)
        f[others, :hi] -= np.outer(np.delete(d, kpos), pivot_row)
    counter.add_muldiv((m - 1) * hi)


def _eliminate(a, required: RequiredSet, counter, pivot_tol, allow_swaps):
    """Run all n steps on a validated matrix; returns (f, swaps)."""
    n = a.shape[0]
    f = np.eye(n)
    mask = required.mask(n)
    tol = default_pivot_tol(a) if pivot_tol is None else float(pivot_tol)
    swaps: list[tuple[int, int]] = []
    active = np.ones(n, dtype=bool)
    for k in range(n):
        _run_step(a, f, k, np.flatnonzero(active), tol, counter, allow_swaps, swaps)
        if not mask[k]:
            active[k] = False
    return f, swaps


def eliminate(a, required=None, counter=None, pivot_tol=None, allow_swaps=True) -> np.ndarray:
    """Run the elimination to completion and return the final F.

    With every index required (the default) the result is A^-1.  With a
    partial required set only the required rows of the result are rows of
    A^-1; the other rows were frozen early to save operations.
    """
    a = as_matrix(a)
    req = _coerce_required(required, a.shape[0])
    cnt = counter if counter is not None else OpCounter()
    f, _ = _eliminate(a, req, cnt, pivot_tol, allow_swaps)
    return f


def invert(a, counter=None, pivot_tol=None, allow_swaps=True) -> np.ndarray:
    """Invert a square matrix; costs exactly n^3 muldiv when no swap occurs."""
    return eliminate(a, None, counter, pivot_tol, allow_swaps)


def solve(a, b, required, counter=None, pivot_tol=None, allow_swaps=True) -> dict[int, float]:
    """Solve A x = b for the required solution components only.

    Returns {index: value} keyed by the 1-based required indices.  On top
    of the elimination cost, each returned component pays one length-n
    dot product (n multiplications).
    """
    a = as_matrix(a)
    n = a.shape[0]
    bv = as_vector(b, n)
    req = _coerce_required(required, n)
    cnt = counter if counter is not None else OpCounter()
    f, _ = _eliminate(a, req, cnt, pivot_tol, allow_swaps)
    out = {}
    for i in req:
        out[i] = float(f[i - 1] @ bv)
        cnt.add_muldiv(n)
    return out


@dataclass(frozen=True)
class EliminationState:
    """Snapshot of an elimination in progress.

    f evolves from the identity toward A^-1; step counts completed
    steps; perm records row swaps as (step, swapped_row) pairs.  States
    are immutable: eliminate_step returns a new snapshot.
    """

    a: np.ndarray
    f: np.ndarray
    step: int
    required: RequiredSet
    perm: tuple
    pivot_tol: float

    @classmethod
    def start(cls, a, required=None, pivot_tol=None) -> "EliminationState":
        a = as_matrix(a)
        n = a.shape[0]
        req = _coerce_required(required, n)
        tol = default_pivot_tol(a) if pivot_tol is None else float(pivot_tol)
        return cls(a=a, f=np.eye(n), step=0, required=req, perm=(), pivot_tol=tol)

    def active_rows(self) -> np.ndarray:
        """Indices of rows still being updated at the current step."""
        n = self.a.shape[0]
        act = self.required.mask(n)
        act[self.step:] = True
        return np.flatnonzero(act)


def eliminate_step(state: EliminationState, counter=None, allow_swaps=True) -> EliminationState:
    """Apply one elimination step, returning a new state (input unchanged)."""
    n = state.a.shape[0]
    if state.step >= n:
        raise InvalidArgument(f"elimination already complete after {state.step} steps")
    f = state.f.copy()
    swaps = list(state.perm)
    cnt = counter if counter is not None else OpCounter()
    _run_step(state.a, f, state.step, state.active_rows(), state.pivot_tol,
              cnt, allow_swaps, swaps)
    return dataclasses.replace(state, f=f, step=state.step + 1, perm=tuple(swaps))


def row_identities_check(a, f_final, required=None, tolerance=None) -> bool:
    """Check F[i] @ A[:, j] == delta_ij for every required row i, all j.

    The tolerance defaults to 1e-10 * (1 + frobenius_norm(a)).
    """
    a = as_matrix(a)
    f = as_matrix(f_final)
    if f.shape != a.shape:
        raise DimensionMismatch(f"operand shapes differ: {a.shape} vs {f.shape}")
    n = a.shape[0]
    req = _coerce_required(required, n)
    mask = req.mask(n)
    tol = 1e-10 * (1.0 + frobenius_norm(a)) if tolerance is None else float(tolerance)
    dev = f[mask] @ a - np.eye(n)[mask]
    return bool(np.abs(dev).max() <= tol)
