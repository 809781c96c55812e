"""Integer dominance sweeps for universal-property checks.

Checking that a candidate is a least upper bound means, for every pair and
every sample vector ``C``: if ``C`` dominates both members of the pair it must
also dominate the candidate.  With weights scaled to a common denominator
this is pure int64 comparison work, done here either by a numba-compiled
loop or by a numpy broadcast.

Set ``BELIEFCAT_DISABLE_NUMBA=1`` to force the numpy path.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

NUMBA_DISABLED = os.environ.get("BELIEFCAT_DISABLE_NUMBA", "").strip().lower() in ("1", "true", "yes")
HAVE_NUMBA = numba is not None

# Rows per numpy broadcast block; bounds memory to ~block * k * d bytes.
_BLOCK = 256


def default_backend() -> str:
    return "numba" if HAVE_NUMBA and not NUMBA_DISABLED else "numpy"


def _sweep_numpy(a, b, cand, sample):
    p = a.shape[0]
    bounds_ok = np.all(a <= cand, axis=1) & np.all(b <= cand, axis=1)
    counts = np.zeros(p, dtype=np.int64)
    first = np.full(p, -1, dtype=np.int64)
    if sample.shape[0] == 0:
        return bounds_ok, counts, first
    for start in range(0, p, _BLOCK):
        stop = min(start + _BLOCK, p)
        s = sample[None, :, :]
        upper = np.all(a[start:stop, None, :] <= s, axis=2) & np.all(b[start:stop, None, :] <= s, axis=2)
        bad = upper & ~np.all(cand[start:stop, None, :] <= s, axis=2)
        counts[start:stop] = bad.sum(axis=1)
        hit = bad.any(axis=1)
        first[start:stop] = np.where(hit, bad.argmax(axis=1), -1)
    return bounds_ok, counts, first


if HAVE_NUMBA:

    @numba.njit(cache=True)
    def _dominates(lo, hi):
        for j in range(lo.shape[0]):
            if lo[j] > hi[j]:
                return False
        return True

    @numba.njit(cache=True)
    def _sweep_numba(a, b, cand, sample):
        p = a.shape[0]
        k = sample.shape[0]
        bounds_ok = np.zeros(p, dtype=np.bool_)
        counts = np.zeros(p, dtype=np.int64)
        first = np.full(p, -1, dtype=np.int64)
        for i in range(p):
            bounds_ok[i] = _dominates(a[i], cand[i]) and _dominates(b[i], cand[i])
            for c in range(k):
                if _dominates(a[i], sample[c]) and _dominates(b[i], sample[c]):
                    if not _dominates(cand[i], sample[c]):
                        counts[i] += 1
                        if first[i] < 0:
                            first[i] = c
        return bounds_ok, counts, first

else:  # pragma: no cover
    _sweep_numba = None


def dominance_sweep(a, b, cand, sample, backend: str | None = None):
    """Least-upper-bound sweep over int64 arrays.

    ``a``, ``b``, ``cand`` have shape ``(p, d)``; ``sample`` has shape ``(k, d)``.
    Returns ``(bounds_ok, counts, first)``: whether ``cand[i]`` dominates both
    ``a[i]`` and ``b[i]``, how many common upper bounds in ``sample`` fail to
    dominate ``cand[i]``, and the index of the first such bound (``-1`` if
    none).  Negate every array to check greatest lower bounds instead.
    """
    backend = backend or default_backend()
    arrays = [np.ascontiguousarray(x, dtype=np.int64) for x in (a, b, cand, sample)]
    if backend == "numba":
        if _sweep_numba is None:
            raise RuntimeError("numba backend requested but numba is not installed")
        return _sweep_numba(*arrays)
    if backend == "numpy":
        return _sweep_numpy(*arrays)
    raise ValueError(f"unknown backend {backend!r}")
