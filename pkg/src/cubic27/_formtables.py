"""Static index tables for dense homogeneous-form arithmetic.

Monomials of degree d in n variables are kept in a fixed order
(lexicographically descending exponent vectors), so a form is just a flat
coefficient list.  RAISE maps monomial-index times variable to the index of
the product monomial one degree up; the kernels use it to expand f(Mx)
without ever touching exponent tuples in the hot loop.
"""
from itertools import product

MAX_DEG = 3

MONS = {}
MIDX = {}
RAISE = {}

for _n in (2, 3, 4):
    for _d in range(MAX_DEG + 1):
        ms = sorted((m for m in product(range(_d + 1), repeat=_n) if sum(m) == _d),
                    reverse=True)
        MONS[(_n, _d)] = tuple(ms)
        MIDX[(_n, _d)] = {m: i for i, m in enumerate(ms)}
    for _d in range(MAX_DEG):
        up = MIDX[(_n, _d + 1)]
        flat = []
        for m in MONS[(_n, _d)]:
            for v in range(_n):
                m2 = list(m)
                m2[v] += 1
                flat.append(up[tuple(m2)])
        RAISE[(_n, _d)] = tuple(flat)

_NP_CACHE = {}


def np_raise(nvars, deg):
    """RAISE table as a cached numpy int64 array (fast-kernel input)."""
    import numpy as np

    key = (nvars, deg)
    arr = _NP_CACHE.get(key)
    if arr is None:
        arr = np.asarray(RAISE[key], dtype=np.int64)
        _NP_CACHE[key] = arr
    return arr


def np_mons(nvars, deg):
    import numpy as np

    key = ("m", nvars, deg)
    arr = _NP_CACHE.get(key)
    if arr is None:
        arr = np.asarray(MONS[(nvars, deg)], dtype=np.int64).reshape(-1, nvars)
        _NP_CACHE[key] = arr
    return arr
