"""Pure-Python exact rank: modular elimination and fraction-free integer elimination.

Rows are dicts ``{column: value}``.  Elimination is incremental: each new row
is reduced against the pivots found so far, always on its smallest column.
"""

from __future__ import annotations

from math import gcd


def rank_mod_p(rows, p: int) -> int:
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v % p for c, v in row.items() if v % p}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                inv = pow(r[c], -1, p)
                pivots[c] = {k: v * inv % p for k, v in r.items()}
                break
            f = r[c]
            for k, v in piv.items():
                nv = (r.get(k, 0) - f * v) % p
                if nv:
                    r[k] = nv
                else:
                    r.pop(k, None)
    return len(pivots)


def _content(r: dict[int, int]) -> int:
    g = 0
    for v in r.values():
        g = gcd(g, v)
        if g == 1:
            break
    return g


def rank_integer(rows) -> int:
    """Rank over Q, computed with integer rows only (no fractions)."""
    pivots: dict[int, dict[int, int]] = {}
    for row in rows:
        r = {c: v for c, v in row.items() if v}
        while r:
            c = min(r)
            piv = pivots.get(c)
            if piv is None:
                g = _content(r)
                if r[c] < 0:
                    g = -g
                pivots[c] = {k: v // g for k, v in r.items()}
                break
            pv, f = piv[c], r[c]
            g = gcd(pv, f)
            mr, mp = pv // g, f // g
            out = {}
            for k, v in r.items():
                out[k] = v * mr
            for k, v in piv.items():
                nv = out.get(k, 0) - v * mp
                if nv:
                    out[k] = nv
                else:
                    out.pop(k, None)
            g = _content(out)
            r = {k: v // g for k, v in out.items()} if g > 1 else out
    return len(pivots)
