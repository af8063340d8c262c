"""Independent reference computations used to cross-check the library.

Nothing here calls the library's valuation, residue or splitting code: residue fields
are enumerated element by element and polynomial arithmetic is done on plain code lists.
"""

from functools import lru_cache
from itertools import product


def _trim(a):
    a = list(a)
    while a and a[-1] == 0:
        a.pop()
    return a


def pmul(F, a, b):
    out = [0] * (len(a) + len(b) - 1) if a and b else []
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] = F.add(out[i + j], F.mul(x, y))
    return _trim(out)


def pdivmod(F, a, b):
    a, b = _trim(a), _trim(b)
    q = [0] * max(len(a) - len(b) + 1, 0)
    inv = F.inv(b[-1])
    while len(a) >= len(b):
        c = F.mul(a[-1], inv)
        k = len(a) - len(b)
        q[k] = c
        for i, y in enumerate(b):
            a[k + i] = F.sub(a[k + i], F.mul(c, y))
        a = _trim(a)
    return _trim(q), a


def brute_irreducible(F, f):
    """f (code list, monic, deg <= 4) is irreducible iff no factorization into monic
    factors of degrees k and d - k exists."""
    d = len(f) - 1
    for k in range(1, d // 2 + 1):
        for low in product(range(F.q), repeat=k):
            g = list(low) + [1]
            _, r = pdivmod(F, f, g)
            if not r:
                return False
    return True


@lru_cache(maxsize=None)
def _residue_squares(F, P):
    """All squares of F_q[T]/(P), by enumerating every residue and squaring it."""
    n = len(P) - 1
    out = set()
    for y in product(range(F.q), repeat=n):
        _, r = pdivmod(F, pmul(F, _trim(y), _trim(y)), list(P))
        out.add(tuple(r))
    return out


def split_oracle(F, P, a, b):
    """Splitting of a place in F(alpha), alpha^2 + a alpha + b = 0, q odd, by root counting.

    P is a tuple of codes (monic irreducible) or None for infinity; a, b are code lists.
    Completing the square gives X^2 = d with d = a^2 - 4b. If d = P^{2k} d0 with d0 a
    P-unit, the number of residue roots of X^2 - d0 decides split (2 roots) or inert (0).
    """
    aa = pmul(F, a, a)
    fb = [F.mul(F.from_int(4), c) for c in b]
    n = max(len(aa), len(fb))
    aa, fb = aa + [0] * (n - len(aa)), fb + [0] * (n - len(fb))
    d = _trim([F.sub(x, y) for x, y in zip(aa, fb)])
    if not d:
        return "degenerate"
    if P is None:
        ord_d = -(len(d) - 1)
        unit_res = (d[-1],)
        squares = {(F.mul(y, y),) if y else () for y in range(F.q)}
    else:
        ord_d = 0
        while True:
            qq, r = pdivmod(F, d, list(P))
            if r:
                break
            d, ord_d = qq, ord_d + 1
        _, unit_res = pdivmod(F, d, list(P))
        unit_res = tuple(unit_res)
        squares = _residue_squares(F, tuple(P))
    if ord_d % 2:
        return "ramified"
    # X^2 = unit has two residue roots when the unit is a square, none otherwise
    roots = 2 if unit_res in squares else 0
    return "split" if roots == 2 else "inert"
