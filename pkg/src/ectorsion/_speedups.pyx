# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled prime-field kernel.

Twin of ``_purekernel.py`` — same functions, same semantics, same canonical
choices.  All arithmetic is unsigned 64-bit; callers guarantee p < 2^31 so a
product of two reduced residues stays below 2^62.
"""

from libc.stdint cimport uint64_t


cdef inline uint64_t _powmod(uint64_t a, uint64_t e, uint64_t p):
    cdef uint64_t r = 1 % p
    a %= p
    while e:
        if e & 1:
            r = r * a % p
        a = a * a % p
        e >>= 1
    return r


cdef inline uint64_t _inv(uint64_t a, uint64_t p):
    return _powmod(a, p - 2, p)


def fp_is_square(a, p):
    """Euler's criterion; 0 counts as a square."""
    cdef uint64_t pp = p
    cdef uint64_t aa = a % pp
    if aa == 0 or pp == 2:
        return True
    return _powmod(aa, (pp - 1) // 2, pp) == 1


cdef uint64_t _csqrt(uint64_t a, uint64_t p):
    # Returns the canonical root in [0, p/2], or p (an impossible value)
    # when `a` is a non-residue.
    cdef uint64_t s, n, x, b, g, t, gs, r2
    cdef int e, r, m
    a %= p
    if a == 0:
        return 0
    if p == 2:
        return a
    if _powmod(a, (p - 1) // 2, p) != 1:
        return p
    if p % 4 == 3:
        x = _powmod(a, (p + 1) // 4, p)
        return x if x <= p - x else p - x

    s = p - 1
    e = 0
    while s % 2 == 0:
        s //= 2
        e += 1
    n = 2
    while _powmod(n, (p - 1) // 2, p) != p - 1:
        n += 1

    x = _powmod(a, (s + 1) // 2, p)
    b = _powmod(a, s, p)
    g = _powmod(n, s, p)
    r = e
    while True:
        t = b
        m = 0
        while m < r:
            if t == 1:
                break
            t = t * t % p
            m += 1
        if m == 0:
            return x if x <= p - x else p - x
        gs = _powmod(g, (<uint64_t>1) << (r - m - 1), p)
        g = gs * gs % p
        x = x * gs % p
        b = b * g % p
        r = m


def fp_sqrt(a, p):
    """Canonical square root of ``a`` mod ``p`` (root in [0, p/2]), or -1."""
    cdef uint64_t r = _csqrt(a % p, p)
    if r == <uint64_t>p and p != 2:
        return -1
    return r


cdef struct CPt:
    uint64_t x
    uint64_t y
    int inf


cdef inline CPt _cadd(uint64_t p, uint64_t A, uint64_t B, uint64_t C, CPt P, CPt Q):
    cdef CPt R
    cdef uint64_t lam, num, den, x3, y3
    if P.inf:
        return Q
    if Q.inf:
        return P
    if P.x == Q.x:
        if (P.y + Q.y) % p == 0:
            R.x = 0; R.y = 0; R.inf = 1
            return R
        num = (3 * (P.x * P.x % p) + 2 * A * P.x + B) % p
        den = (2 * P.y) % p
        lam = num * _inv(den, p) % p
    else:
        num = (p + Q.y - P.y) % p
        den = (p + Q.x - P.x) % p
        lam = num * _inv(den, p) % p
    x3 = (lam * lam % p + 3 * p - A - P.x - Q.x) % p
    y3 = (lam * ((p + P.x - x3) % p) % p + p - P.y) % p
    R.x = x3; R.y = y3; R.inf = 0
    return R


cdef inline CPt _from_obj(uint64_t p, pt):
    cdef CPt P
    if pt is None:
        P.x = 0; P.y = 0; P.inf = 1
    else:
        P.x = pt[0] % p; P.y = pt[1] % p; P.inf = 0
    return P


cdef inline object _to_obj(CPt P):
    if P.inf:
        return None
    return (P.x, P.y)


def cubic_is_on(p, A, B, C, x, y):
    cdef uint64_t pp = p, xx = x % pp, yy = y % pp
    cdef uint64_t f = ((xx * xx % pp + (<uint64_t>(A % pp)) * xx % pp
                        + <uint64_t>(B % pp)) % pp) * xx % pp
    f = (f + <uint64_t>(C % pp)) % pp
    return yy * yy % pp == f


def cubic_neg(p, pt):
    if pt is None:
        return None
    return (pt[0], (p - pt[1]) % p)


def cubic_add(p, A, B, C, pt1, pt2):
    """Chord-and-tangent addition on y^2 = x^3 + A x^2 + B x + C."""
    cdef uint64_t pp = p
    cdef CPt R = _cadd(pp, A % pp, B % pp, C % pp,
                       _from_obj(pp, pt1), _from_obj(pp, pt2))
    return _to_obj(R)


def cubic_smul(p, A, B, C, n, pt):
    """n * pt by double-and-add (n may be negative)."""
    cdef uint64_t pp = p, AA = A % pp, BB = B % pp, CC = C % pp
    cdef long long nn = n
    if nn < 0:
        nn = -nn
        pt = cubic_neg(p, pt)
    cdef CPt acc, base
    acc.x = 0; acc.y = 0; acc.inf = 1
    base = _from_obj(pp, pt)
    while nn:
        if nn & 1:
            acc = _cadd(pp, AA, BB, CC, acc, base)
        base = _cadd(pp, AA, BB, CC, base, base)
        nn >>= 1
    return _to_obj(acc)


cdef long long _corder(uint64_t p, uint64_t A, uint64_t B, uint64_t C,
                       CPt P, long long cap):
    cdef CPt acc = P
    cdef long long n = 1
    if P.inf:
        return 1
    while not acc.inf:
        if n + 1 > cap:
            return 0  # even the next multiple is past the cap
        acc = _cadd(p, A, B, C, acc, P)
        n += 1
    return n


def cubic_order(p, A, B, C, pt, cap):
    """Exact order of ``pt`` by iterated addition; 0 if it exceeds ``cap``."""
    cdef uint64_t pp = p
    return _corder(pp, A % pp, B % pp, C % pp, _from_obj(pp, pt), cap)


def cubic_points(p, A, B, C):
    """All affine points, ordered by x then y (infinity not included)."""
    cdef uint64_t pp = p, AA = A % pp, BB = B % pp, CC = C % pp
    cdef uint64_t x, t, r
    pts = []
    for x in range(pp):
        t = ((x * x % pp + AA * x % pp + BB) % pp) * x % pp
        t = (t + CC) % pp
        if t == 0:
            pts.append((x, 0))
            continue
        r = _csqrt(t, pp)
        if r != pp:
            pts.append((x, r))
            pts.append((x, pp - r))
    return pts


def cubic_all_orders(p, A, B, C, cap):
    """Orders of every affine point, aligned with cubic_points()."""
    cdef uint64_t pp = p, AA = A % pp, BB = B % pp, CC = C % pp
    cdef uint64_t x, t, r
    cdef CPt P
    orders = []
    for x in range(pp):
        t = ((x * x % pp + AA * x % pp + BB) % pp) * x % pp
        t = (t + CC) % pp
        if t == 0:
            P.x = x; P.y = 0; P.inf = 0
            orders.append(_corder(pp, AA, BB, CC, P, cap))
            continue
        r = _csqrt(t, pp)
        if r != pp:
            P.x = x; P.y = r; P.inf = 0
            orders.append(_corder(pp, AA, BB, CC, P, cap))
            P.y = pp - r
            orders.append(_corder(pp, AA, BB, CC, P, cap))
    return orders


def cubic_double_all(p, A, B, C, pts):
    """Doubles of a list of affine points (entries may become None)."""
    cdef uint64_t pp = p, AA = A % pp, BB = B % pp, CC = C % pp
    cdef CPt P
    out = []
    for pt in pts:
        P = _from_obj(pp, pt)
        out.append(_to_obj(_cadd(pp, AA, BB, CC, P, P)))
    return out
