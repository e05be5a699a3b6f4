"""Dense polynomial arithmetic over F_p on plain coefficient lists.

A polynomial a_0 + a_1*x + ... + a_n*x^n is the list [a_0, ..., a_n] of ints
in [0, p); the zero polynomial is [].  These helpers back the extension-field
element arithmetic and the irreducibility test used when constructing F_q;
higher-level factorization works with the generic Polynomial class instead.
"""


def trim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def add(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] + c) % p
    return trim(out)


def sub(f, g, p):
    n = max(len(f), len(g))
    out = [0] * n
    for i, c in enumerate(f):
        out[i] = c
    for i, c in enumerate(g):
        out[i] = (out[i] - c) % p
    return trim(out)


def mul(f, g, p):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                if b:
                    out[i + j] = (out[i + j] + a * b) % p
    return trim(out)


def scale(f, c, p):
    c %= p
    if c == 0:
        return []
    return trim([(a * c) % p for a in f])


def divmod_(f, g, p):
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    f = list(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    inv_lead = pow(g[-1], p - 2, p)
    while len(f) >= len(g) and any(f):
        trim(f)
        if len(f) < len(g):
            break
        c = (f[-1] * inv_lead) % p
        d = len(f) - len(g)
        q[d] = c
        for i, b in enumerate(g):
            f[d + i] = (f[d + i] - c * b) % p
        trim(f)
    return trim(q), trim(f)


def mod(f, g, p):
    return divmod_(f, g, p)[1]


def monic(f, p):
    if not f:
        return []
    return scale(f, pow(f[-1], p - 2, p), p)


def gcd(f, g, p):
    while g:
        f, g = g, mod(f, g, p)
    return monic(f, p)


def ext_gcd(f, g, p):
    """Return (d, s, t) with s*f + t*g = d, d monic."""
    r0, r1 = list(f), list(g)
    s0, s1 = [1], []
    t0, t1 = [], [1]
    while r1:
        q, r = divmod_(r0, r1, p)
        r0, r1 = r1, r
        s0, s1 = s1, sub(s0, mul(q, s1, p), p)
        t0, t1 = t1, sub(t0, mul(q, t1, p), p)
    if not r0:
        return [], s0, t0
    lead_inv = pow(r0[-1], p - 2, p)
    return scale(r0, lead_inv, p), scale(s0, lead_inv, p), scale(t0, lead_inv, p)


def pow_mod(f, n, g, p):
    """f^n mod g."""
    result = [1]
    f = mod(f, g, p)
    while n > 0:
        if n & 1:
            result = mod(mul(result, f, p), g, p)
        f = mod(mul(f, f, p), g, p)
        n >>= 1
    return result


def is_irreducible(f, p):
    """Rabin test: f of degree d is irreducible over F_p iff x^(p^d) = x
    mod f and gcd(x^(p^(d/q)) - x, f) = 1 for every prime q dividing d."""
    d = len(f) - 1
    if d <= 0:
        return False
    if d == 1:
        return True
    x = [0, 1]
    for q in sorted({q for q in _prime_factors(d)}):
        h = pow_mod(x, p ** (d // q), f, p)
        if gcd(sub(h, x, p), f, p) != [1]:
            return False
    return pow_mod(x, p ** d, f, p) == x


def _prime_factors(n):
    out = []
    d = 2
    while d * d <= n:
        while n % d == 0:
            out.append(d)
            n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out
