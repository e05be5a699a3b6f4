"""Univariate polynomial factorization.

Finite fields: squarefree decomposition, distinct-degree splitting, then
Berlekamp splitting (exhaustive over the field for small orders, seeded
Cantor-Zassenhaus beyond).  Rationals: rational-root extraction followed by
Zassenhaus (good prime, quadratic Hensel lifting on a factor tree, bounded
subset recombination), with a configurable degree cap.

factor_polynomial returns (leading unit, [(monic irreducible, multiplicity)])
with factors sorted deterministically.
"""

import math

from .errors import DegreeCapExceeded, NotSupported
from .fields import ExtensionField, PrimeField, QQ, RationalField, is_prime
from .linalg import Matrix
from .polys import Polynomial
from .seeding import derived_rng

DEFAULT_DEGREE_CAP = 16
_SMALL_ORDER = 256  # exhaustive Berlekamp splitting below this field size


def factor_polynomial(f, degree_cap=None, seed=0):
    if degree_cap is None:
        degree_cap = DEFAULT_DEGREE_CAP
    if f.is_zero():
        raise NotSupported("factorization of the zero polynomial")
    F = f.field
    unit = f.leading()
    if f.degree == 0:
        return unit, []
    if isinstance(F, (PrimeField, ExtensionField)):
        factors = _factor_finite(f.monic(), seed)
    elif isinstance(F, RationalField):
        factors = _factor_rationals(f.monic(), degree_cap)
    else:
        raise NotSupported(f"factorization over {F} not implemented")
    factors.sort(key=lambda pair: pair[0].sort_key())
    return unit, factors


def roots_in_field(f, degree_cap=None, seed=0):
    """Roots of f inside its coefficient field, with multiplicity."""
    _, factors = factor_polynomial(f, degree_cap=degree_cap, seed=seed)
    F = f.field
    out = []
    for g, mult in factors:
        if g.degree == 1:
            out.append((F.neg(g.coeffs[0]), mult))
    return out


def is_irreducible(f, seed=0):
    if f.degree <= 0:
        return False
    _, factors = factor_polynomial(f, seed=seed)
    return len(factors) == 1 and factors[0][1] == 1


# -- finite fields -----------------------------------------------------


def _factor_finite(f, seed):
    out = []
    for g, mult in _squarefree_finite(f):
        for h, d in _distinct_degree(g):
            for piece in _equal_degree(h, d, seed):
                out.append((piece, mult))
    return out


def _squarefree_finite(f):
    """Monic f over a finite field -> [(squarefree part, multiplicity)]."""
    F = f.field
    p = F.characteristic
    out = {}
    e = 1
    while f.degree > 0:
        fp = f.derivative()
        if fp.is_zero():
            f = _pth_root_poly(f)
            e *= p
            continue
        g = f.gcd(fp)
        w = (f // g).monic()
        i = 1
        while w.degree > 0:
            y = w.gcd(g)
            z = (w // y).monic()
            if z.degree > 0:
                key = i * e
                out[key] = out[key] * z if key in out else z
            w = y
            g = (g // y).monic()
            i += 1
        if g.degree > 0:
            f = _pth_root_poly(g)
            e *= p
        else:
            break
    return [(poly, mult) for mult, poly in sorted(out.items())]


def _pth_root_poly(f):
    """For f(x) = g(x^p), recover g; coefficientwise p-th roots."""
    F = f.field
    p = F.characteristic
    coeffs = []
    for i in range(0, len(f.coeffs), p):
        coeffs.append(F.pth_root(f.coeffs[i]))
    return Polynomial(F, coeffs)


def _distinct_degree(f):
    """Squarefree monic f -> [(product of degree-d factors, d)]."""
    F = f.field
    q = F.order
    out = []
    h = Polynomial.x(F)
    x = Polynomial.x(F)
    d = 0
    while f.degree > 2 * (d + 1) - 1 and f.degree > 0:
        d += 1
        h = h.pow_mod(q, f)
        g = f.gcd(h - x)
        if g.degree > 0:
            out.append((g.monic(), d))
            f = (f // g).monic()
            h = h % f
    if f.degree > 0:
        out.append((f, f.degree))
    return out


def _equal_degree(f, d, seed):
    """Split monic squarefree f whose irreducible factors all have degree d."""
    if f.degree == d:
        return [f]
    F = f.field
    if F.order <= _SMALL_ORDER:
        return _berlekamp_split(f)
    return _cantor_zassenhaus(f, d, derived_rng(seed, f.degree, d))


def _frobenius_matrix(f):
    """Matrix of h -> h^q on F[x]/(f) in the power basis."""
    F = f.field
    n = f.degree
    xq = Polynomial.x(F).pow_mod(F.order, f)
    cols = []
    power = Polynomial.one(F)
    for _ in range(n):
        cols.append(list(power.coeffs) + [F.zero] * (n - len(power.coeffs)))
        power = (power * xq) % f
    return Matrix.from_cols(F, cols, n)


def _berlekamp_split(f):
    """Deterministic splitting: gcd(f, v - c) over all c for kernel vectors v."""
    F = f.field
    n = f.degree
    B = _frobenius_matrix(f) - Matrix.identity(F, n)
    kernel_polys = [Polynomial(F, v) for v in B.kernel().vectors()]
    r = len(kernel_polys)
    factors = [f]
    for v in kernel_polys:
        if v.degree <= 0:
            continue
        if len(factors) == r:
            break
        next_factors = []
        for h in factors:
            pieces = []
            for c in F.elements():
                g = h.gcd(v - Polynomial(F, [c]))
                if 0 < g.degree:
                    pieces.append(g.monic())
            if len(pieces) <= 1:
                next_factors.append(h)
            else:
                next_factors.extend(pieces)
        factors = next_factors
    return factors


def _cantor_zassenhaus(f, d, rng):
    F = f.field
    q = F.order
    out = []
    stack = [f]
    while stack:
        g = stack.pop()
        if g.degree == d:
            out.append(g)
            continue
        while True:
            v = Polynomial(F, [F.random(rng) for _ in range(g.degree)])
            if v.degree < 1:
                continue
            if F.characteristic == 2:
                t = Polynomial.zero(F)
                w = v % g
                bits = d * _log2_order(F)
                for _ in range(bits):
                    t = (t + w) % g
                    w = (w * w) % g
                h = g.gcd(t)
            else:
                w = v.pow_mod((q**d - 1) // 2, g)
                h = g.gcd(w - Polynomial.one(F))
            if 0 < h.degree < g.degree:
                stack.append(h.monic())
                stack.append((g // h).monic())
                break
    return out


def _log2_order(F):
    q = F.order
    e = 0
    while q > 1:
        q //= 2
        e += 1
    return e


# -- rationals ---------------------------------------------------------


def _factor_rationals(f, degree_cap):
    if f.degree > degree_cap:
        raise DegreeCapExceeded(
            f"degree {f.degree} exceeds rational factorization cap {degree_cap}"
        )
    out = {}
    for part, mult in _squarefree_char0(f):
        for g in _factor_squarefree_q(part):
            out[g] = out.get(g, 0) + mult
    return list(out.items())


def _squarefree_char0(f):
    """Yun's algorithm; f monic over Q."""
    out = []
    g = f.gcd(f.derivative())
    w = (f // g).monic()
    i = 1
    while w.degree > 0:
        y = w.gcd(g)
        z = (w // y).monic()
        if z.degree > 0:
            out.append((z, i))
        w = y
        g = g // y
        i += 1
    return out


def _factor_squarefree_q(f):
    """Monic squarefree f over Q -> list of monic irreducible factors."""
    if f.degree == 1:
        return [f]
    factors = []
    g = _to_primitive_int(f)
    # peel off rational roots first
    while len(g) > 2:
        root = _find_rational_root(g)
        if root is None:
            break
        factors.append(Polynomial(QQ, [-root, QQ.one]))
        g = _int_divide_linear(g, root)
    if len(g) == 2:
        factors.append(Polynomial.from_ints(QQ, g).monic())
        return factors
    if len(g) <= 1:
        return factors
    factors.extend(_zassenhaus(g))
    return factors


def _to_primitive_int(f):
    den = 1
    for c in f.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in f.coeffs]
    content = 0
    for c in ints:
        content = math.gcd(content, abs(c))
    ints = [c // content for c in ints]
    if ints[-1] < 0:
        ints = [-c for c in ints]
    return ints


def _find_rational_root(g):
    a0, an = g[0], g[-1]
    if a0 == 0:
        return QQ.zero
    if abs(a0) > 10**7 or abs(an) > 10**7:
        return None  # divisor enumeration not worth it; Zassenhaus will catch it
    from fractions import Fraction

    for u in _divisors(abs(a0)):
        for v in _divisors(abs(an)):
            if math.gcd(u, v) != 1:
                continue
            for sign in (1, -1):
                r = Fraction(sign * u, v)
                if _int_eval(g, r) == 0:
                    return r
    return None


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def _int_eval(g, x):
    acc = 0
    for c in reversed(g):
        acc = acc * x + c
    return acc


def _int_divide_linear(g, root):
    """Exact division of an integer poly by (x - root), back to primitive."""
    f = Polynomial.from_ints(QQ, g)
    q, r = f.divmod(Polynomial(QQ, [-root, QQ.one]))
    assert r.is_zero()
    return _to_primitive_int(q.monic())


def _zassenhaus(g):
    """Primitive squarefree integer poly, degree >= 2, no rational roots."""
    lc = g[-1]
    if lc != 1:
        # monicize by substitution y = lc*x, factor, substitute back
        monic = _monicize(g)
        parts = _zassenhaus(monic)
        out = []
        for part in parts:
            coeffs = part.coeffs
            n = part.degree
            from fractions import Fraction

            scaled = [coeffs[i] * Fraction(lc) ** i for i in range(n + 1)]
            out.append(Polynomial(QQ, scaled).monic())
        return out
    p = _good_prime(g)
    field = PrimeField(p)
    fbar = Polynomial(field, [c % p for c in g])
    _, modular = factor_polynomial(fbar)
    mods = [m for m, _ in modular]
    if len(mods) == 1:
        return [Polynomial.from_ints(QQ, g)]
    bound = 2 ** (len(g)) * (math.isqrt(sum(c * c for c in g)) + 1)
    e = 1
    while p**e <= 2 * bound:
        e += 1
    lifted = _hensel_multifactor(g, [list(m.coeffs) for m in mods], p, p**e)
    return _recombine(g, lifted, p**e)


def _monicize(g):
    lc = g[-1]
    n = len(g) - 1
    return [g[i] * lc ** (n - 1 - i) for i in range(n)] + [1]


def _good_prime(g):
    p = 3
    while True:
        if is_prime(p) and g[-1] % p != 0:
            field = PrimeField(p)
            fbar = Polynomial(field, [c % p for c in g])
            if fbar.degree == len(g) - 1 and fbar.gcd(fbar.derivative()).is_one():
                return p
        p += 2


# integer polynomial helpers (dense ascending lists)


def _ztrim(f):
    while f and f[-1] == 0:
        f.pop()
    return f


def _zmul(f, g, m=None):
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] += a * b
    if m is not None:
        out = [c % m for c in out]
    return _ztrim(out)


def _zsub(f, g, m=None):
    out = [0] * max(len(f), len(g))
    for i, a in enumerate(f):
        out[i] = a
    for i, b in enumerate(g):
        out[i] -= b
    if m is not None:
        out = [c % m for c in out]
    return _ztrim(out)


def _zadd(f, g, m=None):
    out = [0] * max(len(f), len(g))
    for i, a in enumerate(f):
        out[i] = a
    for i, b in enumerate(g):
        out[i] += b
    if m is not None:
        out = [c % m for c in out]
    return _ztrim(out)


def _zdivmod_monic(f, g, m):
    """divmod by monic g with coefficients mod m."""
    f = [c % m for c in f]
    _ztrim(f)
    q = [0] * max(len(f) - len(g) + 1, 0)
    while len(f) >= len(g):
        c = f[-1] % m
        d = len(f) - len(g)
        q[d] = c
        for i, b in enumerate(g):
            f[d + i] = (f[d + i] - c * b) % m
        _ztrim(f)
    return _ztrim(q), f


def _symmetric(f, m):
    half = m // 2
    return [c - m if c > half else c for c in f]


def _hensel_step(f, g, h, s, t, m):
    """One quadratic step: from f = g*h, s*g + t*h = 1 (mod m) to mod m^2."""
    m2 = m * m
    e = _zsub(f, _zmul(g, h, m2), m2)
    q, r = _zdivmod_monic(_zmul(s, e, m2), h, m2)
    g1 = _zadd(_zadd(g, _zmul(t, e, m2), m2), _zmul(q, g, m2), m2)
    h1 = _zadd(h, r, m2)
    b = _zsub(_zadd(_zmul(s, g1, m2), _zmul(t, h1, m2), m2), [1], m2)
    c, d = _zdivmod_monic(_zmul(s, b, m2), h1, m2)
    s1 = _zsub(s, d, m2)
    t1 = _zsub(_zsub(t, _zmul(t, b, m2), m2), _zmul(c, g1, m2), m2)
    return g1, h1, s1, t1


def _hensel_pair(f, g, h, s, t, p, target):
    m = p
    while m < target:
        g, h, s, t = _hensel_step(f, g, h, s, t, m)
        m = m * m
    return _modlist(g, target), _modlist(h, target)


def _modlist(f, m):
    return _ztrim([c % m for c in f])


def _hensel_multifactor(f, mods, p, target):
    """Lift monic f = prod(mods) from mod p to mod target = p^e."""
    if len(mods) == 1:
        return [_modlist(f, target)]
    k = len(mods) // 2
    from . import gfpoly

    g0 = [1]
    for m in mods[:k]:
        g0 = gfpoly.mul(g0, m, p)
    h0 = [1]
    for m in mods[k:]:
        h0 = gfpoly.mul(h0, m, p)
    d, s, t = gfpoly.ext_gcd(g0, h0, p)
    assert d == [1], "modular factors not coprime"
    g, h = _hensel_pair(_modlist(f, target), g0, h0, s, t, p, target)
    return _hensel_multifactor(g, mods[:k], p, target) + _hensel_multifactor(
        h, mods[k:], p, target
    )


def _recombine(f, lifted, modulus):
    """Bounded subset recombination; f monic, lifted factors mod p^e."""
    import itertools

    remaining = list(range(len(lifted)))
    current = list(f)
    out = []
    size = 1
    while 2 * size <= len(remaining):
        hit = False
        for combo in itertools.combinations(remaining, size):
            cand = [1]
            for i in combo:
                cand = _zmul(cand, lifted[i], modulus)
            cand = _symmetric(_modlist(cand, modulus), modulus)
            quotient = _zdivide_exact(current, cand)
            if quotient is not None:
                out.append(Polynomial.from_ints(QQ, cand))
                current = quotient
                remaining = [i for i in remaining if i not in combo]
                hit = True
                break
        if not hit:
            size += 1
    if len(current) > 1:
        out.append(Polynomial.from_ints(QQ, current))
    return out


def _zdivide_exact(f, g):
    """Exact integer polynomial division f / g, or None."""
    if not g or len(g) > len(f):
        return None
    f = list(f)
    q = [0] * (len(f) - len(g) + 1)
    for d in range(len(f) - len(g), -1, -1):
        if f[d + len(g) - 1] % g[-1] != 0:
            return None
        c = f[d + len(g) - 1] // g[-1]
        q[d] = c
        if c:
            for i, b in enumerate(g):
                f[d + i] -= c * b
    return q if not any(f) else None
