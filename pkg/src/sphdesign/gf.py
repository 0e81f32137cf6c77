"""GF(p^m) arithmetic, prime-power detection, and PGL(2,q) acting on P^1(F_q).

Field elements are packed integers in {0, ..., q-1}: the base-p digit i of an
element is the coefficient of x^i in its polynomial representative.  Fields are
deterministic: the modulus is the monic irreducible polynomial of degree m
whose packed coefficient value is smallest, and the primitive element is the
packed-smallest element of multiplicative order q - 1.
"""

from dataclasses import dataclass, field

_FIELD_SIZE_CAP = 1 << 20


def is_prime_power(n):
    """Return (p, m) with n = p^m for prime p, or None if n is not a prime power."""
    if n < 2:
        return None
    for p in range(2, n + 1):
        if p * p > n:
            break
        if n % p == 0:
            m = 0
            r = n
            while r % p == 0:
                r //= p
                m += 1
            return (p, m) if r == 1 else None
    return (n, 1)  # n has no factor <= sqrt(n): prime


def next_prime_power(n):
    """Smallest prime power >= n (n >= 2)."""
    if n < 2:
        raise ValueError("need n >= 2")
    k = n
    while is_prime_power(k) is None:
        k += 1
    return k


def _prime_factors(n):
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            out.append(p)
            while n % p == 0:
                n //= p
        p += 1
    if n > 1:
        out.append(n)
    return out


def _unpack(v, p, m):
    digits = []
    for _ in range(m):
        digits.append(v % p)
        v //= p
    return digits


def _pack(digits, p):
    v = 0
    for c in reversed(digits):
        v = v * p + c
    return v


def _poly_mod(num, den, p):
    """Remainder of num modulo den over F_p (coefficient lists, low degree first)."""
    num = num[:]
    dn = len(den) - 1
    inv_lead = pow(den[-1], p - 2, p) if p > 2 else den[-1]
    while len(num) - 1 >= dn and any(num):
        while num and num[-1] == 0:
            num.pop()
        if len(num) - 1 < dn:
            break
        shift = len(num) - 1 - dn
        factor = (num[-1] * inv_lead) % p
        for i, c in enumerate(den):
            num[shift + i] = (num[shift + i] - factor * c) % p
        while num and num[-1] == 0:
            num.pop()
    return num


def _poly_mul_mod(a, b, modulus, p):
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % p
    return _poly_mod(out, modulus, p)


def _is_irreducible(poly, p):
    """Trial division by every monic polynomial of degree 1..deg/2."""
    m = len(poly) - 1
    for deg in range(1, m // 2 + 1):
        for v in range(p ** deg):
            div = _unpack(v, p, deg) + [1]
            if not _poly_mod(poly, div, p):
                return False
    return True


@dataclass(frozen=True)
class FieldCtx:
    """An explicit GF(p^m) with exp/log tables for its multiplicative group."""

    p: int
    m: int
    q: int
    modulus: tuple          # monic, low degree first, length m+1
    primitive: int
    exp: tuple = field(repr=False)   # exp[k] = primitive^k, k in 0..q-2
    log: tuple = field(repr=False)   # log[exp[k]] = k; log[0] = -1 sentinel

    def add(self, a, b):
        da, db = _unpack(a, self.p, self.m), _unpack(b, self.p, self.m)
        return _pack([(x + y) % self.p for x, y in zip(da, db)], self.p)

    def neg(self, a):
        return _pack([(-x) % self.p for x in _unpack(a, self.p, self.m)], self.p)

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("0 has no inverse")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a, k):
        if a == 0:
            return 0 if k else 1
        return self.exp[(self.log[a] * k) % (self.q - 1)]


def make_field(p, m):
    """Deterministically construct GF(p^m); p prime, p^m <= 2^20."""
    if m < 1:
        raise ValueError("need m >= 1")
    fac = is_prime_power(p)
    if fac is None or fac[1] != 1:
        raise ValueError(f"{p} is not prime")
    q = p ** m
    if q > _FIELD_SIZE_CAP:
        raise ValueError(f"field size {q} exceeds cap {_FIELD_SIZE_CAP}")

    modulus = None
    for v in range(q):
        cand = _unpack(v, p, m) + [1]
        if _is_irreducible(cand, p):
            modulus = cand
            break
    assert modulus is not None

    # multiplication by repeated polynomial reduction, only while bootstrapping
    def raw_mul(a, b):
        pa, pb = _unpack(a, p, m), _unpack(b, p, m)
        r = _poly_mul_mod(pa, pb, modulus, p)
        return _pack(r + [0] * (m - len(r)), p)

    def order_is_maximal(e):
        for r in _prime_factors(q - 1):
            k, acc = (q - 1) // r, 1
            b = e
            while k:
                if k & 1:
                    acc = raw_mul(acc, b)
                b = raw_mul(b, b)
                k >>= 1
            if acc == 1:
                return False
        return True

    primitive = None
    for e in range(1, q):
        if order_is_maximal(e):
            primitive = e
            break
    assert primitive is not None

    exp = [1] * (q - 1)
    for k in range(1, q - 1):
        exp[k] = raw_mul(exp[k - 1], primitive)
    log = [-1] * q
    for k, v in enumerate(exp):
        log[v] = k

    return FieldCtx(p=p, m=m, q=q, modulus=tuple(modulus), primitive=primitive,
                    exp=tuple(exp), log=tuple(log))


@dataclass(frozen=True)
class ProjLinePoint:
    """A point of P^1(F_q) with its canonical index in {0, ..., q}.

    Indexing: infinity -> 0, the zero element -> 1, theta^k -> 2 + k.
    """

    value: int | None    # None encodes the point at infinity
    index: int

    @property
    def is_infinity(self):
        return self.value is None


def proj_line(fld):
    """All q+1 points of P^1(F_q) in canonical index order."""
    pts = [ProjLinePoint(None, 0), ProjLinePoint(0, 1)]
    pts += [ProjLinePoint(fld.exp[k], 2 + k) for k in range(fld.q - 1)]
    return pts


def _proj_index(fld, value):
    if value is None:
        return 0
    if value == 0:
        return 1
    return 2 + fld.log[value]


def pgl2_permutations(q):
    """All q^3 - q Moebius permutations of P^1(F_q), sorted as image tuples.

    z -> (az + b)/(cz + d) with ad - bc != 0, modulo scalars; each permutation
    is a tuple over the canonical point indices {0, ..., q}.
    """
    fac = is_prime_power(q)
    if fac is None:
        raise ValueError(f"{q} is not a prime power")
    fld = make_field(*fac)
    points = proj_line(fld)

    perms = set()
    for a in range(q):
        for b in range(q):
            for c in range(q):
                for d in range(q):
                    det = fld.sub(fld.mul(a, d), fld.mul(b, c))
                    if det == 0:
                        continue
                    images = []
                    for pt in points:
                        if pt.is_infinity:
                            w = None if c == 0 else fld.mul(a, fld.inv(c))
                        else:
                            den = fld.add(fld.mul(c, pt.value), d)
                            if den == 0:
                                w = None
                            else:
                                num = fld.add(fld.mul(a, pt.value), b)
                                w = fld.mul(num, fld.inv(den))
                        images.append(_proj_index(fld, w))
                    perms.add(tuple(images))

    expected = q ** 3 - q
    assert len(perms) == expected, f"|PGL(2,{q})| = {len(perms)} != {expected}"
    return sorted(perms)
