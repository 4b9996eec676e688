"""Pure-Python fallback for the hot term-arithmetic kernel.

The compiled twin `_speedups.pyx` exports the same names with the same
semantics; `salab.kernel` picks one at import time. Exponent vectors are
plain int tuples, polynomials are {exponent_tuple: coefficient} dicts, and
coefficients are whatever the active field uses (Fraction or int mod p).
A prime modulus p > 0 enables the fast integer path; p == 0 means exact
rationals handled through generic object arithmetic.
"""

BACKEND = "python"


# -- exponent vectors -------------------------------------------------

def exp_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def exp_sub(a, b):
    """a - b, or None when b does not divide a."""
    out = []
    for x, y in zip(a, b):
        d = x - y
        if d < 0:
            return None
        out.append(d)
    return tuple(out)


def exp_divides(a, b):
    """True when x^a divides x^b."""
    for x, y in zip(a, b):
        if x > y:
            return False
    return True


def exp_lcm(a, b):
    return tuple(x if x > y else y for x, y in zip(a, b))


def exp_deg(a):
    return sum(a)


def exp_coprime(a, b):
    for x, y in zip(a, b):
        if x and y:
            return False
    return True


# -- monomial order keys ----------------------------------------------
# Keys are tuples that compare the same way the monomials do: bigger key
# means bigger monomial. Variables are ordered x1 > x2 > ... > xn.

def grevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def lex_key(e):
    return e


def grlex_key(e):
    return (sum(e), e)


ORDER_KEYS = {"grevlex": grevlex_key, "lex": lex_key, "grlex": grlex_key}


# -- term-dict arithmetic ---------------------------------------------

def dict_add(A, B, p):
    """A + B on term dicts; returns a new dict without zero coefficients."""
    out = dict(A)
    if p:
        for e, c in B.items():
            v = (out.get(e, 0) + c) % p
            if v:
                out[e] = v
            else:
                out.pop(e, None)
    else:
        for e, c in B.items():
            if e in out:
                v = out[e] + c
                if v:
                    out[e] = v
                else:
                    del out[e]
            else:
                out[e] = c
    return out


def dict_mul(A, B, p):
    """A * B on term dicts."""
    if len(A) > len(B):
        A, B = B, A
    out = {}
    if p:
        for ea, ca in A.items():
            for eb, cb in B.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                v = (out.get(e, 0) + ca * cb) % p
                if v:
                    out[e] = v
                else:
                    out.pop(e, None)
    else:
        for ea, ca in A.items():
            for eb, cb in B.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                if e in out:
                    v = out[e] + ca * cb
                    if v:
                        out[e] = v
                    else:
                        del out[e]
                else:
                    out[e] = ca * cb
    return out


def dict_axpy(A, c, e, B, p):
    """A + c * x^e * B in place on dict A; the reduction workhorse."""
    if p:
        for eb, cb in B.items():
            key = tuple(x + y for x, y in zip(e, eb))
            v = (A.get(key, 0) + c * cb) % p
            if v:
                A[key] = v
            else:
                A.pop(key, None)
    else:
        for eb, cb in B.items():
            key = tuple(x + y for x, y in zip(e, eb))
            if key in A:
                v = A[key] + c * cb
                if v:
                    A[key] = v
                else:
                    del A[key]
            else:
                A[key] = c * cb
    return A


def dict_scale(A, c, p):
    if p:
        return {e: (v * c) % p for e, v in A.items()}
    return {e: v * c for e, v in A.items()}
