"""Polynomial rings: monomials, monomial orders, and sparse exact arithmetic.

Polynomials are immutable and canonical: terms are stored as an exponent
dict plus a cached term sequence sorted strictly descending under grevlex
(the ambient storage order), so two polynomials are equal exactly when
their term sequences coincide. Comparison under lex/grlex is a parameter of
`leading_term` and the Groebner layer, not of the data.

A ring may carry positive variable weights. The default weight vector is
all ones, which gives the usual total degree; weighted rings only appear
internally (subalgebra transfer uses them, since replacement variables
inherit the degrees of the polynomials they stand for).
"""

from functools import reduce

from . import kernel
from .errors import DomainError, RingMismatchError
from .field import Field


class MonomialOrder:
    """Total multiplicative monomial order: grevlex, lex or grlex."""

    __slots__ = ("kind", "key")

    def __init__(self, kind: str):
        if kind not in kernel.ORDER_KEYS:
            raise DomainError(f"unknown monomial order {kind!r}")
        self.kind = kind
        self.key = kernel.ORDER_KEYS[kind]

    def greater(self, a, b) -> bool:
        return self.key(a) > self.key(b)

    def __eq__(self, other):
        return isinstance(other, MonomialOrder) and self.kind == other.kind

    def __hash__(self):
        return hash(self.kind)

    def __repr__(self):
        return self.kind


GREVLEX = MonomialOrder("grevlex")
LEX = MonomialOrder("lex")
GRLEX = MonomialOrder("grlex")


class Monomial:
    """Exponent vector with its total degree cached."""

    __slots__ = ("exponents", "degree")

    def __init__(self, exponents):
        self.exponents = tuple(exponents)
        if any(e < 0 for e in self.exponents):
            raise DomainError("negative exponent")
        self.degree = sum(self.exponents)

    def __eq__(self, other):
        return isinstance(other, Monomial) and self.exponents == other.exponents

    def __hash__(self):
        return hash(self.exponents)

    def __repr__(self):
        return f"Monomial{self.exponents}"


class RingContext:
    """A declared polynomial ring: field, variable names, optional weights."""

    __slots__ = ("field", "var_names", "weights", "_hash")

    def __init__(self, field: Field, var_names, weights=None):
        names = tuple(var_names)
        if not names:
            raise DomainError("ring needs at least one variable")
        if len(set(names)) != len(names):
            raise DomainError("variable names must be distinct")
        if any(not n for n in names):
            raise DomainError("variable names must be nonempty")
        self.field = field
        self.var_names = names
        if weights is None:
            self.weights = (1,) * len(names)
        else:
            self.weights = tuple(weights)
            if len(self.weights) != len(names) or any(w <= 0 for w in self.weights):
                raise DomainError("weights must be positive, one per variable")
        self._hash = hash((self.field, self.var_names, self.weights))

    @property
    def num_vars(self) -> int:
        return len(self.var_names)

    @property
    def standard_graded(self) -> bool:
        return all(w == 1 for w in self.weights)

    def degree_of(self, exponents) -> int:
        """Weighted degree of an exponent vector."""
        if self.standard_graded:
            return sum(exponents)
        return sum(w * e for w, e in zip(self.weights, exponents))

    # -- element constructors -----------------------------------------
    @property
    def zero(self) -> "Polynomial":
        return Polynomial(self, {})

    @property
    def one(self) -> "Polynomial":
        return self.constant(self.field.one)

    def constant(self, c) -> "Polynomial":
        c = self.field.from_int(c) if isinstance(c, int) else c
        if self.field.is_zero(c):
            return self.zero
        return Polynomial(self, {(0,) * self.num_vars: c})

    def var(self, i: int) -> "Polynomial":
        if not 0 <= i < self.num_vars:
            raise DomainError(f"variable index {i} out of range")
        e = [0] * self.num_vars
        e[i] = 1
        return Polynomial(self, {tuple(e): self.field.one})

    def gens(self):
        return [self.var(i) for i in range(self.num_vars)]

    def monomial(self, exponents) -> "Polynomial":
        e = tuple(exponents)
        if len(e) != self.num_vars:
            raise DomainError("exponent vector has wrong length")
        return Polynomial(self, {e: self.field.one})

    def poly(self, terms) -> "Polynomial":
        """Build from (coefficient, exponent-vector) pairs; coefficients may
        be ints, which are coerced into the field."""
        d = {}
        for c, e in terms:
            c = self.field.from_int(c) if isinstance(c, int) else c
            e = tuple(e)
            if len(e) != self.num_vars:
                raise DomainError("exponent vector has wrong length")
            v = self.field.add(d.get(e, self.field.zero), c)
            if self.field.is_zero(v):
                d.pop(e, None)
            else:
                d[e] = v
        return Polynomial(self, d)

    def __eq__(self, other):
        return (
            isinstance(other, RingContext)
            and self.field == other.field
            and self.var_names == other.var_names
            and self.weights == other.weights
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"{self.field}[{','.join(self.var_names)}]"


def _check_same_ring(f, g):
    if f.ring != g.ring:
        raise RingMismatchError(f"rings differ: {f.ring} vs {g.ring}")


class Polynomial:
    """Sparse polynomial over an exact field, in canonical form."""

    __slots__ = ("ring", "_d", "_terms")

    def __init__(self, ring: RingContext, term_dict):
        self.ring = ring
        self._d = term_dict
        self._terms = None

    @property
    def terms(self):
        """Terms as (coefficient, Monomial), grevlex-descending."""
        return tuple((c, Monomial(e)) for e, c in self._sorted_items())

    def _sorted_items(self):
        if self._terms is None:
            key = kernel.grevlex_key
            self._terms = tuple(
                sorted(self._d.items(), key=lambda t: key(t[0]), reverse=True)
            )
        return self._terms

    @property
    def is_zero(self) -> bool:
        return not self._d

    def __len__(self):
        return len(self._d)

    def degree(self):
        """Total (weighted) degree; None for the zero polynomial."""
        if not self._d:
            return None
        return max(self.ring.degree_of(e) for e in self._d)

    def coefficient(self, exponents):
        return self._d.get(tuple(exponents), self.ring.field.zero)

    def support_variables(self):
        """Indices of variables that actually occur."""
        used = set()
        for e in self._d:
            for i, x in enumerate(e):
                if x:
                    used.add(i)
        return sorted(used)

    # -- arithmetic ----------------------------------------------------
    def __add__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        _check_same_ring(self, other)
        return Polynomial(self.ring, kernel.dict_add(self._d, other._d, self.ring.field.p))

    __radd__ = __add__

    def __neg__(self):
        neg = self.ring.field.neg
        return Polynomial(self.ring, {e: neg(c) for e, c in self._d.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, Polynomial):
            return NotImplemented
        _check_same_ring(self, other)
        return Polynomial(self.ring, kernel.dict_mul(self._d, other._d, self.ring.field.p))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative power")
        result = self.ring.one
        base = self
        while n:
            if n & 1:
                result = result * base
            base_needed = n >> 1
            if base_needed:
                base = base * base
            n = base_needed
        return result

    def scale(self, c):
        """Multiply by a field element."""
        if self.ring.field.is_zero(c):
            return self.ring.zero
        return Polynomial(self.ring, kernel.dict_scale(self._d, c, self.ring.field.p))

    def monic(self, order: MonomialOrder = GREVLEX):
        if not self._d:
            return self
        c, _ = leading_term(self, order)
        return self.scale(self.ring.field.inv(c))

    # -- canonical identity ---------------------------------------------
    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.ring == other.ring and self._d == other._d

    def __hash__(self):
        return hash((self.ring, self._sorted_items()))

    def __repr__(self):
        from .parser import polynomial_to_string

        return polynomial_to_string(self)


# -- the ring-level operations ------------------------------------------


def add(f: Polynomial, g: Polynomial) -> Polynomial:
    return f + g


def mul(f: Polynomial, g: Polynomial) -> Polynomial:
    return f * g


def is_homogeneous(f: Polynomial):
    """(True, d) when every term has degree d; (True, None) for 0;
    (False, None) otherwise."""
    if f.is_zero:
        return True, None
    degs = {f.ring.degree_of(e) for e in f._d}
    if len(degs) == 1:
        return True, degs.pop()
    return False, None


def leading_term(f: Polynomial, order: MonomialOrder = GREVLEX):
    """(coefficient, Monomial) of the largest term under `order`."""
    if f.is_zero:
        raise DomainError("zero polynomial has no leading term")
    e = max(f._d, key=order.key)
    return f._d[e], Monomial(e)


def leading_exponents(f: Polynomial, order: MonomialOrder):
    return max(f._d, key=order.key)


def substitute(F: Polynomial, gs) -> Polynomial:
    """Evaluate F at polynomials gs via the ring homomorphism sending the
    i-th variable of F's ring to gs[i]. All gs must share one ring whose
    field equals F's field."""
    gs = list(gs)
    if len(gs) != F.ring.num_vars:
        raise DomainError(
            f"arity mismatch: {F.ring.num_vars} variables but {len(gs)} substitutions"
        )
    if not gs:
        raise DomainError("empty substitution")
    target = gs[0].ring
    for g in gs[1:]:
        if g.ring != target:
            raise RingMismatchError("substitution polynomials live in different rings")
    if target.field != F.ring.field:
        raise RingMismatchError("substitution across different coefficient fields")

    # cache powers of each g as needed
    powers = [{0: target.one} for _ in gs]

    def g_pow(i, k):
        cache = powers[i]
        if k not in cache:
            cache[k] = g_pow(i, k - 1) * gs[i]
        return cache[k]

    total = target.zero
    for e, c in F._sorted_items():
        piece = target.constant(c)
        for i, k in enumerate(e):
            if k:
                piece = piece * g_pow(i, k)
        total = total + piece
    return total


def partial_derivative(f: Polynomial, i: int) -> Polynomial:
    """Formal derivative in the i-th variable. Over a prime field this is
    the termwise formal derivative; rank criteria built on it are only
    valid in characteristic 0."""
    n = f.ring.num_vars
    if not 0 <= i < n:
        raise DomainError(f"variable index {i} out of range")
    fld = f.ring.field
    out = {}
    for e, c in f._d.items():
        k = e[i]
        if k == 0:
            continue
        coeff = fld.mul(c, fld.from_int(k))
        if fld.is_zero(coeff):
            continue  # p divides k
        out[e[:i] + (k - 1,) + e[i + 1 :]] = coeff
    return Polynomial(f.ring, out)
