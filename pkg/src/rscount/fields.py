"""Finite fields GF(p^k) with int-coded elements, and polynomials over them.

Element encoding
----------------
An element of GF(p^k) is represented by an int code in ``range(p**k)``: writing
the code in base p, digit i is the coefficient of z^i in the unique
representative of degree < k of the element in GF(p)[z] / (modulus).  The prime
subfield therefore occupies codes 0..p-1, code 0 is the additive and code 1 the
multiplicative identity, and the encoding is compatible across the subfield
chain GF(p) <= GF(p^j) <= GF(p^k) for j | k in the sense that subfield elements
are exactly the Frobenius-fixed codes (see :func:`subfield_codes`).

The modulus is the lexicographically least monic irreducible polynomial of
degree k over GF(p), where polynomials are ordered by the integer code of their
coefficient vector (constant coefficient least significant).  This makes the
construction canonical: two calls to :func:`ff_make` with the same (p, k)
return the same field object with the same arithmetic tables.

Polynomials
-----------
:class:`Poly` stores a coefficient tuple in low-to-high order with no trailing
zeros (the zero polynomial has an empty tuple).  Coefficients are int codes.
The text form is ``"q=<q>: c0,c1,...,cd"``, again low-to-high.

Fields of order up to :data:`TABLE_LIMIT` carry dense add/mul/inv/neg tables
(plain nested lists) exposed as attributes for tight enumeration loops; larger
fields (up to :data:`MAX_FIELD_SIZE`) fall back to digit arithmetic.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Iterator, Sequence

from .numbertheory import as_prime_power, divisors, is_prime, prime_factorization

#: Largest field order for which dense arithmetic tables are precomputed.
TABLE_LIMIT = 256

#: Hard upper bound on constructible field orders.
MAX_FIELD_SIZE = 1 << 20


class GF:
    """The finite field GF(p^k) with int-coded elements.

    Do not instantiate directly; use :func:`ff_make` (or :func:`ff_from_order`)
    so that field objects are canonical singletons.
    """

    __slots__ = (
        "p",
        "k",
        "q",
        "modulus_codes",
        "add_table",
        "mul_table",
        "neg_table",
        "inv_table",
    )

    def __init__(self, p: int, k: int, modulus_codes: tuple[int, ...]):
        self.p = p
        self.k = k
        self.q = p**k
        #: Coefficients of the modulus over GF(p), low-to-high, length k+1, monic.
        self.modulus_codes = modulus_codes
        self.add_table: list[list[int]] | None = None
        self.mul_table: list[list[int]] | None = None
        self.neg_table: list[int] | None = None
        self.inv_table: list[int] | None = None
        if self.q <= TABLE_LIMIT:
            self._build_tables()

    # -- construction of tables -------------------------------------------------

    def _build_tables(self) -> None:
        q = self.q
        self.add_table = [[self._add_digits(a, b) for b in range(q)] for a in range(q)]
        self.mul_table = [[self._mul_digits(a, b) for b in range(q)] for a in range(q)]
        self.neg_table = [self._neg_digits(a) for a in range(q)]
        inv = [0] * q
        for a in range(1, q):
            inv[a] = self._pow_via(self._mul_digits, a, q - 2)
        self.inv_table = inv

    # -- digit-level arithmetic (no tables required) ----------------------------

    def _decode(self, a: int) -> list[int]:
        return self._decode_wide(a, self.k)

    def _decode_wide(self, a: int, width: int) -> list[int]:
        p = self.p
        digits = []
        for _ in range(width):
            a, r = divmod(a, p)
            digits.append(r)
        return digits

    def _encode(self, digits: Sequence[int]) -> int:
        code = 0
        for d in reversed(digits):
            code = code * self.p + d
        return code

    def _add_digits(self, a: int, b: int) -> int:
        if self.p == 2:
            return a ^ b
        p = self.p
        da, db = self._decode(a), self._decode(b)
        return self._encode([(x + y) % p for x, y in zip(da, db)])

    def _neg_digits(self, a: int) -> int:
        if self.p == 2:
            return a
        p = self.p
        return self._encode([(-x) % p for x in self._decode(a)])

    def _mul_digits(self, a: int, b: int) -> int:
        if a == 0 or b == 0:
            return 0
        p, k = self.p, self.k
        if k == 1:
            return (a * b) % p
        da, db = self._decode(a), self._decode(b)
        prod = [0] * (2 * k - 1)
        for i, x in enumerate(da):
            if x:
                for j, y in enumerate(db):
                    prod[i + j] = (prod[i + j] + x * y) % p
        mod = self.modulus_codes
        for i in range(2 * k - 2, k - 1, -1):
            c = prod[i]
            if c:
                prod[i] = 0
                base = i - k
                for j in range(k):
                    prod[base + j] = (prod[base + j] - c * mod[j]) % p
        return self._encode(prod[:k])

    def _pow_via(self, mul, a: int, e: int) -> int:
        result = 1
        base = a
        while e:
            if e & 1:
                result = mul(result, base)
            base = mul(base, base)
            e >>= 1
        return result

    # -- public scalar arithmetic ----------------------------------------------

    def add(self, a: int, b: int) -> int:
        if self.add_table is not None:
            return self.add_table[a][b]
        return self._add_digits(a, b)

    def sub(self, a: int, b: int) -> int:
        return self.add(a, self.neg(b))

    def neg(self, a: int) -> int:
        if self.neg_table is not None:
            return self.neg_table[a]
        return self._neg_digits(a)

    def mul(self, a: int, b: int) -> int:
        if self.mul_table is not None:
            return self.mul_table[a][b]
        return self._mul_digits(a, b)

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self!r}")
        if self.inv_table is not None:
            return self.inv_table[a]
        return self._pow_via(self._mul_digits, a, self.q - 2)

    def pow(self, a: int, e: int) -> int:
        """Return a**e for an int code a; negative e inverts first (a != 0)."""
        if e < 0:
            a = self.inv(a)
            e = -e
        if a == 0:
            return 0 if e else 1
        return self._pow_via(self.mul, a, e % (self.q - 1) if e else 0)

    def scalar(self, m: int) -> int:
        """Return the code of the prime-subfield element m * 1 (m an ordinary int)."""
        return m % self.p

    # -- element objects and iteration -----------------------------------------

    def element(self, code: int) -> "FieldElement":
        if not 0 <= code < self.q:
            raise ValueError(f"code {code} out of range for {self!r}")
        return FieldElement(self, code)

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    @property
    def neg_one(self) -> "FieldElement":
        return FieldElement(self, self.neg(1))

    def elements(self) -> Iterator["FieldElement"]:
        for code in range(self.q):
            yield FieldElement(self, code)

    def __repr__(self) -> str:
        return f"GF({self.q})" if self.k == 1 else f"GF({self.p}^{self.k}={self.q})"


class FieldElement:
    """A single element of a :class:`GF`, wrapping (field, code) with operators.

    Thin convenience layer: hot loops should work with raw codes and the field
    tables directly.
    """

    __slots__ = ("field", "code")

    def __init__(self, field: GF, code: int):
        self.field = field
        self.code = code

    @property
    def coordinates(self) -> tuple[int, ...]:
        """Base-p digit vector: coordinate i is the coefficient of z^i."""
        return tuple(self.field._decode(self.code))

    def _check(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field is not self.field:
            raise TypeError("operands must belong to the same field")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.add(self.code, other.code))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.sub(self.code, other.code))

    def __neg__(self) -> "FieldElement":
        return FieldElement(self.field, self.field.neg(self.code))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, other.code))

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check(other)
        return FieldElement(self.field, self.field.mul(self.code, self.field.inv(other.code)))

    def __pow__(self, e: int) -> "FieldElement":
        return FieldElement(self.field, self.field.pow(self.code, e))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and other.field is self.field
            and other.code == self.code
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.code))

    def multiplicative_order(self) -> int:
        if self.code == 0:
            raise ValueError("0 has no multiplicative order")
        order = self.field.q - 1
        for prime, _ in prime_factorization(order):
            while order % prime == 0 and self.field.pow(self.code, order // prime) == 1:
                order //= prime
        return order

    def __repr__(self) -> str:
        return f"GF({self.field.q}):{self.code}"


# -- field construction ---------------------------------------------------------


def ff_make(p: int, k: int = 1) -> GF:
    """Construct (and cache) GF(p**k) with the canonical lex-least modulus.

    Raises ValueError if p is not prime, k < 1, or p**k exceeds
    :data:`MAX_FIELD_SIZE`.
    """
    # Route through a helper cached on the full (p, k) pair so that
    # ff_make(3) and ff_make(3, 1) return the same singleton.
    return _ff_make(p, k)


@lru_cache(maxsize=None)
def _ff_make(p: int, k: int) -> GF:
    if not is_prime(p):
        raise ValueError(f"p={p} is not prime")
    if k < 1:
        raise ValueError(f"k={k} must be >= 1")
    if p**k > MAX_FIELD_SIZE:
        raise ValueError(f"field order {p}**{k} exceeds the size bound {MAX_FIELD_SIZE}")
    if k == 1:
        # GF(p)[z]/(z): modulus z keeps the degree < 1 representatives 0..p-1.
        return GF(p, 1, (0, 1))
    base = ff_make(p)
    for low_code in range(p**k):
        coeffs = tuple(base._decode_wide(low_code, k)) + (1,)
        if is_irreducible(Poly(base, coeffs)):
            return GF(p, k, coeffs)
    raise AssertionError("unreachable: an irreducible of every degree exists")


def ff_from_order(q: int) -> GF:
    """Construct GF(q) from a prime-power order q."""
    pk = as_prime_power(q)
    if pk is None:
        raise ValueError(f"q={q} is not a prime power")
    return ff_make(*pk)


def ff_generator(field: GF) -> FieldElement:
    """Return the least-coded generator of the multiplicative group of ``field``."""
    target = field.q - 1
    for code in range(1, field.q):
        if FieldElement(field, code).multiplicative_order() == target:
            return FieldElement(field, code)
    raise AssertionError("unreachable: GF(q)* is cyclic")


def frobenius(field: GF, q0: int, x: int | FieldElement) -> int | FieldElement:
    """Apply the Frobenius power map x -> x**q0 for a subfield order q0.

    ``q0`` must equal p**j for some j >= 1 dividing k, i.e. GF(q0) must be a
    subfield of ``field``; the map is then the generator of Gal(GF(q)/GF(q0)).
    Accepts and returns either an int code or a :class:`FieldElement`.
    """
    pk = as_prime_power(q0)
    if pk is None or pk[0] != field.p or field.k % pk[1] != 0:
        raise ValueError(f"q0={q0} does not define a subfield of {field!r}")
    if isinstance(x, FieldElement):
        if x.field is not field:
            raise ValueError("element does not belong to the given field")
        return FieldElement(field, field.pow(x.code, q0))
    return field.pow(x, q0)


def subfield_codes(field: GF, q0: int) -> tuple[int, ...]:
    """Return the sorted codes of the subfield GF(q0) inside ``field``.

    These are exactly the fixed points of the Frobenius power map x -> x**q0.
    """
    pk = as_prime_power(q0)
    if pk is None or pk[0] != field.p or field.k % pk[1] != 0:
        raise ValueError(f"q0={q0} does not define a subfield of {field!r}")
    return tuple(c for c in range(field.q) if field.pow(c, q0) == c)


# -- raw polynomial kernels -----------------------------------------------------
#
# These operate on plain lists/tuples of int codes (low-to-high, trailing zeros
# tolerated) and back the Poly methods as well as the enumeration loops.


def poly_trim(coeffs: Sequence[int]) -> tuple[int, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


def poly_mul(field: GF, a: Sequence[int], b: Sequence[int]) -> list[int]:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    add, mul = field.add, field.mul
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                if y:
                    out[i + j] = add(out[i + j], mul(x, y))
    return out


def poly_divmod(field: GF, a: Sequence[int], b: Sequence[int]) -> tuple[list[int], list[int]]:
    b = list(poly_trim(b))
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(poly_trim(a))
    db = len(b) - 1
    if len(rem) - 1 < db:
        return [], rem
    quo = [0] * (len(rem) - db)
    lead_inv = field.inv(b[-1])
    sub, mul = field.sub, field.mul
    for shift in range(len(rem) - 1 - db, -1, -1):
        c = rem[shift + db]
        if c:
            factor = mul(c, lead_inv)
            quo[shift] = factor
            for j in range(db + 1):
                rem[shift + j] = sub(rem[shift + j], mul(factor, b[j]))
    del rem[db:]
    return quo, list(poly_trim(rem))


def poly_gcd(field: GF, a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    """Monic gcd of a and b (gcd(0, 0) is the zero polynomial)."""
    ra, rb = list(poly_trim(a)), list(poly_trim(b))
    while rb:
        _, r = poly_divmod(field, ra, rb)
        ra, rb = rb, list(r)
    if not ra:
        return ()
    lead_inv = field.inv(ra[-1])
    mul = field.mul
    return tuple(mul(c, lead_inv) for c in ra)


def poly_derivative(field: GF, a: Sequence[int]) -> tuple[int, ...]:
    p, mul = field.p, field.mul
    out = []
    for i in range(1, len(a)):
        m = i % p
        out.append(mul(m, a[i]) if m else 0)
    return poly_trim(out)


def poly_eval(field: GF, a: Sequence[int], x: int) -> int:
    acc = 0
    add, mul = field.add, field.mul
    for c in reversed(a):
        acc = add(mul(acc, x), c)
    return acc


def squarefree_codes(field: GF, coeffs: Sequence[int]) -> bool:
    """True iff the polynomial with the given codes is squarefree (degree >= 1).

    A polynomial with identically zero derivative is a p-th power, hence not
    squarefree; otherwise squarefree is equivalent to gcd(f, f') constant.
    """
    deriv = poly_derivative(field, coeffs)
    if not deriv:
        return False
    return len(poly_gcd(field, coeffs, deriv)) == 1


# -- Poly ------------------------------------------------------------------------


class Poly:
    """Immutable dense polynomial over a :class:`GF`, coefficients low-to-high."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: GF, coeffs: Sequence[int | FieldElement]):
        codes = []
        for c in coeffs:
            if isinstance(c, FieldElement):
                if c.field is not field:
                    raise ValueError("coefficient from a different field")
                codes.append(c.code)
            else:
                if not 0 <= c < field.q:
                    raise ValueError(f"coefficient code {c} out of range for {field!r}")
                codes.append(c)
        self.field = field
        self.coeffs: tuple[int, ...] = poly_trim(codes)

    # -- basic queries

    @property
    def degree(self) -> int:
        """Degree, with the zero polynomial having degree -1."""
        return len(self.coeffs) - 1

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.coeffs[-1] == 1

    @property
    def constant(self) -> int:
        """Code of the constant coefficient."""
        return self.coeffs[0] if self.coeffs else 0

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def code(self) -> int:
        """Integer encoding sum(c_i * q**i); a canonical sort key per degree."""
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * self.field.q + c
        return acc

    # -- arithmetic

    def _check(self, other: "Poly") -> None:
        if not isinstance(other, Poly) or other.field is not self.field:
            raise TypeError("operands must be polynomials over the same field")

    def __add__(self, other: "Poly") -> "Poly":
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        add = self.field.add
        out = list(a)
        for i, c in enumerate(b):
            out[i] = add(out[i], c)
        return Poly(self.field, out)

    def __neg__(self) -> "Poly":
        neg = self.field.neg
        return Poly(self.field, [neg(c) for c in self.coeffs])

    def __sub__(self, other: "Poly") -> "Poly":
        return self + (-other)

    def __mul__(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.field, poly_mul(self.field, self.coeffs, other.coeffs))

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        self._check(other)
        q, r = poly_divmod(self.field, self.coeffs, other.coeffs)
        return Poly(self.field, q), Poly(self.field, r)

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def gcd(self, other: "Poly") -> "Poly":
        self._check(other)
        return Poly(self.field, poly_gcd(self.field, self.coeffs, other.coeffs))

    def derivative(self) -> "Poly":
        return Poly(self.field, poly_derivative(self.field, self.coeffs))

    def __call__(self, x: int | FieldElement) -> int | FieldElement:
        if isinstance(x, FieldElement):
            if x.field is not self.field:
                raise ValueError("evaluation point from a different field")
            return FieldElement(self.field, poly_eval(self.field, self.coeffs, x.code))
        return poly_eval(self.field, self.coeffs, x)

    # -- comparison / hashing / text

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Poly)
            and other.field is self.field
            and other.coeffs == self.coeffs
        )

    def __hash__(self) -> int:
        return hash((id(self.field), self.coeffs))

    def to_text(self) -> str:
        """Serialize as ``"q=<q>: c0,c1,...,cd"`` (low-to-high codes)."""
        body = ",".join(str(c) for c in self.coeffs) if self.coeffs else "0"
        return f"q={self.field.q}: {body}"

    @classmethod
    def from_text(cls, text: str) -> "Poly":
        """Parse the :meth:`to_text` format, constructing the canonical field."""
        try:
            head, _, body = text.partition(":")
            head = head.strip()
            if not head.startswith("q="):
                raise ValueError
            field = ff_from_order(int(head[2:]))
            codes = [int(t) for t in body.strip().split(",")] if body.strip() else []
        except ValueError as exc:
            raise ValueError(f"malformed polynomial text {text!r}") from exc
        if codes == [0]:
            codes = []
        return cls(field, codes)

    def __repr__(self) -> str:
        return f"Poly({self.to_text()})"


def poly_from_roots(field: GF, roots: Sequence[int | FieldElement]) -> Poly:
    """Return the monic polynomial with the given multiset of roots."""
    out = [1]
    for r in roots:
        code = r.code if isinstance(r, FieldElement) else r
        out = poly_mul(field, out, [field.neg(code), 1])
    return Poly(field, out)


# -- squarefreeness and irreducibility ------------------------------------------


def is_squarefree(f: Poly) -> bool:
    """True iff f (degree >= 0, nonzero) has no repeated irreducible factor."""
    if f.is_zero:
        raise ValueError("the zero polynomial is not classified")
    if f.degree == 0:
        return True
    return squarefree_codes(f.field, f.coeffs)


@lru_cache(maxsize=None)
def _irreducible_quadratics(field: GF) -> tuple[tuple[int, ...], ...]:
    """All monic irreducible quadratics over a field of order <= 128 (cached)."""
    q = field.q
    out = []
    for c1 in range(q):
        for c0 in range(q):
            coeffs = (c0, c1, 1)
            if all(poly_eval(field, coeffs, x) for x in range(q)):
                out.append(coeffs)
    return tuple(out)


def _powmod_x_q(field: GF, f: Sequence[int]) -> list[int]:
    """Compute x**q mod f as a fixed-length residue list (len = deg f)."""
    d = len(f) - 1
    result = [0] * d
    result[1 % d] = 1  # the residue "x" (d >= 2 in all uses)
    # Square-and-multiply on the exponent q with base x.
    e = field.q
    bits = bin(e)[3:]  # skip the leading 1: start from "x"
    for bit in bits:
        result = _mulmod(field, result, result, f)
        if bit == "1":
            result = _shift_mod(field, result, f)
    return result


def _mulmod(field: GF, a: Sequence[int], b: Sequence[int], f: Sequence[int]) -> list[int]:
    """(a * b) mod f for residues of length deg f; f monic."""
    d = len(f) - 1
    prod = poly_mul(field, a, b)
    prod += [0] * (2 * d - 1 - len(prod))
    sub, mul = field.sub, field.mul
    for i in range(2 * d - 2, d - 1, -1):
        c = prod[i]
        if c:
            prod[i] = 0
            base = i - d
            for j in range(d):
                fj = f[j]
                if fj:
                    prod[base + j] = sub(prod[base + j], mul(c, fj))
    return prod[:d]


def _shift_mod(field: GF, a: Sequence[int], f: Sequence[int]) -> list[int]:
    """(x * a) mod f for a residue of length deg f; f monic."""
    d = len(f) - 1
    out = [0] + list(a)
    c = out[d]
    if c:
        sub, mul = field.sub, field.mul
        out[d] = 0
        for j in range(d):
            fj = f[j]
            if fj:
                out[j] = sub(out[j], mul(c, fj))
    return out[:d]


def _compose_mod(field: GF, g: Sequence[int], h: Sequence[int], f: Sequence[int]) -> list[int]:
    """g(h) mod f by Horner, for residues of length deg f; f monic."""
    d = len(f) - 1
    acc = [0] * d
    add = field.add
    for c in reversed(list(g)):
        acc = _mulmod(field, acc, h, f)
        acc[0] = add(acc[0], c)
    return acc


def is_irreducible(f: Poly) -> bool:
    """True iff the monic polynomial f of degree >= 1 is irreducible.

    Strategy: scan for roots (kills any linear factor), finish degrees <= 3;
    trial-divide by the cached irreducible quadratics, finishing degrees <= 5;
    then run distinct-degree factor detection, taking gcds of x**(q**i) - x
    with f for the remaining candidate factor degrees i up to deg(f) / 2.
    """
    if f.degree < 1:
        raise ValueError("irreducibility needs degree >= 1")
    if not f.is_monic:
        raise ValueError("irreducibility is classified for monic polynomials")
    field, coeffs = f.field, f.coeffs
    d = f.degree
    if d == 1:
        return True
    q = field.q
    scanned_roots = False
    if q <= 1024:
        if any(poly_eval(field, coeffs, x) == 0 for x in range(q)):
            return False
        scanned_roots = True
        if d <= 3:
            return True
    quad_checked = False
    if q <= 128 and scanned_roots:
        for g in _irreducible_quadratics(field):
            if not poly_divmod(field, coeffs, g)[1]:
                return False
        quad_checked = True
        if d <= 5:
            return True
    start = 3 if quad_checked else (2 if scanned_roots else 1)
    h1 = _powmod_x_q(field, coeffs)
    h = list(h1)
    i = 1
    while i < start:
        h = _compose_mod(field, h, h1, coeffs)
        i += 1
    sub = field.sub
    while i <= d // 2:
        shifted = list(h)
        shifted[1] = sub(shifted[1], 1)  # h - x
        g = poly_gcd(field, shifted, coeffs)
        if len(g) != 1:
            return False
        i += 1
        if i <= d // 2:
            h = _compose_mod(field, h, h1, coeffs)
    return True
