"""Base fields Q and F_q(t), their places, and residue computations.

Conventions:

* Polynomials over F_q are tuples of coefficients in ascending order with no
  trailing zeros, so (3, 0, 1) is t^2 + 3.  Places of F_q(t) are monic
  irreducibles plus the degree place at infinity (uniformizer 1/t).
* Nonzero elements of F_q(t) are kept in factored-monomial form
  c * prod P_i^{e_i} with c in F_q* and the P_i monic irreducible.  That makes
  valuations and unit-part residues exact and cheap; nothing in scope needs
  to add two such elements.
* Places of Q are the finite primes and the one real place.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from .arith import PrimeField, is_prime
from .errors import ValidationError

# ---------------------------------------------------------------------------
# base fields


@dataclass(frozen=True)
class BaseField:
    kind: str  # "Q" or "Fq"
    q: int | None = None

    def __post_init__(self):
        if self.kind == "Q":
            if self.q is not None:
                raise ValidationError("Q carries no q")
        elif self.kind == "Fq":
            if self.q is None or not is_prime(self.q):
                raise ValidationError("function field needs a prime q")
        else:
            raise ValidationError(f"unknown base field kind {self.kind!r}")

    @property
    def char(self) -> int:
        return 0 if self.kind == "Q" else self.q

    def is_rationals(self) -> bool:
        return self.kind == "Q"

    def __str__(self) -> str:
        return "Q" if self.kind == "Q" else f"F_{self.q}(t)"


QQ = BaseField("Q")


def rational_function_field(q: int) -> BaseField:
    return BaseField("Fq", q)


# ---------------------------------------------------------------------------
# polynomials over F_q (coefficient tuples, ascending)


def poly_trim(coeffs) -> tuple:
    c = list(coeffs)
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def poly_normalize(coeffs, q: int) -> tuple:
    return poly_trim([c % q for c in coeffs])


def poly_degree(a) -> int:
    if not a:
        raise ValidationError("zero polynomial has no degree here")
    return len(a) - 1


def poly_mul(a, b, q: int) -> tuple:
    if not a or not b:
        return ()
    out = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                out[i + j] = (out[i + j] + ai * bj) % q
    return poly_trim(out)


def poly_divmod(a, b, q: int) -> tuple[tuple, tuple]:
    if not b:
        raise ZeroDivisionError("division by zero polynomial")
    a = list(a)
    db, lead_inv = len(b) - 1, pow(b[-1], -1, q)
    quot = [0] * max(len(a) - db, 0)
    while len(poly_trim(a)) - 1 >= db and poly_trim(a):
        a = list(poly_trim(a))
        shift = len(a) - 1 - db
        factor = a[-1] * lead_inv % q
        quot[shift] = factor
        for i, bi in enumerate(b):
            a[shift + i] = (a[shift + i] - factor * bi) % q
    return poly_trim(quot), poly_trim(a)


def poly_mod(a, m, q: int) -> tuple:
    return poly_divmod(a, m, q)[1]


def poly_pow_mod(a, e: int, m, q: int) -> tuple:
    result, base = (1,), poly_mod(a, m, q)
    while e > 0:
        if e & 1:
            result = poly_mod(poly_mul(result, base, q), m, q)
        base = poly_mod(poly_mul(base, base, q), m, q)
        e >>= 1
    return result


def poly_is_irreducible(a, q: int) -> bool:
    """Trial division by all lower-degree monic irreducibles."""
    if not a or len(a) == 1:
        return False
    d = poly_degree(a)
    if d == 1:
        return True
    for e in range(1, d // 2 + 1):
        for p in monic_irreducibles(q, e):
            if not poly_divmod(a, p, q)[1]:
                return False
    return True


def poly_str(a) -> str:
    if not a:
        return "0"
    terms = []
    for i in range(len(a) - 1, -1, -1):
        c = a[i]
        if not c:
            continue
        if i == 0:
            terms.append(str(c))
        else:
            t = "t" if i == 1 else f"t^{i}"
            terms.append(t if c == 1 else f"{c}{t}")
    return "+".join(terms).replace("+-", "-")


_irreducible_cache: dict[tuple[int, int], tuple] = {}


def monic_irreducibles(q: int, degree: int) -> tuple:
    """All monic irreducibles of the given degree, sorted by coefficient tuple."""
    key = (q, degree)
    if key not in _irreducible_cache:
        found = []
        for lower in itertools.product(range(q), repeat=degree):
            cand = lower + (1,)
            if poly_is_irreducible(cand, q):
                found.append(cand)
        _irreducible_cache[key] = tuple(sorted(found))
    return _irreducible_cache[key]


# ---------------------------------------------------------------------------
# places


@dataclass(frozen=True)
class Place:
    """A place of Q (finite prime or the real place) or of F_q(t) (monic
    irreducible or the degree place at infinity)."""

    base: BaseField
    kind: str  # "prime" | "real" | "poly" | "inf"
    p: int | None = None
    coeffs: tuple | None = field(default=None)

    def __post_init__(self):
        if self.kind == "prime":
            if not self.base.is_rationals() or not is_prime(self.p or 0):
                raise ValidationError(f"bad finite place of Q: {self.p}")
        elif self.kind == "real":
            if not self.base.is_rationals():
                raise ValidationError("real place lives over Q")
        elif self.kind == "poly":
            if self.base.is_rationals():
                raise ValidationError("polynomial place needs a function field")
            c = poly_normalize(self.coeffs, self.base.q)
            if not c or c[-1] != 1 or not poly_is_irreducible(c, self.base.q):
                raise ValidationError(f"not a monic irreducible: {self.coeffs}")
            object.__setattr__(self, "coeffs", c)
        elif self.kind == "inf":
            if self.base.is_rationals():
                raise ValidationError("degree place needs a function field")
        else:
            raise ValidationError(f"unknown place kind {self.kind!r}")

    def is_finite_prime(self) -> bool:
        return self.kind in ("prime", "poly", "inf")

    @property
    def degree(self) -> int:
        if self.kind == "poly":
            return poly_degree(self.coeffs)
        if self.kind == "inf":
            return 1
        raise ValidationError("degree applies to function-field places")

    def norm(self) -> int:
        """Size of the residue field."""
        if self.kind == "prime":
            return self.p
        if self.kind == "poly":
            return self.base.q ** self.degree
        if self.kind == "inf":
            return self.base.q
        raise ValidationError("the real place has no residue norm")

    def sort_key(self):
        if self.kind == "real":
            return (1, 0, 0, ())
        return (0, self.norm(), 1 if self.kind == "inf" else 0, self.coeffs or ())

    def __str__(self) -> str:
        if self.kind == "prime":
            return str(self.p)
        if self.kind == "real":
            return "real"
        if self.kind == "inf":
            return "inf"
        return f"({poly_str(self.coeffs)})"


def prime_place(p: int) -> Place:
    return Place(QQ, "prime", p=p)


def real_place() -> Place:
    return Place(QQ, "real")


def poly_place(q: int, coeffs) -> Place:
    return Place(rational_function_field(q), "poly", coeffs=tuple(coeffs))


def infinite_place(q: int) -> Place:
    return Place(rational_function_field(q), "inf")


def residue_norm(place: Place) -> int:
    return place.norm()


def enumerate_places(base: BaseField, bound: int, include_real: bool = False):
    """Nonarchimedean places with residue norm <= bound, in (norm, repr) order.

    Lazy: consumers that stop early never pay for the places past their
    stopping norm, which matters for large bounds over F_q(t).  Over Q the
    real place comes last when include_real is set.  Over F_q(t) the degree
    place sorts after the degree-one polynomials of equal norm.
    """
    if base.is_rationals():
        from .arith import primes_upto

        for p in primes_upto(bound):
            yield prime_place(p)
        if include_real:
            yield real_place()
        return
    d = 1
    while base.q**d <= bound:
        # monic_irreducibles is sorted by coefficient tuple, which matches
        # sort_key within one degree; the degree place slots in after the
        # linear block
        yield from (poly_place(base.q, c) for c in monic_irreducibles(base.q, d))
        if d == 1:
            yield infinite_place(base.q)
        d += 1


# ---------------------------------------------------------------------------
# elements of F_q(t) in factored form


@dataclass(frozen=True)
class FqtElt:
    """c * prod P_i^{e_i} with c in F_q*, P_i distinct monic irreducibles."""

    q: int
    c: int
    factors: tuple  # sorted tuple of (coeff-tuple, nonzero int exponent)

    def __post_init__(self):
        if not is_prime(self.q):
            raise ValidationError(f"{self.q} is not prime")
        if self.c % self.q == 0:
            raise ValidationError("constant part must be a unit")
        object.__setattr__(self, "c", self.c % self.q)
        seen = {}
        for poly, e in self.factors:
            poly = poly_normalize(poly, self.q)
            if not poly_is_irreducible(poly, self.q) or poly[-1] != 1:
                raise ValidationError(f"factor {poly} is not monic irreducible")
            if poly in seen:
                raise ValidationError("repeated factor; combine exponents")
            if e:
                seen[poly] = e
        object.__setattr__(self, "factors", tuple(sorted(seen.items())))

    def mul(self, other: "FqtElt") -> "FqtElt":
        if self.q != other.q:
            raise ValidationError("mixed characteristics")
        exps = dict(self.factors)
        for poly, e in other.factors:
            exps[poly] = exps.get(poly, 0) + e
        merged = tuple((p, e) for p, e in exps.items() if e)
        return FqtElt(self.q, self.c * other.c, merged)

    def pow(self, k: int) -> "FqtElt":
        return FqtElt(self.q, pow(self.c, k, self.q) if k >= 0 else pow(pow(self.c, -1, self.q), -k, self.q),
                      tuple((p, e * k) for p, e in self.factors))

    def support(self) -> list[Place]:
        """Places where the valuation is nonzero (including infinity)."""
        out = [poly_place(self.q, p) for p, _ in self.factors]
        if self.degree_sum() != 0:
            out.append(infinite_place(self.q))
        return out

    def degree_sum(self) -> int:
        return sum(e * poly_degree(p) for p, e in self.factors)

    def valuation(self, place: Place) -> int:
        if place.kind == "inf":
            return -self.degree_sum()
        if place.kind != "poly":
            raise ValidationError("valuation needs a function-field place")
        return dict(self.factors).get(place.coeffs, 0)

    def unit_residue(self, place: Place):
        """Residue of self / pi^v at the place, for pi the canonical uniformizer
        (the monic irreducible itself, or 1/t at infinity).

        Returns an element of the residue field: a coefficient tuple mod the
        place polynomial, or a unit of F_q at infinity.
        """
        if place.kind == "inf":
            return self.c
        m = place.coeffs
        r = (self.c,)
        for poly, e in self.factors:
            if poly == m:
                continue
            base = poly_mod(poly, m, self.q)
            r = poly_mul(r, poly_pow_mod(base, e, m, self.q) if e >= 0
                         else poly_pow_mod(_poly_inverse(base, m, self.q), -e, m, self.q), self.q)
            r = poly_mod(r, m, self.q)
        return r

    def residue_symbol_dlog(self, place: Place, n: int) -> int:
        """dlog base zeta_n of (unit residue)^((N-1)/n), the n-th power
        residue symbol of the unit part at the place."""
        norm = place.norm()
        if (norm - 1) % n != 0:
            raise ValidationError("mu_n does not inject into the residue field")
        u = self.unit_residue(place)
        if place.kind == "inf":
            val = pow(u, (norm - 1) // n, self.q)
        else:
            r = poly_pow_mod(u, (norm - 1) // n, place.coeffs, self.q)
            if len(r) > 1:
                raise AssertionError("symbol did not land in the constants")
            val = r[0] if r else 0
        return PrimeField(self.q).dlog_in_mu(val, n)

    def is_nth_power(self, n: int) -> bool:
        """True iff self lies in (F_q(t)*)^n; requires n | q-1.

        All valuations must vanish mod n, and then the leftover constant must
        be an n-th power in F_q*.
        """
        if any(e % n for _, e in self.factors):
            return False
        return PrimeField(self.q).power_class_order(self.c, n) == 1

    def class_order(self, n: int) -> int:
        """Order of the class of self in F_q(t)*/(F_q(t)*)^n."""
        for d in sorted(_divisors(n)):
            if self.pow(d).is_nth_power(n):
                return d
        raise AssertionError("class order must divide n")

    def __str__(self) -> str:
        parts = [str(self.c)] if (self.c != 1 or not self.factors) else []
        for poly, e in self.factors:
            s = f"({poly_str(poly)})"
            parts.append(s if e == 1 else f"{s}^{e}")
        return "*".join(parts) if parts else "1"


def _poly_inverse(a, m, q: int):
    """Inverse of a mod m via Fermat in F_q[t]/(m) (m irreducible)."""
    norm = q ** poly_degree(m)
    return poly_pow_mod(a, norm - 2, m, q)


def _divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def fqt_const(q: int, c: int) -> FqtElt:
    return FqtElt(q, c, ())


def fqt_from_factors(q: int, c: int, factors) -> FqtElt:
    return FqtElt(q, c, tuple((tuple(p), e) for p, e in factors))


# ---------------------------------------------------------------------------
# residue representatives


def residue_rep(place: Place, f):
    """Image of f in the residue field at the place.

    Over Q, f is an int or Fraction with nonnegative valuation; the result is
    an integer mod p.  Over F_q(t), f is an FqtElt; the result is a coefficient
    tuple mod the place (a unit of F_q at infinity), and 0 for positive
    valuation.
    """
    if place.kind == "real":
        raise ValidationError("the real place has no residue field")
    if place.kind == "prime":
        from fractions import Fraction

        fr = Fraction(f)
        if fr == 0:
            return 0
        p = place.p
        from .arith import vp

        if vp(fr.denominator, p) > 0:
            raise ValidationError(f"{f} has a pole at {place}")
        return fr.numerator * pow(fr.denominator, -1, p) % p
    if not isinstance(f, FqtElt):
        raise ValidationError("function-field residues need an FqtElt")
    v = f.valuation(place)
    if v < 0:
        raise ValidationError(f"{f} has a pole at {place}")
    if v > 0:
        return 0 if place.kind == "inf" else ()
    return f.unit_residue(place)
