"""Abelian radical extensions of Q and F_q(t) with exact local splitting data.

An extension M = K(n-th roots of f_1, ..., f_r) is abelian of exponent
dividing n whenever K contains the n-th roots of unity; its Galois group is
dual to the subgroup W of K*/(K*)^n generated by the radicand classes.  We
represent Galois elements as tuples (s_1, ..., s_r) acting by

    sigma(f_i^(1/n)) = zeta_n^(s_i) * f_i^(1/n),

with s_i a multiple of n/order(f_i), and pair them with exponent tuples of W
by <sigma, e> = sum s_i e_i mod n.

Local data at a place comes from the image of W in the local class group
K_P*/(K_P*)^n.  Away from the residue characteristic that group is
Z/n x Z/n (valuation, unit class); the dyadic and real completions of Q get
explicit small tables.  Decomposition and inertia subgroups are annihilators
of the corresponding kernels, and the Frobenius is pinned down on the
unramified part by n-th power residue symbols.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from math import gcd, lcm, prod

from .arith import (
    PrimeField,
    factorize,
    is_squarefree,
    legendre,
    mul_order_mod,
    squarefree_part,
    vp,
)
from .errors import SearchExhausted, ValidationError
from .fields import (
    QQ,
    BaseField,
    FqtElt,
    Place,
    enumerate_places,
    infinite_place,
    prime_place,
    real_place,
)

# ---------------------------------------------------------------------------
# the extensions themselves


@dataclass(frozen=True)
class AbExt:
    """M = K(n-th roots of the radicands).

    Over Q only n = 2 is supported: radicands are squarefree integers other
    than 0 and 1.  Over F_q(t), n must divide q - 1 and radicands are factored
    rational functions (FqtElt) with nontrivial class in K*/(K*)^n.

    orders[i] is the order of radicands[i] modulo n-th powers; it is computed,
    not passed.  The classes must be independent (no nontrivial product of
    powers is an n-th power), so Gal(M/K) = prod Z/orders[i].
    """

    base: BaseField
    n: int
    radicands: tuple
    orders: tuple = ()

    def __post_init__(self):
        if self.n < 2:
            raise ValidationError("n must be at least 2")
        object.__setattr__(self, "radicands", tuple(self.radicands))
        if self.base.is_rationals():
            if self.n != 2:
                raise ValidationError("over Q only square roots are supported")
            for f in self.radicands:
                if not isinstance(f, int) or f in (0, 1):
                    raise ValidationError(f"bad radicand over Q: {f!r}")
                if not is_squarefree(f):
                    raise ValidationError(f"radicand {f} is not squarefree")
            orders = tuple(2 for _ in self.radicands)
        else:
            q = self.base.q
            if (q - 1) % self.n != 0:
                raise ValidationError(f"n = {self.n} does not divide q - 1 = {q - 1}")
            orders = []
            for f in self.radicands:
                if not isinstance(f, FqtElt) or f.q != q:
                    raise ValidationError(f"bad radicand over {self.base}: {f!r}")
                o = f.class_order(self.n)
                if o == 1:
                    raise ValidationError(f"radicand {f} is already an n-th power")
                orders.append(o)
            orders = tuple(orders)
        object.__setattr__(self, "orders", orders)
        for e in itertools.product(*[range(o) for o in orders]):
            if any(e) and self._is_power(e):
                raise ValidationError(f"radicand classes are dependent at exponents {e}")

    def _is_power(self, exps) -> bool:
        w = self.w_element(exps)
        if self.base.is_rationals():
            return squarefree_part(w) == 1
        return w.is_nth_power(self.n)

    def w_element(self, exps):
        """The product of radicand powers for an exponent tuple."""
        if self.base.is_rationals():
            return prod(f**e for f, e in zip(self.radicands, exps))
        out = FqtElt(self.base.q, 1, ())
        for f, e in zip(self.radicands, exps):
            out = out.mul(f.pow(e))
        return out

    @property
    def degree(self) -> int:
        return prod(self.orders)

    def describe(self) -> str:
        rads = ", ".join(str(f) for f in self.radicands)
        return f"{self.base}[{self.n}-th roots of {rads}]"


def build_extension(base: BaseField, n: int, radicands) -> AbExt:
    """Construct a homocyclic extension: every radicand class must have order
    exactly n.  Mixed-order families go through AbExt directly."""
    M = AbExt(base, n, tuple(radicands))
    for f, o in zip(M.radicands, M.orders):
        if o != n:
            raise ValidationError(f"radicand {f} has class order {o}, need {n}")
    return M


# ---------------------------------------------------------------------------
# Galois group bookkeeping


def w_exponents(M: AbExt) -> tuple:
    return tuple(itertools.product(*[range(o) for o in M.orders]))


def galois_group(M: AbExt) -> tuple:
    axes = [range(0, M.n, M.n // o) for o in M.orders]
    return tuple(itertools.product(*axes))


def gal_identity(M: AbExt) -> tuple:
    return (0,) * len(M.orders)


def pairing(M: AbExt, sigma, exps) -> int:
    """dlog of the root of unity by which sigma moves the W-element of exps."""
    return sum(s * e for s, e in zip(sigma, exps)) % M.n


def sigma_order(M: AbExt, sigma) -> int:
    return M.n // gcd(M.n, *sigma) if any(sigma) else 1


def validate_sigma(M: AbExt, sigma) -> tuple:
    sigma = tuple(int(s) % M.n for s in sigma)
    if len(sigma) != len(M.orders):
        raise ValidationError("sigma has the wrong number of components")
    for s, o in zip(sigma, M.orders):
        if s % (M.n // o):
            raise ValidationError(f"component {s} is not a multiple of {M.n // o}")
    return sigma


def gal_exponent(M: AbExt) -> int:
    return lcm(*M.orders) if M.orders else 1


def subgroup_closure(members, add, zero):
    """Closure of an iterable under a binary operation with identity."""
    out = {zero}
    frontier = set(members) - out
    while frontier:
        new = set()
        for x in frontier:
            for y in list(out) + list(frontier):
                z = add(x, y)
                if z not in out and z not in frontier:
                    new.add(z)
        out |= frontier
        frontier = new
    return out


def greedy_generators(members, add, zero) -> tuple:
    """A small generating set for a subgroup given as a member list."""
    gens: list = []
    have = {zero}
    for x in sorted(members):
        if x not in have:
            gens.append(x)
            have = subgroup_closure(gens, add, zero)
    return tuple(gens)


# ---------------------------------------------------------------------------
# local class groups


@dataclass(frozen=True)
class LocalClassGroup:
    """The finite group K_P*/(K_P*)^n together with the images of the
    radicands, the subgroup of unramified classes, and the coordinate that
    reads off the Frobenius symbol on that subgroup."""

    moduli: tuple
    images: tuple
    unram_gens: tuple
    symbol_coord: int | None

    def image_of(self, exps) -> tuple:
        return tuple(
            sum(e * img[k] for e, img in zip(exps, self.images)) % self.moduli[k]
            for k in range(len(self.moduli))
        )

    def unram_subgroup(self) -> frozenset:
        zero = (0,) * len(self.moduli)

        def add(x, y):
            return tuple((a + b) % m for a, b, m in zip(x, y, self.moduli))

        return frozenset(subgroup_closure(self.unram_gens, add, zero))

    def symbol(self, coords) -> int:
        return 0 if self.symbol_coord is None else coords[self.symbol_coord]


_DYADIC_UNIT_TABLE = {1: (0, 0), 3: (1, 1), 5: (0, 1), 7: (1, 0)}


def _dyadic_coords(f: int) -> tuple:
    """Class of f in Q_2*/(Q_2*)^2 = <-1, 5, 2>, coords (e_-1, e_5, v_2)."""
    v = vp(f, 2)
    u = f // (1 << v)
    e_m1, e_5 = _DYADIC_UNIT_TABLE[u % 8]
    return (e_m1, e_5, v % 2)


def local_class_group(M: AbExt, place: Place) -> LocalClassGroup:
    n = M.n
    if place.kind == "real":
        if not M.base.is_rationals():
            raise ValidationError("no real place over a function field")
        images = tuple((0,) if f > 0 else (1,) for f in M.radicands)
        return LocalClassGroup((2,), images, (), None)
    if place.kind == "prime":
        p = place.p
        if p == 2:
            images = tuple(_dyadic_coords(f) for f in M.radicands)
            return LocalClassGroup((2, 2, 2), images, ((0, 1, 0),), 1)
        imgs = []
        for f in M.radicands:
            v = vp(f, p)
            u = f // p**v
            imgs.append((v % 2, 0 if legendre(u, p) == 1 else 1))
        return LocalClassGroup((2, 2), tuple(imgs), ((0, 1),), 1)
    # tame place of F_q(t); n | N(P) - 1 always holds since n | q - 1
    imgs = []
    for f in M.radicands:
        v = f.valuation(place)
        imgs.append((v % n, f.residue_symbol_dlog(place, n)))
    return LocalClassGroup((n, n), tuple(imgs), ((0, 1),), 1)


# ---------------------------------------------------------------------------
# splitting data


@dataclass(frozen=True)
class LocalData:
    """Splitting of a place in M/K: the local degree [M_P : K_P], its
    ramification/residue split, the decomposition and inertia subgroups, and
    a Frobenius representative (exact when unramified, a coset representative
    modulo inertia otherwise)."""

    place: Place
    degree: int
    ram_index: int
    res_degree: int
    decomposition: tuple
    inertia: tuple
    frobenius: tuple

    def is_unramified(self) -> bool:
        return self.ram_index == 1


@lru_cache(maxsize=None)
def local_data(M: AbExt, place: Place) -> LocalData:
    if place.base != M.base:
        raise ValidationError("place and extension live over different fields")
    G = local_class_group(M, place)
    exps = w_exponents(M)
    zero = (0,) * len(G.moduli)
    unram = G.unram_subgroup()

    ker_d = [e for e in exps if G.image_of(e) == zero]
    ker_i = [e for e in exps if G.image_of(e) in unram]

    gal = galois_group(M)
    D = tuple(s for s in gal if all(pairing(M, s, e) == 0 for e in ker_d))
    I = tuple(s for s in D if all(pairing(M, s, e) == 0 for e in ker_i))
    assert len(D) * len(ker_d) == len(exps), "annihilator size mismatch"

    # unit classes in ker_i carry power residue symbols; symbols must extend
    # to a character of the whole group, realized by some element of D
    sym = {e: G.symbol(G.image_of(e)) for e in ker_i}
    frob = next(
        (s for s in D if all(pairing(M, s, e) == sym[e] for e in ker_i)), None
    )
    assert frob is not None, "residue symbols define no character of D"

    e_idx = len(exps) // len(ker_i)
    assert e_idx == len(I), "inertia size mismatch"
    return LocalData(place, len(D), e_idx, len(D) // e_idx, D, I, frob)


def local_degree(M: AbExt, place: Place) -> int:
    return local_data(M, place).degree


def is_totally_split(M: AbExt, place: Place) -> bool:
    return local_degree(M, place) == 1


def ramified_places(M: AbExt) -> tuple:
    """Finite places with nontrivial inertia, sorted."""
    if M.base.is_rationals():
        cand = {2}
        for f in M.radicands:
            cand |= set(factorize(f))
        places = [prime_place(p) for p in sorted(cand)]
    else:
        supp = set()
        for f in M.radicands:
            supp |= set(f.support())
        supp.add(infinite_place(M.base.q))
        places = sorted(supp, key=Place.sort_key)
    return tuple(P for P in places if local_data(M, P).ram_index > 1)


def is_real_field(M: AbExt) -> bool:
    """True when M embeds into R (only meaningful over Q)."""
    if not M.base.is_rationals():
        raise ValidationError("realness applies over Q only")
    return local_degree(M, real_place()) == 1


# ---------------------------------------------------------------------------
# roots of unity and the cyclotomic part


def span_squarefree(M: AbExt) -> frozenset:
    """Squarefree representatives of the group generated by the radicands
    modulo squares (Q only)."""
    if not M.base.is_rationals():
        raise ValidationError("squarefree span is a rational-field notion")
    return frozenset(squarefree_part(M.w_element(e)) for e in w_exponents(M))


def constant_classes(M: AbExt) -> dict:
    """Exponent tuples whose W-element is constant modulo n-th powers, with
    the representing constant (function fields only)."""
    if M.base.is_rationals():
        raise ValidationError("constant classes are a function-field notion")
    out = {}
    for e in w_exponents(M):
        w = M.w_element(e)
        if all(v % M.n == 0 for _, v in w.factors):
            out[e] = w.c
    return out


def constant_field_degree(M: AbExt) -> int:
    """Degree over F_q of the field of constants of M."""
    F = PrimeField(M.base.q)
    orders = [F.power_class_order(c, M.n) for c in constant_classes(M).values()]
    return lcm(*orders) if orders else 1


def roots_of_unity_s(M: AbExt, p: int) -> int:
    """s with p^s = number of p-power roots of unity in M."""
    if M.base.is_rationals():
        span = span_squarefree(M)
        if p == 2:
            s = 1
            if -1 in span:
                s += 1
                if 2 in span:
                    s += 1
            return s
        if p == 3:
            return 1 if -3 in span else 0
        return 0
    m = constant_field_degree(M)
    if p == M.base.char:
        return 0
    return vp(M.base.q**m - 1, p)


def r_value(M: AbExt) -> int:
    """v_2 of the number of 2-power roots of unity after adjoining i."""
    if M.base.is_rationals():
        span = span_squarefree(M)
        return 3 if (2 in span or -2 in span) else 2
    m = constant_field_degree(M)
    qm = M.base.q**m
    m2 = m * (2 if qm % 4 == 3 else 1)
    return vp(M.base.q**m2 - 1, 2)


def _exps_add(M: AbExt):
    orders = M.orders

    def add(x, y):
        return tuple((a + b) % o for a, b, o in zip(x, y, orders))

    return add


def cyclotomic_members(M: AbExt, p: int) -> tuple:
    """All exponent tuples whose class lies in the maximal subfield of M cut
    out by p-power roots of unity over the base."""
    if M.base.is_rationals():
        if p == 2:
            targets = {1, -1, 2, -2}
        else:
            targets = {1, p if p % 4 == 1 else -p}
        return tuple(
            e for e in w_exponents(M) if squarefree_part(M.w_element(e)) in targets
        )
    # in scope q = 1 mod p, so the cyclotomic tower is constant p-power
    # extensions; keep constant classes of p-power order
    consts = constant_classes(M)
    F = PrimeField(M.base.q)
    keep = []
    for e, c in consts.items():
        o = F.power_class_order(c, M.n)
        if o == 1 or o == p ** vp(o, p):
            keep.append(e)
    return tuple(keep)


def cyclotomic_degree(M: AbExt, p: int) -> int:
    """[T : K] for T = M intersect K(p-power roots of unity)."""
    return len(cyclotomic_members(M, p))


def cyclotomic_generators(M: AbExt, p: int) -> tuple:
    zero = (0,) * len(M.orders)
    return greedy_generators(cyclotomic_members(M, p), _exps_add(M), zero)


def gal_fixing_cyclotomic(M: AbExt, p: int) -> tuple:
    """Gal(M/T): annihilator of the cyclotomic classes."""
    members = cyclotomic_members(M, p)
    return tuple(
        s for s in galois_group(M) if all(pairing(M, s, e) == 0 for e in members)
    )


def restriction_order_to_cyclotomic(M: AbExt, p: int, sigma) -> int:
    """Order of sigma restricted to T = M intersect K(p-power roots of unity)."""
    sigma = validate_sigma(M, sigma)
    orders = [
        M.n // gcd(M.n, pairing(M, sigma, e)) for e in cyclotomic_members(M, p)
    ]
    return lcm(*orders) if orders else 1


# ---------------------------------------------------------------------------
# place searches


def find_places_with_frobenius(
    M: AbExt, sigma, count: int = 1, bound: int = 1000, congruence=None
):
    """Unramified places with Frobenius exactly sigma, by increasing norm.

    congruence = (a, m) keeps only norms = a mod m.  Raises SearchExhausted
    (carrying the partial list) when the bound runs out first.
    """
    sigma = validate_sigma(M, sigma)
    hits = []
    for P in enumerate_places(M.base, bound):
        if congruence is not None:
            a, m = congruence
            if P.norm() % m != a % m:
                continue
        ld = local_data(M, P)
        if not ld.is_unramified():
            continue
        if ld.frobenius == sigma:
            hits.append(P)
            if len(hits) >= count:
                return hits
    raise SearchExhausted(
        f"found {len(hits)}/{count} places with the requested Frobenius below norm {bound}",
        partial=hits,
    )


def qsigma_search(M: AbExt, p: int, sigma, count: int = 1, bound: int = 2000):
    """Unramified places with Frobenius sigma whose norm N has large order:
    ord(N mod p^(s+1)) > f_sigma for odd p, ord(N mod 2^(r+2)) > f_sigma for
    p = 2, and p never divides N.  f_sigma is the order of sigma on the
    p-power cyclotomic part of M."""
    sigma = validate_sigma(M, sigma)
    f_sigma = restriction_order_to_cyclotomic(M, p, sigma)
    if p == 2:
        modulus = 2 ** (r_value(M) + 2)
    else:
        modulus = p ** (roots_of_unity_s(M, p) + 1)
    hits = []
    for P in enumerate_places(M.base, bound):
        N = P.norm()
        if N % p == 0:
            continue
        ld = local_data(M, P)
        if not ld.is_unramified() or ld.frobenius != sigma:
            continue
        if mul_order_mod(N, modulus) > f_sigma:
            hits.append(P)
            if len(hits) >= count:
                return hits
    raise SearchExhausted(
        f"found {len(hits)}/{count} places meeting the norm-order condition below {bound}",
        partial=hits,
    )


def s0_search(M: AbExt, p: int, power: int, bound: int = 5000) -> dict:
    """For each generator of Gal(M/T) (just the identity when that group is
    trivial), an unramified place with that Frobenius and norm = 1 mod
    p^power.  Raises SearchExhausted with the partial dict on failure."""
    zero = gal_identity(M)

    def add(x, y):
        return tuple((a + b) % M.n for a, b in zip(x, y))

    gens = greedy_generators(gal_fixing_cyclotomic(M, p), add, zero) or (zero,)
    out = {}
    missing = []
    for sigma in gens:
        try:
            out[sigma] = find_places_with_frobenius(
                M, sigma, count=1, bound=bound, congruence=(1, p**power)
            )[0]
        except SearchExhausted:
            missing.append(sigma)
    if missing:
        raise SearchExhausted(
            f"no qualifying place below norm {bound} for generators {missing}",
            partial=out,
        )
    return out
