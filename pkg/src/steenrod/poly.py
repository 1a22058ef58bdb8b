"""The Cartan-formula action on mod-2 polynomial algebras.

``F2[t1..tk]`` models the cohomology of a product of k infinite real
projective spaces: every variable sits in degree 1, and the action of
the squares is forced by Sq(t) = t + t^2 together with the Cartan
formula.  A monomial is a sorted tuple of ``(variable, exponent)``
pairs with positive exponents; a :class:`PolyElement` is a formal
F2-sum of monomials.

The action implemented here never touches the rewriting engine in
:mod:`steenrod.adem`.  That makes :func:`act` an independent oracle:
an element and its normal form must act identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping

from .adem import AdemElement, Word, admissible_basis
from .f2 import binom_mod2
from .linalg import rank_f2

Monomial = tuple[tuple[int, int], ...]


def make_monomial(exponents: Mapping[int, int] | Iterable[tuple[int, int]]) -> Monomial:
    """Canonical monomial from a variable -> exponent mapping.

    Repeated variables merge by exponent addition; zero exponents are
    dropped.  Variables are indexed from 1.
    """
    merged: dict[int, int] = {}
    items = exponents.items() if isinstance(exponents, Mapping) else exponents
    for var, exp in items:
        if var < 1:
            raise ValueError("variables are indexed from 1")
        if exp < 0:
            raise ValueError("exponents must be naturals")
        if exp:
            merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


def monomial_degree(mono: Monomial) -> int:
    return sum(exp for _, exp in mono)


def monomial_mul(m1: Monomial, m2: Monomial) -> Monomial:
    merged = dict(m1)
    for var, exp in m2:
        merged[var] = merged.get(var, 0) + exp
    return tuple(sorted(merged.items()))


def monomial_key(mono: Monomial) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Graded lexicographic order on exponent vectors."""
    return (monomial_degree(mono), tuple((var, -exp) for var, exp in mono))


@dataclass(frozen=True)
class PolyElement:
    """A formal F2-sum of monomials in F2[t1..tk]."""

    monomials: frozenset[Monomial]

    @staticmethod
    def zero() -> "PolyElement":
        return _P_ZERO

    @staticmethod
    def one() -> "PolyElement":
        return _P_ONE

    @classmethod
    def from_monomials(cls, monos: Iterable[Monomial]) -> "PolyElement":
        acc: frozenset[Monomial] = frozenset()
        for mono in monos:
            acc ^= {make_monomial(mono)}
        return cls(acc)

    def is_zero(self) -> bool:
        return not self.monomials

    def variables(self) -> frozenset[int]:
        return frozenset(var for mono in self.monomials for var, _ in mono)

    def homogeneous_degree(self) -> int | None:
        """Common degree of all monomials; None for the zero element."""
        degrees = {monomial_degree(m) for m in self.monomials}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(degrees)})")
        return degrees.pop()

    def sorted_monomials(self) -> list[Monomial]:
        return sorted(self.monomials, key=monomial_key)

    def __add__(self, other: "PolyElement") -> "PolyElement":
        return PolyElement(self.monomials ^ other.monomials)

    def __mul__(self, other: "PolyElement") -> "PolyElement":
        return cup(self, other)

    def __str__(self) -> str:
        if not self.monomials:
            return "0"
        parts = []
        for mono in self.sorted_monomials():
            if not mono:
                parts.append("1")
            else:
                parts.append(
                    "*".join(
                        f"t{var}" if exp == 1 else f"t{var}^{exp}" for var, exp in mono
                    )
                )
        return " + ".join(parts)


_P_ZERO = PolyElement(frozenset())
_P_ONE = PolyElement(frozenset({()}))


def variable(index: int) -> PolyElement:
    """The degree-1 generator t_index."""
    if index < 1:
        raise ValueError("variables are indexed from 1")
    return PolyElement(frozenset({((index, 1),)}))


def cup(p: PolyElement, q: PolyElement) -> PolyElement:
    """Cup product: plain polynomial multiplication with mod-2 coefficients."""
    acc: frozenset[Monomial] = frozenset()
    for m1 in p.monomials:
        for m2 in q.monomials:
            acc ^= {monomial_mul(m1, m2)}
    return PolyElement(acc)


@lru_cache(maxsize=None)
def _sq_monomial(n: int, mono: Monomial) -> frozenset[Monomial]:
    # Cartan convolution of Sq^n across the variable factors.  On a
    # single power, Sq^i(t^e) = C(e, i) t^(e+i); instability falls out
    # of the binomials, no special casing.  Distinct splits of n land
    # on distinct exponent vectors, so no cancellation happens here.
    if n == 0:
        return frozenset({mono})
    if not mono:
        return frozenset()
    (var, e), rest = mono[0], mono[1:]
    out: set[Monomial] = set()
    for i in range(min(n, e) + 1):
        if binom_mod2(e, i):
            head = ((var, e + i),)
            for tail in _sq_monomial(n - i, rest):
                out.add(head + tail)
    return frozenset(out)


def sq_on_power(var: int, power: int, n: int) -> PolyElement:
    """Sq^n on the single power t_var^power: C(power, n) t_var^(power+n)."""
    if var < 1:
        raise ValueError("variables are indexed from 1")
    if power < 0 or n < 0:
        raise ValueError("power and square index must be naturals")
    if binom_mod2(power, n) == 0:
        return PolyElement.zero()
    return PolyElement(frozenset({make_monomial({var: power + n})}))


def sq(n: int, p: PolyElement) -> PolyElement:
    """Sq^n of a polynomial, by Cartan across factors and linearity."""
    if n < 0:
        raise ValueError("square index must be a natural number")
    acc: frozenset[Monomial] = frozenset()
    for mono in p.monomials:
        acc ^= _sq_monomial(n, mono)
    return PolyElement(acc)


@lru_cache(maxsize=None)
def _act_monomial(word: Word, mono: Monomial) -> frozenset[Monomial]:
    if not word:
        return frozenset({mono})
    acc: frozenset[Monomial] = frozenset()
    for inner in _act_monomial(word[1:], mono):
        acc ^= _sq_monomial(word[0], inner)
    return acc


def act(element: AdemElement, p: PolyElement) -> PolyElement:
    """Apply a sum of Sq-words to a polynomial, rightmost square first.

    Composition is evaluated square by square through the Cartan
    action; the rewriting engine is never consulted.
    """
    acc: frozenset[Monomial] = frozenset()
    for word in element.words:
        for mono in p.monomials:
            acc ^= _act_monomial(word, mono)
    return PolyElement(acc)


def total_square(p: PolyElement, var: int) -> PolyElement:
    """Generating function of all squares of a homogeneous element.

    For p of degree m returns sum_i Sq^i(p) * t_var^(m-i), a
    homogeneous element of degree 2m whose t_var^(m-i) coefficient
    recovers Sq^i(p) exactly.  The variable must be fresh.
    """
    m = p.homogeneous_degree()
    if m is None:
        return PolyElement.zero()
    if var in p.variables():
        raise ValueError(f"t{var} already occurs in the element; pick a fresh variable")
    acc: frozenset[Monomial] = frozenset()
    for i in range(m + 1):
        upow: Monomial = ((var, m - i),) if m - i else ()
        for mono in sq(i, p).monomials:
            acc ^= {monomial_mul(mono, upow)}
    return PolyElement(acc)


def coefficient(p: PolyElement, var: int, exp: int) -> PolyElement:
    """Coefficient of t_var^exp: matching monomials with the factor removed."""
    out = set()
    for mono in p.monomials:
        found = dict(mono).get(var, 0)
        if found == exp:
            out.add(tuple(pair for pair in mono if pair[0] != var))
    return PolyElement(frozenset(out))


def substitute(p: PolyElement, old: int, new: int) -> PolyElement:
    """Rename the variable ``old`` to ``new``, merging exponents."""
    acc: frozenset[Monomial] = frozenset()
    for mono in p.monomials:
        exps = dict(mono)
        if old in exps:
            e = exps.pop(old)
            exps[new] = exps.get(new, 0) + e
        acc ^= {tuple(sorted(exps.items()))}
    return PolyElement(acc)


def check_total_sq_multiplicative(p: PolyElement, q: PolyElement) -> bool:
    """Whether the total square of a product is the product of total squares."""
    fresh = max(p.variables() | q.variables(), default=0) + 1
    return total_square(cup(p, q), fresh) == cup(
        total_square(p, fresh), total_square(q, fresh)
    )


def check_tautological_vanishing(k: int) -> bool:
    """Substituting the companion variable back into the total square kills it.

    For each generator t of F2[t1..tk], total_square(t, u) = t*u + t^2,
    and setting u := t gives t^2 + t^2 = 0.  True for k = 0 (empty
    conjunction).
    """
    fresh = k + 1
    for j in range(1, k + 1):
        image = substitute(total_square(variable(j), fresh), fresh, j)
        if not image.is_zero():
            return False
    return True


def faithful_rank(d: int) -> int:
    """Rank of the admissible-basis action on the squarefree class t1...td.

    Rows are act(w, t1*...*td) for w in the degree-d admissible basis,
    expressed in the monomial basis of the target degree.  Comparing
    against the basis size gives an empirical faithfulness check.
    """
    if d < 0:
        raise ValueError("degree must be a natural number")
    test_class = PolyElement(frozenset({make_monomial({j: 1 for j in range(1, d + 1)})}))
    images = [act(AdemElement(frozenset({w})), test_class) for w in admissible_basis(d)]
    columns: dict[Monomial, int] = {}
    for image in images:
        for mono in image.sorted_monomials():
            columns.setdefault(mono, len(columns))
    rows = []
    for image in images:
        mask = 0
        for mono in image.monomials:
            mask |= 1 << columns[mono]
        rows.append(mask)
    return rank_f2(rows)
