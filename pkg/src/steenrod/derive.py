"""Re-deriving the Adem relations from the double total square.

Take a generic class ``a`` of degree m and two auxiliary degree-1
variables u and v.  Squaring totally against u and then against v, or
in the other order, must give the same answer: squaring all copies of
a class is symmetric in the two directions.  Expanding both orders
with the Cartan formula and identifying the coefficient of each
bimonomial ``u^s v^r`` therefore forces F2-sums of composite squares
to vanish.  Those sums are returned as raw :class:`AdemElement`
values.

Bookkeeping rules used by the expansion:

* operator words applied to ``a`` are kept raw, never normalized, so
  the relations are genuinely forced by the expansion rather than
  assumed;
* squares on powers of u and v use the ordinary polynomial action;
* a square strictly above the degree of its argument is dropped on the
  spot (instability).

Because the expansion happens at a fixed source degree m, instability
is part of the arithmetic.  The emitted relations hold on every
degree-m class; most also hold in every degree, but some are
degree-m-only facts (for example Sq1 Sq2 vanishes on degree-2
classes), and those normalize to a nonzero admissible sum whose
words all have excess above m.
"""

from __future__ import annotations

from dataclasses import dataclass

from .adem import AdemElement, Word, degree, word_key
from .poly import Monomial, monomial_degree, monomial_mul, _sq_monomial

#: Auxiliary variable indices for the two expansion directions.
U, V = 1, 2

SymTerm = tuple[Word, Monomial]


@dataclass(frozen=True)
class SymbolicClass:
    """F2-sum of terms ``Sq_word(a) * monomial(u, v)`` for a symbol a.

    Each term has total degree symbol_degree + degree(word) +
    degree(monomial); elements are kept homogeneous.
    """

    symbol_degree: int
    terms: frozenset[SymTerm]

    def total_degree(self) -> int | None:
        degrees = {
            self.symbol_degree + degree(word) + monomial_degree(mono)
            for word, mono in self.terms
        }
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"symbolic class is not homogeneous: degrees {sorted(degrees)}")
        return degrees.pop()

    @classmethod
    def generic(cls, symbol_degree: int) -> "SymbolicClass":
        """The bare symbol a of the given degree."""
        if symbol_degree < 0:
            raise ValueError("symbol degree must be a natural number")
        return cls(symbol_degree, frozenset({((), ())}))


def apply_sq(n: int, cls: SymbolicClass) -> SymbolicClass:
    """Sq^n of a symbolic class, by Cartan across the word and monomial parts.

    Splits n = r + s: Sq^r prepends to the operator word (dropped when
    r exceeds the degree of the word's argument), Sq^s hits the
    auxiliary monomial through the polynomial action.
    """
    acc: set[SymTerm] = set()
    for word, mono in cls.terms:
        argument_degree = cls.symbol_degree + degree(word)
        for r in range(min(n, argument_degree) + 1):
            new_word = (r,) + word if r else word
            for new_mono in _sq_monomial(n - r, mono):
                acc.symmetric_difference_update(((new_word, new_mono),))
    return SymbolicClass(cls.symbol_degree, frozenset(acc))


def total_square_symbolic(cls: SymbolicClass, var: int) -> SymbolicClass:
    """Total square against a fresh auxiliary variable.

    For a class of total degree M returns sum_j Sq^j(cls) * var^(M-j),
    a homogeneous class of degree 2M.
    """
    total = cls.total_degree()
    if total is None:
        return cls
    acc: set[SymTerm] = set()
    for j in range(total + 1):
        vpow: Monomial = ((var, total - j),) if total - j else ()
        for word, mono in apply_sq(j, cls).terms:
            acc.symmetric_difference_update(((word, monomial_mul(mono, vpow)),))
    return SymbolicClass(cls.symbol_degree, frozenset(acc))


def _relation_key(words: frozenset[Word]) -> tuple:
    keys = sorted(word_key(w) for w in words)
    return (keys[0][0], len(keys), keys)


def derive_adem_relations(m: int) -> list[AdemElement]:
    """All operator relations forced on degree-m classes by the expansion.

    Expands the two double total squares of a generic degree-m symbol
    and collects, for every bimonomial u^s v^r where the two sides
    disagree, the F2-sum of words that must therefore vanish on K_m.
    Duplicate relations are merged; each returned element is a
    homogeneous sum of words of length at most 2.
    """
    base = SymbolicClass.generic(m)
    u_then_v = total_square_symbolic(total_square_symbolic(base, U), V)
    v_then_u = total_square_symbolic(total_square_symbolic(base, V), U)

    by_monomial: dict[Monomial, set[Word]] = {}
    for word, mono in u_then_v.terms ^ v_then_u.terms:
        by_monomial.setdefault(mono, set()).add(word)

    relations = {frozenset(words) for words in by_monomial.values() if words}
    return [AdemElement(words) for words in sorted(relations, key=_relation_key)]
