"""The mod-2 Steenrod algebra as a rewriting system.

A word ``(i1, ..., ik)`` of positive ints stands for the composite
operation Sq^i1 ... Sq^ik; the empty word is the identity (Sq^0 is
never stored).  An :class:`AdemElement` is a formal F2-sum of words.
A word is admissible when every adjacent pair satisfies ``i >= 2*j``;
:func:`normalize` rewrites inadmissible pairs with the Adem rule until
the sum is supported on admissible words only.

Nothing in this module evaluates the operations on anything; the
polynomial action in :mod:`steenrod.poly` is kept fully independent so
it can serve as an oracle for the rewriting done here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .f2 import adem_coeff

Word = tuple[int, ...]

#: Rewrite applications allowed per normalize() call before giving up.
#: Adem rewriting terminates, so the budget only turns a regression
#: into a reported error instead of a hang.
DEFAULT_STEP_BUDGET = 10**6


class StepBudgetExceeded(RuntimeError):
    """Normalization spent more rewrite steps than its budget allows."""


def degree(word: Word) -> int:
    """Total degree of a word: the sum of its exponents."""
    return sum(word)


def excess(word: Word) -> int:
    """Leading exponent minus the rest, floored at 0.

    An admissible word acts as zero on every class of degree below its
    excess.
    """
    if not word:
        return 0
    return max(0, word[0] - sum(word[1:]))


def is_admissible(word: Word) -> bool:
    """True iff every adjacent pair satisfies i_j >= 2 * i_{j+1}."""
    return all(word[j] >= 2 * word[j + 1] for j in range(len(word) - 1))


def word_key(word: Word) -> tuple[int, int, Word]:
    """Canonical sort key for words: degree, then length, then exponents."""
    return (degree(word), len(word), word)


def adem_rewrite(a: int, b: int) -> frozenset[Word]:
    """Expand the inadmissible pair Sq^a Sq^b as an F2-sum of words.

    Requires ``1 <= a < 2*b``; rewriting an admissible pair is a
    contract error.  The c = 0 term drops its trailing Sq^0, so the
    result consists of words of length 1 or 2, all of degree a + b.
    """
    if not 1 <= a < 2 * b:
        raise ValueError(f"Sq{a} Sq{b} is not an inadmissible pair (need 1 <= a < 2b)")
    words = set()
    for c in range(a // 2 + 1):
        if adem_coeff(a, b, c):
            words.add((a + b - c,) if c == 0 else (a + b - c, c))
    return frozenset(words)


@dataclass(frozen=True)
class AdemElement:
    """A formal F2-sum of Sq-words, not necessarily admissible.

    Mixed-degree sums are allowed; all contracts that mention degree
    apply per homogeneous component.
    """

    words: frozenset[Word]

    @staticmethod
    def zero() -> "AdemElement":
        return _ZERO

    @staticmethod
    def one() -> "AdemElement":
        """The identity operation (the empty word)."""
        return _ONE

    @classmethod
    def from_words(cls, words: Iterable[Iterable[int]]) -> "AdemElement":
        """Build an element from exponent sequences, cancelling duplicates."""
        acc: frozenset[Word] = frozenset()
        for exponents in words:
            word = tuple(exponents)
            if any(not isinstance(i, int) or i < 1 for i in word):
                raise ValueError(f"word exponents must be ints >= 1, got {word}")
            acc ^= {word}
        return cls(acc)

    def is_zero(self) -> bool:
        return not self.words

    def is_admissible(self) -> bool:
        return all(is_admissible(w) for w in self.words)

    def sorted_words(self) -> list[Word]:
        return sorted(self.words, key=word_key)

    def __add__(self, other: "AdemElement") -> "AdemElement":
        return AdemElement(self.words ^ other.words)

    def __mul__(self, other: "AdemElement") -> "AdemElement":
        return product(self, other)

    def __str__(self) -> str:
        if not self.words:
            return "0"
        parts = []
        for word in self.sorted_words():
            parts.append("1" if not word else " ".join(f"Sq{i}" for i in word))
        return " + ".join(parts)


_ZERO = AdemElement(frozenset())
_ONE = AdemElement(frozenset({()}))


def Sq(*exponents: int) -> AdemElement:
    """The single word Sq^i1 ... Sq^ik as an element; Sq() is the identity."""
    if any(i < 1 for i in exponents):
        raise ValueError("Sq exponents must be >= 1; write Sq() for the identity")
    return AdemElement(frozenset({tuple(exponents)}))


def _first_inadmissible(word: Word) -> int | None:
    for j in range(len(word) - 1):
        if word[j] < 2 * word[j + 1]:
            return j
    return None


class _Budget:
    __slots__ = ("left",)

    def __init__(self, steps: int) -> None:
        self.left = steps

    def spend(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise StepBudgetExceeded(
                "normalization exceeded its rewrite step budget"
            )


# Normal forms of single words, shared across calls.  Entries are only
# written once a word is fully normalized, so the cache never holds
# partial results and concurrent readers see consistent values.
_NF_CACHE: dict[Word, frozenset[Word]] = {}


def _word_normal_form(word: Word, budget: _Budget) -> frozenset[Word]:
    cached = _NF_CACHE.get(word)
    if cached is not None:
        return cached

    admissible: set[Word] = set()
    pending: set[Word] = set()

    def fold(w: Word) -> None:
        # Cancellation against a pending copy comes first, so the branch
        # taken for a repeated word never depends on cache timing.
        if w in pending:
            pending.remove(w)
            return
        nf = _NF_CACHE.get(w)
        if nf is not None:
            admissible.symmetric_difference_update(nf)
        elif _first_inadmissible(w) is None:
            admissible.symmetric_difference_update((w,))
        else:
            pending.add(w)

    fold(word)
    while pending:
        # Deterministic pick; any choice terminates, and cancellation in
        # the working sum keeps it small.
        w = max(pending)
        pending.remove(w)
        j = _first_inadmissible(w)
        budget.spend()
        for tail in adem_rewrite(w[j], w[j + 1]):
            fold(w[:j] + tail + w[j + 2 :])

    result = frozenset(admissible)
    _NF_CACHE[word] = result
    return result


def normalize(element: AdemElement, *, step_budget: int = DEFAULT_STEP_BUDGET) -> AdemElement:
    """Rewrite an element onto the admissible basis.

    Idempotent and degree-preserving; represents the same operation as
    the input (checked empirically against the polynomial action).
    Raises :class:`StepBudgetExceeded` when the budget runs out.
    """
    budget = _Budget(step_budget)
    acc: frozenset[Word] = frozenset()
    for word in element.words:
        acc ^= _word_normal_form(word, budget)
    return AdemElement(acc)


def product(
    left: AdemElement,
    right: AdemElement,
    *,
    step_budget: int = DEFAULT_STEP_BUDGET,
) -> AdemElement:
    """Concatenate all word pairs mod 2, then normalize."""
    acc: frozenset[Word] = frozenset()
    for w1 in left.words:
        for w2 in right.words:
            acc ^= {w1 + w2}
    return normalize(AdemElement(acc), step_budget=step_budget)


def _admissible_tails(total: int, max_first: int) -> Iterator[Word]:
    if total == 0:
        yield ()
        return
    for first in range(1, min(total, max_first) + 1):
        for rest in _admissible_tails(total - first, first // 2):
            yield (first,) + rest


def admissible_basis(d: int) -> list[Word]:
    """All admissible words of degree d, in canonical order.

    These form an F2-basis of the degree-d part of the Steenrod
    algebra; admissible_basis(0) is [()].
    """
    if d < 0:
        raise ValueError("degree must be a natural number")
    return sorted(_admissible_tails(d, d), key=word_key)
