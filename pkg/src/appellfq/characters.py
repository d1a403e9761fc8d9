"""Multiplicative characters of F_q^*, Jacobi sums and binomial coefficients.

A character is indexed by an exponent e mod q-1 against the field's fixed
generator g: chi(g^k) = zeta_{q-1}^{e*k}, extended to all of F_q by
chi(0) = 0 for every character including the trivial one. Values live in
Z[zeta_{q-1}].

The binomial coefficient here is the q-scaled variant
binom(A, B) = B(-1) * J(A, B-inverse), where J(A, B) is the Jacobi sum
sum over u in F_q of A(u) * B(1 - u).
"""

from __future__ import annotations

from .cyclotomic import CycInt, cyc_zero, root_of_unity
from .fields import FieldElement, FieldTable


class Character:
    """A multiplicative character of F_q^*, immutable."""

    __slots__ = ("field", "exponent")

    def __init__(self, field: FieldTable, exponent: int):
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "exponent", exponent % field.n)

    def __setattr__(self, *a):
        raise AttributeError("Character is immutable")

    def _check(self, other: "Character"):
        if other.field.q != self.field.q:
            raise ValueError(
                f"characters of different fields: q={self.field.q} vs q={other.field.q}"
            )

    def __mul__(self, other: "Character") -> "Character":
        self._check(other)
        return Character(self.field, self.exponent + other.exponent)

    def __pow__(self, k: int) -> "Character":
        return Character(self.field, self.exponent * k)

    def inverse(self) -> "Character":
        """The conjugate character (inverse in the character group)."""
        return Character(self.field, -self.exponent)

    @property
    def is_trivial(self) -> bool:
        return self.exponent == 0

    def __call__(self, x: FieldElement) -> CycInt:
        ft = self.field
        if x.q != ft.q:
            raise ValueError(f"element of F_{x.q} fed to character of F_{ft.q}")
        if x.log is None:
            return cyc_zero(ft.n)
        return root_of_unity(ft.n, self.exponent * x.log)

    def eval_minus_one(self) -> CycInt:
        return root_of_unity(self.field.n, self.exponent * self.field.log_minus_one)

    def __eq__(self, other):
        if not isinstance(other, Character):
            return NotImplemented
        return self.field.q == other.field.q and self.exponent == other.exponent

    def __hash__(self):
        return hash((self.field.q, self.exponent))

    def __repr__(self):
        return f"Character(q={self.field.q}, exponent={self.exponent})"

    def to_json(self) -> dict:
        return {"q": self.field.q, "exponent": self.exponent}


def trivial_character(field: FieldTable) -> Character:
    return Character(field, 0)


def all_characters(field: FieldTable) -> list[Character]:
    """The q-1 characters in exponent order, trivial first."""
    return [Character(field, e) for e in range(field.n)]


def delta_elem(x: FieldElement) -> int:
    """1 if x = 0, else 0."""
    return 1 if x.log is None else 0


def delta_char(chi: Character) -> int:
    """1 if chi is trivial, else 0."""
    return 1 if chi.exponent == 0 else 0


# ----------------------------------------------------------------------
# Jacobi sums and binomial coefficients
# ----------------------------------------------------------------------

def _jacobi_counts(ft: FieldTable, a: int, b: int, shift: int = 0) -> list[int]:
    """Root-of-unity weights of sum_u zeta^(a*log u + b*log(1-u) + shift)."""
    n = ft.n
    counts = [0] * n
    om = ft.one_minus_idx
    for u in range(1, ft.q):  # u != 0
        v = om[u]
        if v == 0:  # u = 1 contributes B(0) = 0
            continue
        counts[(a * (u - 1) + b * (v - 1) + shift) % n] += 1
    return counts


def jacobi_sum(A: Character, B: Character) -> CycInt:
    """J(A, B) = sum over u in F_q of A(u) B(1 - u)."""
    A._check(B)
    ft = A.field
    return CycInt.from_powers(ft.n, _jacobi_counts(ft, A.exponent, B.exponent))


def binom(A: Character, B: Character) -> CycInt:
    """The scaled binomial coefficient B(-1) * J(A, B-inverse)."""
    A._check(B)
    ft = A.field
    n = ft.n
    shift = (B.exponent * ft.log_minus_one) % n
    return CycInt.from_powers(
        ft.n, _jacobi_counts(ft, A.exponent, -B.exponent % n, shift)
    )


def _binom_counts_table(ft: FieldTable) -> list[list[tuple[int, ...]]]:
    """Unreduced zeta-power weights of binom(chi_i, chi_j) for all pairs.

    Cached on the field; the char-sum evaluators index this heavily.
    """
    key = "binom_counts"
    tab = ft._caches.get(key)
    if tab is None:
        n = ft.n
        lm1 = ft.log_minus_one
        tab = [
            [
                tuple(_jacobi_counts(ft, a, -b % n, (b * lm1) % n))
                for b in range(n)
            ]
            for a in range(n)
        ]
        ft._caches[key] = tab
    return tab


def binomial_table(ft: FieldTable) -> list[list[CycInt]]:
    """binom(chi_i, chi_j) for all exponent pairs (i, j), cached."""
    key = "binom_table"
    tab = ft._caches.get(key)
    if tab is None:
        counts = _binom_counts_table(ft)
        tab = [
            [CycInt.from_powers(ft.n, row) for row in rows] for rows in counts
        ]
        ft._caches[key] = tab
    return tab
