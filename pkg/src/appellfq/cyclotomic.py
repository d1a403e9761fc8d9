"""Exact arithmetic in the cyclotomic integer ring Z[zeta_n].

Values are coefficient vectors in the power basis {1, z, ..., z^(phi(n)-1)}
reduced modulo the n-th cyclotomic polynomial, with unbounded Python ints
as coefficients, so equality is plain vector equality and no precision is
ever lost. Character sums accumulate root-of-unity counts in a length-n
vector and reduce once at the end; the reduced rows for z^j, j >= phi(n),
are precomputed per n.
"""

from __future__ import annotations

import functools

import numpy as np

# Dense row tables are precomputed up to this n; the table is
# (n - phi(n)) x phi(n) ints, so keep the cap modest.
_DENSE_ROWS_MAX = 1024


def euler_phi(n: int) -> int:
    out = n
    f = 2
    m = n
    while f * f <= m:
        if m % f == 0:
            out -= out // f
            while m % f == 0:
                m //= f
        f += 1
    if m > 1:
        out -= out // m
    return out


def _divisors(n: int) -> list[int]:
    small, large = [], []
    f = 1
    while f * f <= n:
        if n % f == 0:
            small.append(f)
            if f != n // f:
                large.append(n // f)
        f += 1
    return small + large[::-1]


def _mobius(n: int) -> int:
    out = 1
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return 0
            out = -out
        f += 1 if f == 2 else 2
    if n > 1:
        out = -out
    return out


def _mul_binomial(poly: list[int], m: int) -> list[int]:
    """poly * (x^m - 1)."""
    out = [0] * (len(poly) + m)
    for i, c in enumerate(poly):
        out[i + m] += c
        out[i] -= c
    return out


def _div_binomial(poly: list[int], m: int) -> list[int]:
    """Exact poly / (x^m - 1)."""
    rem = list(poly)
    qdeg = len(poly) - 1 - m
    quot = [0] * (qdeg + 1)
    for i in range(len(rem) - 1, m - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        quot[i - m] = c
        rem[i] = 0
        rem[i - m] += c
    if any(rem):
        raise ArithmeticError("inexact division by x^m - 1")
    return quot


@functools.lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Phi_n, low-to-high, monic of degree phi(n).

    Computed as the product of (x^(n/d) - 1)^mobius(d) over d | n, which
    equals the classical construction dividing x^n - 1 by Phi_d for every
    proper divisor d.
    """
    if n < 1:
        raise ValueError("n must be positive")
    poly = [1]
    divs = [(d, _mobius(d)) for d in _divisors(n)]
    for d, mu in divs:
        if mu == 1:
            poly = _mul_binomial(poly, n // d)
    for d, mu in divs:
        if mu == -1:
            poly = _div_binomial(poly, n // d)
    return tuple(poly)


class _Ring:
    """Per-n context: Phi_n, reduction rows for z^j, cached constants."""

    def __init__(self, n: int):
        self.n = n
        self.poly = cyclotomic_poly(n)
        self.phi = len(self.poly) - 1
        self.rows: list[tuple[int, ...]] | None = None
        if n <= _DENSE_ROWS_MAX:
            self.rows = self._build_rows()
        self._np_rows = None

    def _build_rows(self):
        n, phi = self.n, self.phi
        rows = [
            tuple(1 if i == j else 0 for i in range(phi)) for j in range(phi)
        ]
        if phi < n:
            cur = [-c for c in self.poly[:phi]]  # z^phi
            rows.append(tuple(cur))
            for _ in range(phi + 1, n):
                lead = cur[-1]
                cur = [0] + cur[:-1]
                if lead:
                    for i in range(phi):
                        cur[i] -= lead * self.poly[i]
                rows.append(tuple(cur))
        return rows

    @property
    def np_rows(self):
        if self._np_rows is None:
            if self.rows is None:
                raise ValueError(f"n = {self.n} too large for dense row table")
            self._np_rows = np.array(self.rows, dtype=np.int64)
        return self._np_rows

    def reduce_counts(self, counts) -> tuple[int, ...]:
        """Reduce a length-n vector of zeta-power weights to the power basis."""
        n, phi = self.n, self.phi
        out = list(counts[:phi]) + [0] * (phi - min(phi, len(counts)))
        if self.rows is not None:
            rows = self.rows
            for j in range(phi, min(n, len(counts))):
                c = counts[j]
                if c:
                    row = rows[j]
                    for i in range(phi):
                        out[i] += c * row[i]
            return tuple(out)
        return self._reduce_large(counts)

    def _reduce_large(self, counts):
        # Synthetic division of the length-n vector by Phi_n; numpy path
        # with overflow monitoring, exact Python fallback.
        n, phi, poly = self.n, self.phi, self.poly
        rem = np.array(list(counts) + [0] * (n - len(counts)), dtype=np.int64)
        ok = True
        body = np.array(poly[:phi], dtype=np.int64)
        for i in range(n - 1, phi - 1, -1):
            c = int(rem[i])
            if c == 0:
                continue
            if abs(c) > (1 << 55):
                ok = False
                break
            rem[i - phi : i] -= c * body
            rem[i] = 0
        if ok:
            return tuple(int(v) for v in rem[:phi])
        rem2 = [int(v) for v in counts] + [0] * (n - len(counts))
        for i in range(n - 1, phi - 1, -1):
            c = rem2[i]
            if c == 0:
                continue
            for j in range(phi):
                rem2[i - phi + j] -= c * poly[j]
            rem2[i] = 0
        return tuple(rem2[:phi])


@functools.lru_cache(maxsize=None)
def _ring(n: int) -> _Ring:
    return _Ring(n)


class InexactDivisionError(ArithmeticError):
    """Raised when a coefficient-wise integer division leaves a remainder."""

    def __init__(self, n, index, coefficient, divisor):
        self.n = n
        self.index = index
        self.coefficient = coefficient
        self.divisor = divisor
        super().__init__(
            f"coefficient {coefficient} at basis index {index} (n={n}) "
            f"is not divisible by {divisor}"
        )


class CycInt:
    """An element of Z[zeta_n] in canonical reduced form. Immutable."""

    __slots__ = ("n", "coeffs")

    def __init__(self, n: int, coeffs):
        ring = _ring(n)
        coeffs = tuple(coeffs)
        if len(coeffs) != ring.phi:
            raise ValueError(
                f"need {ring.phi} coefficients for n = {n}, got {len(coeffs)}"
            )
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coeffs", coeffs)

    def __setattr__(self, *a):
        raise AttributeError("CycInt is immutable")

    # --- constructors ---------------------------------------------------

    @staticmethod
    def from_int(n: int, v: int) -> "CycInt":
        phi = _ring(n).phi
        return CycInt(n, (v,) + (0,) * (phi - 1))

    @staticmethod
    def from_powers(n: int, weights) -> "CycInt":
        """Sum of weights[j] * zeta_n^j for a length-<=n weight vector."""
        return CycInt(n, _ring(n).reduce_counts(list(weights)))

    def _coerce(self, other):
        if isinstance(other, CycInt):
            if other.n != self.n:
                raise ValueError(f"mixed rings: n={self.n} vs n={other.n}")
            return other
        if isinstance(other, int):
            return CycInt.from_int(self.n, other)
        return None

    # --- ring operations --------------------------------------------------

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.n, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return CycInt(self.n, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return CycInt(self.n, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, int):
            return CycInt(self.n, tuple(a * other for a in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ring = _ring(self.n)
        phi = ring.phi
        a, b = self.coeffs, o.coeffs
        prod = [0] * (2 * phi - 1)
        for i, ai in enumerate(a):
            if ai == 0:
                continue
            for j, bj in enumerate(b):
                prod[i + j] += ai * bj
        out = list(prod[:phi]) + [0] * (phi - min(phi, len(prod)))
        if self.n <= _DENSE_ROWS_MAX:
            rows = ring.rows
            n = self.n
            for k in range(phi, len(prod)):
                c = prod[k]
                if c:
                    row = rows[k % n]
                    for i in range(phi):
                        out[i] += c * row[i]
            return CycInt(self.n, out)
        folded = [0] * self.n
        for k, c in enumerate(prod):
            folded[k % self.n] += c
        return CycInt(self.n, ring.reduce_counts(folded))

    __rmul__ = __mul__

    # --- structure ---------------------------------------------------------

    def exact_div_int(self, m: int) -> "CycInt":
        """Coefficient-wise division by m; every coefficient must divide."""
        if m == 0:
            raise ZeroDivisionError("division of CycInt by zero")
        out = []
        for i, c in enumerate(self.coeffs):
            d, rem = divmod(c, m)
            if rem:
                raise InexactDivisionError(self.n, i, c, m)
            out.append(d)
        return CycInt(self.n, out)

    def galois(self, k: int) -> "CycInt":
        """The automorphism zeta -> zeta^k, for k coprime to n."""
        import math

        n = self.n
        k %= n
        if math.gcd(k, n) != 1:
            raise ValueError(f"k = {k} is not coprime to n = {n}")
        ring = _ring(n)
        counts = [0] * n
        for i, c in enumerate(self.coeffs):
            if c:
                counts[(i * k) % n] += c
        return CycInt(n, ring.reduce_counts(counts))

    def as_integer(self) -> int | None:
        """The value as a rational integer, or None."""
        if any(self.coeffs[1:]):
            return None
        return self.coeffs[0]

    @property
    def is_zero(self) -> bool:
        return not any(self.coeffs)

    # --- comparisons / rendering -------------------------------------------

    def __eq__(self, other):
        if isinstance(other, int):
            return self.as_integer() == other
        if not isinstance(other, CycInt):
            return NotImplemented
        return self.n == other.n and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.n, self.coeffs))

    def __repr__(self):
        v = self.as_integer()
        if v is not None:
            return f"CycInt({self.n}; {v})"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if i == 0:
                terms.append(str(c))
            else:
                z = "z" if i == 1 else f"z^{i}"
                terms.append(f"{c}*{z}" if c != 1 else z)
        return f"CycInt({self.n}; {' + '.join(terms)})"

    def to_json(self) -> dict:
        return {"n": self.n, "coeffs": [str(c) for c in self.coeffs]}

    @staticmethod
    def from_json(d: dict) -> "CycInt":
        return CycInt(int(d["n"]), tuple(int(c) for c in d["coeffs"]))


def cyc_zero(n: int) -> CycInt:
    return CycInt.from_int(n, 0)


def cyc_one(n: int) -> CycInt:
    return CycInt.from_int(n, 1)


def root_of_unity(n: int, k: int) -> CycInt:
    """zeta_n^k in canonical form."""
    ring = _ring(n)
    k %= n
    if ring.rows is not None:
        return CycInt(n, ring.rows[k])
    counts = [0] * n
    counts[k] = 1
    return CycInt(n, ring.reduce_counts(counts))


@functools.lru_cache(maxsize=None)
def all_roots(n: int) -> tuple[CycInt, ...]:
    """All n roots zeta_n^0 .. zeta_n^(n-1); cached for sum evaluation."""
    return tuple(root_of_unity(n, k) for k in range(n))
