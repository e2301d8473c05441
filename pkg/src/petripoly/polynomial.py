"""Exact sparse arithmetic in the commutative semiring N[x,y].

A polynomial is a finite mapping from exponent pairs ``(i, j)`` to
positive integer coefficients; the zero polynomial is the empty mapping.
Everything is an arbitrary-size Python int, so there is no overflow to
guard against, and negative values are rejected at construction.

The binary support of a number is the set of positions of its 1-bits;
the support of a polynomial is the union over all its exponents.  Two
polynomials with disjoint supports multiply without binary carries,
which is what the factorization machinery in :mod:`petripoly.factor`
exploits.
"""

from collections.abc import Iterable, Mapping
from types import MappingProxyType

from .errors import ParseError

__all__ = [
    "Polynomial",
    "ZERO",
    "ONE",
    "tau_nat",
    "nat_of_bits",
    "tau_poly",
    "disjoint_support",
    "compare",
    "parse_poly",
    "print_poly",
]


def _check_nat(value, what):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{what} must be an int, got {value!r}")
    if value < 0:
        raise ValueError(f"{what} must be nonnegative, got {value}")


def tau_nat(k: int) -> frozenset[int]:
    """Positions of the 1-bits in the binary expansion of ``k``."""
    _check_nat(k, "argument")
    bits = set()
    t = 0
    while k:
        if k & 1:
            bits.add(t)
        k >>= 1
        t += 1
    return frozenset(bits)


def nat_of_bits(bits: Iterable[int]) -> int:
    """Inverse of :func:`tau_nat`: the sum of ``2**t`` over the given positions."""
    total = 0
    for t in bits:
        _check_nat(t, "bit position")
        total += 1 << t
    return total


class Polynomial:
    """Immutable sparse polynomial with natural-number coefficients.

    ``+`` and ``*`` are the semiring operations.  The comparison
    operators implement the total order described under :func:`compare`,
    and ``str()`` yields the canonical text form of :func:`print_poly`.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping | Iterable = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        stored: dict[tuple[int, int], int] = {}
        for key, coeff in items:
            i, j = key
            _check_nat(i, "x-exponent")
            _check_nat(j, "y-exponent")
            _check_nat(coeff, "coefficient")
            if coeff:
                stored[(i, j)] = stored.get((i, j), 0) + coeff
        self._terms = stored

    @classmethod
    def constant(cls, value: int) -> "Polynomial":
        return cls({(0, 0): value})

    @classmethod
    def monomial(cls, i: int, j: int, coeff: int = 1) -> "Polynomial":
        return cls({(i, j): coeff})

    @property
    def terms(self) -> Mapping[tuple[int, int], int]:
        """Read-only view of the (exponent pair -> coefficient) mapping."""
        return MappingProxyType(self._terms)

    def coefficient(self, i: int, j: int) -> int:
        """Coefficient of ``x^i y^j`` (0 when the monomial is absent)."""
        return self._terms.get((i, j), 0)

    @property
    def constant_term(self) -> int:
        return self._terms.get((0, 0), 0)

    def support(self) -> frozenset[int]:
        """Union of the binary supports of all exponents."""
        bits: frozenset[int] = frozenset()
        for i, j in self._terms:
            bits |= tau_nat(i) | tau_nat(j)
        return bits

    def sort_key(self) -> tuple:
        """Key realizing the total order of :func:`compare`.

        Terms are listed in descending graded-lexicographic order of
        their monomials, each as a ``(i + j, i, coefficient)`` triple;
        keys compare as plain tuples.
        """
        return tuple(sorted(((i + j, i, a) for (i, j), a in self._terms.items()), reverse=True))

    def __add__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        merged = dict(self._terms)
        for key, coeff in other._terms.items():
            merged[key] = merged.get(key, 0) + coeff
        return Polynomial(merged)

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        out: dict[tuple[int, int], int] = {}
        for (i1, j1), a1 in self._terms.items():
            for (i2, j2), a2 in other._terms.items():
                key = (i1 + i2, j1 + j2)
                out[key] = out.get(key, 0) + a1 * a2
        return Polynomial(out)

    def __eq__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __bool__(self):
        return bool(self._terms)

    def __lt__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.sort_key() < other.sort_key()

    def __le__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.sort_key() <= other.sort_key()

    def __gt__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.sort_key() > other.sort_key()

    def __ge__(self, other):
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.sort_key() >= other.sort_key()

    def __str__(self):
        return print_poly(self)

    def __repr__(self):
        return f"parse_poly({print_poly(self)!r})"


ZERO = Polynomial()
ONE = Polynomial.constant(1)


def tau_poly(p: Polynomial) -> frozenset[int]:
    """Binary support of a polynomial."""
    return p.support()


def disjoint_support(p: Polynomial, q: Polynomial) -> bool:
    """True when no bit position occurs in exponents of both polynomials."""
    return not (p.support() & q.support())


def compare(p: Polynomial, q: Polynomial) -> int:
    """Total order on polynomials: -1, 0 or +1.

    Each polynomial's terms are listed in descending graded-lex order of
    the monomials; the two lists compare lexicographically, terms by
    grade, then x-exponent, then coefficient (a strict prefix is
    smaller).
    """
    a, b = p.sort_key(), q.sort_key()
    return (a > b) - (a < b)


def print_poly(p: Polynomial) -> str:
    """Canonical text form; inverse of :func:`parse_poly`."""
    if not p:
        return "0"
    parts = []
    for grade, i, coeff in p.sort_key():
        j = grade - i
        factors = []
        if i:
            factors.append("x" if i == 1 else f"x^{i}")
        if j:
            factors.append("y" if j == 1 else f"y^{j}")
        if coeff != 1 or not factors:
            factors.insert(0, str(coeff))
        parts.append("*".join(factors))
    return " + ".join(parts)


def _tokenize(text):
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
        elif ch.isdigit():
            end = pos + 1
            while end < len(text) and text[end].isdigit():
                end += 1
            tokens.append(("nat", int(text[pos:end]), pos))
            pos = end
        elif ch in "xy":
            tokens.append(("var", ch, pos))
            pos += 1
        elif ch in "^*+":
            tokens.append((ch, ch, pos))
            pos += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at position {pos}", position=pos)
    return tokens


class _PolyParser:
    """Recursive descent over: poly := term ('+' term)*,
    term := nat | nat '*' factors | factors,
    factors := factor ('*' factor)*, factor := ('x'|'y') ('^' nat)?.
    """

    def __init__(self, text):
        self._tokens = _tokenize(text)
        self._end = len(text)
        self._k = 0

    def _peek(self):
        if self._k < len(self._tokens):
            return self._tokens[self._k]
        return ("end", None, self._end)

    def _advance(self):
        token = self._peek()
        self._k += 1
        return token

    def _fail(self, expected):
        kind, _, pos = self._peek()
        found = "end of input" if kind == "end" else f"{kind!r}"
        raise ParseError(f"expected {expected} at position {pos}, found {found}", position=pos)

    def parse(self):
        terms: dict[tuple[int, int], int] = {}
        while True:
            coeff, i, j = self._term()
            if coeff:
                terms[(i, j)] = terms.get((i, j), 0) + coeff
            kind, _, _ = self._peek()
            if kind == "end":
                return Polynomial(terms)
            if kind != "+":
                self._fail("'+' or end of input")
            self._advance()

    def _term(self):
        kind, value, _ = self._peek()
        if kind == "nat":
            self._advance()
            if self._peek()[0] == "*":
                self._advance()
                i, j = self._factors()
                return value, i, j
            return value, 0, 0
        if kind == "var":
            i, j = self._factors()
            return 1, i, j
        self._fail("a term")

    def _factors(self):
        i, j = self._factor(0, 0)
        while self._peek()[0] == "*":
            self._advance()
            i, j = self._factor(i, j)
        return i, j

    def _factor(self, i, j):
        kind, value, _ = self._peek()
        if kind != "var":
            self._fail("'x' or 'y'")
        self._advance()
        exponent = 1
        if self._peek()[0] == "^":
            self._advance()
            kind, nat, _ = self._peek()
            if kind != "nat":
                self._fail("an exponent")
            self._advance()
            exponent = nat
        if value == "x":
            return i + exponent, j
        return i, j + exponent


def parse_poly(text: str) -> Polynomial:
    """Parse the ASCII polynomial syntax, e.g. ``"x^3*y^3 + 2*x^2 + y + 2"``.

    Raises :class:`ParseError` (with a character position) on anything
    outside the grammar; repeated variables within a term multiply.
    """
    return _PolyParser(text).parse()
