"""Exact sparse polynomial arithmetic over a prime field.

Elements of F_p[x_1, ..., x_n] are stored as dicts mapping exponent tuples
to coefficients reduced into [1, p-1]; the zero polynomial is the empty
dict, so every polynomial has exactly one representation.  A :class:`Ring`
fixes the characteristic p, the Frobenius step s (the Frobenius map raises
to the power q = p**s), the variable names and the monomial order.  All
operations are pure and exact; nothing here ever rounds.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Mapping

from .errors import DomainError, ParseError, ResourceError, RingMismatchError

Exponents = tuple[int, ...]
MonomialKey = Callable[[Exponents], object]

# Guard against runaway exponent growth: any operation whose result would
# exceed this total degree raises ResourceError instead of computing it.
MAX_TOTAL_DEGREE = 10**6

ORDER_NAMES = ("grevlex", "lex", "elim")

_NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def _is_prime(m: int) -> bool:
    # Deterministic Miller-Rabin; this witness set is exact for m < 3.3e24.
    if m < 2:
        return False
    small = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
    for w in small:
        if m % w == 0:
            return m == w
    d, r = m - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for w in small:
        x = pow(w, d, m)
        if x in (1, m - 1):
            continue
        for _ in range(r - 1):
            x = x * x % m
            if x == m - 1:
                break
        else:
            return False
    return True


def _grevlex_key(m: Exponents) -> object:
    return (sum(m), tuple(-e for e in reversed(m)))


def _lex_key(m: Exponents) -> object:
    return m


def _elim_key(m: Exponents) -> object:
    # Block order eliminating the first variable: compare its exponent
    # first, break ties by graded reverse lexicographic order on the rest.
    return (m[0], sum(m[1:]), tuple(-e for e in reversed(m[1:])))


_KEYS: dict[str, MonomialKey] = {
    "grevlex": _grevlex_key,
    "lex": _lex_key,
    "elim": _elim_key,
}


@dataclass(frozen=True)
class Ring:
    """F_p[x_1..x_n] with a Frobenius step and a fixed monomial order.

    ``q = p**s`` is the power the Frobenius map raises to; the coefficient
    field is always F_p.  Rings compare by value, and cross-ring arithmetic
    raises :class:`RingMismatchError`.
    """

    p: int
    var_names: tuple[str, ...]
    s: int = 1
    order: str = "grevlex"

    def __post_init__(self) -> None:
        object.__setattr__(self, "var_names", tuple(self.var_names))
        if not _is_prime(self.p):
            raise DomainError(f"characteristic must be prime, got {self.p}")
        if self.s < 1:
            raise DomainError(f"Frobenius step must be >= 1, got {self.s}")
        if self.order not in _KEYS:
            raise DomainError(
                f"unknown monomial order {self.order!r}; choose from {ORDER_NAMES}"
            )
        if not self.var_names:
            raise DomainError("a ring needs at least one variable")
        seen = set()
        for name in self.var_names:
            if not _NAME_RE.match(name):
                raise DomainError(f"invalid variable name {name!r}")
            if name in seen:
                raise DomainError(f"duplicate variable name {name!r}")
            seen.add(name)

    @property
    def n(self) -> int:
        return len(self.var_names)

    @property
    def q(self) -> int:
        return self.p**self.s

    def monomial_key(self) -> MonomialKey:
        return _KEYS[self.order]

    @property
    def zero(self) -> "Poly":
        return Poly(self, {})

    @property
    def one(self) -> "Poly":
        return self.constant(1)

    def constant(self, c: int) -> "Poly":
        c %= self.p
        return Poly(self, {(0,) * self.n: c} if c else {})

    def monomial(self, exponents: Iterable[int], coeff: int = 1) -> "Poly":
        return self.poly({tuple(exponents): coeff})

    @property
    def gens(self) -> tuple["Poly", ...]:
        n = self.n
        return tuple(
            Poly(self, {tuple(1 if j == i else 0 for j in range(n)): 1})
            for i in range(n)
        )

    def poly(self, terms: Mapping[Exponents, int]) -> "Poly":
        """Build a polynomial from an exponent->coefficient mapping."""
        clean: dict[Exponents, int] = {}
        for m, c in terms.items():
            m = tuple(m)
            if len(m) != self.n or any(e < 0 for e in m):
                raise DomainError(f"bad exponent tuple {m} for {self}")
            if sum(m) > MAX_TOTAL_DEGREE:
                raise ResourceError(
                    f"monomial degree {sum(m)} exceeds the guard {MAX_TOTAL_DEGREE}"
                )
            c %= self.p
            if c:
                prev = clean.get(m, 0)
                tot = (prev + c) % self.p
                if tot:
                    clean[m] = tot
                elif m in clean:
                    del clean[m]
        return Poly(self, clean)

    def __call__(self, text: "str | int | Poly") -> "Poly":
        if isinstance(text, Poly):
            if text.ring != self:
                raise RingMismatchError(f"polynomial belongs to {text.ring}, not {self}")
            return text
        if isinstance(text, int):
            return self.constant(text)
        return parse_poly(self, text)

    def __str__(self) -> str:
        q = f", q={self.q}" if self.s > 1 else ""
        return f"F_{self.p}[{','.join(self.var_names)}] ({self.order}{q})"

    def __repr__(self) -> str:
        return (
            f"Ring(p={self.p}, var_names={self.var_names!r}, "
            f"s={self.s}, order={self.order!r})"
        )


class Poly:
    """Immutable sparse polynomial over its ring's prime field.

    The term dict is private to the package and never mutated after
    construction; use :meth:`Ring.poly` or ring parsing to build values.
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: Ring, terms: dict[Exponents, int]):
        self.ring = ring
        self._terms = terms
        self._hash: int | None = None

    # -- basic queries ------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(m) for m in self._terms)

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def __len__(self) -> int:
        return len(self._terms)

    def total_degree(self) -> int:
        """Total degree; -1 for the zero polynomial."""
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def constant_term(self) -> int:
        return self._terms.get((0,) * self.ring.n, 0)

    def coeff(self, exponents: Iterable[int]) -> int:
        return self._terms.get(tuple(exponents), 0)

    def terms(self) -> Iterator[tuple[Exponents, int]]:
        """Yield (exponents, coefficient) pairs in descending term order."""
        key = self.ring.monomial_key()
        for m in sorted(self._terms, key=key, reverse=True):
            yield m, self._terms[m]

    def leading_monomial(self) -> Exponents:
        if not self._terms:
            raise DomainError("the zero polynomial has no leading monomial")
        return max(self._terms, key=self.ring.monomial_key())

    def leading_coeff(self) -> int:
        return self._terms[self.leading_monomial()]

    def monic(self) -> "Poly":
        if not self._terms:
            return self
        lc = self.leading_coeff()
        if lc == 1:
            return self
        return self * pow(lc, self.ring.p - 2, self.ring.p)

    # -- equality and hashing -----------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    # -- arithmetic ----------------------------------------------------

    def _coerce(self, other: "Poly | int") -> "Poly":
        if isinstance(other, int):
            return self.ring.constant(other)
        if not isinstance(other, Poly):
            raise TypeError(f"cannot combine Poly with {type(other).__name__}")
        if other.ring != self.ring:
            raise RingMismatchError(
                f"operands live in different rings: {self.ring} vs {other.ring}"
            )
        return other

    def __add__(self, other: "Poly | int") -> "Poly":
        other = self._coerce(other)
        p = self.ring.p
        out = dict(self._terms)
        for m, c in other._terms.items():
            v = (out.get(m, 0) + c) % p
            if v:
                out[m] = v
            elif m in out:
                del out[m]
        return Poly(self.ring, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        p = self.ring.p
        return Poly(self.ring, {m: p - c for m, c in self._terms.items()})

    def __sub__(self, other: "Poly | int") -> "Poly":
        return self + (-self._coerce(other))

    def __rsub__(self, other: "Poly | int") -> "Poly":
        return self._coerce(other) - self

    def __mul__(self, other: "Poly | int") -> "Poly":
        other = self._coerce(other)
        if not self._terms or not other._terms:
            return Poly(self.ring, {})
        if self.total_degree() + other.total_degree() > MAX_TOTAL_DEGREE:
            raise ResourceError(
                "product degree would exceed the guard "
                f"{MAX_TOTAL_DEGREE}: {self.total_degree()} + {other.total_degree()}"
            )
        p = self.ring.p
        out: dict[Exponents, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                v = (out.get(m, 0) + c1 * c2) % p
                if v:
                    out[m] = v
                elif m in out:
                    del out[m]
        return Poly(self.ring, out)

    __rmul__ = __mul__

    def _small_pow(self, m: int) -> "Poly":
        # plain square-and-multiply for exponents below q
        result = self.ring.one
        base = self
        while m:
            if m & 1:
                result = result * base
            m >>= 1
            if m:
                base = base * base
        return result

    def __pow__(self, m: int) -> "Poly":
        """Exact m-th power.

        The exponent is decomposed in base q so that each digit is handled
        by plain squaring and the digit positions by Frobenius twists; the
        two routes agree because the q-power map is a ring endomorphism.
        This keeps powers like f**(1 + q + q**2) sparse instead of dense.
        """
        if not isinstance(m, int):
            raise TypeError("polynomial powers take integer exponents")
        if m < 0:
            raise DomainError("polynomial powers take nonnegative exponents")
        if m == 0:
            return self.ring.one
        if not self._terms:
            return self.ring.zero
        if self.total_degree() * m > MAX_TOTAL_DEGREE:
            raise ResourceError(
                f"power degree {self.total_degree() * m} exceeds the guard "
                f"{MAX_TOTAL_DEGREE}"
            )
        q = self.ring.q
        digit_pows: dict[int, Poly] = {}
        result = self.ring.one
        level = 0
        while m:
            m, d = divmod(m, q)
            if d:
                if d not in digit_pows:
                    digit_pows[d] = self._small_pow(d)
                result = result * digit_pows[d].frobenius_power(level)
            level += 1
        return result

    def frobenius_power(self, e: int) -> "Poly":
        """Apply the e-fold Frobenius: every exponent is scaled by q**e.

        Coefficients are fixed because c**p == c in F_p.  Equals the plain
        power f**(q**e) but costs one pass over the terms.
        """
        if e < 0:
            raise DomainError("Frobenius powers take nonnegative levels")
        if e == 0 or not self._terms:
            return self
        Q = self.ring.q**e
        if self.total_degree() * Q > MAX_TOTAL_DEGREE:
            raise ResourceError(
                f"Frobenius power degree {self.total_degree() * Q} exceeds "
                f"the guard {MAX_TOTAL_DEGREE}"
            )
        return Poly(self.ring, {tuple(b * Q for b in m): c for m, c in self._terms.items()})

    # -- rendering ------------------------------------------------------

    def _term_str(self, m: Exponents, c: int) -> str:
        parts: list[str] = []
        if c != 1 or not any(m):
            parts.append(str(c))
        for name, e in zip(self.ring.var_names, m):
            if e == 1:
                parts.append(name)
            elif e > 1:
                parts.append(f"{name}^{e}")
        return "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(self._term_str(m, c) for m, c in self.terms())

    def __repr__(self) -> str:
        return f"<Poly {self} over {self.ring}>"


# -- parsing -----------------------------------------------------------

_TOKEN_RE = re.compile(
    r"\s*(?:(?P<num>\d+)|(?P<name>[A-Za-z_][A-Za-z0-9_]*)|(?P<op>[-+*^()]))"
)


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens: list[tuple[str, str, int]] = []
    pos = 0
    while pos < len(text):
        m = _TOKEN_RE.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise ParseError(
                    f"unexpected character {text[pos:].strip()[0]!r} at position {pos}"
                )
            break
        if m.group("num") is not None:
            tokens.append(("num", m.group("num"), m.start()))
        elif m.group("name") is not None:
            tokens.append(("name", m.group("name"), m.start()))
        else:
            tokens.append(("op", m.group("op"), m.start()))
        pos = m.end()
    tokens.append(("end", "", len(text)))
    return tokens


class _PolyParser:
    """Recursive descent over ``expr := term (('+'|'-') term)*``.

    Multiplication must be explicit (``2*x``, never ``2x``), exponents are
    nonnegative integer literals after ``^``, and parentheses group freely.
    """

    def __init__(self, ring: Ring, text: str):
        self.ring = ring
        self.tokens = _tokenize(text)
        self.pos = 0
        self.text = text

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.pos]

    def advance(self) -> tuple[str, str, int]:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def fail(self, message: str) -> None:
        kind, value, at = self.peek()
        shown = value if kind != "end" else "end of input"
        raise ParseError(f"{message} (found {shown!r} at position {at})")

    def parse(self) -> Poly:
        result = self.expr()
        if self.peek()[0] != "end":
            self.fail("trailing input after polynomial")
        return result

    def expr(self) -> Poly:
        sign = 1
        kind, value, _ = self.peek()
        if kind == "op" and value in "+-":
            self.advance()
            sign = -1 if value == "-" else 1
        result = self.term()
        if sign < 0:
            result = -result
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value in "+-":
                self.advance()
                nxt = self.term()
                result = result + nxt if value == "+" else result - nxt
            else:
                return result

    def term(self) -> Poly:
        result = self.factor()
        while True:
            kind, value, _ = self.peek()
            if kind == "op" and value == "*":
                self.advance()
                result = result * self.factor()
            elif kind in ("num", "name") or (kind == "op" and value == "("):
                self.fail("missing '*' between factors")
            else:
                return result

    def factor(self) -> Poly:
        base = self.atom()
        kind, value, _ = self.peek()
        if kind == "op" and value == "^":
            self.advance()
            kind, value, _ = self.peek()
            if kind != "num":
                self.fail("exponent must be a nonnegative integer literal")
            self.advance()
            return base ** int(value)
        return base

    def atom(self) -> Poly:
        kind, value, _ = self.advance()
        if kind == "num":
            return self.ring.constant(int(value))
        if kind == "name":
            try:
                idx = self.ring.var_names.index(value)
            except ValueError:
                raise ParseError(
                    f"unknown variable {value!r}; ring variables are "
                    f"{','.join(self.ring.var_names)}"
                ) from None
            return self.ring.gens[idx]
        if kind == "op" and value == "(":
            inner = self.expr()
            kind, value, _ = self.advance()
            if not (kind == "op" and value == ")"):
                raise ParseError("unbalanced parenthesis")
            return inner
        self.pos -= 1
        self.fail("expected a number, variable or parenthesized expression")
        raise AssertionError("unreachable")


def parse_poly(ring: Ring, text: str) -> Poly:
    """Parse polynomial text in ``ring``; raises :class:`ParseError`."""
    if not text.strip():
        raise ParseError("empty polynomial text")
    return _PolyParser(ring, text).parse()
