"""Integer polynomials in one variable ``t``.

Text input follows a small grammar::

    expr   := term (('+'|'-') term)*
    term   := factor ('*' factor)*
    factor := ('+'|'-') factor | base ('^' nonneg_int)?
    base   := 't' | int_literal | '(' expr ')'

The prefix sign on ``factor`` is an extension so that pretty-printed output
with a negative leading coefficient parses back. Implicit multiplication is
rejected.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .arith import DomainError

MAX_DEGREE = 10_000
MAX_COEFF_BITS = 4096


class PolyParseError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} at position {position}")
        self.message = message
        self.position = position


class CoefficientOverflow(ArithmeticError):
    pass


def _trim(coeffs) -> tuple[int, ...]:
    c = list(coeffs)
    while len(c) > 1 and c[-1] == 0:
        c.pop()
    return tuple(c) if c else (0,)


def _guard(coeffs: tuple[int, ...]) -> tuple[int, ...]:
    if len(coeffs) - 1 > MAX_DEGREE:
        raise CoefficientOverflow(f"degree {len(coeffs) - 1} exceeds {MAX_DEGREE}")
    if any(abs(c).bit_length() > MAX_COEFF_BITS for c in coeffs):
        raise CoefficientOverflow(f"coefficient wider than {MAX_COEFF_BITS} bits")
    return coeffs


@dataclass(frozen=True)
class IntPolynomial:
    """Integer polynomial, coefficients in ascending degree. Zero is ``(0,)``."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs=(0,)):
        object.__setattr__(self, "coeffs", _guard(_trim(int(c) for c in coeffs)))

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls((c,))

    @classmethod
    def identity(cls) -> "IntPolynomial":
        return cls((0, 1))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return -1 if self.is_zero() else len(self.coeffs) - 1

    @property
    def leading(self) -> int:
        return self.coeffs[-1]

    def is_zero(self) -> bool:
        return self.coeffs == (0,)

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        a, b = self.coeffs, other.coeffs
        n = max(len(a), len(b))
        return IntPolynomial(
            (a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)
        )

    def __neg__(self) -> "IntPolynomial":
        return IntPolynomial(-c for c in self.coeffs)

    def __sub__(self, other: "IntPolynomial") -> "IntPolynomial":
        return self + (-other)

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if self.is_zero() or other.is_zero():
            return IntPolynomial()
        if self.degree + other.degree > MAX_DEGREE:
            raise CoefficientOverflow(f"degree {self.degree + other.degree} exceeds {MAX_DEGREE}")
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def __pow__(self, e: int) -> "IntPolynomial":
        if e < 0:
            raise DomainError("negative polynomial exponent")
        if self.degree > 0 and self.degree * e > MAX_DEGREE:
            raise CoefficientOverflow(f"degree {self.degree * e} exceeds {MAX_DEGREE}")
        result = IntPolynomial((1,))
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    def __call__(self, z: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * z + c
        return acc

    def __str__(self) -> str:
        return format_poly(self)


def format_poly(f: IntPolynomial) -> str:
    """Expanded text form that :func:`parse_poly` reads back."""
    if f.is_zero():
        return "0"
    parts = []
    for i in range(len(f.coeffs) - 1, -1, -1):
        c = f.coeffs[i]
        if c == 0:
            continue
        mag = abs(c)
        if i == 0:
            body = str(mag)
        else:
            mono = "t" if i == 1 else f"t^{i}"
            body = mono if mag == 1 else f"{mag}*{mono}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append(("- " if c < 0 else "+ ") + body)
    return " ".join(parts)


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = self._lex(text)
        self.i = 0

    @staticmethod
    def _lex(text):
        toks = []
        i = 0
        while i < len(text):
            ch = text[i]
            if ch.isspace():
                i += 1
            elif ch.isdigit():
                j = i
                while j < len(text) and text[j].isdigit():
                    j += 1
                toks.append(("int", int(text[i:j]), i))
                i = j
            elif ch in "+-*^()t":
                toks.append((ch, ch, i))
                i += 1
            else:
                raise PolyParseError(f"unexpected character {ch!r}", i)
        toks.append(("end", None, len(text)))
        return toks

    def peek(self):
        return self.toks[self.i]

    def take(self, kind):
        tok = self.toks[self.i]
        if tok[0] != kind:
            want = "end of input" if kind == "end" else repr(kind)
            got = "end of input" if tok[0] == "end" else repr(self.text[tok[2]])
            raise PolyParseError(f"expected {want}, found {got}", tok[2])
        self.i += 1
        return tok

    def parse(self) -> IntPolynomial:
        f = self.expr()
        self.take("end")
        return f

    def expr(self):
        f = self.term()
        while self.peek()[0] in ("+", "-"):
            op = self.take(self.peek()[0])[0]
            g = self.term()
            f = f + g if op == "+" else f - g
        return f

    def term(self):
        f = self.factor()
        while self.peek()[0] == "*":
            self.take("*")
            f = f * self.factor()
        tok = self.peek()
        if tok[0] in ("t", "int", "("):
            raise PolyParseError("implicit multiplication is not allowed, use '*'", tok[2])
        return f

    def factor(self):
        kind = self.peek()[0]
        if kind in ("+", "-"):
            self.take(kind)
            g = self.factor()
            return -g if kind == "-" else g
        b = self.base()
        if self.peek()[0] == "^":
            self.take("^")
            tok = self.peek()
            if tok[0] != "int":
                raise PolyParseError("exponent must be a nonnegative integer literal", tok[2])
            self.take("int")
            b = b ** tok[1]
        return b

    def base(self):
        tok = self.peek()
        if tok[0] == "t":
            self.take("t")
            return IntPolynomial.identity()
        if tok[0] == "int":
            self.take("int")
            return IntPolynomial.constant(tok[1])
        if tok[0] == "(":
            self.take("(")
            f = self.expr()
            self.take(")")
            return f
        got = "end of input" if tok[0] == "end" else repr(self.text[tok[2]])
        raise PolyParseError(f"expected 't', integer or '(', found {got}", tok[2])


def parse_poly(text: str) -> IntPolynomial:
    return _Parser(text).parse()


def eval_mod(f: IntPolynomial, z: int, p: int) -> int:
    acc = 0
    z %= p
    for c in reversed(f.coeffs):
        acc = (acc * z + c % p) % p
    return acc


# --- exact algebra ------------------------------------------------------------


def poly_derivative(f: IntPolynomial) -> IntPolynomial:
    return IntPolynomial(i * c for i, c in enumerate(f.coeffs) if i > 0)


def poly_content(f: IntPolynomial) -> int:
    """gcd of the coefficients carrying the sign of the leading coefficient."""
    g = 0
    for c in f.coeffs:
        g = math.gcd(g, c)
    return -g if f.leading < 0 else g


def primitive_part(f: IntPolynomial) -> IntPolynomial:
    c = poly_content(f)
    return IntPolynomial(x // c for x in f.coeffs) if c else f


def _from_fractions(coeffs: list[Fraction]) -> IntPolynomial:
    """Scale a rational polynomial to a primitive integer one with positive lead."""
    lcm = 1
    for c in coeffs:
        lcm = lcm * c.denominator // math.gcd(lcm, c.denominator)
    return primitive_part(IntPolynomial(int(c * lcm) for c in coeffs))


# Rational polynomials are plain lists of Fractions, ascending, [] for zero.


def _q(f: IntPolynomial) -> list[Fraction]:
    return [] if f.is_zero() else [Fraction(c) for c in f.coeffs]


def _q_trim(a: list[Fraction]) -> list[Fraction]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _q_sub(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    n = max(len(a), len(b))
    return _q_trim([(a[i] if i < len(a) else 0) - (b[i] if i < len(b) else 0) for i in range(n)])


def _q_deriv(a: list[Fraction]) -> list[Fraction]:
    return _q_trim([i * c for i, c in enumerate(a)][1:])


def _q_divmod(a: list[Fraction], b: list[Fraction]):
    a = list(a)
    q = [Fraction(0)] * max(len(a) - len(b) + 1, 0)
    while len(a) >= len(b):
        shift = len(a) - len(b)
        coef = a[-1] / b[-1]
        q[shift] = coef
        for i, c in enumerate(b):
            a[i + shift] -= coef * c
        _q_trim(a)
    return _q_trim(q), a


def _q_gcd(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    while b:
        a, b = b, _q_divmod(a, b)[1]
    return [c / a[-1] for c in a]


def _q_div(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
    q, r = _q_divmod(a, b)
    if r:
        raise DomainError("polynomial division is not exact")
    return q


def poly_gcd_rational(f: IntPolynomial, g: IntPolynomial) -> IntPolynomial:
    """gcd over Q, returned primitive in Z[t] with positive leading coefficient."""
    if f.is_zero() and g.is_zero():
        raise DomainError("gcd(0, 0) is undefined")
    return _from_fractions(_q_gcd(_q(f), _q(g)))


def squarefree_decomposition(f: IntPolynomial) -> list[IntPolynomial]:
    """Yun's algorithm over Q.

    Returns primitive integer polynomials a_1, a_2, ... (positive leading
    coefficients) with ``primitive_part(f) == prod(a_i ** i)``.
    """
    if f.degree < 1:
        return []
    fq = _q(f)
    fp = _q_deriv(fq)
    a0 = _q_gcd(fq, fp)
    b = _q_div(fq, a0)
    c = _q_div(fp, a0)
    d = _q_sub(c, _q_deriv(b))
    out = []
    while len(b) > 1:
        a = _q_gcd(b, d)
        out.append(_from_fractions(a))
        b = _q_div(b, a)
        c = _q_div(d, a)
        d = _q_sub(c, _q_deriv(b))
    return out


def is_perfect_square(f: IntPolynomial) -> bool:
    """True iff ``f == g*g`` for some integer polynomial ``g``.

    Every odd-multiplicity factor must be constant and the content a square;
    the assembled root is squared back as a final exact check.
    """
    if f.is_zero():
        raise DomainError("the zero polynomial is excluded")
    content = poly_content(f)
    if content < 0 or math.isqrt(content) ** 2 != content:
        return False
    g = IntPolynomial((math.isqrt(content),))
    for i, a in enumerate(squarefree_decomposition(f), start=1):
        if i % 2 and a.degree > 0:
            return False
        if i % 2 == 0:
            g = g * a ** (i // 2)
    return g * g == f


def is_admissible_base(z: int) -> bool:
    if z in (1, -1):
        return False
    return not (z >= 0 and math.isqrt(z) ** 2 == z)
