"""Exact scalars: Laurent polynomials, rational functions in ``v``, target fields.

Polynomial arithmetic over the rationals is delegated to python-flint's
``fmpq_poly``; everything here wraps it in canonical, hashable values.

Three kinds of field show up:

* ``RationalFunctionField`` -- the generic field Q(v), where the seminormal
  form lives;
* ``Rationals``, ``PrimeField``, ``CyclotomicField`` -- specialization targets,
  each with a distinguished invertible ``xi``.

All of them expose ``zero``, ``one``, ``xi``, ``element`` and ``text`` so the
representation-theoretic code never needs to know which one it is using.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Iterator

import flint

INFINITY = float("inf")


class ArithmeticError_(ArithmeticError):
    """Base class for scalar errors raised by this module."""


class SpecializationPoleError(ArithmeticError_):
    """A denominator vanishes at the specialization point."""


class CoefficientReductionError(ArithmeticError_):
    """A rational coefficient cannot be mapped into the target field."""


class IntegralityError(ArithmeticError_):
    """A rational function is not a Laurent polynomial with integer coefficients."""


# --------------------------------------------------------------------------
# Laurent polynomials with integer coefficients


class LaurentPolynomial:
    """Finitely supported ``{exponent: int}`` in one formal variable.

    Zero coefficients are never stored, so equal polynomials compare and hash
    identically.
    """

    __slots__ = ("_terms", "var", "_hash")

    def __init__(self, terms: dict[int, int] | Iterable[tuple[int, int]] = (), var: str = "v"):
        if isinstance(terms, dict):
            items = terms.items()
        else:
            items = terms
        clean: dict[int, int] = {}
        for k, c in items:
            c = int(c) + clean.get(int(k), 0)
            if c:
                clean[int(k)] = c
            else:
                clean.pop(int(k), None)
        self._terms = dict(sorted(clean.items()))
        self.var = var
        self._hash = None

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1, var: str = "v") -> "LaurentPolynomial":
        return cls({exponent: coeff}, var)

    @classmethod
    def constant(cls, c: int, var: str = "v") -> "LaurentPolynomial":
        return cls({0: c}, var)

    @property
    def terms(self) -> dict[int, int]:
        return dict(self._terms)

    def items(self) -> Iterator[tuple[int, int]]:
        return iter(self._terms.items())

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self) -> bool:
        return bool(self._terms)

    def min_degree(self) -> int:
        return min(self._terms) if self._terms else 0

    def max_degree(self) -> int:
        return max(self._terms) if self._terms else 0

    def _coerce(self, other) -> "LaurentPolynomial":
        if isinstance(other, LaurentPolynomial):
            if other.var != self.var:
                raise ValueError(f"variable mismatch: {self.var} vs {other.var}")
            return other
        if isinstance(other, int):
            return LaurentPolynomial({0: other}, self.var)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out = dict(self._terms)
        for k, c in other._terms.items():
            out[k] = out.get(k, 0) + c
        return LaurentPolynomial(out, self.var)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPolynomial({k: -c for k, c in self._terms.items()}, self.var)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        out: dict[int, int] = {}
        for a, ca in self._terms.items():
            for b, cb in other._terms.items():
                out[a + b] = out.get(a + b, 0) + ca * cb
        return LaurentPolynomial(out, self.var)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            if len(self._terms) != 1:
                raise ZeroDivisionError("only monomials are units in Z[v, 1/v]")
            (e, c), = self._terms.items()
            if c not in (1, -1):
                raise ZeroDivisionError("only +-v^k are units in Z[v, 1/v]")
            return LaurentPolynomial({e * k: c ** (-k)}, self.var)
        out = LaurentPolynomial({0: 1}, self.var)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other):
        if isinstance(other, int):
            other = LaurentPolynomial({0: other}, self.var)
        if not isinstance(other, LaurentPolynomial):
            return NotImplemented
        return self.var == other.var and self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.var, tuple(self._terms.items())))
        return self._hash

    def evaluate(self, point, one):
        """Evaluate at ``point`` (any field element with ``one`` as unit)."""
        if not self._terms:
            return one - one
        lo = min(self._terms)
        if lo < 0:
            inv = one / point
        total = one - one
        for k, c in self._terms.items():
            base = point ** k if k >= 0 else inv ** (-k)
            total = total + base * c
        return total

    def at_one(self) -> int:
        return sum(self._terms.values())

    def to_ratfunc(self) -> "RationalFunction":
        lo = min(0, self.min_degree())
        num = flint.fmpq_poly([self._terms.get(k, 0) for k in range(lo, self.max_degree() + 1)])
        return RationalFunction(num, _vpow(-lo))

    def to_json(self) -> list[list[int]]:
        return [[k, c] for k, c in self._terms.items()]

    @classmethod
    def from_json(cls, data, var: str = "v") -> "LaurentPolynomial":
        return cls(((int(k), int(c)) for k, c in data), var)

    def __str__(self):
        return render_terms(self._terms.items(), self.var)

    def __repr__(self):
        return f"LaurentPolynomial({self})"

    @classmethod
    def parse(cls, text: str, var: str = "v") -> "LaurentPolynomial":
        return cls(dict(_parse_terms(text, var, integral=True)), var)


_TERM = re.compile(
    r"""\s*(?P<sign>[+-])?\s*
        (?:(?P<coeff>\d+(?:/\d+)?)\s*(?:\*\s*)?)?
        (?:(?P<var>[A-Za-z])(?:\s*\^\s*(?P<exp>-?\d+))?)?\s*""",
    re.VERBOSE,
)


def _parse_terms(text: str, var: str, integral: bool):
    text = text.strip()
    if not text:
        raise ValueError("empty polynomial literal")
    pos = 0
    first = True
    while pos < len(text):
        m = _TERM.match(text, pos)
        if not m or m.end() == pos or (m.group("coeff") is None and m.group("var") is None):
            raise ValueError(f"cannot parse polynomial at position {pos}: {text!r}")
        if not first and m.group("sign") is None:
            raise ValueError(f"expected '+' or '-' at position {pos}: {text!r}")
        if m.group("var") is not None and m.group("var") != var:
            raise ValueError(f"unexpected variable {m.group('var')!r} (expected {var!r})")
        coeff = Fraction(m.group("coeff")) if m.group("coeff") else Fraction(1)
        if m.group("sign") == "-":
            coeff = -coeff
        if integral and coeff.denominator != 1:
            raise ValueError(f"non-integer coefficient {coeff} in Laurent literal")
        if m.group("var") is None:
            exp = 0
        else:
            exp = int(m.group("exp")) if m.group("exp") is not None else 1
        yield exp, (int(coeff) if integral else coeff)
        pos = m.end()
        first = False


def render_terms(items, var: str) -> str:
    """Sparse ``c*v^k`` rendering, exponent-ascending."""
    parts = []
    for k, c in items:
        if c == 0:
            continue
        mag = abs(c)
        body = f"{mag}" if k == 0 else f"{mag}*{var}^{k}"
        if not parts:
            parts.append(("-" if c < 0 else "") + body)
        else:
            parts.append((" - " if c < 0 else " + ") + body)
    return "".join(parts) if parts else "0"


# --------------------------------------------------------------------------
# Rational functions in v over Q


def _vpow(k: int) -> flint.fmpq_poly:
    return flint.fmpq_poly([0] * k + [1])


_ONE_POLY = flint.fmpq_poly([1])


def _poly_key(p: flint.fmpq_poly) -> tuple:
    return tuple((int(c.p), int(c.q)) for c in p.coeffs())


class RationalFunction:
    """Element of Q(v), kept as ``num/den`` with ``den`` monic and coprime to ``num``."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num, den=None, *, _canonical: bool = False):
        if not isinstance(num, flint.fmpq_poly):
            num = flint.fmpq_poly([num] if not isinstance(num, (list, tuple)) else num)
        if den is None:
            den = _ONE_POLY
        elif not isinstance(den, flint.fmpq_poly):
            den = flint.fmpq_poly([den] if not isinstance(den, (list, tuple)) else den)
        if not _canonical:
            if den.is_zero():
                raise ZeroDivisionError("rational function with zero denominator")
            if num.is_zero():
                den = _ONE_POLY
            elif not den.is_constant():
                g = num.gcd(den)
                if not g.is_one():
                    num = num // g
                    den = den // g
            lc = den.leading_coefficient()
            if lc != 1:
                num = num / lc
                den = den / lc
        self.num = num
        self.den = den
        self._hash = None

    @classmethod
    def v(cls) -> "RationalFunction":
        return cls(flint.fmpq_poly([0, 1]), _canonical=True)

    @classmethod
    def constant(cls, c) -> "RationalFunction":
        if isinstance(c, Fraction):
            c = flint.fmpq(c.numerator, c.denominator)
        return cls(flint.fmpq_poly([c]), _canonical=True)

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.num.is_zero()

    def is_polynomial(self) -> bool:
        return self.den.is_one()

    def _coerce(self, other):
        if isinstance(other, RationalFunction):
            return other
        if isinstance(other, (int, Fraction, flint.fmpq)):
            return RationalFunction.constant(other)
        if isinstance(other, LaurentPolynomial):
            return other.to_ratfunc()
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if other.num.is_zero():
            return self
        if self.num.is_zero():
            return other
        if self.den == other.den:
            if self.den.is_one():
                return RationalFunction(self.num + other.num, _ONE_POLY, _canonical=True)
            return RationalFunction(self.num + other.num, self.den)
        return RationalFunction(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return RationalFunction(-self.num, self.den, _canonical=True)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if self.num.is_zero() or other.num.is_zero():
            return ZERO_RF
        if self.den.is_one() and other.den.is_one():
            return RationalFunction(self.num * other.num, _ONE_POLY, _canonical=True)
        return RationalFunction(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RationalFunction":
        if self.num.is_zero():
            raise ZeroDivisionError("division by zero in Q(v)")
        return RationalFunction(self.den, self.num)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        return RationalFunction(self.num ** k, self.den ** k, _canonical=True)

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = RationalFunction.constant(other)
        if not isinstance(other, RationalFunction):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((_poly_key(self.num), _poly_key(self.den)))
        return self._hash

    # -- integrality and specialization

    def laurent_or_none(self) -> LaurentPolynomial | None:
        """Return the Laurent form if ``self`` lies in Z[v, 1/v], else ``None``."""
        if self.num.is_zero():
            return LaurentPolynomial()
        den_coeffs = self.den.coeffs()
        shift = len(den_coeffs) - 1
        if any(c != 0 for c in den_coeffs[:-1]):
            return None
        terms = {}
        for k, c in enumerate(self.num.coeffs()):
            if c == 0:
                continue
            if c.q != 1:
                return None
            terms[k - shift] = int(c.p)
        return LaurentPolynomial(terms)

    def to_laurent(self) -> LaurentPolynomial:
        out = self.laurent_or_none()
        if out is None:
            raise IntegralityError(f"{self} is not in Z[v, 1/v]")
        return out

    def evaluate(self, point, target: "Field"):
        """Evaluate at ``point`` inside ``target`` with coefficients mapped in."""
        num = _eval_poly(self.num, point, target)
        den = _eval_poly(self.den, point, target)
        if target.is_zero(den):
            raise SpecializationPoleError(f"denominator of {self} vanishes at {target.text(point)}")
        return num / den

    def __str__(self):
        num = render_terms(_frac_items(self.num), "v")
        if self.den.is_one():
            return num
        return f"({num})/({render_terms(_frac_items(self.den), 'v')})"

    __repr__ = __str__

    @classmethod
    def parse(cls, text: str) -> "RationalFunction":
        text = text.strip()
        m = re.fullmatch(r"\((.*)\)\s*/\s*\((.*)\)", text)
        if m:
            num, den = m.group(1), m.group(2)
        else:
            num, den = text, "1"
        return cls(_poly_from_text(num), _poly_from_text(den))


def _frac_items(p: flint.fmpq_poly):
    for k, c in enumerate(p.coeffs()):
        if c != 0:
            yield k, Fraction(int(c.p), int(c.q))


def _poly_from_text(text: str) -> flint.fmpq_poly:
    terms = list(_parse_terms(text, "v", integral=False))
    if any(k < 0 for k, _ in terms):
        raise ValueError("negative exponent inside a rational-function numerator/denominator")
    deg = max((k for k, _ in terms), default=0)
    coeffs = [Fraction(0)] * (deg + 1)
    for k, c in terms:
        coeffs[k] += c
    return flint.fmpq_poly([flint.fmpq(c.numerator, c.denominator) for c in coeffs])


def _eval_poly(p: flint.fmpq_poly, point, target: "Field"):
    acc = target.zero
    for c in reversed(p.coeffs()):
        acc = acc * point + target.from_fraction(Fraction(int(c.p), int(c.q)))
    return acc


ZERO_RF = RationalFunction(flint.fmpq_poly([]), _canonical=True)
ONE_RF = RationalFunction(flint.fmpq_poly([1]), _canonical=True)


# --------------------------------------------------------------------------
# Quantum integers and cyclotomic polynomials


def quantum_integer(k: int, xi):
    """``[k]_xi = xi + xi^3 + ... + xi^(2k-1)``, extended by ``-xi^(2k)[-k]`` for k < 0."""
    one = xi / xi
    if k >= 0:
        total = one - one
        term = xi
        sq = xi * xi
        for _ in range(k):
            total = total + term
            term = term * sq
        return total
    inv_sq = one / (xi * xi)
    return -(inv_sq ** (-k)) * quantum_integer(-k, xi)


def cyclotomic_polynomial(m: int) -> flint.fmpz_poly:
    if m < 1:
        raise ValueError("cyclotomic index must be positive")
    return flint.fmpz_poly.cyclotomic(m)


# --------------------------------------------------------------------------
# Fields


class Field:
    """Common interface of the generic field and the specialization targets."""

    kind: str
    characteristic: int = 0

    @property
    def zero(self):
        return self.element(0)

    @property
    def one(self):
        return self.element(1)

    def element(self, x):
        raise NotImplementedError

    def from_fraction(self, x: Fraction):
        return self.element(x.numerator) / self.element(x.denominator) if x.denominator != 1 else self.element(x.numerator)

    def is_zero(self, x) -> bool:
        return x == 0

    def text(self, x) -> str:
        return str(x)

    def describe(self) -> dict:
        raise NotImplementedError

    def quantum_characteristic(self):
        raise NotImplementedError


@dataclass(frozen=True)
class RationalFunctionField(Field):
    """The generic field Q(v) with ``xi = v``."""

    kind: str = field(default="generic", init=False)

    def element(self, x):
        if isinstance(x, RationalFunction):
            return x
        return RationalFunction.constant(x)

    @property
    def xi(self):
        return RationalFunction.v()

    @property
    def zero(self):
        return ZERO_RF

    @property
    def one(self):
        return ONE_RF

    def from_fraction(self, x: Fraction):
        return RationalFunction.constant(x)

    def is_zero(self, x) -> bool:
        return x.is_zero()

    def describe(self) -> dict:
        return {"field": "Q(v)"}

    def quantum_characteristic(self):
        return INFINITY

    def __str__(self):
        return "Q(v)"


@dataclass(frozen=True)
class Rationals(Field):
    xi_value: Fraction = Fraction(1)
    kind: str = field(default="q", init=False)

    def __post_init__(self):
        if self.xi_value == 0:
            raise ValueError("xi must be invertible")

    def element(self, x):
        return Fraction(x)

    def from_fraction(self, x):
        return Fraction(x)

    @property
    def xi(self):
        return Fraction(self.xi_value)

    def text(self, x) -> str:
        return str(Fraction(x))

    def describe(self) -> dict:
        return {"field": "q", "xi": str(self.xi_value)}

    def quantum_characteristic(self):
        # Over Q, [k]_xi = 0 forces xi^(2k) = 1 with xi^2 != 1, impossible for rational xi.
        return INFINITY

    def __str__(self):
        return f"Q (xi={self.xi_value})"


@dataclass(frozen=True)
class PrimeField(Field):
    p: int
    xi_value: int = 1
    kind: str = field(default="fp", init=False)

    def __post_init__(self):
        if self.p < 2 or any(self.p % d == 0 for d in range(2, int(self.p ** 0.5) + 1)):
            raise ValueError(f"{self.p} is not prime")
        if self.xi_value % self.p == 0:
            raise ValueError("xi must be invertible")

    @property
    def characteristic(self):
        return self.p

    def element(self, x):
        return flint.nmod(int(x), self.p)

    def from_fraction(self, x: Fraction):
        if x.denominator % self.p == 0:
            raise CoefficientReductionError(f"characteristic {self.p} divides the denominator of {x}")
        return flint.nmod(x.numerator, self.p) / flint.nmod(x.denominator, self.p)

    @property
    def xi(self):
        return flint.nmod(self.xi_value, self.p)

    def text(self, x) -> str:
        return str(int(x))

    def describe(self) -> dict:
        return {"field": "fp", "p": self.p, "xi": str(self.xi_value % self.p)}

    def quantum_characteristic(self):
        xi = self.xi
        for e in range(2, 2 * self.p + 1):
            if quantum_integer(e, xi) == 0:
                return e
        return INFINITY

    def __str__(self):
        return f"F_{self.p} (xi={self.xi_value % self.p})"


class CycloElement:
    """Element of Q[x]/Phi_m(x), stored reduced modulo Phi_m."""

    __slots__ = ("poly", "field")

    def __init__(self, poly: flint.fmpq_poly, fld: "CyclotomicField"):
        self.poly = poly % fld.modulus if poly.degree() >= fld.modulus.degree() else poly
        self.field = fld

    def _coerce(self, other):
        if isinstance(other, CycloElement):
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.element(other)
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.poly + other.poly, self.field)

    __radd__ = __add__

    def __neg__(self):
        return CycloElement(-self.poly, self.field)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.poly - other.poly, self.field)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return CycloElement(self.poly * other.poly, self.field)

    __rmul__ = __mul__

    def inverse(self) -> "CycloElement":
        if self.poly.is_zero():
            raise ZeroDivisionError("division by zero in cyclotomic field")
        g, s, _ = self.poly.xgcd(self.field.modulus)
        # Phi_m is irreducible, so g is a nonzero constant
        return CycloElement(s / g.leading_coefficient(), self.field)

    def __truediv__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = self.field.one
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.poly == other.poly

    def __hash__(self):
        return hash(("cyclo", self.field.m, _poly_key(self.poly)))

    def __str__(self):
        return render_terms(_frac_items(self.poly), "x")

    __repr__ = __str__


@dataclass(frozen=True)
class CyclotomicField(Field):
    """Q[x]/Phi_m(x) with ``xi = x``."""

    m: int
    kind: str = field(default="cyclo", init=False)

    def __post_init__(self):
        if self.m < 1:
            raise ValueError("cyclotomic index must be positive")

    @cached_property
    def modulus(self) -> flint.fmpq_poly:
        return flint.fmpq_poly(cyclotomic_polynomial(self.m).coeffs())

    def element(self, x):
        if isinstance(x, Fraction):
            return self.from_fraction(x)
        return CycloElement(flint.fmpq_poly([int(x)]), self)

    def from_fraction(self, x: Fraction):
        return CycloElement(flint.fmpq_poly([flint.fmpq(x.numerator, x.denominator)]), self)

    @property
    def xi(self):
        return CycloElement(flint.fmpq_poly([0, 1]), self)

    def is_zero(self, x) -> bool:
        return x.poly.is_zero()

    def describe(self) -> dict:
        return {"field": "cyclo", "m": self.m, "xi": "x"}

    def quantum_characteristic(self):
        xi = self.xi
        for e in range(2, 2 * self.m + 2):
            if self.is_zero(quantum_integer(e, xi)):
                return e
        return INFINITY

    def __str__(self):
        return f"Q[x]/Phi_{self.m}"


def specialize(f, target: Field, point=None):
    """Image of ``f`` under v -> xi (or v -> ``point``) in ``target``."""
    point = target.xi if point is None else point
    if isinstance(f, LaurentPolynomial):
        try:
            return f.evaluate(point, target.one)
        except ZeroDivisionError:
            raise SpecializationPoleError(f"{f} has a pole at {target.text(point)}") from None
    if isinstance(f, RationalFunction):
        return f.evaluate(point, target)
    raise TypeError(f"cannot specialize {type(f).__name__}")


def format_e(e) -> str | int:
    return "inf" if e == INFINITY else int(e)
