"""Exact scalars: reduced fractions of integer polynomials in one indeterminate t.

The deformation parameters are fixed powers of t, q = t^a and z = t^b with
b*N = -a, so that z^N = q^{-1} holds identically.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from flint import fmpz_poly

_ONE = fmpz_poly([1])
_ZERO = fmpz_poly([])


def _poly_str(p: fmpz_poly, var: str = "t") -> str:
    coeffs = p.coeffs()
    parts = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = int(coeffs[k])
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    if not parts:
        return "0"
    head_sign, head = parts[0]
    out = ("-" if head_sign == "-" else "") + head
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class RatFunc:
    """An element of Q(t) kept as num/den with gcd 1 and den of positive leading coefficient."""

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=None, reduced: bool = False):
        if not isinstance(num, fmpz_poly):
            num = fmpz_poly([num]) if num else fmpz_poly([])
        if den is None:
            self.num, self.den = num, _ONE
            return
        if not isinstance(den, fmpz_poly):
            den = fmpz_poly([den])
        if den.is_zero():
            raise ZeroDivisionError("zero denominator")
        if not reduced:
            if num.is_zero():
                num, den = _ZERO, _ONE
            elif not den.is_one():
                g = num.gcd(den)
                if not g.is_one():
                    num, den = num // g, den // g
                if den.leading_coefficient() < 0:
                    num, den = -num, -den
        self.num, self.den = num, den

    @classmethod
    def monomial(cls, coeff: int, exp: int) -> "RatFunc":
        """coeff * t^exp for any integer exponent."""
        if coeff == 0:
            return cls()
        if exp >= 0:
            return cls(fmpz_poly([0] * exp + [coeff]), None)
        return cls(fmpz_poly([coeff]), fmpz_poly([0] * (-exp) + [1]), reduced=True)

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        if isinstance(x, int):
            return cls(x)
        raise TypeError(f"cannot coerce {type(x).__name__} to RatFunc")

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self) -> bool:
        return not self.num.is_zero()

    def __add__(self, other) -> "RatFunc":
        if not isinstance(other, RatFunc):
            other = RatFunc.coerce(other)
        if self.den == other.den:
            if self.den.is_one():
                return RatFunc(self.num + other.num, None)
            return RatFunc(self.num + other.num, self.den)
        return RatFunc(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den, reduced=True)

    def __sub__(self, other) -> "RatFunc":
        if not isinstance(other, RatFunc):
            other = RatFunc.coerce(other)
        return self + (-other)

    def __rsub__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        if not isinstance(other, RatFunc):
            if isinstance(other, int):
                return RatFunc(self.num * other, self.den) if other else RatFunc()
            return NotImplemented
        if self.den.is_one() and other.den.is_one():
            return RatFunc(self.num * other.num, None)
        return RatFunc(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def inverse(self) -> "RatFunc":
        if self.num.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return RatFunc(self.den, self.num)

    def __truediv__(self, other) -> "RatFunc":
        return self * RatFunc.coerce(other).inverse()

    def __rtruediv__(self, other) -> "RatFunc":
        return RatFunc.coerce(other) * self.inverse()

    def __pow__(self, k: int) -> "RatFunc":
        if k < 0:
            return self.inverse() ** (-k)
        return RatFunc(self.num ** k, self.den ** k, reduced=True)

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = RatFunc(other)
        if not isinstance(other, RatFunc):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((tuple(int(c) for c in self.num.coeffs()), tuple(int(c) for c in self.den.coeffs())))

    def is_one(self) -> bool:
        return self.num.is_one() and self.den.is_one()

    def is_integer(self) -> bool:
        return self.den.is_one() and self.num.degree() <= 0

    def __str__(self) -> str:
        n = _poly_str(self.num)
        if self.den.is_one():
            return n
        d = _poly_str(self.den)
        if len([c for c in self.num.coeffs() if c]) > 1:
            n = f"({n})"
        if len([c for c in self.den.coeffs() if c]) > 1 or "*" in d:
            d = f"({d})"
        return f"{n} / {d}"

    def __repr__(self) -> str:
        return f"RatFunc({self})"

    def needs_parens(self) -> bool:
        """True when the printed form is not a single signed product."""
        return not self.den.is_one() or len([c for c in self.num.coeffs() if c]) > 1

    def in_qz(self, ctx: "QZContext") -> str:
        """Printed as z^r * P(q) / Q(q) with 0 <= r < N, falling back to t when that is impossible."""
        return self._qz(ctx)[0]

    def qz_needs_parens(self, ctx: "QZContext") -> bool:
        return self._qz(ctx)[1]

    def _qz(self, ctx: "QZContext"):
        if self.num.is_zero():
            return "0", False
        num = _exponents(self.num)
        den = _exponents(self.den)
        a, b = ctx.q_as_power, ctx.z_as_power
        if b != 1 or a != -ctx.n:
            return str(self), self.needs_parens()
        n = ctx.n
        if len({k % n for k in num}) > 1 or len({k % n for k in den}) > 1:
            return str(self), self.needs_parens()
        dmin = min(den)
        # t^k = z^r q^{-s} with k = s*N + r; pull z^r out front, the rest are powers of q
        shift = min(num) - dmin
        r = shift % n
        qnum = {-(k - dmin - r) // n: c for k, c in num.items()}
        qden = {-(k - dmin) // n: c for k, c in den.items()}
        lo = min(qden)
        qden = {k - lo: c for k, c in qden.items()}
        qnum = {k - lo: c for k, c in qnum.items()}
        if qden[max(qden)] < 0:
            qden = {k: -c for k, c in qden.items()}
            qnum = {k: -c for k, c in qnum.items()}
        zpart = "" if r == 0 else ("z" if r == 1 else f"z^{r}")
        if len(qnum) == 1:
            (k, c), = qnum.items()
            factors = [str(abs(c))] if abs(c) != 1 else []
            if zpart:
                factors.append(zpart)
            if k:
                factors.append("q" if k == 1 else f"q^{k}")
            top = ("-" if c < 0 else "") + ("*".join(factors) or "1")
        else:
            body = _laurent_str(qnum, "q")
            top = f"{zpart}*({body})" if zpart else body
        if qden == {0: 1}:
            return top, len(qnum) > 1 and not zpart
        if len(qnum) > 1 and not zpart:
            top = f"({top})"
        den_s = _laurent_str(qden, "q")
        if len(qden) > 1 or "*" in den_s:
            den_s = f"({den_s})"
        return f"{top} / {den_s}", True


def _exponents(p: fmpz_poly):
    return {k: int(c) for k, c in enumerate(p.coeffs()) if c}


def _laurent_str(terms, var: str) -> str:
    parts = []
    for k in sorted(terms, reverse=True):
        c = terms[k]
        if k == 0:
            mono = ""
        elif k == 1:
            mono = var
        else:
            mono = f"{var}^{k}"
        a = abs(c)
        body = mono if (a == 1 and mono) else (f"{a}*{mono}" if mono else str(a))
        parts.append(("-" if c < 0 else "+", body))
    out = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


ZERO = RatFunc()
ONE = RatFunc(1)


@dataclass(frozen=True)
class QZContext:
    """Matrix size N together with the exponents realizing q = t^a and z = t^b."""

    n: int
    q_as_power: int = 0
    z_as_power: int = 1

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("matrix size N must be at least 2")
        if self.q_as_power == 0:
            object.__setattr__(self, "q_as_power", -self.n * self.z_as_power)
        if self.z_as_power * self.n != -self.q_as_power:
            raise ValueError("exponents must satisfy z^N = q^-1")

    @cached_property
    def q(self) -> RatFunc:
        return RatFunc.monomial(1, self.q_as_power)

    @cached_property
    def z(self) -> RatFunc:
        return RatFunc.monomial(1, self.z_as_power)

    def qpow(self, k: int) -> RatFunc:
        return RatFunc.monomial(1, self.q_as_power * k)

    def zpow(self, k: int) -> RatFunc:
        return RatFunc.monomial(1, self.z_as_power * k)

    @cached_property
    def qdiff(self) -> RatFunc:
        """q - q^{-1}."""
        return self.q - self.q.inverse()

    def gens(self):
        """Generator index pairs (i, j), 1-based, in row-major order."""
        return [(i, j) for i in range(1, self.n + 1) for j in range(1, self.n + 1)]


def scalar_q(ctx: QZContext) -> RatFunc:
    return ctx.q


def scalar_z(ctx: QZContext) -> RatFunc:
    return ctx.z
