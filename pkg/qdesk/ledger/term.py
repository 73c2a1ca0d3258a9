from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import attr
import sympy as sp

from qdesk.shared.errors import InvalidInputError

# factor name -> rendered base; order fixes the canonical product order
FACTORS: Dict[str, str] = {
    "R": "R",
    "N": "N",
    "k": "k",
    "logk": "log(k)",
    "logk1": "log(k+1)",
    "m": "m",
    "s": "s",
    "t": "t",
    "logN": "log(N)",
    "C": "C",
}
FACTOR_ORDER = list(FACTORS)
VARIABLES = ("N", "k", "m", "s", "t", "R", "C")

SYMBOLS = {name: sp.Symbol(name, positive=True) for name in VARIABLES}


def _sympy_factor(name: str, base: int) -> sp.Expr:
    if name == "logN":
        return sp.log(SYMBOLS["N"], base)
    if name == "logk":
        return sp.log(SYMBOLS["k"], base)
    if name == "logk1":
        return sp.log(SYMBOLS["k"] + 1, base)
    return SYMBOLS[name]


def _render_power(name: str, power: Fraction) -> str:
    base = FACTORS[name]
    if power == 1:
        return base
    if name in ("logN", "logk", "logk1"):
        return f"log^{power}({base[4:-1]})"
    if power == Fraction(1, 2):
        return f"sqrt({base})"
    return f"{base}^{power}"


def _powers(values: Dict[str, object]) -> Tuple[Tuple[str, Fraction], ...]:
    unknown = set(values) - set(FACTORS)
    if unknown:
        raise InvalidInputError(f"Unknown complexity factors: {sorted(unknown)}")
    return tuple(
        (name, Fraction(values[name])) for name in FACTOR_ORDER if name in values and Fraction(values[name]) != 0
    )


@attr.s(frozen=True)
class Monomial(object):
    """
    coefficient * prod(factor ** power), factors kept in canonical order.
    """

    powers: Tuple[Tuple[str, Fraction], ...] = attr.ib(default=())
    coefficient: Fraction = attr.ib(default=Fraction(1), converter=Fraction)

    @classmethod
    def of(cls, coefficient=1, **powers) -> "Monomial":
        return cls(powers=_powers(powers), coefficient=coefficient)

    @property
    def is_unit(self) -> bool:
        return not self.powers and self.coefficient == 1

    def __mul__(self, other: "Monomial") -> "Monomial":
        merged: Dict[str, Fraction] = dict(self.powers)
        for name, power in other.powers:
            merged[name] = merged.get(name, Fraction(0)) + power
        return Monomial(powers=_powers(merged), coefficient=self.coefficient * other.coefficient)

    def render(self) -> str:
        parts = [_render_power(name, power) for name, power in self.powers]
        if self.coefficient != 1 or not parts:
            parts.insert(0, str(self.coefficient))
        return "*".join(parts)

    def to_sympy(self, base: int = 2) -> sp.Expr:
        expr = sp.Rational(self.coefficient.numerator, self.coefficient.denominator)
        for name, power in self.powers:
            expr = expr * _sympy_factor(name, base) ** sp.Rational(power.numerator, power.denominator)
        return expr


ONE_MONOMIAL = Monomial()


def _collect(monomials: List[Monomial]) -> Tuple[Monomial, ...]:
    """
    Sums like monomials the O-notation way: identical power sets keep the larger coefficient, first position wins.
    """
    order: List[Tuple] = []
    best: Dict[Tuple, Monomial] = {}
    for mono in monomials:
        key = mono.powers
        if key not in best:
            order.append(key)
            best[key] = mono
        elif mono.coefficient > best[key].coefficient:
            best[key] = mono
    return tuple(best[key] for key in order)


@attr.s(frozen=True)
class ComplexityTerm(object):
    """
    Asymptotic cost expression: factor * (summand + summand + ...), unit constants unless stated.
    Summands keep their composition order; products inside a summand use the canonical factor order.
    """

    summands: Tuple[Monomial, ...] = attr.ib(converter=tuple)
    factor: Monomial = attr.ib(default=ONE_MONOMIAL)

    @classmethod
    def of(cls, *monomials: Monomial) -> "ComplexityTerm":
        return cls(summands=_collect(list(monomials)))

    @classmethod
    def primitive(cls, coefficient=1, **powers) -> "ComplexityTerm":
        return cls(summands=(Monomial.of(coefficient, **powers),))

    def expanded(self) -> "ComplexityTerm":
        return ComplexityTerm(summands=_collect([self.factor * s for s in self.summands]))

    def drop(self, **powers) -> "ComplexityTerm":
        target = _powers(powers)
        kept = [s for s in self.summands if s.powers != target]
        return ComplexityTerm(summands=tuple(kept), factor=self.factor)

    def __add__(self, other: "ComplexityTerm") -> "ComplexityTerm":
        if not isinstance(other, ComplexityTerm):
            return NotImplemented
        left = self if self.factor.is_unit else self.expanded()
        right = other if other.factor.is_unit else other.expanded()
        return ComplexityTerm(summands=_collect(list(left.summands) + list(right.summands)))

    def __mul__(self, other: "ComplexityTerm") -> "ComplexityTerm":
        if not isinstance(other, ComplexityTerm):
            return NotImplemented
        if len(self.summands) == 1 and self.factor.is_unit:
            return ComplexityTerm(summands=other.summands, factor=self.summands[0] * other.factor)
        if len(other.summands) == 1 and other.factor.is_unit:
            return ComplexityTerm(summands=self.summands, factor=other.summands[0] * self.factor)
        left, right = self.expanded(), other.expanded()
        return ComplexityTerm(summands=_collect([a * b for a in left.summands for b in right.summands]))

    @property
    def expression(self) -> str:
        return self.render()

    def render(self) -> str:
        if not self.summands:
            return "0"
        if self.factor.is_unit:
            return " + ".join(s.render() for s in self.summands)
        if len(self.summands) == 1:
            return (self.factor * self.summands[0]).render()
        inner = " + ".join(s.render() for s in self.summands)
        return f"{self.factor.render()}*({inner})"

    def __str__(self) -> str:
        return self.render()

    def to_sympy(self, base: int = 2) -> sp.Expr:
        total = sum((s.to_sympy(base) for s in self.summands), sp.Integer(0))
        return self.factor.to_sympy(base) * total

    def variables(self) -> List[str]:
        names = set()
        for mono in (self.factor,) + self.summands:
            for name, _ in mono.powers:
                names.add({"logN": "N", "logk": "k", "logk1": "k"}.get(name, name))
        return sorted(names)

    def evaluate(self, base: int = 2, **values: Optional[float]) -> float:
        """
        Numeric value at the given arguments.
        :param base: Logarithm base
        :param values: N, k, m, s, t, R, C as needed by the expression
        :return: Evaluated cost
        """
        missing = [name for name in self.variables() if values.get(name) is None]
        if missing:
            raise InvalidInputError(f"Missing values for {missing} in {self.render()}")
        expr = self.to_sympy(base)
        subs = {SYMBOLS[name]: values[name] for name in self.variables()}
        return float(expr.subs(subs).evalf())

    def to_json(self) -> Dict:
        return {"expression": self.render()}


def term(coefficient=1, **powers) -> ComplexityTerm:
    return ComplexityTerm.primitive(coefficient, **powers)


ONE = term()
N = term(N=1)
LOG_N = term(logN=1)
LOG2_N = term(logN=2)
LOG3_N = term(logN=3)
SQRT_N = term(N=Fraction(1, 2))
N2 = term(N=2)
N4 = term(N=4)
N_LOG_N = term(N=1, logN=1)
N_LOG2_N = term(N=1, logN=2)
K = term(k=1)
K2 = term(k=2)
K_LOGK_LOGN = term(k=1, logk=1, logN=1)
K_LOGK1_LOGN = term(k=1, logk1=1, logN=1)
M2 = term(m=2)
S2_T_LOGN = term(s=2, t=1, logN=1)
R_N_LOGN = term(R=1, N=1, logN=1)
R_N_LOG2N = term(R=1, N=1, logN=2)
C_EPS = term(C=1)
