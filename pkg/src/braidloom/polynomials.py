"""Exact Laurent polynomials in one and two variables.

Integer coefficients suffice for every quantity produced here (bracket and
skein computations never divide); zero coefficients are never stored, so
equality of values is equality of the canonical term tuples.
"""

from __future__ import annotations

from dataclasses import dataclass

__all__ = ["OneVarLaurent", "TwoVarLaurent"]


def _merged(terms):
    acc = {}
    for exp, coeff in terms:
        c = acc.get(exp, 0) + coeff
        if c:
            acc[exp] = c
        elif exp in acc:
            del acc[exp]
    return tuple(sorted(acc.items()))


def _term_text(coeff: int, factors: str) -> str:
    if not factors:
        return str(coeff)
    if coeff == 1:
        return factors
    if coeff == -1:
        return "-" + factors
    return f"{coeff} {factors}"


def _join(parts: list[str]) -> str:
    if not parts:
        return "0"
    out = parts[0]
    for p in parts[1:]:
        out += " - " + p[1:] if p.startswith("-") else " + " + p
    return out


@dataclass(frozen=True)
class OneVarLaurent:
    """Laurent polynomial in one variable, terms sorted by exponent."""

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, d: dict[int, int]) -> "OneVarLaurent":
        return cls(_merged(d.items()))

    @classmethod
    def monomial(cls, exp: int, coeff: int = 1) -> "OneVarLaurent":
        return cls.from_dict({exp: coeff})

    @classmethod
    def one(cls) -> "OneVarLaurent":
        return cls.monomial(0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "OneVarLaurent") -> "OneVarLaurent":
        return OneVarLaurent(_merged(self.terms + other.terms))

    def __sub__(self, other: "OneVarLaurent") -> "OneVarLaurent":
        return self + (-other)

    def __neg__(self) -> "OneVarLaurent":
        return OneVarLaurent(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return OneVarLaurent(_merged((e, c * other) for e, c in self.terms))
        return OneVarLaurent(
            _merged(
                (e1 + e2, c1 * c2)
                for e1, c1 in self.terms
                for e2, c2 in other.terms
            )
        )

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "OneVarLaurent":
        if k < 0:
            raise ValueError("negative powers are not defined here")
        out = OneVarLaurent.one()
        for _ in range(k):
            out = out * self
        return out

    def coeff(self, exp: int) -> int:
        return dict(self.terms).get(exp, 0)

    def exponents(self) -> tuple[int, ...]:
        return tuple(e for e, _ in self.terms)

    def text(self, var: str = "A") -> str:
        parts = []
        for e, c in self.terms:
            factors = "" if e == 0 else (var if e == 1 else f"{var}^{e}")
            parts.append(_term_text(c, factors))
        return _join(parts)

    def __str__(self) -> str:
        return self.text()


@dataclass(frozen=True)
class TwoVarLaurent:
    """Laurent polynomial in two variables, terms sorted by exponent pair."""

    terms: tuple[tuple[tuple[int, int], int], ...] = ()

    @classmethod
    def from_dict(cls, d: dict[tuple[int, int], int]) -> "TwoVarLaurent":
        return cls(_merged(d.items()))

    @classmethod
    def monomial(cls, a: int, b: int, coeff: int = 1) -> "TwoVarLaurent":
        return cls.from_dict({(a, b): coeff})

    @classmethod
    def one(cls) -> "TwoVarLaurent":
        return cls.monomial(0, 0)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "TwoVarLaurent") -> "TwoVarLaurent":
        return TwoVarLaurent(_merged(self.terms + other.terms))

    def __sub__(self, other: "TwoVarLaurent") -> "TwoVarLaurent":
        return self + (-other)

    def __neg__(self) -> "TwoVarLaurent":
        return TwoVarLaurent(tuple((e, -c) for e, c in self.terms))

    def __mul__(self, other):
        if isinstance(other, int):
            return TwoVarLaurent(_merged((e, c * other) for e, c in self.terms))
        return TwoVarLaurent(
            _merged(
                ((e1[0] + e2[0], e1[1] + e2[1]), c1 * c2)
                for e1, c1 in self.terms
                for e2, c2 in other.terms
            )
        )

    __rmul__ = __mul__

    def coeff(self, a: int, b: int) -> int:
        return dict(self.terms).get((a, b), 0)

    def first_exponents(self) -> tuple[int, ...]:
        return tuple(sorted({e[0] for e, _ in self.terms}))

    def second_exponents(self) -> tuple[int, ...]:
        return tuple(sorted({e[1] for e, _ in self.terms}))

    def text(self, first: str = "v", second: str = "z") -> str:
        parts = []
        for (a, b), c in self.terms:
            factors = []
            if a:
                factors.append(first if a == 1 else f"{first}^{a}")
            if b:
                factors.append(second if b == 1 else f"{second}^{b}")
            parts.append(_term_text(c, " ".join(factors)))
        return _join(parts)

    def __str__(self) -> str:
        return self.text()
