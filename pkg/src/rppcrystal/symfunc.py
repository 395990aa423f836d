"""Exact sparse polynomials and the symmetric-function side of the LR rule.

Exponent vectors list the ``m`` x-exponents first, then the t-exponents.
Coefficients are Python ints, so nothing overflows.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .errors import NotSymmetric
from .reading import reading_word
from .shapes import Partition, SkewShape, skew, subpartitions
from .tableaux import ceq, enumerate_elegant, enumerate_rpp, enumerate_ssyt, rpp_weight
from .word_crystal import is_lattice

Exponent = tuple[int, ...]


@dataclass(frozen=True)
class SparsePoly:
    nx: int
    nt: int = 0
    terms: Mapping[Exponent, int] = field(default_factory=dict)

    def __post_init__(self):
        width = self.nx + self.nt
        clean = {}
        for exp, coeff in self.terms.items():
            exp = tuple(exp)
            if len(exp) != width:
                raise ValueError(f"exponent {exp} has length {len(exp)}, expected {width}")
            if coeff:
                clean[exp] = clean.get(exp, 0) + coeff
        object.__setattr__(self, "terms", {e: c for e, c in clean.items() if c})

    @classmethod
    def from_monomials(cls, nx: int, nt: int, exponents: Iterable[Exponent]) -> SparsePoly:
        return cls(nx, nt, Counter(tuple(e) for e in exponents))

    @classmethod
    def one(cls, nx: int, nt: int = 0) -> SparsePoly:
        return cls(nx, nt, {(0,) * (nx + nt): 1})

    def _check(self, other: SparsePoly) -> None:
        if (self.nx, self.nt) != (other.nx, other.nt):
            raise ValueError("polynomials live in different variable sets")

    def __add__(self, other: SparsePoly) -> SparsePoly:
        self._check(other)
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return SparsePoly(self.nx, self.nt, out)

    def __neg__(self) -> SparsePoly:
        return SparsePoly(self.nx, self.nt, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: SparsePoly) -> SparsePoly:
        return self + (-other)

    def __mul__(self, other) -> SparsePoly:
        if isinstance(other, int):
            return SparsePoly(self.nx, self.nt, {e: c * other for e, c in self.terms.items()})
        self._check(other)
        out: dict[Exponent, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return SparsePoly(self.nx, self.nt, out)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, SparsePoly):
            return NotImplemented
        return (self.nx, self.nt) == (other.nx, other.nt) and dict(self.terms) == dict(other.terms)

    def __hash__(self):
        return hash((self.nx, self.nt, frozenset(self.terms.items())))

    def is_zero(self) -> bool:
        return not self.terms

    def with_t(self, nt: int) -> SparsePoly:
        """Embed an x-only polynomial into a ring with ``nt`` t-variables."""
        if self.nt:
            raise ValueError("polynomial already has t-variables")
        return SparsePoly(self.nx, nt, {e + (0,) * nt: c for e, c in self.terms.items()})

    def set_t_to_one(self) -> SparsePoly:
        out: dict[Exponent, int] = {}
        for e, c in self.terms.items():
            key = e[: self.nx]
            out[key] = out.get(key, 0) + c
        return SparsePoly(self.nx, 0, out)

    def x_degree_part(self, degree: int) -> SparsePoly:
        return SparsePoly(
            self.nx, self.nt,
            {e: c for e, c in self.terms.items() if sum(e[: self.nx]) == degree},
        )

    def x_degree(self) -> int:
        return max((sum(e[: self.nx]) for e in self.terms), default=-1)

    def swap_x(self, j: int) -> SparsePoly:
        """Exchange ``x_j`` and ``x_{j+1}`` (1-based)."""
        out = {}
        for e, c in self.terms.items():
            e = list(e)
            e[j - 1], e[j] = e[j], e[j - 1]
            out[tuple(e)] = c
        return SparsePoly(self.nx, self.nt, out)

    def leading_exponent(self) -> Exponent:
        """Graded-lex greatest exponent (total degree first)."""
        return max(self.terms, key=lambda e: (sum(e), e))

    def sorted_terms(self) -> list[tuple[Exponent, int]]:
        return sorted(self.terms.items(), key=lambda item: (sum(item[0]), item[0]), reverse=True)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        names = [f"x{k}" for k in range(1, self.nx + 1)] + [f"t{k}" for k in range(1, self.nt + 1)]
        parts = []
        for e, c in self.sorted_terms():
            factors = [n if a == 1 else f"{n}^{a}" for n, a in zip(names, e) if a]
            parts.append(" * ".join([str(c)] + factors))
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self) -> dict:
        return {
            "nx": self.nx,
            "nt": self.nt,
            "terms": [{"exponent": list(e), "coefficient": c} for e, c in self.sorted_terms()],
        }


@lru_cache(maxsize=None)
def schur(nu: tuple[int, ...], m: int) -> SparsePoly:
    """Schur polynomial in ``m`` variables as a generating function of SSYT."""
    nu = Partition(nu)
    if len(nu) > m:
        return SparsePoly(m)
    return skew_schur(skew(nu), m)


def skew_schur(shape: SkewShape, m: int) -> SparsePoly:
    return SparsePoly.from_monomials(
        m, 0, (_content(t.entries.values(), m) for t in enumerate_ssyt(shape, m))
    )


def _content(values: Iterable[int], m: int) -> Exponent:
    out = [0] * m
    for v in values:
        out[v - 1] += 1
    return tuple(out)


def g_poly(shape: SkewShape, m: int) -> SparsePoly:
    """Dual stable Grothendieck polynomial: sum of column-content monomials over all RPPs."""
    return SparsePoly.from_monomials(m, 0, (rpp_weight(t) for t in enumerate_rpp(shape, m)))


def t_count(shape: SkewShape) -> int:
    return max(shape.n_rows - 1, 0)


def g_refined(shape: SkewShape, m: int) -> SparsePoly:
    k = t_count(shape)

    def exps():
        for t in enumerate_rpp(shape, m):
            c = ceq(t)
            yield rpp_weight(t) + c + (0,) * (k - len(c))

    return SparsePoly.from_monomials(m, k, exps())


def expand_in_schur(p: SparsePoly) -> dict[Partition, int]:
    """Schur expansion by repeatedly stripping the leading term."""
    if p.nt:
        raise ValueError("expand_in_schur expects a polynomial without t-variables")
    out: dict[Partition, int] = {}
    m = p.nx
    while not p.is_zero():
        lead = p.leading_exponent()
        if any(a < b for a, b in zip(lead, lead[1:])):
            raise NotSymmetric(f"leading exponent {lead} is not a partition")
        nu = Partition(lead)
        c = p.terms[lead]
        out[nu] = c
        p = p - schur(tuple(nu), m) * c
    return out


def h_coeffs(shape: SkewShape, m: int) -> dict[Partition, int]:
    """Count RPPs with lattice reading word, by weight."""
    out: Counter = Counter()
    for t in enumerate_rpp(shape, m):
        if is_lattice(reading_word(t)):
            out[Partition(rpp_weight(t))] += 1
    return dict(out)


def h_coeffs_refined(shape: SkewShape, m: int) -> dict[tuple[Partition, tuple[int, ...]], int]:
    out: Counter = Counter()
    for t in enumerate_rpp(shape, m):
        if is_lattice(reading_word(t)):
            out[(Partition(rpp_weight(t)), ceq(t))] += 1
    return dict(out)


def refined_from_coeffs(
    coeffs: Mapping[tuple[Partition, tuple[int, ...]], int], m: int, nt: int
) -> SparsePoly:
    """Sum of ``count * t^alpha * s_nu`` over the refined coefficient table."""
    out: dict[Exponent, int] = {}
    for (nu, alpha), count in coeffs.items():
        alpha = tuple(alpha) + (0,) * (nt - len(alpha))
        for e, c in schur(tuple(nu), m).terms.items():
            key = e + alpha
            out[key] = out.get(key, 0) + count * c
    return SparsePoly(m, nt, out)


def marginalize(coeffs: Mapping[tuple[Partition, tuple[int, ...]], int]) -> dict[Partition, int]:
    out: Counter = Counter()
    for (nu, _), count in coeffs.items():
        out[nu] += count
    return dict(out)


def lr_classical(shape: SkewShape) -> dict[Partition, int]:
    """Classical LR coefficients: SSYT with lattice reading word, by content."""
    n = max(shape.size, 1)
    out: Counter = Counter()
    for t in enumerate_ssyt(shape, n):
        if is_lattice(reading_word(t)):
            out[Partition(_content(t.entries.values(), n))] += 1
    return dict(out)


def elegant_count(outer, nu) -> int:
    outer, nu = Partition(outer), Partition(nu)
    if len(nu) > len(outer) or not outer.contains(nu):
        return 0
    return sum(1 for _ in enumerate_elegant(outer, nu))


def elegant_table(outer, m: int) -> dict[Partition, int]:
    """Nonzero elegant counts over all ``nu`` inside ``outer`` with at most ``m`` rows."""
    out = {}
    for nu in subpartitions(outer):
        if len(nu) <= m:
            count = elegant_count(outer, nu)
            if count:
                out[nu] = count
    return out


def format_expansion(expansion: Mapping, as_json: bool = False) -> str:
    items = sorted(expansion.items(), key=lambda kv: _expansion_key(kv[0]), reverse=True)
    if as_json:
        return json.dumps(
            [{"partition": list(k), "coefficient": v} if isinstance(k, Partition)
             else {"partition": list(k[0]), "ceq": list(k[1]), "coefficient": v}
             for k, v in items]
        )
    lines = []
    for k, v in items:
        if isinstance(k, Partition):
            lines.append(f"{','.join(map(str, k)) or '()'} : {v}")
        else:
            nu, alpha = k
            lines.append(f"{','.join(map(str, nu)) or '()'} | ceq {','.join(map(str, alpha)) or '()'} : {v}")
    return "\n".join(lines)


def _expansion_key(k):
    if isinstance(k, Partition):
        return (sum(k), tuple(k))
    return (sum(k[0]), tuple(k[0]), tuple(k[1]))
