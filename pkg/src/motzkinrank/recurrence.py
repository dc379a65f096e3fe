"""Polynomial-coefficient recurrences on integer sequences.

A Recurrence of order k stores integer polynomials p_0..p_k (in n) with
the convention

    sum_i p_i(n) * m_{n+i} = 0   for all n >= 0,   p_k not identically 0.

``guess_recurrence`` searches small (order, degree) cells in increasing
order + degree, solving the exact homogeneous system on the given
terms with the last ``guard`` instances withheld, and returns the first
candidate that verifies on every applicable instance including the
withheld ones.  ``minimality_scan`` maps out the whole grid, which is
how desk-scale minimality evidence is collected.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

from . import intpoly, linalg, published
from .errors import (
    InsufficientTerms,
    NonIntegralStep,
    SingularLeadingCoefficient,
)


@dataclass(frozen=True)
class Recurrence:
    """coeff_polys[i] is p_i; see the module docstring for the convention."""

    coeff_polys: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        polys = tuple(intpoly.trim(p) for p in self.coeff_polys)
        if len(polys) < 2:
            raise ValueError("a recurrence needs order at least 1")
        if not polys[-1]:
            raise ValueError("the leading coefficient polynomial must be nonzero")
        object.__setattr__(self, "coeff_polys", polys)

    @property
    def order(self) -> int:
        return len(self.coeff_polys) - 1

    @property
    def degree(self) -> int:
        return max(intpoly.degree(p) for p in self.coeff_polys)

    def content(self) -> int:
        g = 0
        for p in self.coeff_polys:
            g = gcd(g, intpoly.content(p))
        return g

    def normalized(self) -> "Recurrence":
        """Content 1, leading coefficient of p_k positive."""
        g = self.content()
        polys = [tuple(v // g for v in p) for p in self.coeff_polys]
        if polys[-1][-1] < 0:
            polys = [intpoly.neg(p) for p in polys]
        return Recurrence(tuple(polys))

    def proportional_to(self, other: "Recurrence") -> bool:
        """Equal up to a nonzero rational factor."""
        return self.normalized() == other.normalized()

    def __str__(self):
        parts = []
        for i, p in enumerate(self.coeff_polys):
            if not p:
                continue
            idx = "m[n]" if i == 0 else f"m[n+{i}]"
            body = intpoly.to_str(p, "n")
            if p == (1,):
                parts.append(idx)
            elif p == (-1,):
                parts.append(f"-{idx}")
            else:
                parts.append(f"({body})*{idx}")
        out = parts[0]
        for part in parts[1:]:
            out += " - " + part[1:] if part.startswith("-") else " + " + part
        return out + " = 0"

    def to_json_dict(self) -> dict:
        return {
            "order": self.order,
            "coeff_polys": [[str(v) for v in p] for p in self.coeff_polys],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "Recurrence":
        polys = tuple(tuple(int(v) for v in p) for p in data["coeff_polys"])
        rec = cls(polys)
        if "order" in data and rec.order != int(data["order"]):
            raise ValueError(
                f"stated order {data['order']} does not match "
                f"coefficients (order {rec.order})"
            )
        return rec


def verify_recurrence(rec: Recurrence, terms) -> bool:
    """Does the relation hold at every applicable index of terms?"""
    k = rec.order
    polys = rec.coeff_polys
    for n in range(len(terms) - k):
        if sum(intpoly.evaluate(polys[i], n) * terms[n + i] for i in range(k + 1)):
            return False
    return True


def apply_recurrence(rec: Recurrence, seeds, count: int) -> list[int]:
    """Extend seeds to ``count`` terms.

    Solves for m_{n+k} at each step; raises if the leading coefficient
    vanishes at some n or if a division is not exact (either means the
    relation does not actually generate an integer sequence from these
    seeds).
    """
    k = rec.order
    if len(seeds) < k:
        raise InsufficientTerms(f"need at least {k} seed terms, got {len(seeds)}")
    out = list(seeds)
    while len(out) < count:
        n = len(out) - k
        lead = intpoly.evaluate(rec.coeff_polys[k], n)
        if lead == 0:
            raise SingularLeadingCoefficient(n)
        s = sum(
            intpoly.evaluate(rec.coeff_polys[i], n) * out[n + i] for i in range(k)
        )
        quot, rem = divmod(-s, lead)
        if rem:
            raise NonIntegralStep(f"extension step at n={n} is not integral")
        out.append(quot)
    return out[:count]


def _solve_cell(terms, k, d, guard, max_candidates=8):
    """Verified relation of order exactly <= k and degree <= d, or None.

    Builds the homogeneous system over rows n = 0..(len-k-guard-1),
    leaving the last ``guard`` applicable instances out, and verifies
    any candidate on all instances.  A candidate whose top polynomials
    vanish is kept at its true (lower) order.
    """
    rows_n = len(terms) - k - guard
    unknowns = (k + 1) * (d + 1)
    if rows_n < unknowns:
        return None
    rows = []
    for n in range(rows_n):
        row = []
        for i in range(k + 1):
            t = terms[n + i]
            e = 1
            for _ in range(d + 1):
                row.append(t * e)
                e *= n
        rows.append(row)
    for vec in linalg.nullspace_basis(rows, max_vectors=max_candidates):
        polys = [
            intpoly.trim(vec[i * (d + 1) : (i + 1) * (d + 1)]) for i in range(k + 1)
        ]
        while polys and not polys[-1]:
            polys.pop()
        if len(polys) < 2:
            continue
        rec = Recurrence(tuple(polys))
        if verify_recurrence(rec, terms):
            return rec.normalized()
    return None


def _check_terms(terms, max_order, max_degree, guard):
    if max_order < 1 or max_degree < 0:
        raise ValueError("need max_order >= 1 and max_degree >= 0")
    if guard < 0:
        raise ValueError("guard must be nonnegative")
    for t in terms:
        if not isinstance(t, int):
            raise TypeError("terms must be integers")
    need = (max_order + 1) * (max_degree + 1) + max_order + guard
    if len(terms) < need:
        raise InsufficientTerms(
            f"{len(terms)} terms cannot support order {max_order} and degree "
            f"{max_degree} with guard {guard}; need at least {need}"
        )


def guess_recurrence(terms, max_order: int, max_degree: int, guard: int = 8):
    """Smallest relation (by order+degree, then order) fitting the terms.

    Scans cells (k, d) ordered by k+d then k; each candidate must hold
    on every applicable instance of the input, including the ``guard``
    withheld ones, before it is returned (normalized).  Returns None
    when no cell in the grid admits a verified relation.
    """
    terms = list(terms)
    _check_terms(terms, max_order, max_degree, guard)
    cells = sorted(
        ((k, d) for k in range(1, max_order + 1) for d in range(max_degree + 1)),
        key=lambda kd: (kd[0] + kd[1], kd[0]),
    )
    for k, d in cells:
        rec = _solve_cell(terms, k, d, guard)
        if rec is not None:
            return rec
    return None


@dataclass(frozen=True)
class MinimalityReport:
    """Grid scan outcome: which (order, degree) cells admit a verified
    relation on the given terms."""

    terms_used: int
    max_order: int
    max_degree: int
    guard: int
    hits: tuple[tuple[int, int], ...]

    @property
    def smallest(self) -> tuple[int, int] | None:
        return min(self.hits) if self.hits else None

    @property
    def observed_term_count(self) -> int | None:
        """Number of sequence terms tied together by the smallest
        relation found (order + 1), or None."""
        return self.smallest[0] + 1 if self.hits else None


def minimality_scan(terms, max_order: int, max_degree: int, guard: int = 8):
    """Try every cell of the (order, degree) grid and record the hits."""
    terms = list(terms)
    _check_terms(terms, max_order, max_degree, guard)
    hits = []
    for k in range(1, max_order + 1):
        for d in range(max_degree + 1):
            rec = _solve_cell(terms, k, d, guard)
            if rec is not None:
                hits.append((k, d))
    return MinimalityReport(
        terms_used=len(terms),
        max_order=max_order,
        max_degree=max_degree,
        guard=guard,
        hits=tuple(hits),
    )


def rank1_recurrence(u: int, l: int, d: int) -> Recurrence:
    """Forward form of the rank-1 three-term relation:

    -(4ud - l^2)(n+1) m_n - l(2n+5) m_{n+1} + (n+4) m_{n+2} = 0.
    """
    q = 4 * u * d - l * l
    return Recurrence(((-q, -q), (-5 * l, -2 * l), (4, 1)))


def motzkin_recurrence() -> Recurrence:
    """The classical three-term Motzkin relation (all-ones rank 1)."""
    return rank1_recurrence(1, 1, 1)


def prodinger_recurrence() -> Recurrence:
    """The embedded seven-term relation for the rank-2 all-ones counts."""
    return Recurrence(published.PRODINGER)
