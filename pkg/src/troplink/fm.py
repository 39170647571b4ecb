"""Fourier-Motzkin elimination for exact feasibility of linear systems.

A system is a list of constraints ``a . x >= b`` (or ``>`` when strict) plus
linear equations ``a . x == b``.  Equations are substituted away first; the
remaining variables are eliminated one at a time, with Chernikov's history
rule pruning redundant combinations.  Worst-case cost is still exponential in
the number of variables, which is why callers only use this on desk-scale
cone problems.  The history rule is applied to non-strict rows only.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .linalg import as_rational


@dataclass(frozen=True)
class Constraint:
    coeffs: tuple[Fraction, ...]
    rhs: Fraction
    strict: bool = False

    @classmethod
    def ge(cls, coeffs: Sequence, rhs=0) -> Constraint:
        return cls(tuple(as_rational(c) for c in coeffs), as_rational(rhs), False)

    @classmethod
    def gt(cls, coeffs: Sequence, rhs=0) -> Constraint:
        return cls(tuple(as_rational(c) for c in coeffs), as_rational(rhs), True)

    @classmethod
    def le(cls, coeffs: Sequence, rhs=0) -> Constraint:
        return cls.ge([-as_rational(c) for c in coeffs], -as_rational(rhs))

    @classmethod
    def lt(cls, coeffs: Sequence, rhs=0) -> Constraint:
        return cls.gt([-as_rational(c) for c in coeffs], -as_rational(rhs))


def _normalize(coeffs: Sequence[Fraction], rhs: Fraction) -> tuple[tuple[int, ...], int]:
    vals = list(coeffs) + [rhs]
    den = lcm(*(v.denominator for v in vals))
    ints = [int(v * den) for v in vals]
    g = gcd(*ints) or 1
    ints = [v // g for v in ints]
    return tuple(ints[:-1]), ints[-1]


def _trivially_ok(rhs: int, strict: bool) -> bool:
    return rhs < 0 if strict else rhs <= 0


def feasible(
    nvars: int,
    constraints: Sequence[Constraint] = (),
    equations: Sequence[tuple[Sequence, object]] = (),
) -> bool:
    """Decide exactly whether the system has a real (equivalently rational) solution."""
    ineqs = [(list(c.coeffs), c.rhs, c.strict) for c in constraints]
    for c in ineqs:
        if len(c[0]) != nvars:
            raise ValueError("constraint length does not match number of variables")
    eqs = [([as_rational(a) for a in coeffs], as_rational(rhs)) for coeffs, rhs in equations]

    # substitute equations away
    while eqs:
        coeffs, rhs = eqs.pop()
        pivot = next((j for j, a in enumerate(coeffs) if a), None)
        if pivot is None:
            if rhs != 0:
                return False
            continue
        p = coeffs[pivot]
        # x_pivot = (rhs - sum_{j != pivot} a_j x_j) / p
        def sub(a: list[Fraction], b: Fraction) -> tuple[list[Fraction], Fraction]:
            f = a[pivot]
            if not f:
                return a, b
            ratio = f / p
            return [x - ratio * y for x, y in zip(a, coeffs)], b - ratio * rhs

        eqs = [sub(a, b) for a, b in eqs]
        ineqs = [(*sub(a, b), s) for a, b, s in ineqs]

    # integer-normalized rows with Chernikov history sets
    rows: dict[tuple[tuple[int, ...], bool], tuple[int, frozenset[int]]] = {}

    def add(coeffs, rhs, strict, hist, table) -> bool:
        if isinstance(rhs, Fraction) or any(isinstance(c, Fraction) for c in coeffs):
            ic, ir = _normalize(coeffs, as_rational(rhs))
        else:
            g = gcd(*coeffs, rhs) or 1
            ic, ir = tuple(c // g for c in coeffs), rhs // g
        if not any(ic):
            return _trivially_ok(ir, strict)
        key = (ic, strict)
        old = table.get(key)
        if old is None or ir > old[0] or (ir == old[0] and len(hist) < len(old[1])):
            table[key] = (ir, hist)
        return True

    for idx, (a, b, s) in enumerate(ineqs):
        if not add(a, b, s, frozenset([idx]), rows):
            return False

    remaining = set(range(nvars))
    eliminated = 0
    while rows:
        live = [j for j in remaining if any(c[j] for c, _ in rows)]
        if not live:
            break

        def cost(j: int) -> tuple[int, int]:
            pos = sum(1 for c, _ in rows if c[j] > 0)
            neg = sum(1 for c, _ in rows if c[j] < 0)
            return pos * neg - pos - neg, j

        j = min(live, key=cost)
        remaining.discard(j)
        eliminated += 1
        pos, neg, new = [], [], {}
        for (c, s), (r, h) in rows.items():
            if c[j] > 0:
                pos.append((c, r, s, h))
            elif c[j] < 0:
                neg.append((c, r, s, h))
            else:
                new[(c, s)] = (r, h)
        for cp, rp, sp, hp in pos:
            for cn, rn, sn, hn in neg:
                hist = hp | hn
                strict = sp or sn
                if not strict and len(hist) > eliminated + 1:
                    continue
                fp, fn = -cn[j], cp[j]
                coeffs = tuple(fp * x + fn * y for x, y in zip(cp, cn))
                if not add(coeffs, fp * rp + fn * rn, strict, hist, new):
                    return False
        rows = new
    return True
