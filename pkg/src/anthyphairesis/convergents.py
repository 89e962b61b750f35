"""Convergents (best rational approximations) and Pell solutions.

The usual three-term recurrence p_k = a_k*p_{k-1} + p_{k-2} over the
quotient stream, plus the classical payoff of a detected period: the fundamental
solution of x^2 - N*y^2 = 1 sits at the end of the first period (even
period length) or the second (odd).
"""

from __future__ import annotations

from dataclasses import dataclass

from .engine import Expansion, expand_sqrt

__all__ = ["Convergent", "convergents", "pell_fundamental", "pell_negative"]


@dataclass(frozen=True)
class Convergent:
    p: int
    q: int
    index: int


def convergents(e: Expansion, count: int) -> tuple[Convergent, ...]:
    """First `count` convergents p_k/q_k of an expansion.

    Seeds (1, 0) and (0, 1); period quotients are recycled cyclically.
    A terminated (rational) expansion yields at most as many convergents
    as it has quotients.
    """
    if count < 1:
        raise ValueError("count must be positive")
    stream = e.quotient_stream(count)
    p_prev, p_cur = 0, 1
    q_prev, q_cur = 1, 0
    out = []
    for k, a in enumerate(stream):
        p_prev, p_cur = p_cur, a * p_cur + p_prev
        q_prev, q_cur = q_cur, a * q_cur + q_prev
        out.append(Convergent(p=p_cur, q=q_cur, index=k))
    return tuple(out)


def pell_fundamental(N: int) -> tuple[int, int]:
    """Smallest positive (x, y) with x*x - N*y*y == 1, N non-square.

    Read off the convergent just before the period closes; traversed
    twice when the period length is odd. Verified by direct
    multiplication before returning.
    """
    e = expand_sqrt(N)
    if e.terminated:
        raise ValueError("N must not be a perfect square")
    l = len(e.period)
    index = l - 1 if l % 2 == 0 else 2 * l - 1
    c = convergents(e, index + 1)[index]
    if c.p * c.p - N * c.q * c.q != 1:
        raise AssertionError(f"period-end convergent of sqrt({N}) does not solve Pell")
    return (c.p, c.q)


def pell_negative(N: int) -> tuple[int, int] | None:
    """Smallest (x, y) with x*x - N*y*y == -1, or None when the period is even."""
    e = expand_sqrt(N)
    if e.terminated:
        raise ValueError("N must not be a perfect square")
    l = len(e.period)
    if l % 2 == 0:
        return None
    c = convergents(e, l)[l - 1]
    if c.p * c.p - N * c.q * c.q != -1:
        raise AssertionError(f"odd-period convergent of sqrt({N}) does not solve negative Pell")
    return (c.p, c.q)
