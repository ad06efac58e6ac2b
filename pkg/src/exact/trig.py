"""
Trigonometric Helpers for Path Norms

kappa(j) = cos(j theta) and lambda(j) = sin(j theta) with
theta = pi / (2(n+1)), plus the summation identity and the alternating
sum lemma used to build the path witnesses.
"""

from __future__ import annotations

import math
from enum import Enum

import numpy as np

from src.exceptions import InputError

IDENTITY_TOL = 1e-10


class TrigForm(str, Enum):
    """One of +-kappa, +-lambda."""

    KAPPA = "kappa"
    NEG_KAPPA = "-kappa"
    LAMBDA = "lambda"
    NEG_LAMBDA = "-lambda"

    def __call__(self, trig: PathTrig, j: float) -> float:
        if self in (TrigForm.KAPPA, TrigForm.NEG_KAPPA):
            value = trig.kappa(j)
        else:
            value = trig.lam(j)
        return -value if self.value.startswith("-") else value


class PathTrig:
    """Angle bookkeeping for the path of parameter n."""

    def __init__(self, n: int) -> None:
        if n < 1:
            raise InputError(f"Path parameter must be >= 1, got {n}")
        self.n = n
        self.theta = math.pi / (2 * (n + 1))

    def kappa(self, j: float) -> float:
        return math.cos(j * self.theta)

    def lam(self, j: float) -> float:
        return math.sin(j * self.theta)

    def rotation(self, s: int) -> np.ndarray:
        """The 2x2 rotation by s * theta."""
        c, d = self.kappa(s), self.lam(s)
        return np.array([[c, -d], [d, c]])

    def lambda_vanishes(self, d: int) -> bool:
        """lambda(d) = 0 exactly when d is a multiple of 2(n+1)."""
        return d % (2 * (self.n + 1)) == 0

    def t(self, j: int) -> float:
        """Weight t_j = kappa(1) - kappa(3 + 4j); positive for 0 <= j < n, zero at j = n."""
        return self.kappa(1) - self.kappa(3 + 4 * j)


def verify_bigstar(N: int, f: TrigForm | str, a: int, d: int, n: int) -> bool:
    """
    Check sum_{j=0}^{N} f(a + 2dj) = lambda((N+1)d) / lambda(d) * f(a + Nd).

    Raises:
        InputError: lambda(d) = 0 for this n
    """
    form = TrigForm(f)
    trig = PathTrig(n)
    if trig.lambda_vanishes(d):
        raise InputError(f"lambda({d}) vanishes for n={n}")
    if N < 0:
        raise InputError(f"N must be non-negative, got {N}")

    lhs = sum(form(trig, a + 2 * d * j) for j in range(N + 1))
    rhs = trig.lam((N + 1) * d) / trig.lam(d) * form(trig, a + N * d)
    return abs(lhs - rhs) <= IDENTITY_TOL * max(1.0, abs(lhs))


def verify_altzero(
    n: int,
    case: str,
    *,
    a: int = 0,
    m: int | None = None,
    s: int | None = None,
    t: int | None = None,
    f: TrigForm | str = TrigForm.KAPPA,
    g: TrigForm | str = TrigForm.KAPPA,
    h: TrigForm | str = TrigForm.KAPPA,
) -> bool:
    """
    Check that an alternating sum over j = 0..2n+1 vanishes.

    ``part1``: sum (-1)^j f(a + m j) with m even and |m| <= 2n.
    ``part2``: sum (-1)^j f(a + 2j) g(sj) h(tj) and sum (-1)^j g(sj) h(tj)
    with |s|, |t| <= n-1 and s = t mod 2. Both sums must vanish.

    Raises:
        InputError: parameters outside the lemma's range
    """
    trig = PathTrig(n)
    forms = TrigForm(f), TrigForm(g), TrigForm(h)
    signs = [(-1) ** j for j in range(2 * n + 2)]

    if case == "part1":
        if m is None or m % 2 != 0 or abs(m) > 2 * n:
            raise InputError(f"part1 needs even m with |m| <= {2 * n}, got {m}")
        total = sum(sign * forms[0](trig, a + m * j) for j, sign in enumerate(signs))
        return abs(total) <= IDENTITY_TOL

    if case == "part2":
        if s is None or t is None:
            raise InputError("part2 needs s and t")
        if max(abs(s), abs(t)) > n - 1 or (s - t) % 2 != 0:
            raise InputError(f"part2 needs |s|, |t| <= {n - 1} and s = t mod 2, got s={s}, t={t}")
        with_f = sum(
            sign * forms[0](trig, a + 2 * j) * forms[1](trig, s * j) * forms[2](trig, t * j)
            for j, sign in enumerate(signs)
        )
        without_f = sum(
            sign * forms[1](trig, s * j) * forms[2](trig, t * j) for j, sign in enumerate(signs)
        )
        return abs(with_f) <= IDENTITY_TOL and abs(without_f) <= IDENTITY_TOL

    raise InputError(f"Unknown case {case!r}; expected 'part1' or 'part2'")
