"""Laplacian spectra via cyclic Jacobi rotations, and the eigenvalue criterion."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

from .errors import (
    ConvergenceError,
    EmptyGraph,
    InvalidParameters,
    InvalidPartition,
    NumericError,
)
from .graph import Graph, bits, popcount, to_mask
from .verdict import ConditionVerdict

DEFAULT_TOL = 1e-9
MAX_SWEEPS = 100


@dataclass(frozen=True)
class Spectrum:
    values: tuple[float, ...]  # descending
    tol: float

    @property
    def largest(self) -> float:
        return self.values[0]

    @property
    def algebraic_connectivity(self) -> float:
        """Second smallest eigenvalue (mu_{n-1} for a Laplacian)."""
        return self.values[-2]

    def __len__(self) -> int:
        return len(self.values)


def laplacian(g: Graph) -> list[list[float]]:
    if g.n == 0:
        raise EmptyGraph("Laplacian of the null graph")
    rows = []
    for v in range(g.n):
        row = [0.0] * g.n
        for w in bits(g.adj[v]):
            row[w] = -1.0
        row[v] = float(popcount(g.adj[v]))
        rows.append(row)
    return rows


def eigenvalues_sym(matrix: Sequence[Sequence[float]], tol: float = DEFAULT_TOL,
                    max_sweeps: int = MAX_SWEEPS) -> Spectrum:
    """Eigenvalues of a real symmetric matrix by the cyclic Jacobi method.

    Sweeps stop once the off-diagonal Frobenius norm drops below ``tol / 10``,
    which bounds the absolute error of every returned eigenvalue by the same
    amount (Weyl). During the first three sweeps, rotations are skipped for
    entries under ``0.2 * off / n**2``.
    """
    if tol <= 0:
        raise InvalidParameters("tol must be positive")
    a = [[float(x) for x in row] for row in matrix]
    n = len(a)
    for row in a:
        if len(row) != n:
            raise NumericError("matrix is not square")
        if not all(math.isfinite(x) for x in row):
            raise NumericError("matrix has non-finite entries")
    for i in range(n):
        for j in range(i):
            if abs(a[i][j] - a[j][i]) > tol:
                raise NumericError(f"matrix not symmetric at ({i}, {j})")
            a[i][j] = a[j][i]

    stop = tol / 10
    for sweep in range(max_sweeps + 1):
        off = math.sqrt(sum(a[p][q] ** 2 for p in range(n) for q in range(n) if p != q))
        if off < stop:
            break
        if sweep == max_sweeps:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps (off={off:.3g})")
        thresh = 0.2 * off / (n * n) if sweep < 3 else 0.0
        for p in range(n - 1):
            ap = a[p]
            for q in range(p + 1, n):
                apq = ap[q]
                if apq == 0.0 or abs(apq) <= thresh:
                    continue
                aq = a[q]
                theta = (aq[q] - ap[p]) / (2.0 * apq)
                if abs(theta) > 1e150:
                    t = 0.5 / theta
                else:
                    t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                    if theta < 0:
                        t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                for r in range(n):
                    if r == p or r == q:
                        continue
                    ar = a[r]
                    arp, arq = ar[p], ar[q]
                    ar[p] = ap[r] = c * arp - s * arq
                    ar[q] = aq[r] = s * arp + c * arq
                ap[p] -= t * apq
                aq[q] += t * apq
                ap[q] = aq[p] = 0.0
    values = sorted((a[i][i] for i in range(n)), reverse=True)
    return Spectrum(tuple(values), tol)


def laplacian_spectrum(g: Graph, tol: float = DEFAULT_TOL) -> Spectrum:
    return eigenvalues_sym(laplacian(g), tol)


def check_thm12(g: Graph, k: int, tol: float = DEFAULT_TOL,
                spectrum: Spectrum | None = None) -> ConditionVerdict:
    """mu_1 <= (k + 1/2) mu_{n-1}, gated on n >= 2 and at least one edge."""
    if k < 2:
        raise InvalidParameters(f"k must be >= 2, got {k}")
    if g.n < 2:
        return ConditionVerdict.not_applicable("T12", "needs n >= 2 (mu_{n-1} undefined)")
    if g.m < 1:
        return ConditionVerdict.not_applicable("T12", "edgeless graph")
    spec = spectrum or laplacian_spectrum(g, tol)
    mu1, mu2 = spec.largest, spec.algebraic_connectivity
    holds = mu1 <= (k + 0.5) * mu2 + tol
    return ConditionVerdict("T12", True, holds, {"mu_1": mu1, "mu_n_minus_1": mu2})


def _mask(vs: Iterable[int] | int) -> int:
    return vs if isinstance(vs, int) else to_mask(vs)


def check_lemma21(g: Graph, s: Iterable[int] | int, x: Iterable[int] | int,
                  y: Iterable[int] | int, tol: float = DEFAULT_TOL,
                  spectrum: Spectrum | None = None) -> tuple[bool, bool | None]:
    """Check both separator inequalities for a split X | Y of G - S.

    Returns ``(size_bound_ok, separator_bound_ok)``; the second entry is
    ``None`` when mu_1 == mu_{n-1} (within tol) and the bound is undefined.
    Both comparisons are made with denominators cleared, the tolerance scaled
    by the coefficients multiplying the eigenvalues.
    """
    if g.m < 1:
        raise InvalidParameters("needs at least one edge")
    sm, xm, ym = _mask(s), _mask(x), _mask(y)
    if (sm | xm | ym) >> g.n:
        raise InvalidPartition("vertex out of range")
    if sm & xm or sm & ym or xm & ym:
        raise InvalidPartition("S, X, Y must be pairwise disjoint")
    if sm | xm | ym != g.full:
        raise InvalidPartition("X and Y must cover V - S")
    if not xm or not ym:
        raise InvalidPartition("X and Y must both be nonempty")
    if g.neighborhood(xm) & ym:
        raise InvalidPartition("edge between X and Y")
    nx_, ny, ns = popcount(xm), popcount(ym), popcount(sm)
    if nx_ > ny:
        raise InvalidPartition("|X| > |Y|")

    spec = spectrum or laplacian_spectrum(g, tol)
    mu1, mu2 = spec.largest, spec.algebraic_connectivity
    n = g.n
    first = 2 * mu1 * nx_ <= (mu1 - mu2) * n + tol * (2 * nx_ + 2 * n)
    if mu1 - mu2 <= tol:
        return first, None
    second = ns * (mu1 - mu2) + tol * (2 * ns + 2 * nx_) >= 2 * mu2 * nx_
    return first, second
