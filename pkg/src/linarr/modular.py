"""Multimodular certificates for kernel dimensions of integer matrices.

Nothing here is trusted on its own. The rank modulo a prime never exceeds
the rank over Q, so full rank mod p proves full rank. A positive nullity is
proved by exhibiting kernel vectors, reconstructed from several primes by
CRT and rational reconstruction and then checked exactly against the
integer matrix. When neither certificate is obtained the caller falls back
to exact elimination.
"""

from __future__ import annotations

from math import gcd, isqrt, lcm
from typing import Sequence

import numpy as np

from .linalg import canonical_vector, sparse_echelon

Rows = Sequence[dict[int, int]]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13):
        if n % q == 0:
            return n == q
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 7, 61):  # deterministic below 2^32
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def _primes(start: int = 2**31 - 1):
    n = start
    while True:
        if _is_prime(n):
            yield n
        n -= 2


PRIMES = []
for _p in _primes():
    PRIMES.append(_p)
    if len(PRIMES) == 80:
        break


def rref_mod(rows: Rows, ncols: int, p: int) -> tuple[np.ndarray, list[int]]:
    """Reduced echelon form modulo ``p`` (< 2^31) with numpy row updates."""
    a = np.zeros((len(rows), ncols), dtype=np.int64)
    for i, row in enumerate(rows):
        for j, v in row.items():
            a[i, j] = v % p
    m = a.shape[0]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        if r == m:
            break
        nz = np.flatnonzero(a[r:, c])
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        inv = pow(int(a[r, c]), p - 2, p)
        a[r] = (a[r] * inv) % p
        col = a[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            a[hit] = (a[hit] - (col[hit, None] * a[r]) % p) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank_mod(rows: Rows, ncols: int, p: int = PRIMES[0]) -> int:
    return len(rref_mod(rows, ncols, p)[1])


def _rational_reconstruct(a: int, m: int) -> tuple[int, int] | None:
    """``n/d`` congruent to ``a`` mod ``m`` with |n|, d below sqrt(m/2)."""
    bound = isqrt(m // 2)
    r0, r1 = m, a % m
    s0, s1 = 0, 1
    while r1 > bound:
        q = r0 // r1
        r0, r1 = r1, r0 - q * r1
        s0, s1 = s1, s0 - q * s1
    if s1 == 0 or abs(s1) > bound:
        return None
    if s1 < 0:
        r1, s1 = -r1, -s1
    if gcd(r1, s1) != 1:
        return None
    return r1, s1


def _annihilates(rows: Rows, v: Sequence[int]) -> bool:
    return all(sum(c * v[j] for j, c in row.items()) == 0 for row in rows)


def certified_kernel(rows: Rows, ncols: int, max_primes: int = 60
                     ) -> tuple[list[list[int]], list[int]] | None:
    """Exactly verified kernel basis and its free columns, or ``None``.

    The basis has one vector per non-pivot column (nonzero there, zero on the
    other free columns), i.e. the reduced-echelon kernel basis in canonical
    primitive form. The rank mod p bounds the rank over Q from below, and the
    verified vectors bound it from above, so the nullity is exact.
    """
    ref_piv: list[int] | None = None
    residues: list[np.ndarray] = []
    moduli: list[int] = []
    last = None
    for p in PRIMES[:max_primes]:
        red, piv = rref_mod(rows, ncols, p)
        if ref_piv is None or len(piv) > len(ref_piv):
            ref_piv, residues, moduli, last = piv, [], [], None
        elif piv != ref_piv:
            continue
        if len(piv) == ncols:
            return [], []
        free = [j for j in range(ncols) if j not in set(piv)]
        # kernel vector for free column j: x_j = 1, x_piv[i] = -red[i, j]
        residues.append((-red[:, free]) % p)
        moduli.append(p)
        m = 1
        for q in moduli:
            m *= q
        combined = _crt(residues, moduli)
        basis = []
        for t, j in enumerate(free):
            vec = [0] * ncols
            fracs = {}
            ok = True
            for i, pc in enumerate(piv):
                rr = _rational_reconstruct(combined[i][t], m)
                if rr is None:
                    ok = False
                    break
                fracs[pc] = rr
            if not ok:
                break
            den = 1
            for _, d in fracs.values():
                den = lcm(den, d)
            vec[j] = den
            for pc, (n, d) in fracs.items():
                vec[pc] = n * (den // d)
            basis.append(vec)
        else:
            if basis == last and all(_annihilates(rows, v) for v in basis):
                return [canonical_vector(v) for v in basis], free
            last = basis
    return None


def _crt(residues: list[np.ndarray], moduli: list[int]) -> list[list[int]]:
    """Combine residue matrices to Python ints modulo the product of the moduli."""
    acc = [[int(x) for x in row] for row in residues[0]]
    m = moduli[0]
    for res, p in zip(residues[1:], moduli[1:]):
        inv = pow(m, -1, p)
        for i, row in enumerate(res):
            a = acc[i]
            for t, x in enumerate(row):
                h = ((int(x) - a[t]) * inv) % p
                a[t] += m * h
        m *= p
    return acc


def nullity(rows: Rows, ncols: int) -> int:
    """Exact dimension of the right kernel of an integer matrix."""
    if rank_mod(rows, ncols) == ncols:
        return 0
    ker = certified_kernel(rows, ncols)
    if ker is not None:
        return len(ker[0])
    return ncols - len(sparse_echelon(rows)[0])
