"""Independent reference implementations used only by the tests."""

from __future__ import annotations

import numpy as np


def collect(params, word):
    """Normal form (a, b, c) of a word of letters 'x', 'y', 'z', multiplied left to right.

    Appends one letter at a time using only consequences of the defining
    relations: z x = x z^-1, z y = y z^-1, y x = x y z, and the power
    relations for y^(2^m) and x^(2^n).
    """
    n, m, l = params.n, params.m, params.l
    r, s, t = params.theta
    half = 1 << (l - 1)
    zmod = 1 << l
    a = b = c = 0
    for letter in word:
        if letter == "z":
            c = (c + 1) % zmod
        elif letter == "y":
            # x^a y^b z^c y = x^a y^(b+1) z^-c
            b, c = b + 1, (-c) % zmod
            if b == 1 << m:
                # y^(2^m) = x^(s 2^m) z^(t half), central
                b = 0
                a += s << m
                c = (c + t * half) % zmod
                if a >= 1 << n:
                    a -= 1 << n
                    c = (c + r * half) % zmod
        elif letter == "x":
            # y^b x = x (y z)^b = x y^b z^(b mod 2), then z^c x = x z^-c
            c = ((b & 1) - c) % zmod
            a += 1
            if a == 1 << n:
                a = 0
                c = (c + r * half) % zmod
        else:
            raise ValueError(letter)
    return a, b, c


def word_of(a, b, c):
    return "x" * a + "y" * b + "z" * c


def collect_product(params, g, h):
    return collect(params, word_of(*g) + word_of(*h))


def naive_algebra_product(G, field, u, v):
    """Convolution by a double loop over supports with Group.multiply."""
    out = np.zeros(G.order, dtype=np.uint8)
    for i in np.flatnonzero(u):
        gi = G.element(int(i))
        for j in np.flatnonzero(v):
            k = G.index(G.multiply(gi, G.element(int(j))))
            out[k] ^= field.mul(int(u[i]), int(v[j]))
    return out


def gauss_rank(rows, field):
    """Row rank over GF(2^k) by textbook elimination on Python lists."""
    rows = [list(map(int, r)) for r in rows]
    rank, ncols = 0, len(rows[0]) if rows else 0
    for col in range(ncols):
        piv = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        inv = field.inv(rows[rank][col])
        rows[rank] = [field.mul(inv, v) for v in rows[rank]]
        for i in range(len(rows)):
            if i != rank and rows[i][col]:
                f = rows[i][col]
                rows[i] = [v ^ field.mul(f, w) for v, w in zip(rows[i], rows[rank])]
        rank += 1
    return rank


def subset_matrix(order):
    """Entry (i, j) is 1 when the bits of i are a subset of the bits of j.

    Expanding (x+1)^r (y+1)^s (z+1)^c with Lucas' theorem gives exactly the
    normal forms whose exponent bits lie under those of (r, s, c).
    """
    idx = np.arange(order)
    return ((idx[:, None] & ~idx[None, :]) == 0).astype(np.uint8)


def brute_conjugacy_classes(G):
    seen, classes = set(), []
    for g in range(G.order):
        if g in seen:
            continue
        ge = G.element(g)
        orbit = {G.index(G.conjugate(ge, G.element(h))) for h in range(G.order)}
        seen |= orbit
        classes.append(orbit)
    return classes
