"""Permutations of {0, ..., n-1} as image tuples; cycle input is 1-based."""

from itertools import permutations


def identity(n=4):
    return tuple(range(n))


def from_cycles(*cycles, n=4):
    """``from_cycles((1, 2), (3, 4))`` is the permutation (1 2)(3 4) of [n]."""
    img = list(range(n))
    for cyc in cycles:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            img[a - 1] = b - 1
    return tuple(img)


def compose(s, t):
    """s after t."""
    return tuple(s[t[i]] for i in range(len(t)))


def inverse(s):
    inv = [0] * len(s)
    for i, j in enumerate(s):
        inv[j] = i
    return tuple(inv)


def all_perms(n=4):
    return [tuple(p) for p in permutations(range(n))]


def adjacent_word(s):
    """Indices k with s = s_{k1} o s_{k2} o ..., where s_k swaps k and k+1."""
    s = tuple(s)
    word = []
    while True:
        k = next((k for k in range(len(s) - 1) if s[k] > s[k + 1]), None)
        if k is None:
            return word[::-1]
        word.append(k)
        s = compose(s, transposition(k, len(s)))


def transposition(k, n=4):
    img = list(range(n))
    img[k], img[k + 1] = k + 1, k
    return tuple(img)


def to_cycles(s):
    """1-based cycle notation without fixed points, e.g. '(1 2)(3 4)'."""
    seen, out = set(), []
    for i in range(len(s)):
        if i in seen or s[i] == i:
            continue
        cyc, j = [], i
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = s[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"
