"""Independent oracles and shared generators for the test suite.

Everything here is deliberately separate from the library code paths it
checks: Lyndon words come from Duval's generation algorithm, necklace
counts from the Moebius formula, convolution is done directly on lists.
"""

from math import prod


def convolve(a, b, degree):
    """Truncated product of coefficient lists, computed directly."""
    out = [0] * (degree + 1)
    for i, ca in enumerate(a[: degree + 1]):
        for j, cb in enumerate(b[: degree + 1 - i]):
            out[i + j] += ca * cb
    return out


def duval_lyndon_words(alphabet_size, max_len):
    """All Lyndon words over 0..alphabet_size-1 of length <= max_len."""
    words = []
    w = [0]
    while w:
        words.append(tuple(w))
        w = (w * (max_len // len(w) + 1))[:max_len]
        while w and w[-1] == alphabet_size - 1:
            w.pop()
        if w:
            w[-1] += 1
    return words


def graded_lyndon_counts(letter_degrees, max_degree):
    """Count Lyndon words by total degree for a graded alphabet.

    letter_degrees[i] is the degree of letter i; every letter has degree
    >= 1 so words of total degree <= max_degree have length <= max_degree.
    """
    counts = {}
    for word in duval_lyndon_words(len(letter_degrees), max_degree):
        degree = sum(letter_degrees[c] for c in word)
        if degree <= max_degree:
            counts[degree] = counts.get(degree, 0) + 1
    return counts


def moebius(n):
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def necklace_lyndon_count(q, n):
    """Number of Lyndon words of length n over q letters (Witt formula)."""
    total = sum(moebius(d) * q ** (n // d) for d in range(1, n + 1) if n % d == 0)
    return total // n


def is_lyndon(word):
    """Direct definition: strictly smaller than all proper rotations."""
    return all(word < word[i:] + word[:i] for i in range(1, len(word)))


def has_chordless_long_cycle(adj):
    """Brute-force chordality check: look for an induced cycle of length >= 4."""
    import itertools

    vertices = sorted(adj)
    for size in range(4, len(vertices) + 1):
        for subset in itertools.combinations(vertices, size):
            sub = {v: adj[v] & set(subset) for v in subset}
            if all(len(sub[v]) == 2 for v in subset) and _is_single_cycle(sub):
                return True
    return False


def _is_single_cycle(adj):
    start = next(iter(adj))
    seen = {start}
    prev, current = None, start
    while True:
        nxt = [u for u in adj[current] if u != prev]
        if not nxt:
            return False
        prev, current = current, nxt[0]
        if current == start:
            return len(seen) == len(adj)
        if current in seen:
            return False
        seen.add(current)
