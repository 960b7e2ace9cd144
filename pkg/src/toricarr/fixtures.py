"""Named example arrangements used in tests and the command line."""

from fractions import Fraction

from .arrangement import Arrangement, make_hypersurface


def example_a():
    """Rank-two arrangement with hypersurfaces x^2 = 1, y = x^2, y = 1."""
    return Arrangement.from_characters(2, [(2, 0), (-2, 1), (0, 1)])


def circuit(n, m):
    """Rank-two circuit in standard form: x^n = 1, y = x^m, y = 1.
    Characters (n,0), (-m,1), (0,1); requires m | n."""
    assert n % m == 0 and 0 < m
    return Arrangement.from_characters(2, [(n, 0), (-m, 1), (0, 1)])


def type_c(n):
    """Toric type C arrangement in (C^x)^n: x_k = 1, x_k = -1 for each k,
    and x_i = x_k^-1, x_i = x_k for i < k."""
    hyps = []
    for k in range(1, n + 1):
        ek = tuple(1 if i == k - 1 else 0 for i in range(n))
        hyps.append(make_hypersurface(ek, Fraction(0)))
        hyps.append(make_hypersurface(ek, Fraction(1, 2)))
        for i in range(1, k):
            ei = tuple(1 if t == i - 1 else 0 for t in range(n))
            alpha = tuple(a + b for a, b in zip(ei, ek))   # x_i x_k = 1
            beta = tuple(a - b for a, b in zip(ei, ek))    # x_i = x_k
            hyps.append(make_hypersurface(alpha, Fraction(0)))
            hyps.append(make_hypersurface(beta, Fraction(0)))
    return Arrangement.from_hypersurfaces(n, hyps)


def standard_chain(name, arrangement=None):
    """Cocharacter chain used for each named fixture."""
    if name == "example-a":
        return [(0, 1)]
    if name.startswith("circuit"):
        return [(0, 1)]
    if name.startswith("type-c"):
        n = arrangement.dim
        return [tuple([0] * (k - 1) + [1]) for k in range(n, 1, -1)]
    raise KeyError(name)


EXAMPLES = {
    "example-a": example_a,
    "circuit-6-3": lambda: circuit(6, 3),
    "circuit-4-2": lambda: circuit(4, 2),
    "circuit-6-2": lambda: circuit(6, 2),
    "type-c-1": lambda: type_c(1),
    "type-c-2": lambda: type_c(2),
    "type-c-3": lambda: type_c(3),
    "type-c-4": lambda: type_c(4),
}
