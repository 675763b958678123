"""Slope invariants must not depend on the finite coefficient field chosen to
host the entries: embedding F_{p^m} into F_{p^{2m}} doubles the norm degree
and reroutes the whole Newton computation, yet every slope stays the same.
"""

from isolab import laurent as ls
from isolab.coeffs import field_make
from isolab.invariants import hodge_point, hodge_sequence, newton_point
from isolab.matl import MatL
from isolab.sampling import rand_matrix, rng_for


def subfield_embedding(small, big):
    """Field homomorphism F_{p^m} -> F_{p^{2m}} sending the small generator
    to a root of the small modulus, found by exhaustive scan."""
    assert big.p == small.p and big.m % small.m == 0

    def eval_modulus(x):
        acc = 0
        power = 1
        for c in small.modulus:
            if c:
                acc = big.add(acc, big.mul(c % big.p, power))
            power = big.mul(power, x)
        return acc

    root = next(x for x in range(big.q) if eval_modulus(x) == 0)

    def phi(e):
        acc = 0
        power = 1
        for d in small.decode(e):
            if d:
                acc = big.add(acc, big.mul(d % big.p, power))
            power = big.mul(power, root)
        return acc

    return phi


def embed_matrix(b, small, big, phi):
    rows = []
    for r in b.rows:
        row = []
        for e in r:
            row.append(ls.LaurentSeries(big, e.val, tuple(phi(c) for c in e.coeffs),
                                        e.prec))
        rows.append(row)
    return MatL(big, rows)


def test_embedding_is_a_field_homomorphism():
    for p, m in [(2, 2), (3, 2)]:
        small = field_make(p, m)
        big = field_make(p, 2 * m)
        phi = subfield_embedding(small, big)
        assert phi(0) == 0 and phi(1) == 1
        for a in range(small.q):
            for b in range(small.q):
                assert phi(small.mul(a, b)) == big.mul(phi(a), phi(b))
                assert phi(small.add(a, b)) == big.add(phi(a), phi(b))
            assert phi(small.frob(a)) == big.frob(phi(a))


def test_slopes_invariant_under_coefficient_extension():
    for p, m, rounds in [(2, 2, 25), (3, 2, 15)]:
        small = field_make(p, m)
        big = field_make(p, 2 * m)
        phi = subfield_embedding(small, big)
        rng = rng_for(41, f"extension-{p}-{m}")
        for _ in range(rounds):
            n = rng.randint(2, 3)
            b = rand_matrix(small, rng, n, -2, 2)
            eb = embed_matrix(b, small, big, phi)
            assert hodge_point(eb) == hodge_point(b)
            assert newton_point(eb) == newton_point(b)
            sig = hodge_sequence(b, 3)
            esig = hodge_sequence(eb, 3)
            assert esig.mus == sig.mus
