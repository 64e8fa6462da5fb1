"""Frobenius roots: the smallest ideal whose bracket power contains the input.

For a polynomial g and level e, write each exponent vector as
``beta = q**e * floor + rem`` with every entry of ``rem`` below q**e.  The
terms sharing the same ``rem`` assemble into one component polynomial in
the floors, and those components generate the level-e root.  Coefficients
ride along unchanged because c**q == c in F_p.  The root is the left
adjoint of the bracket power: root(I, e) <= J exactly when I <= J^[q**e].
"""

from __future__ import annotations

from .errors import DomainError
from .groebner import Ideal
from .polyring import Exponents, Poly


def poly_root(g: Poly, e: int) -> Ideal:
    """Level-e Frobenius root of the principal ideal (g).

    The level must be >= 1; the zero polynomial yields the zero ideal.
    Only exponent patterns present in g are visited, so the cost is linear
    in the number of terms, never in q**e.
    """
    if e < 1:
        raise DomainError(f"root level must be >= 1, got {e}")
    ring = g.ring
    Q = ring.q**e
    components: dict[Exponents, dict[Exponents, int]] = {}
    for m, c in g._terms.items():
        rem = tuple(b % Q for b in m)
        floor = tuple(b // Q for b in m)
        components.setdefault(rem, {})[floor] = c
    gens = [Poly(ring, terms) for _, terms in sorted(components.items())]
    return Ideal(ring, gens)


def ideal_root(ideal: Ideal, e: int) -> Ideal:
    """Level-e Frobenius root of an ideal (generator-wise, then combined)."""
    if e < 1:
        raise DomainError(f"root level must be >= 1, got {e}")
    gens: list[Poly] = []
    for g in ideal.gens:
        gens.extend(poly_root(g, e).gens)
    return Ideal(ideal.ring, gens)
