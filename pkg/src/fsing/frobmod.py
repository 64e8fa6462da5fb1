"""Cyclic modules with a Frobenius-semilinear structural map.

A module is presented by two nested ideals, ``relations <= ambient``, and a
``multiplier`` polynomial f: the underlying module is ambient/relations and
the structural map sends the class of a to the class of f*a inside the
Frobenius pullback, which these presentations track through bracket powers.
Validity means relations <= ambient, f*relations <= relations^[q] and
f*ambient <= ambient^[q].

The central computation is :meth:`FrobModule.minimalize`: quotient away the
largest part killed by an iterate of the structural map, then shrink the
ambient ideal to the smallest one the structural map still reaches.  The
result is the unique minimal model (injective structural map, fixed under
the shrinking step), and the report carries a certificate of both facts.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import DomainError, ResourceError, RingMismatchError, ValidationError
from .frobroot import ideal_root
from .groebner import Ideal
from .polyring import Poly, Ring


def iterate_exponent(q: int, e: int) -> int:
    """Multiplier exponent of the e-fold structural map: 1 + q + ... + q**(e-1)."""
    if e < 0:
        raise DomainError("iterate levels are nonnegative")
    return (q**e - 1) // (q - 1)


@dataclass(frozen=True)
class Certificate:
    """Facts verified on a minimalization result."""

    structural_map_injective: bool
    fr_fixed: bool

    def as_dict(self) -> dict[str, bool]:
        return {
            "structural-map-injective": self.structural_map_injective,
            "fr-fixed": self.fr_fixed,
        }


@dataclass(frozen=True)
class MinimalizeReport:
    """Outcome of :meth:`FrobModule.minimalize`.

    ``kernel_chain_length`` is the first e >= 1 at which the iterated
    kernel chain repeats; ``fr_iterations`` is the smallest i >= 0 at which
    the ambient shrinking iteration repeats.  Both certificate fields are
    True whenever the call returns instead of raising.
    """

    result: "FrobModule"
    kernel_chain_length: int
    fr_iterations: int
    certificate: Certificate


@dataclass(frozen=True, eq=False)
class FrobModule:
    """Presentation (relations, ambient, multiplier) of a cyclic module.

    Instances are immutable; every operation returns a new presentation.
    Use :meth:`validate` to construct with the invariants checked.
    """

    relations: Ideal
    ambient: Ideal
    multiplier: Poly

    @property
    def ring(self) -> Ring:
        return self.multiplier.ring

    @classmethod
    def validate(cls, relations: Ideal, ambient: Ideal, multiplier: Poly) -> "FrobModule":
        """Construct after checking the three defining inclusions.

        Raises :class:`ValidationError` naming the failing inclusion and a
        witness generator, or :class:`RingMismatchError` on mixed rings.
        """
        ring = multiplier.ring
        if relations.ring != ring or ambient.ring != ring:
            raise RingMismatchError(
                "relations, ambient and multiplier must share one ring"
            )
        for g in relations.gens:
            if not ambient.contains(g):
                raise ValidationError(
                    f"relations are not contained in the ambient ideal: "
                    f"witness generator {g}",
                    witness=g,
                )
        rel_bracket = relations.bracket_power(1)
        for g in relations.gens:
            if not rel_bracket.contains(multiplier * g):
                raise ValidationError(
                    f"multiplier does not carry the relations into their "
                    f"bracket power: witness generator {g}",
                    witness=g,
                )
        amb_bracket = ambient.bracket_power(1)
        for g in ambient.gens:
            if not amb_bracket.contains(multiplier * g):
                raise ValidationError(
                    f"multiplier does not carry the ambient ideal into its "
                    f"bracket power: witness generator {g}",
                    witness=g,
                )
        return cls(relations, ambient, multiplier)

    @classmethod
    def principal(cls, multiplier: Poly) -> "FrobModule":
        """The module on the full ring with no relations: (0) <= (1), f."""
        ring = multiplier.ring
        return cls(Ideal(ring, ()), Ideal(ring, (ring.one,)), multiplier)

    def is_zero_module(self) -> bool:
        return self.relations == self.ambient

    def __eq__(self, other: object) -> bool:
        """Equality of presentations: both ideals agree, multipliers agree."""
        if not isinstance(other, FrobModule):
            return NotImplemented
        return (
            self.multiplier == other.multiplier
            and self.relations == other.relations
            and self.ambient == other.ambient
        )

    __hash__ = None  # type: ignore[assignment]

    # -- kernels and nilpotency -----------------------------------------

    def structural_kernel(self) -> Ideal:
        """Ideal presenting the kernel of the structural map.

        Computed as (relations^[q] : f) meet ambient; equals the ambient
        ideal when f == 0 (everything is killed).
        """
        if not self.multiplier:
            return self.ambient
        return (
            self.relations.bracket_power(1)
            .colon(self.multiplier)
            .intersection(self.ambient)
        )

    def _iterate_kernel(self, e: int) -> Ideal:
        # Level-e kernel ideal of the full quotient R/relations, not cut
        # down to the ambient ideal.  Keeping the chain at this level makes
        # its stabilized value depend only on (relations, multiplier), which
        # is what makes minimalize insensitive to the choice of ambient
        # presentation; submodule-level answers intersect afterwards.
        fe = self.multiplier ** iterate_exponent(self.ring.q, e)
        return self.relations.bracket_power(e).colon(fe)

    def nilpotency_order(self, e_max: int = 32) -> int | None:
        """Smallest e with the e-fold structural map zero, or None.

        None means the module is not nilpotent within the budget; the
        caller cannot distinguish "not nilpotent" from "order > e_max".
        """
        if e_max < 1:
            raise DomainError("the nilpotency budget must be >= 1")
        f = self.multiplier
        q = self.ring.q
        for e in range(1, e_max + 1):
            fe = f ** iterate_exponent(q, e)
            bracket = self.relations.bracket_power(e)
            if all(bracket.contains(fe * g) for g in self.ambient.gens):
                return e
        return None

    def _kernel_chain(self, e_max: int) -> tuple[Ideal, int]:
        # Ascending chain of iterated kernels; once two consecutive levels
        # agree the chain is frozen: K_{e+1} = (K_e^[q] : f) by the
        # colon/bracket exchange, so K_e = K_{e+1} forces
        # K_{e+2} = (K_{e+1}^[q] : f) = (K_e^[q] : f) = K_{e+1}.
        if not self.multiplier:
            return Ideal(self.ring, (self.ring.one,)).canonical(), 1
        prev = self._iterate_kernel(1).canonical()
        for e in range(1, e_max + 1):
            nxt = self._iterate_kernel(e + 1).canonical()
            if nxt == prev:
                return prev, e
            prev = nxt
        raise ResourceError(
            f"iterated kernel chain did not stabilize within {e_max} levels",
            partial=prev,
        )

    def nilpotent_part(self, e_max: int = 32) -> Ideal:
        """Ideal presenting the largest submodule killed by some iterate.

        The returned ideal J satisfies relations <= J <= ambient and J
        modulo the relations is the union of the iterated kernels inside
        this module.
        """
        part, _ = self._kernel_chain(e_max)
        return part.intersection(self.ambient).canonical()

    # -- the two minimalization moves --------------------------------------

    def mod_nilpotent(self, e_max: int = 32) -> "FrobModule":
        """Quotient by the largest iterate-killed submodule.

        The result presents the same quotient module with the stabilized
        kernel chain as its relations; the new relations depend only on the
        old relations and the multiplier, never on the ambient ideal, so
        every ambient presentation of one module is carried to one and the
        same quotient presentation.  The structural map of the result is
        injective; that is asserted, not assumed.
        """
        part, _ = self._kernel_chain(e_max)
        out = FrobModule(part, (self.ambient + part).canonical(), self.multiplier)
        if out.structural_kernel() != part:
            raise AssertionError(
                "quotient by the stabilized kernel chain must have an "
                "injective structural map"
            )
        return out

    def fr_inverse(self) -> "FrobModule":
        """Shrink the ambient ideal to the smallest one reached by the map.

        Replaces ambient with relations + root(f * ambient, 1): the least
        ideal J with relations <= J and f * ambient <= J^[q].  Iterating
        this step descends to the minimal model's ambient ideal.
        """
        shrunk = self.relations + ideal_root(
            self.ambient.scale(self.multiplier), 1
        )
        return FrobModule(self.relations, shrunk.canonical(), self.multiplier)

    def minimalize(
        self, kernel_budget: int = 32, iteration_budget: int = 64
    ) -> MinimalizeReport:
        """Compute the minimal model and certify it.

        First quotients by the stabilized iterated-kernel chain, then
        iterates the ambient shrinking step to its fixed point.  After the
        fixed point is reached, two further iterates are recomputed and
        checked equal, and the certificate re-verifies injectivity and
        fixedness on the result.

        The result is presentation independent: the new relations depend
        only on (relations, multiplier), and replacing this module by its
        quotient modulo nilpotents or by its shrunken submodule leads to
        the identical ideal pair.  A module whose minimal model is zero
        comes out with relations equal to ambient (the stabilized kernel
        chain on both sides).
        """
        part, chain_length = self._kernel_chain(kernel_budget)
        relations_min = part
        f = self.multiplier

        def shrink(ideal: Ideal) -> Ideal:
            return (relations_min + ideal_root(ideal.scale(f), 1)).canonical()

        cur = (self.ambient + part).canonical()
        iterations = 0
        while True:
            if f:
                nxt = shrink(cur)
            else:
                nxt = relations_min.canonical()
            if nxt == cur:
                break
            cur = nxt
            iterations += 1
            if iterations > iteration_budget:
                raise ResourceError(
                    f"ambient shrinking did not reach a fixed point within "
                    f"{iteration_budget} iterations",
                    partial=FrobModule(relations_min, cur, f),
                )
        if f:
            again = shrink(cur)
            once_more = shrink(again)
        else:
            again = once_more = relations_min.canonical()
        if again != cur or once_more != cur:
            raise AssertionError(
                "a repeated ambient iterate must stay fixed; the shrinking "
                "step is monotone"
            )
        result = FrobModule(relations_min, cur, f)
        certificate = Certificate(
            structural_map_injective=(
                result.structural_kernel() == result.relations
            ),
            fr_fixed=(result.fr_inverse().ambient == result.ambient),
        )
        if not (certificate.structural_map_injective and certificate.fr_fixed):
            raise AssertionError(
                "minimal model certificate failed on the computed fixed point"
            )
        return MinimalizeReport(
            result=result,
            kernel_chain_length=chain_length,
            fr_iterations=iterations,
            certificate=certificate,
        )

    def is_minimal(self) -> bool:
        """True when the structural map is injective and shrinking fixes it."""
        if self.structural_kernel() != self.relations:
            return False
        return self.fr_inverse().ambient == self.ambient

    def nil_equivalent(self, other: "FrobModule") -> bool:
        """Whether both presentations share one minimal model.

        Only defined for modules over the same ring with the same
        multiplier; anything else raises.
        """
        if not isinstance(other, FrobModule):
            raise TypeError("comparison partner must be a FrobModule")
        if other.ring != self.ring:
            raise RingMismatchError("cannot compare modules over different rings")
        if other.multiplier != self.multiplier:
            raise DomainError(
                "comparison is supported only for matching multipliers"
            )
        return self.minimalize().result == other.minimalize().result
