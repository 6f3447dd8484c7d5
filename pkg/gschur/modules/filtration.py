"""
Standard Filtrations - gschur/modules/filtration.py

For λ ⊢ d and c with d + c ≤ n, Δ(ι_i(λ)) ⊗ Δ(ι_i(1^c)) carries the chain

    0 = M_0 ⊆ M_1 ⊆ … ⊆ M_t,   M_r = M_{r-1} + T(n,d+c)·(v_λ ⊗ w_{P_r})

over Ω_λ = {P_1 < … < P_t}, with M_r/M_{r-1} ≅ Δ(ι_i(λ + ε_{P_r})). Each step
is certified by generation, the weight and Y-annihilation conditions on
the generator, and the dimension count.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional, Sequence, Tuple

from gschur.combinat.partitions import Multipartition, Partition, iota, trim
from gschur.combinat.psets import PSet, omega_lambda, plus_epsilon
from gschur.combinat.tableaux import column_tableau
from gschur.core.errors import CertificationError, PreconditionError
from gschur.core.monitoring import log_event
from gschur.linalg.echelon import EchelonBuilder, Subspace, span_images
from gschur.linalg.sparse import SparseVector
from gschur.modules.standard import standard_dimension, standard_module
from gschur.modules.tensor import TensorModule
from gschur.schur.algebra import SchurAlgebra, TElement
from gschur.schur.heredity import heredity_elements
from gschur.superalg.data import HeredityData

# =============================================================================
# REPORTS
# =============================================================================


@dataclass
class FiltrationStep:
    index: int
    pset: PSet
    highest_weight: Multipartition
    generator: SparseVector
    parity: Optional[int]
    rank: int
    quotient_dim: int
    expected_dim: int
    weight_ok: bool
    y_annihilation_ok: bool
    subspace: Optional[Subspace] = field(default=None, repr=False)

    @property
    def dimension_ok(self) -> bool:
        return self.quotient_dim == self.expected_dim


@dataclass
class FiltrationReport:
    """The chain M_r with per-step certificates; `skipped` lists collapsed factors."""

    algebra: str
    la: Partition
    c: int
    label: int
    n: int
    tensor_dim: int
    steps: List[FiltrationStep] = field(default_factory=list)
    generation_ok: bool = False
    skipped: List[Multipartition] = field(default_factory=list)
    N: Optional[int] = None

    @property
    def factors(self) -> List[Multipartition]:
        return [step.highest_weight for step in self.steps]

    @property
    def dimension_sum_ok(self) -> bool:
        return (
            all(step.dimension_ok for step in self.steps)
            and sum(step.quotient_dim for step in self.steps) == self.tensor_dim
        )

    @property
    def certified(self) -> bool:
        return (
            self.generation_ok
            and self.dimension_sum_ok
            and all(step.weight_ok and step.y_annihilation_ok for step in self.steps)
        )

    def to_model(self):
        from gschur.schemas.reports import FiltrationReportModel, FiltrationStepReport

        return FiltrationReportModel(
            algebra=self.algebra,
            la=list(self.la),
            c=self.c,
            label=self.label,
            n=self.n,
            N=self.N,
            tensor_dim=self.tensor_dim,
            steps=[
                FiltrationStepReport(
                    index=step.index,
                    pset=list(step.pset),
                    highest_weight=[list(part) for part in step.highest_weight],
                    parity=step.parity,
                    rank=step.rank,
                    quotient_dim=step.quotient_dim,
                    expected_dim=step.expected_dim,
                    weight_ok=step.weight_ok,
                    y_annihilation_ok=step.y_annihilation_ok,
                )
                for step in self.steps
            ],
            skipped=[[list(part) for part in nu] for nu in self.skipped],
            generation_ok=self.generation_ok,
            dimension_sum_ok=self.dimension_sum_ok,
            certified=self.certified,
        )


# =============================================================================
# CONSTRUCTION
# =============================================================================


def _tensor_factors(
    la: Partition, c: int, label: int, T: SchurAlgebra
) -> Tuple[TensorModule, int]:
    slots = len(T.A.poset)
    slot = T.A.poset.position(label)
    V = standard_module(iota(slot, la, slots), T)
    W = standard_module(iota(slot, (1,) * c, slots), T)
    return TensorModule(V, W), slot


def _builder(base: Subspace) -> EchelonBuilder:
    builder = EchelonBuilder(base.dim)
    builder.extend(base.rows)
    return builder


def build_filtration(
    la: Sequence[int],
    c: int,
    label: int,
    n: int,
    A: HeredityData,
    T: Optional[SchurAlgebra] = None,
    strict: bool = False,
) -> FiltrationReport:
    la = trim(la)
    d = sum(la)
    if d + c > n:
        raise PreconditionError(f"requires d+c ≤ n (d = {d}, c = {c}, n = {n})")
    T = T or SchurAlgebra(A, n)
    if T.n != n:
        raise PreconditionError(f"algebra has width {T.n}, expected {n}")

    M, slot = _tensor_factors(la, c, label, T)
    W = M.W
    total = d + c
    slots = len(A.poset)
    operators = [
        (lambda v, t=t: M.act(TElement(total, {t: 1}), v)) for t in T.basis(total)
    ]
    data = heredity_elements(T, total)
    y_elements = [(mu, y) for mu in data.labels for y in data.Y[mu]]

    report = FiltrationReport(
        algebra=A.name, la=la, c=c, label=label, n=n, tensor_dim=M.dim
    )
    previous = Subspace((), M.dim)
    for r, P in enumerate(omega_lambda(la, c, n), start=1):
        nu = iota(slot, plus_epsilon(la, P, n), slots)
        w = W.index_of(column_tableau(P, label, A, n))
        g = M.vector(M.index(0, w))
        current = span_images([g], operators, M.dim, base=previous)

        eta_nu = data.X[nu][0]
        below = _builder(previous)
        weight_ok = below.contains(M.act(eta_nu, g) - g)
        y_ok = all(
            below.contains(M.act(y, g))
            for mu, y in y_elements
            if not (mu == nu and y == eta_nu)
        )
        step = FiltrationStep(
            index=r,
            pset=P,
            highest_weight=nu,
            generator=g,
            parity=M.parity_of(g),
            rank=current.rank,
            quotient_dim=current.rank - previous.rank,
            expected_dim=standard_dimension(nu, n, A),
            weight_ok=weight_ok,
            y_annihilation_ok=y_ok,
            subspace=current,
        )
        report.steps.append(step)
        log_event(
            "filtration_step",
            level="debug",
            r=r,
            pset=P,
            factor=nu,
            quotient=step.quotient_dim,
            expected=step.expected_dim,
        )
        previous = current

    report.generation_ok = previous.rank == M.dim
    log_event(
        "filtration_certified",
        algebra=A.name,
        la=la,
        c=c,
        label=label,
        n=n,
        steps=len(report.steps),
        certified=report.certified,
    )
    if strict and not report.certified:
        raise CertificationError(f"filtration of Δ({la}) ⊗ Δ(1^{c}) failed certification")
    return report


def truncated_tensor_filtration(
    la: Sequence[int],
    c: int,
    label: int,
    n: int,
    N: int,
    A: HeredityData,
    T: Optional[SchurAlgebra] = None,
) -> FiltrationReport:
    """
    Apply η^N_n to the width-N chain. Weight spaces supported in [n] survive;
    factors Δ_n(ν) with ν ∉ Par_+^X(n, d+c) vanish and land in `skipped`.
    """
    la = trim(la)
    d = sum(la)
    if N < d + c:
        raise PreconditionError(f"requires N ≥ d+c (N = {N}, d+c = {d + c})")
    if n > N:
        raise PreconditionError(f"requires N ≥ n (N = {N}, n = {n})")
    T = T or SchurAlgebra(A, N)
    full = build_filtration(la, c, label, N, A, T=T)

    M, _ = _tensor_factors(la, c, label, T)
    keep = [
        k for k, w in enumerate(M.weights) if all(not any(part[n:]) for part in w)
    ]
    truncated = FiltrationReport(
        algebra=A.name,
        la=la,
        c=c,
        label=label,
        n=n,
        N=N,
        tensor_dim=len(keep),
        generation_ok=full.generation_ok,
    )

    builder = EchelonBuilder(M.dim)
    previous_rank = 0
    for step in full.steps:
        for row in step.subspace.rows:
            builder.add(row.restrict(keep))
        quotient = builder.rank - previous_rank
        expected = standard_dimension(step.highest_weight, n, A)
        if quotient == 0 and expected == 0:
            truncated.skipped.append(step.highest_weight)
            continue
        truncated.steps.append(
            FiltrationStep(
                index=step.index,
                pset=step.pset,
                highest_weight=step.highest_weight,
                generator=step.generator.restrict(keep),
                parity=step.parity,
                rank=builder.rank,
                quotient_dim=quotient,
                expected_dim=expected,
                weight_ok=step.weight_ok,
                y_annihilation_ok=step.y_annihilation_ok,
            )
        )
        previous_rank = builder.rank
    truncated.generation_ok = full.generation_ok and builder.rank == len(keep)
    log_event(
        "filtration_certified",
        algebra=A.name,
        la=la,
        c=c,
        n=n,
        N=N,
        steps=len(truncated.steps),
        skipped=len(truncated.skipped),
        certified=truncated.certified,
    )
    return truncated


__all__ = [
    "FiltrationReport",
    "FiltrationStep",
    "build_filtration",
    "truncated_tensor_filtration",
]
