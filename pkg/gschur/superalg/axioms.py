"""
Axiom Verification - gschur/superalg/axioms.py

Checks that heredity data on A really is heredity data: table laws
(associativity, unit, parity), the heredity axioms, the idempotent
orthogonality, consistency of declared idempotents and the highest-weight
property of every Δ(i). Also the conforming condition on B_a.
"""

from __future__ import annotations

from gschur.core.errors import HeredityViolation
from gschur.core.monitoring import log_event
from gschur.linalg.echelon import EchelonBuilder
from gschur.linalg.sparse import SparseVector
from gschur.superalg.data import HeredityData
from gschur.superalg.heredity import AxiomReport, HeredityInput, check_heredity


def heredity_input(A: HeredityData) -> HeredityInput:
    """A's heredity data in coordinates (every basis element is a probe)."""
    units = [SparseVector.unit(k, A.dim) for k in range(A.dim)]
    return HeredityInput(
        dim=A.dim,
        multiply=A.multiply,
        labels=A.poset.labels,
        lt=A.poset.lt,
        X={i: [A.color_vector(x) for x in A.X[i]] for i in A.poset.labels},
        Y={i: [A.color_vector(y) for y in A.Y[i]] for i in A.poset.labels},
        probes=units,
        describe=A.element_name,
    )


def _check_table(A: HeredityData, report: AxiomReport) -> None:
    for a in range(A.dim):
        for b in range(A.dim):
            ab = A.structure(a, b)
            parity = (A.parity_of_index(a) + A.parity_of_index(b)) % 2
            ok = all(A.parity_of_index(k) == parity for k in ab.support)
            witness = f"{A.basis[a].name} · {A.basis[b].name} is not homogeneous"
            report.record("parity", ok, "" if ok else witness)
            for c in range(A.dim):
                left = A.multiply(ab, SparseVector.unit(c, A.dim))
                right = A.multiply(SparseVector.unit(a, A.dim), A.structure(b, c))
                ok = left == right
                report.record(
                    "associativity",
                    ok,
                    "" if ok else f"({A.basis[a].name} {A.basis[b].name}) {A.basis[c].name}",
                )
    unit = A.unit()
    report.record("unit", unit is not None, "" if unit is not None else "no two-sided unit")


def _check_declared(A: HeredityData, report: AxiomReport) -> None:
    for color in A.colors():
        left, right = A.left_idempotent(color), A.right_idempotent(color)
        if color.flavor == "X" and left is None:
            report.record("declared_idempotents", False, f"{color.name} has no left idempotent")
        if color.flavor == "Y" and right is None:
            report.record("declared_idempotents", False, f"{color.name} has no right idempotent")
        if color.declared_left is not None and color.declared_left != left:
            report.record(
                "declared_idempotents",
                False,
                f"{color.name}: declared left idempotent {color.declared_left}, "
                f"table gives {left}",
            )
        if color.declared_right is not None and color.declared_right != right:
            report.record(
                "declared_idempotents",
                False,
                f"{color.name}: declared right idempotent {color.declared_right}, "
                f"table gives {right}",
            )
    report.record("declared_idempotents", True)


def _check_highest_weight(A: HeredityData, report: AxiomReport) -> None:
    from gschur.superalg.standard import standard_module_A

    for i in A.poset.labels:
        try:
            module = standard_module_A(A, i)
        except HeredityViolation as exc:
            report.record("highest_weight", False, f"Δ({i}): {exc}")
            continue
        ok = True
        for j in A.poset.labels:
            image = EchelonBuilder(module.dim)
            for k in range(module.dim):
                image.add(module.act_on_basis(A.e(j), k))
            if j == i:
                # e_i Δ(i) is spanned by v_i
                ok &= image.rank == 1 and image.contains(SparseVector.unit(0, module.dim))
            elif image.rank and not A.poset.lt(j, i):
                ok = False
        for k, x in enumerate(A.X[i]):
            ok &= module.act_on_basis(A.color_vector(x), 0) == SparseVector.unit(k, module.dim)
        report.record("highest_weight", ok, "" if ok else f"Δ({i})")


def verify_axioms(A: HeredityData) -> AxiomReport:
    """Full verification; marks A verified when every check passes."""
    report = AxiomReport(subject=A.name)
    _check_table(A, report)
    check_heredity(heredity_input(A), report)
    _check_declared(A, report)
    if report.checks.get("b", False):
        _check_highest_weight(A, report)
    if report.passed:
        A.mark_verified()
    log_event(
        "axioms_verified",
        algebra=A.name,
        passed=report.passed,
        failed=",".join(report.failed_axioms()) or "-",
    )
    return report


def is_conforming(A: HeredityData) -> bool:
    """B_a spans a subalgebra that contains 1_A."""
    ba = A.ba_indices
    span = EchelonBuilder(A.dim)
    span.extend(SparseVector.unit(k, A.dim) for k in ba)
    closed = all(span.contains(A.structure(a, b)) for a in ba for b in ba)
    unit = A.unit()
    return closed and unit is not None and span.contains(unit)


__all__ = ["heredity_input", "is_conforming", "verify_axioms"]
