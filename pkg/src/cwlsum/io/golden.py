"""Evaluate ``expect`` lines of an ideal document and compare with the recorded value."""
from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
import time

from .. import criteria, dim2, fullset
from ..monomial import Monomial
from ..resolution import betti, has_linear_resolution, is_cwl, reg_value
from .parser import ExpectStmt, format_stmt, parse


@dataclass
class ExpectResult:
    stmt: ExpectStmt
    expected: object
    actual: object
    seconds: float

    @property
    def ok(self):
        return self.expected == self.actual

    def line(self):
        tag = "ok" if self.ok else "MISMATCH"
        return f"{tag:8s} {format_stmt(self.stmt)}  (got {self.actual}, {self.seconds:.3f}s)"


def _principal(I):
    if I.mu != 1:
        raise ValueError(f"{I} is not principal")
    return Monomial(I.ring, I.exponents[0])


def _var_indices(P):
    idx = []
    for e in P.exponents:
        if sum(e) != 1:
            raise ValueError(f"{P} is not generated by variables")
        idx.append(e.index(1))
    return idx


def evaluate(doc, st):
    """Actual value of one expectation, in the same form as ``st.value``."""
    key = st.key
    if key in ("fullset_valid", "assemble_cwl", "assemble"):
        name = st.args[0].name
        L, A = doc.fullsets[name], doc.assignments[name]
        if key == "fullset_valid":
            return fullset.validate_assignment(L, A).conclusion
        S = fullset.assemble(L, A, force=True)
        return is_cwl(S) if key == "assemble_cwl" else S
    args = [doc.eval(a) for a in st.args]
    I = args[0]
    J = args[1] if len(args) > 1 else None
    if key == "cwl":
        return is_cwl(I)
    if key == "linear":
        return has_linear_resolution(I)
    if key == "full":
        return dim2.is_full(I)
    if key == "mfull":
        return dim2.is_m_full(I)
    if key == "ordering":
        return dim2.cwl_ordering(I).success
    if key == "failure_step":
        return dim2.cwl_ordering(I).failure_step
    if key == "chain":
        return [f.exps for f in dim2.cwl_ordering(I).order]
    if key == "reg":
        return reg_value(I)
    if key == "pd":
        return betti(I).pd
    if key == "order":
        return I.order
    if key == "mu":
        return I.mu
    if key == "ideal":
        return I
    if key == "ord_length":
        return dim2.order_length_formula(I, J).witness("length")
    if key == "prime_product":
        return criteria.check_prime_product(_var_indices(I), J).conclusion
    if key == "linear_colon":
        return dim2.linear_colon_tests(I, _principal(J)).conclusion
    fn = {
        "fullsum": dim2.fullsum_verdict, "hv": criteria.check_hv_criterion,
        "componentwise": criteria.check_componentwise_criterion,
        "cwl_plus_linear": criteria.check_cwl_plus_linear, "nj_sum": criteria.check_nJ_sum,
        "reg_plus_one": dim2.reg_plus_one_verdict, "mu_additive": dim2.mu_additive_verdict,
        "ord_formula": dim2.order_length_formula,
    }[key]
    return fn(I, J).conclusion


def expected_value(doc, st):
    v = st.value
    if st.key in ("ideal", "assemble"):
        return doc.eval(v)
    if st.key == "chain":
        return [doc.eval(t).exponents[0] for t in v]
    return v


def check_document(doc):
    out = []
    for st in doc.expectations:
        t0 = time.perf_counter()
        actual = evaluate(doc, st)
        dt = time.perf_counter() - t0
        out.append(ExpectResult(st, expected_value(doc, st), actual, dt))
    return out


def golden_files():
    """Paths of the shipped golden documents, sorted by name."""
    root = resources.files("cwlsum") / "golden"
    return sorted((p for p in root.iterdir() if p.name.endswith(".ideal")), key=lambda p: p.name)


def load(path):
    return parse(path.read_text(encoding="utf-8"))


__all__ = ["ExpectResult", "check_document", "evaluate", "golden_files", "load"]
