"""Named verification checks over the pinned numeric and polynomial facts.

Every check records the fact it pins (``claim``), the expected value,
the recomputed value, and its runtime.  The suite is deterministic: the
fuzz check uses a fixed seed, and checks are reported sorted by name.
Exit-code convention for the CLI: 0 when everything passes, 1 otherwise.
"""

from __future__ import annotations

import fnmatch
import random
import time
from dataclasses import dataclass

from . import cgmb, jinv, magictables, poincare, qform, weyl
from ._data import fixtures as _fixture_doc
from .polyring import IntPoly, divides_ring, divides_semiring
from .rootsys import CartanType, build_root_system, opposition_involution


@dataclass(slots=True)
class CheckResult:
    name: str
    claim: str
    expected: object
    actual: object
    passed: bool
    runtime_ms: float


@dataclass(slots=True)
class VerifyReport:
    checks: list[CheckResult]

    @property
    def all_pass(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def exit_code(self) -> int:
        return 0 if self.all_pass else 1

    def to_json_obj(self) -> dict:
        return {
            "all_pass": self.all_pass,
            "checks": [
                {
                    "name": c.name,
                    "claim": c.claim,
                    "expected": c.expected,
                    "actual": c.actual,
                    "pass": c.passed,
                    "runtime_ms": round(c.runtime_ms, 3),
                }
                for c in self.checks
            ],
        }

    def to_text(self) -> str:
        lines = []
        for c in self.checks:
            mark = "✓" if c.passed else "✗"
            lines.append(f"{mark} {c.name} ({c.runtime_ms:.0f} ms): {c.claim}")
            if not c.passed:
                lines.append(f"    expected: {c.expected}")
                lines.append(f"    actual:   {c.actual}")
        status = "all checks passed" if self.all_pass else "FAILURES present"
        lines.append(f"{sum(c.passed for c in self.checks)}/{len(self.checks)} ok; {status}")
        return "\n".join(lines)


# -- cgmb fixture plumbing ---------------------------------------------------


def _resolve_total(spec: dict) -> IntPoly:
    p = spec["poincare"]
    fv = poincare.FlagVariety(
        CartanType.from_string(p["type"]), frozenset(p["variety"])
    )
    return poincare.poincare_poly(fv)


def _expand_terms(term_specs: list[dict]) -> list[cgmb.MotiveTerm]:
    out = []
    for spec in term_specs:
        block = IntPoly(spec["coeffs"]) if "coeffs" in spec else None
        for shift in spec["shifts"]:
            out.append(cgmb.MotiveTerm(spec["kind"], shift, block))
    return out


def fixture_names(doc: dict | None = None) -> list[str]:
    doc = doc or _fixture_doc()
    return [f["name"] for f in doc["fixtures"]]


def run_fixture(name: str, doc: dict | None = None) -> dict:
    """Run one named decomposition fixture; returns a JSON-ready result."""
    doc = doc or _fixture_doc()
    for f in doc["fixtures"]:
        if f["name"] == name:
            break
    else:
        raise ValueError(
            f"unknown fixture {name!r}; available: {', '.join(fixture_names(doc))}"
        )
    total = _resolve_total(f["total"])
    if f["kind"] == "identity":
        d = cgmb.Decomposition(total, tuple(_expand_terms(f["terms"])))
        ok, residual = cgmb.check_decomposition(d)
        return {
            "name": name,
            "kind": f["kind"],
            "pass": ok,
            "residual": [str(c) for c in residual.coeffs],
        }
    if f["kind"] == "residual-expressible":
        residual = total
        for term in _expand_terms(f["subtract"]):
            residual = residual - term.contribution()
        blocks = [IntPoly(b) for b in f["blocks"]]
        witness = cgmb.express_residual(residual, blocks)
        ok = witness is not None
        details: dict = {"name": name, "kind": f["kind"]}
        if ok:
            roundtrip = cgmb.witness_sum(witness, blocks) == residual
            min_shift = min((s for _, s in witness), default=0)
            ok = roundtrip and min_shift >= f["min_shift"]
            details["witness_terms"] = len(witness)
            details["min_shift"] = min_shift
            details["roundtrip"] = roundtrip
        details["pass"] = ok
        return details
    raise ValueError(f"unknown fixture kind {f['kind']!r}")


# -- individual checks -------------------------------------------------------


def _fv(label: str, nodes) -> poincare.FlagVariety:
    return poincare.FlagVariety(CartanType.from_string(label), frozenset(nodes))


def _dim(label: str, nodes) -> int:
    return poincare.dim_flag(_fv(label, nodes))


def _skeleton(target_nodes) -> list[int]:
    rs = build_root_system(CartanType("E", 6))
    return cgmb.tate_skeleton(rs, {3, 4, 5}, target_nodes, opposition_involution(rs))


def _conormed(nodes) -> IntPoly:
    return poincare.conormed_poincare(_fv("2E6", nodes))


def _conormed_shape(nodes) -> dict:
    p = _conormed(nodes)
    return {
        "degree": p.degree,
        "nonnegative": all(c >= 0 for c in p.coeffs),
        "value_at_1": p(1),
    }


def _conormed_dichotomy(nodes) -> dict:
    p = _conormed(nodes)
    q = IntPoly((1, 0, 0, 1))
    return {"ring": divides_ring(p, q)[0], "semiring": divides_semiring(p, q)[0]}


def _jinv_roundtrip() -> bool:
    for label in jinv.supported_labels():
        mx = jinv.max_profile(label)
        admissible = jinv.enumerate_admissible(label)
        if mx != admissible[-1]:
            return False
        if mx.values != max(p.values for p in admissible):
            return False
    return True


def _tables_jinv_consistency() -> bool:
    # every tabulated J-condition must be an admissible profile with the
    # same degree vector
    for row in magictables.condition_rows():
        if row.j_values is None:
            continue
        prof = jinv.profile(row.group, row.j_values)
        if prof.degrees != row.j_degrees:
            return False
        if prof not in jinv.enumerate_admissible(row.group):
            return False
    return True


def _killing_grid_dims() -> bool:
    return all(form.dim == 133 for *_init, form in qform.killing_grid())


def _killing_compact() -> dict:
    form = qform.af_killing_form_e7(
        qform.CompositionAlgebraR(qform.QUATERNION, True),
        qform.CompositionAlgebraR(qform.OCTONION, True),
        (1, 1, 1),
    )
    return {"signature": form.signature, "witt_index": form.witt_index}


def _killing_split_isotropic() -> bool:
    return all(
        form.witt_index > 0
        for q_def, o_def, _gamma, form in qform.killing_grid()
        if not q_def and not o_def
    )


# palindromicity / counting catalog: every maximal parabolic of these types,
# plus the two E8 quotients that stay small
def _flag_catalog() -> list[poincare.FlagVariety]:
    out = []
    for label in ("A3", "D4", "F4", "G2", "E6", "E7"):
        ct = CartanType.from_string(label)
        for i in range(1, ct.rank + 1):
            out.append(_fv(label, {i}))
    out.append(_fv("E6", {1, 6}))
    out.append(_fv("E8", {1}))
    out.append(_fv("E8", {8}))
    return out


def _palindromic_flags() -> bool:
    return all(poincare.poincare_poly(fv).is_palindromic() for fv in _flag_catalog())


def _coset_count_identity() -> bool:
    for fv in _flag_catalog():
        rs = build_root_system(fv.ambient)
        expected = weyl.weyl_order(rs) // weyl.parabolic_order(rs, fv.levi_nodes)
        if poincare.poincare_poly(fv)(1) != expected:
            return False
    return True


def _double_coset_partition() -> bool:
    cases = [
        ("E6", {3, 4, 5}, {1, 3, 4, 5, 6}),
        ("E6", {3, 4, 5}, {2, 3, 4, 5}),
        ("A3", {1}, {3}),
        ("D4", {2}, {1, 3, 4}),
    ]
    for label, left, right in cases:
        rs = build_root_system(CartanType.from_string(label))
        cells = weyl.double_cosets(rs, left, right)
        index = weyl.weyl_order(rs) // weyl.parabolic_order(rs, right)
        if sum(c.orbit_size for c in cells) != index:
            return False
    return True


_FUZZ_CASES = 10_000


def _semiring_fuzz() -> dict:
    rng = random.Random(20260808)
    violations = 0
    for case in range(_FUZZ_CASES):
        q = IntPoly(
            [rng.randint(1, 4)] + [rng.randint(0, 3) for _ in range(rng.randint(0, 5))]
        )
        style = case % 4
        if style == 0:
            r = IntPoly([rng.randint(0, 3) for _ in range(rng.randint(1, 6))])
            p = q * r
        elif style == 1:
            r = IntPoly([rng.randint(-3, 3) for _ in range(rng.randint(1, 6))])
            p = q * r
        else:
            p = IntPoly([rng.randint(-4, 4) for _ in range(rng.randint(0, 9))])
        semi, semi_quot = divides_semiring(p, q)
        ring, ring_quot = divides_ring(p, q)
        if semi:
            if not ring or semi_quot != ring_quot or q * semi_quot != p:
                violations += 1
            if any(c < 0 for c in semi_quot.coeffs):
                violations += 1
        if style == 0 and not semi:
            violations += 1
        if style in (0, 1) and not ring:
            violations += 1
    return {"cases": _FUZZ_CASES, "violations": violations}


def _eq1_identities() -> bool:
    for label in jinv.supported_labels():
        for prof in jinv.enumerate_admissible(label):
            p = jinv.upper_motive_poly(prof)
            want_deg = sum(d * (2**j - 1) for d, j in zip(prof.degrees, prof.values))
            want_val = 1
            for j in prof.values:
                want_val *= 2**j
            if p.degree != want_deg or p(1) != want_val:
                return False
    return True


def _e7_upper_poly() -> IntPoly:
    prof = jinv.profile("E7", (0, 1, 1, 1))
    return jinv.upper_motive_poly(prof)


_R2_E7 = IntPoly((1, 0, 0, 1, 0, 1, 0, 0, 1, 1, 0, 0, 1, 0, 1, 0, 0, 1))

_CHECKS: list[tuple[str, str, object]] = [
    (
        "dims-x2-e6",
        "the (2)-flag variety of E6 has dimension 21",
        lambda: (21, _dim("E6", {2})),
    ),
    (
        "dims-x16-e6",
        "the (1,6)-flag variety of E6 has dimension 24",
        lambda: (24, _dim("E6", {1, 6})),
    ),
    (
        "dims-y1-e7",
        "the (1)-flag variety of E7 has dimension 33",
        lambda: (33, _dim("E7", {1})),
    ),
    (
        "cgmb-skeleton-x2-e6",
        "kernel {3,4,5} against the (2)-variety Levi gives Tate shifts 0,6,15,21",
        lambda: ([0, 6, 15, 21], _skeleton({1, 3, 4, 5, 6})),
    ),
    (
        "cgmb-skeleton-x16-e6",
        "kernel {3,4,5} against the (1,6)-variety Levi gives Tate shifts 0,9,15,24",
        lambda: ([0, 9, 15, 24], _skeleton({2, 3, 4, 5})),
    ),
    (
        "conormed-x2-shape",
        "the conormed (2)-variety polynomial has degree 21, nonnegative coefficients, value 24 at t=1",
        lambda: (
            {"degree": 21, "nonnegative": True, "value_at_1": 24},
            _conormed_shape({2}),
        ),
    ),
    (
        "conormed-x16-shape",
        "the conormed (1,6)-variety polynomial has degree 24, nonnegative coefficients, value 24 at t=1",
        lambda: (
            {"degree": 24, "nonnegative": True, "value_at_1": 24},
            _conormed_shape({1, 6}),
        ),
    ),
    (
        "conormed-x2-dichotomy",
        "1 + t^3 divides the conormed (2)-variety polynomial in Z[t] but not in N0[t]",
        lambda: ({"ring": True, "semiring": False}, _conormed_dichotomy({2})),
    ),
    (
        "conormed-x16-dichotomy",
        "1 + t^3 divides the conormed (1,6)-variety polynomial in Z[t] but not in N0[t]",
        lambda: ({"ring": True, "semiring": False}, _conormed_dichotomy({1, 6})),
    ),
    (
        "henke-y1",
        "the split E7 (1)-variety polynomial decomposes as the pinned degree-33 block plus upper Borel blocks at shifts 2..14",
        lambda: (True, run_fixture("henke-y1")["pass"]),
    ),
    (
        "step5-residual-x2",
        "split (2)-variety minus the binary motive at shifts 0,6 is a positive-shift block sum",
        lambda: (True, run_fixture("step5-x2")["pass"]),
    ),
    (
        "step5-residual-x16",
        "split (1,6)-variety minus the binary motive at shifts 0,9 is a positive-shift block sum",
        lambda: (True, run_fixture("step5-x16")["pass"]),
    ),
    (
        "jinv-upper-borel-2e6",
        "profile (1,0,0) for 2E6 has upper Borel polynomial 1 + t^3",
        lambda: (
            [1, 0, 0, 1],
            list(jinv.upper_motive_poly(jinv.profile("2E6", (1, 0, 0))).coeffs),
        ),
    ),
    (
        "jinv-strongly-inner-e7",
        "profile (0,1,1,1) for E7 has upper Borel polynomial (1+t^3)(1+t^5)(1+t^9)",
        lambda: (list(_R2_E7.coeffs), list(_e7_upper_poly().coeffs)),
    ),
    (
        "jinv-table-roundtrip",
        "every tabulated maximal profile validates and tops its admissible enumeration",
        lambda: (True, _jinv_roundtrip()),
    ),
    (
        "tables-jinv-consistency",
        "every J-condition in the group-condition table is admissible with matching degrees",
        lambda: (True, _tables_jinv_consistency()),
    ),
    (
        "killing-dimension-grid",
        "the Killing form has dimension 133 for all 32 input configurations",
        lambda: (True, _killing_grid_dims()),
    ),
    (
        "killing-compact-form",
        "definite algebras with gamma (+,+,+) give the negative definite form",
        lambda: ({"signature": -133, "witt_index": 0}, _killing_compact()),
    ),
    (
        "killing-split-isotropy",
        "split algebras give an isotropic Killing form for every gamma",
        lambda: (True, _killing_split_isotropic()),
    ),
    (
        "props-palindromic-flags",
        "every cataloged flag Poincare polynomial is palindromic",
        lambda: (True, _palindromic_flags()),
    ),
    (
        "props-coset-counts",
        "every cataloged flag polynomial evaluates at t=1 to the coset count",
        lambda: (True, _coset_count_identity()),
    ),
    (
        "props-double-coset-partition",
        "double-coset orbit sizes always sum to the coset index",
        lambda: (True, _double_coset_partition()),
    ),
    (
        "props-semiring-implies-ring",
        "semiring divisibility implies ring divisibility over deterministic fuzzing",
        lambda: ({"cases": _FUZZ_CASES, "violations": 0}, _semiring_fuzz()),
    ),
    (
        "props-upper-poly-identities",
        "upper polynomial degree and value at 1 match the profile data for every admissible profile",
        lambda: (True, _eq1_identities()),
    ),
]


def check_names() -> list[str]:
    return sorted(name for name, _, _ in _CHECKS)


def run_verify(pattern: str | None = None) -> VerifyReport:
    """Run all checks (or those matching a glob), sorted by name."""
    selected = sorted(_CHECKS, key=lambda c: c[0])
    if pattern is not None:
        selected = [c for c in selected if fnmatch.fnmatch(c[0], pattern)]
        if not selected:
            raise ValueError(
                f"no checks match {pattern!r}; available: {', '.join(check_names())}"
            )
    results = []
    for name, claim, thunk in selected:
        t0 = time.perf_counter()
        expected, actual = thunk()
        ms = (time.perf_counter() - t0) * 1000.0
        results.append(
            CheckResult(name, claim, expected, actual, expected == actual, ms)
        )
    return VerifyReport(results)
