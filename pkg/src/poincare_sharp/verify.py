"""Self-verification suite: every exact identity the construction must satisfy.

Each check either proves an internal consistency property (the defining
conditions of the optimal polynomial, the energy identity, parity) or pins
the computed results against independently tabulated closed forms. All
comparisons are exact rational equality; there are no tolerances anywhere
in this module.

One reference entry is deliberately excluded from exact matching: the
m = 5 squared-constant polynomial as commonly tabulated fails the
endpoint identity (its numerators sum to -713584 at x = 1 where the
endpoint value forces 1536). The suite derives its own m = 5 family,
proves it against the endpoint and consistency checks, and reports the
single-coefficient discrepancy as an informational note rather than a
failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Optional

from . import legendre, sharp
from .exactnum import format_rational, rat
from .polyalg import Polynomial, definite_integral, monomial, poly, poly_eval

# Interior sample points used by every per-point check: zero, the quarter
# points, and a pair close to the endpoints.
X_GRID: tuple[Fraction, ...] = tuple(
    rat(n, d)
    for n, d in [(0, 1), (1, 4), (-1, 4), (1, 2), (-1, 2), (3, 4), (-3, 4), (9, 10), (-9, 10)]
)

# Tabulated closed forms for the squared constant: numerators in ascending
# degree over a common denominator. These are transcriptions of published
# results, kept verbatim so the match is coefficient-for-coefficient.
REFERENCE_FAMILIES: dict[int, tuple[int, tuple[int, ...]]] = {
    1: (6, (1, 0, 3)),
    2: (48, (8, 0, -21, 0, 30, 0, -5)),
    3: (3840, (297, 0, 1260, 0, -5370, 0, 5900, 0, -1575)),
    4: (3840, (297, 0, -1440, 0, 9030, 0, -20860, 0, 18585, 0, -5292)),
    6: (43008, (2200, 0, -15225, 0, 211050, 0, -1162455, 0, 3017700, 0,
                -3977127, 0, 2562714, 0, -637065)),
}

# The m = 5 entry as commonly tabulated. Its degree-6 numerator has the
# wrong sign, so it lives outside REFERENCE_FAMILIES and is only used to
# pinpoint the discrepancy in the informational note.
TABULATED_M5: tuple[int, tuple[int, ...]] = (
    26880, (1375, 0, 8400, 0, -95025, 0, -357560, 0, -597555, 0, 448056, 0, -121275)
)

# Hand-checked values of the squared constant at x = 0 for low orders.
ZERO_POINT_VALUES: dict[int, Fraction] = {
    1: rat(1, 6),
    2: rat(1, 6),
    3: rat(99, 1280),
    4: rat(99, 1280),
    5: rat(275, 5376),
    6: rat(275, 5376),
    7: rat(45325, 1179648),
    8: rat(45325, 1179648),
}


@dataclass(frozen=True)
class VerifyCheck:
    name: str
    ok: bool
    detail: str = ""
    info: bool = False


@dataclass(frozen=True)
class VerificationReport:
    max_m: int
    checks: tuple[VerifyCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks if not c.info)

    @property
    def failures(self) -> tuple[VerifyCheck, ...]:
        return tuple(c for c in self.checks if not c.ok and not c.info)

    def render(self) -> str:
        lines = []
        for check in self.checks:
            status = "INFO" if check.info else ("PASS" if check.ok else "FAIL")
            line = f"{status} {check.name}"
            if check.detail:
                line += f": {check.detail}"
            lines.append(line)
        failed = len(self.failures)
        counted = sum(1 for c in self.checks if not c.info)
        if failed == 0:
            lines.append(f"verification passed: {counted} checks up to m = {self.max_m}")
        else:
            lines.append(f"verification FAILED: {failed} of {counted} checks")
        return "\n".join(lines)


def _reference_poly(denominator: int, numerators: tuple[int, ...]) -> Polynomial:
    return poly(Fraction(n, denominator) for n in numerators)


def _table_for(max_m: int) -> legendre.LegendreTable:
    return legendre.shared_table(max_m + 1)


def run_verification(max_m: int = 8, table: Optional[legendre.LegendreTable] = None) -> VerificationReport:
    """Run every check up to order ``max_m`` and return the report.

    A ``table`` argument overrides the shared cache; the verification then
    exercises exactly the polynomials it contains, which is how corrupted
    tables are proven to be caught.
    """
    if max_m < 1:
        raise ValueError(f"max_m must be at least 1, got {max_m}")
    if table is None:
        table = _table_for(max_m)

    orders = range(1, max_m + 1)
    state: dict = {}

    def solutions() -> dict:
        if "sols" not in state:
            state["sols"] = {
                (m, x): sharp.solve_interior(m, x, table=table)
                for m in orders
                for x in X_GRID
            }
        return state["sols"]

    def families() -> dict:
        if "fams" not in state:
            state["fams"] = {m: sharp.solve_family(m, table=table) for m in orders}
        return state["fams"]

    checks: list[VerifyCheck] = []

    def run(name: str, body: Callable[[], tuple[bool, str]], info: bool = False) -> None:
        try:
            ok, detail = body()
        except Exception as exc:
            ok, detail = False, f"raised {exc!r}"
        checks.append(VerifyCheck(name=name, ok=ok, detail=detail, info=info))

    def check_legendre() -> tuple[bool, str]:
        report = legendre.check_identities(table)
        if report.passed:
            return True, f"{len(report.checks)} identity families up to degree {table.max_degree}"
        first = report.first_failure
        return False, f"{first.name}: {first.detail}"

    def check_construction() -> tuple[bool, str]:
        for (m, x), sol in solutions().items():
            where = f"m = {m}, x = {format_rational(x)}"
            if sol.Q(x) != 0:
                return False, f"optimal polynomial nonzero at its root, {where}"
            slope = sol.Q.derivative()
            if slope(-1) != -1 or slope(1) != 1:
                return False, f"endpoint slopes wrong, {where}"
            if sol.c <= 0:
                return False, f"nonpositive normalization constant, {where}"
            y = sharp.extremal(sol)
            for k in range(m):
                if y.moment(k) != 0:
                    return False, f"moment {k} of extremal nonzero, {where}"
            if y(x) != 1:
                return False, f"extremal not normalized at the kink, {where}"
        count = len(solutions())
        return True, f"{count} (m, x) cases, all conditions exact"

    def check_energy() -> tuple[bool, str]:
        for (m, x), sol in solutions().items():
            energy = sharp.energy_of_extremal(sol)
            if energy != 2 / sol.c:
                return False, f"energy != 2/c at m = {m}, x = {format_rational(x)}"
        return True, f"energy equals 2/c on {len(solutions())} cases"

    def check_endpoint_identity() -> tuple[bool, str]:
        for m, fam in families().items():
            target = sharp.endpoint_constant(m)
            for side in (1, -1):
                if poly_eval(fam.Bsq_poly, side) != target:
                    return False, f"family limit at x = {side} misses 2/(m(m+2)) for m = {m}"
        return True, f"family limits match the endpoint constant for m = 1..{max_m}"

    def check_parity() -> tuple[bool, str]:
        for m, fam in families().items():
            odd = [k for k in range(1, len(fam.Bsq_poly.coeffs), 2) if fam.Bsq_poly.coeffs[k] != 0]
            if odd:
                return False, f"odd-degree coefficients {odd} nonzero for m = {m}"
        return True, "squared-constant families are even polynomials"

    def check_consistency() -> tuple[bool, str]:
        for (m, x), sol in solutions().items():
            if poly_eval(families()[m].Bsq_poly, x) != sol.Bsq:
                return False, f"family and point solve disagree at m = {m}, x = {format_rational(x)}"
        return True, "family evaluation equals the per-point solve everywhere tested"

    def check_reference_families() -> tuple[bool, str]:
        matched = []
        for m, (den, nums) in sorted(REFERENCE_FAMILIES.items()):
            if m > max_m:
                continue
            if families()[m].Bsq_poly != _reference_poly(den, nums):
                return False, f"derived family disagrees with the tabulated closed form for m = {m}"
            matched.append(m)
        return True, f"exact coefficient match for m in {matched}"

    def note_m5() -> tuple[bool, str]:
        if max_m < 5:
            return True, "m = 5 outside the requested range"
        derived = families()[5].Bsq_poly
        tabulated = _reference_poly(*TABULATED_M5)
        diff = (derived - tabulated).coeffs
        wrong = [k for k, coeff in enumerate(diff) if coeff != 0]
        endpoint_sum = sum(TABULATED_M5[1])
        return True, (
            "the tabulated m = 5 polynomial is excluded from matching as a suspected "
            f"misprint: its numerators sum to {endpoint_sum} at x = 1 (endpoint "
            f"identity forces 1536) and it differs from the derived family exactly "
            f"in degree(s) {wrong}; the derived polynomial passes the endpoint and "
            "consistency checks above"
        )

    def check_zero_point() -> tuple[bool, str]:
        sols = solutions()
        for m, expected in ZERO_POINT_VALUES.items():
            if m <= max_m and sols[(m, rat(0))].Bsq != expected:
                return False, f"value at x = 0 misses the pinned constant for m = {m}"
        pairs = []
        for n in range(2, (max_m - 1) // 2 + 1):
            closed = sharp.bsq_zero_closed(n)
            if sols[(2 * n + 1, rat(0))].Bsq != closed:
                return False, f"closed form at x = 0 misses the solve for m = {2 * n + 1}"
            if 2 * n + 2 <= max_m and sols[(2 * n + 2, rat(0))].Bsq != closed:
                return False, f"closed form at x = 0 misses the solve for m = {2 * n + 2}"
            pairs.append(n)
        detail = "pinned x = 0 values match"
        if pairs:
            detail += f"; double-factorial closed form agrees for n in {pairs}"
        return True, detail

    def check_monotone() -> tuple[bool, str]:
        sols = solutions()
        for m in range(1, max_m):
            for x in X_GRID:
                if sols[(m + 1, x)].Bsq > sols[(m, x)].Bsq:
                    return False, f"constant grows from m = {m} to {m + 1} at x = {format_rational(x)}"
        return True, "squared constant is nonincreasing in the moment order"

    def check_endpoint_extremal() -> tuple[bool, str]:
        for m in orders:
            for side in (1, -1):
                q = sharp.endpoint_extremal(m, side, table=table)
                where = f"m = {m}, side = {side:+d}"
                if q(side) != 1:
                    return False, f"endpoint extremal not normalized, {where}"
                if q.derivative()(-side) != 0:
                    return False, f"slope at the opposite endpoint nonzero, {where}"
                for k in range(m):
                    if definite_integral(q * monomial(k), -1, 1) != 0:
                        return False, f"moment {k} nonzero, {where}"
        return True, f"normalization, flat far endpoint, and moments hold for m = 1..{max_m}"

    run("legendre-identities", check_legendre)
    run("construction-conditions", check_construction)
    run("energy-identity", check_energy)
    run("endpoint-identity", check_endpoint_identity)
    run("parity", check_parity)
    run("family-point-consistency", check_consistency)
    run("reference-families", check_reference_families)
    run("tabulated-m5-discrepancy", note_m5, info=True)
    run("zero-point-values", check_zero_point)
    run("monotone-in-m", check_monotone)
    run("endpoint-extremal", check_endpoint_extremal)

    return VerificationReport(max_m=max_m, checks=tuple(checks))
