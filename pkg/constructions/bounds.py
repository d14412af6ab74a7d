"""
Rainbowless - Closed-Form Bounds
===================================
Evaluates the known lower and upper bounds on gr_k(K3 : H) for a target
and a color count, tagging every number with the formula it came from.

Formula anchors used in reports:
    layered-lower-bound   R + (s-1)(k-2)
    s2-exact              R + (k-2) when s(H) = 2
    k33-exact             the K3,m bracket closing at 2k + 14 for K3,3
    k3m-bracket           [R + 2(k-2), max(6m-2, R) + 2(k-2)] for K3,m
    general-bipartite     [R + (l-1)(k-2), (R+k-3)(l-1) + 1] for Kl,m
    matching-exact        n_1 + 1 + sum(n_i - 1)
    p3-forest-bracket     2n_1 + 1 + sum(n_i - 1) up to the logarithmic
                          and quadratic upper bounds; exact when n_1 = 2
    exoo-divisibility     lower bound on R(K2,n) from factoring 4n - 4
    k3m-ramsey-range      2^((3m-1)/(3+m)) <= R(K3,m) <= 8m - 2
"""

from dataclasses import dataclass, field
from math import ceil, log
from typing import Sequence

from sympy import divisors, factorint

from coloring.targets import TargetGraph, TargetKind
from core.errors import MissingR, UnsupportedTarget

# Two-color Ramsey numbers R(H, H) known exactly
KNOWN_R = {
    "K2,2": 6,
    "K2,3": 10,
    "K3,3": 18,
}


# =============================================================================
# Exoo-style divisibility bound
# =============================================================================

@dataclass
class ExooBound:
    """
    Attributes:
        value:   4n - 3 when the power of two is positive, else 4n - 4.
        t:       Exponent of the power of two.
        factors: The admissible factors k_i.
    """

    value: int
    t: int
    factors: list[int]


def _is_prime_power(x: int) -> bool:
    return x >= 2 and len(factorint(x)) == 1


def _admissible(k: int) -> bool:
    if _is_prime_power(k - 1) and (k - 1) % 4 == 3:
        return True
    return k % 2 == 0 and _is_prime_power(k // 2 - 1) and (k // 2 - 1) % 4 == 1


def _factor_into_admissible(m: int, smallest: int = 2) -> list[int] | None:
    if m == 1:
        return []
    for d in divisors(m):
        if d < smallest or not _admissible(d):
            continue
        rest = _factor_into_admissible(m // d, d)
        if rest is not None:
            return [d, *rest]
    return None


def exoo_lower_bound(n: int) -> ExooBound | None:
    """
    Lower bound on R(K2,n, K2,n) from a factorization 4n - 4 = 2^t k_1...k_s.

    Each k_i must be p^r + 1 with p^r = 3 mod 4, or 2(q^u + 1) with
    q^u = 1 mod 4 (p^r, q^u prime powers).  Larger t is tried first.
    """
    if n < 2:
        raise ValueError(f"n must be at least 2, got {n}")
    total = 4 * n - 4
    top = (total & -total).bit_length() - 1
    for t in range(top, -1, -1):
        factors = _factor_into_admissible(total >> t)
        if factors is not None:
            return ExooBound(4 * n - 3 if t > 0 else 4 * n - 4, t, factors)
    return None


# =============================================================================
# Bounds report
# =============================================================================

@dataclass
class BoundsReport:
    """
    Evaluated bounds on gr_k(K3 : H).

    Attributes:
        target:       The target H.
        k:            Number of colors.
        r_value:      R(H, H) used (None when only a range is known).
        r_source:     Where r_value came from.
        lower:        Best lower bound.
        upper:        Best integer upper bound, if any.
        upper_real:   Real-valued upper bound before rounding, if any.
        exact:        lower == upper.
        formula_refs: Anchors of every formula applied.
        sources:      Field name -> anchor for lower / upper / r_value.
        sizes:        Per-color sizes for linear forest targets.
    """

    target: TargetGraph
    k: int
    r_value: int | None
    r_source: str
    lower: int
    upper: int | None = None
    upper_real: float | None = None
    formula_refs: list[str] = field(default_factory=list)
    sources: dict[str, str] = field(default_factory=dict)
    sizes: list[int] | None = None

    @property
    def exact(self) -> bool:
        return self.upper is not None and self.lower == self.upper

    def to_dict(self) -> dict:
        return {
            "target": self.target.label,
            "k": self.k,
            "r_value": self.r_value,
            "r_source": self.r_source,
            "lower": self.lower,
            "upper": self.upper,
            "upper_real": self.upper_real,
            "exact": self.exact,
            "formula_refs": list(self.formula_refs),
            "sources": dict(self.sources),
            "sizes": self.sizes,
        }


def _forest_sizes(H: TargetGraph, k: int, sizes: Sequence[int] | None) -> list[int]:
    if sizes is None:
        return [H.size] * k
    sizes = sorted(sizes, reverse=True)
    if len(sizes) != k:
        raise ValueError(f"{len(sizes)} sizes for {k} colors")
    return sizes


def _known_r(H: TargetGraph) -> tuple[int | None, str]:
    if H.label in KNOWN_R:
        return KNOWN_R[H.label], f"known value R({H.label})"
    if H.kind is TargetKind.MATCHING:
        return 3 * H.size - 1, "matching-exact with k=2"
    if H.kind is TargetKind.P3_FOREST:
        return 4 * H.size - 1, "R(tP3, tP3) = 3t + t - 1"
    return None, ""


def evaluate_bounds(
    H: TargetGraph,
    k: int,
    r_value: int | None = None,
    sizes: Sequence[int] | None = None,
) -> BoundsReport:
    """
    Raises:
        MissingR:          A formula needs R(H, H) and none is known.
        UnsupportedTarget: H is not bipartite.
    """
    if k < 2:
        raise ValueError(f"k must be at least 2, got {k}")
    if not H.is_bipartite:
        raise UnsupportedTarget(f"{H.label} is not bipartite")

    if H.kind is TargetKind.MATCHING:
        return _matching_report(H, k, r_value, sizes)
    if H.kind is TargetKind.P3_FOREST:
        return _forest_report(H, k, r_value, sizes)

    s = H.s_value
    r_source = "given"
    if r_value is None:
        r_value, r_source = _known_r(H)

    if r_value is None:
        return _report_without_r(H, k)

    lower = r_value + (s - 1) * (k - 2)
    report = BoundsReport(H, k, r_value, r_source, lower)
    report.formula_refs.append("layered-lower-bound")
    report.sources["lower"] = "layered-lower-bound"
    report.sources["r_value"] = r_source

    if s == 2:
        report.upper = r_value + (k - 2)
        report.formula_refs.append("s2-exact")
        report.sources["upper"] = "s2-exact"
    if H.kind is TargetKind.COMPLETE_BIPARTITE and H.size >= 2:
        l, m = H.size, H.other
        general_upper = (r_value + k - 3) * (l - 1) + 1
        candidates = [(general_upper, "general-bipartite")]
        if l == 3:
            candidates.append((max(6 * m - 2, r_value) + 2 * (k - 2), "k3m-bracket"))
        for value, anchor in candidates:
            report.formula_refs.append(anchor)
            if report.upper is None or value < report.upper:
                report.upper = value
                report.sources["upper"] = anchor
    if (H.kind, H.size, H.other) == (TargetKind.COMPLETE_BIPARTITE, 3, 3) and report.exact:
        # the K3,m bracket is tight for m = 3 once R >= 16
        report.formula_refs.append("k33-exact")
    assert report.upper is None or report.lower <= report.upper
    return report


def _report_without_r(H: TargetGraph, k: int) -> BoundsReport:
    """Fall back on the Ramsey ranges stated for K3,m and K2,n."""
    if H.kind is TargetKind.COMPLETE_BIPARTITE and H.size == 3:
        m = H.other
        r_low = ceil(2 ** ((3 * m - 1) / (3 + m)))
        r_high = 8 * m - 2
        report = BoundsReport(
            H, k, None, "k3m-ramsey-range",
            r_low + 2 * (k - 2),
            max(6 * m - 2, r_high) + 2 * (k - 2),
        )
        report.formula_refs = ["k3m-ramsey-range", "k3m-bracket"]
        report.sources = {"lower": "k3m-bracket", "upper": "k3m-bracket"}
        return report
    if H.kind is TargetKind.COMPLETE_BIPARTITE and H.size == 2:
        exoo = exoo_lower_bound(H.other)
        if exoo is not None:
            report = BoundsReport(H, k, None, "exoo-divisibility", exoo.value + (k - 2))
            report.formula_refs = ["exoo-divisibility", "layered-lower-bound"]
            report.sources = {"lower": "exoo-divisibility"}
            return report
    raise MissingR(f"R({H.label}, {H.label}) is required for {H.label}")


def _matching_report(H: TargetGraph, k: int, r_value: int | None, sizes) -> BoundsReport:
    ns = _forest_sizes(H, k, sizes)
    value = ns[0] + 1 + sum(n_i - 1 for n_i in ns)
    r = r_value if r_value is not None else 3 * ns[0] - 1
    report = BoundsReport(H, k, r, "given" if r_value is not None else "matching-exact with k=2",
                          value, value, sizes=ns)
    report.formula_refs = ["matching-exact"]
    report.sources = {"lower": "matching-exact", "upper": "matching-exact"}
    if all(n_i == 2 for n_i in ns):
        report.formula_refs.append("s2-exact")
    return report


def _forest_report(H: TargetGraph, k: int, r_value: int | None, sizes) -> BoundsReport:
    ns = _forest_sizes(H, k, sizes)
    n1 = ns[0]
    lower = 2 * n1 + 1 + sum(n_i - 1 for n_i in ns)
    r = r_value if r_value is not None else 4 * n1 - 1
    report = BoundsReport(H, k, r, "given" if r_value is not None else "R(tP3, tP3) = 3t + t - 1",
                          lower, sizes=ns)
    report.formula_refs = ["p3-forest-bracket"]
    report.sources = {"lower": "p3-forest-bracket"}

    if n1 == 2:
        report.upper = lower
        report.sources["upper"] = "p3-forest-bracket"
        return report

    quadratic = 4 * n1 * n1 + (n1 - 1) * (k - 2) - 1
    report.upper = quadratic
    report.sources["upper"] = "p3-forest-bracket (quadratic)"
    if n1 >= 2:
        real = 4 * (n1 - 1) + (9 * n1 - 3) / 2 * log(3 * n1 / 2 - 1) + 1 + (n1 - 1) * (k - 2)
        report.upper_real = real
        if ceil(real) < report.upper:
            report.upper = ceil(real)
            report.sources["upper"] = "p3-forest-bracket (logarithmic)"
    report.upper = max(report.upper, lower)
    return report
