"""Cross-checks between the independent computation routes.

Every function here re-derives something twice and compares exactly.
The checks are deliberately redundant with the unit tests: they are
meant to run from the command line against user-chosen classes and
orders, not just against the frozen cases in the test suite.

Each check returns a CheckResult with a stable name, a pass flag, a
human-readable detail (empty on success, the first discrepancy
otherwise) and its wall-clock duration.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .closedform import (
    a_k_table,
    a_kl_table,
    chern_character_tables,
    corollary_via_dual,
    preset_class,
    taut_tables,
    to_universal,
    z_closed,
)
from .localisation import (
    hook_coefficient,
    level_pairs,
    pair_coefficient,
    z_series_hookform,
    z_series_residue,
)
from .series import InsufficientOrderError, Series1, Series2, series_log

# Frozen universal coefficients for the two presets whose tables are
# documented in the README.  Any drift anywhere in the pipeline is
# caught here first.
KNOWN_UNIVERSAL_VALUES: dict[str, dict[tuple[int, int], Fraction]] = {
    "chern-total": {
        (1, 1): Fraction(3, 2),
        (3, 1): Fraction(-1),
        (2, 2): Fraction(-7, 4),
        (5, 1): Fraction(2),
        (4, 2): Fraction(2),
        (3, 3): Fraction(3),
    },
    "chern-character": {
        (1, 1): Fraction(-3, 2),
        (3, 1): Fraction(-5, 12),
        (2, 2): Fraction(5, 24),
        (5, 1): Fraction(-7, 360),
        (4, 2): Fraction(7, 180),
        (3, 3): Fraction(-7, 240),
    },
}


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float


def _run(name: str, check: Callable[[], str]) -> CheckResult:
    """Time one check; the check returns an empty string on success."""
    start = time.perf_counter()
    detail = check()
    elapsed = time.perf_counter() - start
    return CheckResult(name, detail == "", detail, elapsed)


def _first_difference(a: Series2, b: Series2, label_a: str, label_b: str) -> str:
    for degree in range(min(a.order, b.order) + 1):
        row_a = a.homogeneous(degree)
        row_b = b.homogeneous(degree)
        if row_a != row_b:
            for i, (va, vb) in enumerate(zip(row_a, row_b)):
                if va != vb:
                    return (
                        f"first difference at x^{i} y^{degree - i}: "
                        f"{label_a} gives {va}, {label_b} gives {vb}"
                    )
    return ""


def _check_triple(f: Series1, order: int) -> str:
    closed = z_closed(f, order)
    hookform = z_series_hookform(f.truncate(order), order)
    residue = z_series_residue(f, order)
    if closed != hookform:
        return _first_difference(closed, hookform, "closed form", "fixed-point sum")
    if closed != residue:
        return _first_difference(closed, residue, "closed form", "residue extraction")
    return ""


def _check_log_exp(f: Series1, order: int) -> str:
    logarithm = series_log(z_closed(f, order))
    table = a_kl_table(f, order)
    accumulated: dict[tuple[int, int], Fraction] = {}

    def add(i: int, j: int, value: Fraction) -> None:
        accumulated[(i, j)] = accumulated.get((i, j), f.ring.zero) + value

    for k in range(1, order):
        for l in range(1, order + 1 - k):
            value = table.value(k, l)
            if value == 0:
                continue
            add(k + l, 0, value)
            add(0, k + l, value)
            add(k, l, value)
            add(l, k, value)
    rebuilt = Series2.from_dict(accumulated, order, f.ring)
    if logarithm != rebuilt:
        return _first_difference(logarithm, rebuilt, "log of Z", "double sum of a_kl")
    return ""


def _check_parity(f: Series1, order: int) -> str:
    a_k = a_k_table(f, order)
    for k in range(2, order + 1, 2):
        if a_k[k] != 0:
            return f"a_{k} = {a_k[k]} but even-index coefficients must vanish"
    z = z_closed(f, order)
    for degree in range(1, order + 1, 2):
        row = z.homogeneous(degree)
        if any(row):
            return f"Z has a nonzero layer in odd total degree {degree}"
    return ""


def _check_symmetry(f: Series1, order: int) -> str:
    z = z_closed(f, order)
    if z != z.swap():
        return _first_difference(z, z.swap(), "Z(x, y)", "Z(y, x)")
    return ""


def _check_reduction(f: Series1, bound: int) -> str:
    for n in range(bound + 1):
        for pair in level_pairs(n):
            general = pair_coefficient(f, pair, 2)
            hooks = hook_coefficient(f, pair)
            if general != hooks:
                return (
                    f"pair {pair}: general twist-2 coefficient {general} "
                    f"differs from hook form {hooks}"
                )
    return ""


def _check_trivial_baseline(order: int) -> str:
    degree = min(order, 4)
    one = preset_class("trivial", degree + 2).f
    if z_closed(one, degree) != Series2.one(degree):
        return "Z for the trivial class is not identically 1"
    a_k = a_k_table(one, degree)
    if a_k[1] != 1 or any(a_k[k] != 0 for k in range(2, degree + 1)):
        return f"trivial class single-index table is not (1, 0, 0, ...): {a_k}"
    if any(value != 0 for value in a_kl_table(one, degree).entries.values()):
        return "trivial class pair table has a nonzero entry"
    taut_a_k, taut_pairs = taut_tables(one, degree)
    if taut_a_k[1] != 1 or any(taut_a_k[k] != 0 for k in range(2, degree + 1)):
        return "trivial class tautological single-index table is not (1, 0, 0, ...)"
    if any(value != 0 for value in taut_pairs.entries.values()):
        return "trivial class tautological pair table has a nonzero entry"
    return ""


def _check_dual(bound: int) -> str:
    for n in range(2, bound + 1, 2):
        slice_table = corollary_via_dual(n)
        _, direct = chern_character_tables(n)
        for (k, l), value in slice_table.entries.items():
            expected = direct.value(k, l)
            if value != expected:
                return (
                    f"dual-number route gives a_({k},{l}) = {value}, "
                    f"direct formula gives {expected}"
                )
    return ""


def _check_anchors(name: str) -> str:
    anchors = KNOWN_UNIVERSAL_VALUES[name]
    if name == "chern-character":
        universal = to_universal(chern_character_tables(6)[1])
    else:
        universal = to_universal(a_kl_table(preset_class(name, 7).f, 6))
    for (k, l), expected in anchors.items():
        actual = universal.value(k, l)
        if actual != expected:
            return f"universal a^({k},{l}) = {actual}, frozen anchor says {expected}"
    return ""


def verify_multiplicative(f: Series1, name: str, order: int) -> list[CheckResult]:
    """The full cross-check battery for a multiplicative class.

    The class series must carry two orders of slack beyond ``order``
    because the residue route divides by (x - y) twice.
    """
    if order < 2:
        raise ValueError("verification needs order at least 2")
    if f.order < order + 2:
        raise InsufficientOrderError(
            f"insufficient precision: verification at order {order} needs the class "
            f"series to degree {order + 2}, got order {f.order}"
        )
    results = [
        _run("triple-agreement", lambda: _check_triple(f, order)),
        _run("log-exp-consistency", lambda: _check_log_exp(f, order)),
        _run("parity", lambda: _check_parity(f, order)),
        _run("symmetry", lambda: _check_symmetry(f, order)),
        _run("fixed-point-reduction", lambda: _check_reduction(f, min(order, 6))),
        _run("triviality-baseline", lambda: _check_trivial_baseline(order)),
        _run("dual-number-oracle", lambda: _check_dual(min(order, 6))),
    ]
    if name in KNOWN_UNIVERSAL_VALUES:
        results.append(_run("universal-anchors", lambda: _check_anchors(name)))
    return results


def verify_chern_character(order: int) -> list[CheckResult]:
    """Cross-checks for the Chern character, which has no defining series.

    The direct factorial formulas are compared against the dual-number
    route degree by degree, and the universal conversion is pinned to
    its frozen anchor values.
    """
    if order < 2:
        raise ValueError("verification needs order at least 2")

    def direct_parity() -> str:
        a_k, _ = chern_character_tables(order)
        for k in range(2, order + 1, 2):
            if a_k[k] != 0:
                return f"a_{k} = {a_k[k]} but even-index coefficients must vanish"
        return ""

    return [
        _run("dual-number-oracle", lambda: _check_dual(min(order, 12))),
        _run("parity", direct_parity),
        _run("universal-anchors", lambda: _check_anchors("chern-character")),
    ]
