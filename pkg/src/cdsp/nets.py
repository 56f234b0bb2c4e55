"""Truncated two-parameter rational nets, forward differences, and the
brute-force complete-monotonicity oracle.

The oracle decides, with no floating tolerance, whether all signed
differences (-1)^{|beta|} D^beta a_alpha are nonnegative on a finite
window up to a maximum order.  A passing verdict therefore certifies
"no violation up to (order, window)" only; a failing verdict is an exact
counterexample to complete monotonicity of the full net.
"""
from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import ConstructionError, DimensionError, SchemaError
from .jsonutil import parse_rat, rat_str


@dataclass(frozen=True)
class MultiIndex2:
    """A pair of nonnegative integers indexing a grid point or an order."""

    i: int
    j: int

    def __post_init__(self):
        if self.i < 0 or self.j < 0:
            raise ValueError(f"multi-index must be componentwise nonnegative: {(self.i, self.j)}")

    @property
    def total(self) -> int:
        return self.i + self.j

    @classmethod
    def coerce(cls, value) -> "MultiIndex2":
        if isinstance(value, MultiIndex2):
            return value
        i, j = value
        return cls(int(i), int(j))


@dataclass(frozen=True)
class CmWitness:
    order: MultiIndex2
    base: MultiIndex2
    value: Fraction  # the signed difference (-1)^{|order|} D^order a_base, negative here


@dataclass(frozen=True)
class CmVerdict:
    passed: bool
    witness: CmWitness | None
    max_order_checked: int
    grid_used: tuple[int, int]

    def to_json(self) -> dict:
        doc = {
            "passed": self.passed,
            "max_order_checked": self.max_order_checked,
            "grid_used": list(self.grid_used),
            "witness": None,
        }
        if self.witness is not None:
            doc["witness"] = {
                "order": [self.witness.order.i, self.witness.order.j],
                "base": [self.witness.base.i, self.witness.base.j],
                "value": rat_str(self.witness.value),
            }
        return doc


@dataclass(frozen=True)
class Net2:
    """A width x height window of exact rationals, rows indexed by the
    first direction m, columns by the second direction n."""

    width: int
    height: int
    values: tuple[tuple[Fraction, ...], ...]

    def __post_init__(self):
        if self.width < 1 or self.height < 1:
            raise ConstructionError(f"window must be at least 1x1, got {self.width}x{self.height}")
        if len(self.values) != self.width or any(len(row) != self.height for row in self.values):
            raise ConstructionError("values do not fill the declared window")
        for m, row in enumerate(self.values):
            for n, v in enumerate(row):
                if not isinstance(v, Fraction):
                    raise ConstructionError(
                        f"non-rational value at ({m}, {n}): {v!r}", point=(m, n))

    def value(self, m: int, n: int) -> Fraction:
        return self.values[m][n]

    def to_json(self) -> dict:
        return {
            "width": self.width,
            "height": self.height,
            "values": [rat_str(v) for row in self.values for v in row],
        }

    @classmethod
    def from_json(cls, doc: dict, pointer: str = "") -> "Net2":
        try:
            width = int(doc["width"])
            height = int(doc["height"])
            flat = doc["values"]
        except (KeyError, TypeError, ValueError) as exc:
            raise SchemaError(f"net document malformed: {exc}", pointer) from exc
        if len(flat) != width * height:
            raise SchemaError(
                f"expected {width * height} values, got {len(flat)}", f"{pointer}/values")
        vals = tuple(
            tuple(parse_rat(flat[m * height + n], f"{pointer}/values/{m * height + n}")
                  for n in range(height))
            for m in range(width))
        return cls(width, height, vals)

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["m", "n", "value"])
        for m in range(self.width):
            for n in range(self.height):
                writer.writerow([m, n, rat_str(self.values[m][n])])
        return buf.getvalue()


def net_from_function(f: Callable[[int, int], Fraction], width: int, height: int) -> Net2:
    """Tabulate f over the window, failing loudly at the first bad point."""
    if width < 1 or height < 1:
        raise ConstructionError(f"window must be at least 1x1, got {width}x{height}")
    rows = []
    for m in range(width):
        row = []
        for n in range(height):
            try:
                v = f(m, n)
            except Exception as exc:
                raise ConstructionError(
                    f"function undefined at ({m}, {n}): {exc}", point=(m, n)) from exc
            try:
                row.append(Fraction(v))
            except (TypeError, ValueError) as exc:
                raise ConstructionError(
                    f"non-rational value at ({m}, {n}): {v!r}", point=(m, n)) from exc
        rows.append(tuple(row))
    return Net2(width, height, tuple(rows))


def forward_difference(net: Net2, order) -> Net2:
    """The mixed iterated difference D^order, on the shrunken window."""
    order = MultiIndex2.coerce(order)
    if order.i >= net.width or order.j >= net.height:
        raise DimensionError(
            f"order {(order.i, order.j)} exceeds window {net.width}x{net.height}")
    vals = [list(row) for row in net.values]
    for _ in range(order.i):
        vals = [[vals[m + 1][n] - vals[m][n] for n in range(len(vals[0]))]
                for m in range(len(vals) - 1)]
    for _ in range(order.j):
        vals = [[row[n + 1] - row[n] for n in range(len(row) - 1)] for row in vals]
    return Net2(net.width - order.i, net.height - order.j,
                tuple(tuple(row) for row in vals))


def _scaled_integer_grid(net: Net2) -> tuple[list[list[int]], int]:
    # Positive rescaling preserves every sign test and keeps the inner loop
    # in plain integers instead of Fractions.
    scale = 1
    for row in net.values:
        for v in row:
            scale = math.lcm(scale, v.denominator)
    grid = [[v.numerator * (scale // v.denominator) for v in row] for row in net.values]
    return grid, scale


def _orders_joint(max_order: int):
    for total in range(max_order + 1):
        for i in range(total + 1):
            yield (i, total - i)


def _orders_separate(max_order: int):
    yield (0, 0)
    for k in range(1, max_order + 1):
        yield (0, k)
        yield (k, 0)


def check_complete_monotone(net: Net2, max_order: int, mode: str = "joint") -> CmVerdict:
    """Exhaustive signed-difference test over the window.

    Joint mode tests every order beta with |beta| <= max_order, separate
    mode only the pure orders (k, 0) and (0, k).  Violations are searched
    in lexicographic (|beta|, beta, alpha) order, so the reported witness
    is reproducible.
    """
    if mode not in ("joint", "separate"):
        raise ValueError(f"mode must be 'joint' or 'separate', got {mode!r}")
    if max_order < 0:
        raise DimensionError("max_order must be nonnegative")
    if max_order >= min(net.width, net.height):
        raise DimensionError(
            f"max_order {max_order} too large for window {net.width}x{net.height}")
    grid, scale = _scaled_integer_grid(net)
    cache: dict[tuple[int, int], list[list[int]]] = {(0, 0): grid}

    def diff_grid(i: int, j: int) -> list[list[int]]:
        got = cache.get((i, j))
        if got is not None:
            return got
        if i > 0:
            prev = diff_grid(i - 1, j)
            d = [[prev[m + 1][n] - prev[m][n] for n in range(len(prev[0]))]
                 for m in range(len(prev) - 1)]
        else:
            prev = diff_grid(i, j - 1)
            d = [[row[n + 1] - row[n] for n in range(len(row) - 1)] for row in prev]
        cache[(i, j)] = d
        return d

    orders = _orders_joint(max_order) if mode == "joint" else _orders_separate(max_order)
    for i, j in orders:
        d = diff_grid(i, j)
        sgn = -1 if (i + j) % 2 else 1
        for m, row in enumerate(d):
            for n, v in enumerate(row):
                if sgn * v < 0:
                    witness = CmWitness(MultiIndex2(i, j), MultiIndex2(m, n),
                                        Fraction(sgn * v, scale))
                    return CmVerdict(False, witness, max_order, (net.width, net.height))
    return CmVerdict(True, None, max_order, (net.width, net.height))


def check_cm_1d(values: Sequence[Fraction], max_order: int) -> CmVerdict:
    """One-dimensional variant for sequences (line restrictions etc.).

    Witness orders and bases use the first component of a MultiIndex2.
    """
    if max_order < 0 or max_order >= len(values):
        raise DimensionError(
            f"max_order {max_order} too large for a sequence of length {len(values)}")
    scale = 1
    for v in values:
        scale = math.lcm(scale, Fraction(v).denominator)
    cur = [Fraction(v).numerator * (scale // Fraction(v).denominator) for v in values]
    for k in range(max_order + 1):
        sgn = -1 if k % 2 else 1
        for m, v in enumerate(cur):
            if sgn * v < 0:
                witness = CmWitness(MultiIndex2(k, 0), MultiIndex2(m, 0),
                                    Fraction(sgn * v, scale))
                return CmVerdict(False, witness, max_order, (len(values), 1))
        cur = [cur[m + 1] - cur[m] for m in range(len(cur) - 1)]
    return CmVerdict(True, None, max_order, (len(values), 1))
