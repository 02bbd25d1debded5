"""Game representations, comparison policy, and the relative-payoff transform.

Games are immutable value objects over a finite, positionally indexed action
set.  Payoff grids are row-major: ``payoffs[i][j]`` is the payoff to the
player choosing action ``i`` against an opponent choosing action ``j``.
Action identity is positional; labels are metadata.

Two numeric modes are supported:

* ``"rational"`` (default) -- entries are ``int`` or ``fractions.Fraction``;
  every comparison is exact and the tolerance is ignored (forced to 0).
* ``"float"`` -- entries are floats; equality and strictness are decided up
  to an absolute tolerance ``eps`` (default ``1e-9``).

Everything here is a pure function over immutable data and safe to evaluate
concurrently.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Union

Num = Union[int, Fraction, float]

RATIONAL = "rational"
FLOAT = "float"

DEFAULT_FLOAT_EPS = 1e-9


class SaddlescopeError(Exception):
    """Base class for every error raised by this library."""


class InvalidGameError(SaddlescopeError):
    """Structurally invalid game data: shapes, labels, entries, orderings."""


class SkewViolationError(InvalidGameError):
    """A grid declared skew-symmetric is not, within tolerance."""

    def __init__(self, row: int, col: int):
        self.row = row
        self.col = col
        super().__init__(
            f"grid is not skew-symmetric at cells ({row + 1}, {col + 1}) / "
            f"({col + 1}, {row + 1})"
        )


class CapacityError(SaddlescopeError):
    """An exhaustive search was asked to exceed its hard size cap."""


class QuasiconcavityError(SaddlescopeError):
    """The constructive saddle finder hit a single-peakedness contradiction."""

    def __init__(self, column: int, rows: tuple[int, int], message: str):
        self.column = column
        self.rows = rows
        super().__init__(message)


class LawViolationError(SaddlescopeError):
    """An internal cross-check that must hold by theorem failed (bug trap)."""


class ParameterError(SaddlescopeError):
    """Family parameters or grids outside their admissible domain."""


class ParseError(SaddlescopeError):
    """Malformed game document."""


def compare(a: Num, b: Num, eps: Num = 0) -> int:
    """Three-way comparison under the game's tolerance policy.

    Returns +1 if ``a`` exceeds ``b`` by more than ``eps``, -1 if it falls
    short by more than ``eps``, and 0 otherwise (equal within tolerance).
    Every strict-positivity test in this library means "``compare(x, 0) > 0``".
    """
    d = a - b
    if d > eps:
        return 1
    if -d > eps:
        return -1
    return 0


def _coerce_num(x: object, numeric: str, where: str) -> Num:
    if isinstance(x, bool):
        x = int(x)
    if numeric == RATIONAL:
        if isinstance(x, int):
            return x
        if isinstance(x, Fraction):
            return int(x) if x.denominator == 1 else x
        raise InvalidGameError(
            f"{where}: rational mode requires int or Fraction entries, got {type(x).__name__}"
        )
    if isinstance(x, (int, float, Fraction)):
        f = float(x)
        if not math.isfinite(f):
            raise InvalidGameError(f"{where}: entries must be finite, got {f!r}")
        return f
    raise InvalidGameError(f"{where}: cannot interpret {type(x).__name__} as a number")


def _coerce_grid(
    entries: Sequence[Sequence[object]], numeric: str
) -> tuple[tuple[Num, ...], ...]:
    rows = [tuple(row) for row in entries]
    m = len(rows)
    if m == 0:
        raise InvalidGameError("payoff grid must be at least 1x1")
    for i, row in enumerate(rows):
        if len(row) != m:
            raise InvalidGameError(
                f"payoff grid must be square: row {i + 1} has {len(row)} entries, expected {m}"
            )
    return tuple(
        tuple(_coerce_num(x, numeric, f"payoffs[{i}][{j}]") for j, x in enumerate(row))
        for i, row in enumerate(rows)
    )


@dataclass(frozen=True)
class ActionSet:
    """Ordered action labels, optionally carrying a numeric value per action.

    Values, when present, must be strictly increasing in label order (they
    are the grid points of generated games, in the game's natural units).
    """

    labels: tuple[str, ...]
    values: tuple[Num, ...] | None = None

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(s) for s in self.labels))
        if len(self.labels) < 1:
            raise InvalidGameError("action set must contain at least one action")
        if len(set(self.labels)) != len(self.labels):
            raise InvalidGameError("action labels must be pairwise distinct")
        if self.values is not None:
            vals = tuple(self.values)
            if len(vals) != len(self.labels):
                raise InvalidGameError(
                    f"got {len(vals)} action values for {len(self.labels)} actions"
                )
            for a, b in zip(vals, vals[1:]):
                if not b > a:
                    raise InvalidGameError("action values must be strictly increasing")
            object.__setattr__(self, "values", vals)

    @property
    def m(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class SymmetricGame:
    """A finite symmetric two-player game: shared action set, one payoff grid."""

    actions: ActionSet
    payoffs: tuple[tuple[Num, ...], ...]
    numeric: str = RATIONAL
    eps: Num | None = None
    name: str = ""

    def __post_init__(self):
        if self.numeric not in (RATIONAL, FLOAT):
            raise InvalidGameError(f"unknown numeric mode {self.numeric!r}")
        grid = _coerce_grid(self.payoffs, self.numeric)
        if len(grid) != self.actions.m:
            raise InvalidGameError(
                f"grid is {len(grid)}x{len(grid)} but there are {self.actions.m} actions"
            )
        object.__setattr__(self, "payoffs", grid)
        if self.numeric == RATIONAL:
            # tolerance is ignored in exact mode
            object.__setattr__(self, "eps", 0)
        else:
            eps = DEFAULT_FLOAT_EPS if self.eps is None else float(self.eps)
            if eps < 0:
                raise InvalidGameError("tolerance must be nonnegative")
            object.__setattr__(self, "eps", eps)

    @property
    def m(self) -> int:
        return self.actions.m

    @property
    def kind(self) -> str:
        return "symmetric"


@dataclass(frozen=True)
class SkewGame(SymmetricGame):
    """A symmetric zero-sum game: the grid satisfies delta(i,j) = -delta(j,i).

    Skew-symmetry forces a (tolerance-)zero diagonal, so these are exactly
    the relative-payoff games.
    """

    def __post_init__(self):
        super().__post_init__()
        grid, eps = self.payoffs, self.eps
        for i in range(self.m):
            for j in range(i, self.m):
                if compare(grid[i][j] + grid[j][i], 0, eps) != 0:
                    raise SkewViolationError(i, j)

    @property
    def delta(self) -> tuple[tuple[Num, ...], ...]:
        return self.payoffs

    @property
    def kind(self) -> str:
        return "skew"


def default_labels(m: int) -> tuple[str, ...]:
    return tuple(f"a{i + 1}" for i in range(m))


def make_game(
    payoffs: Sequence[Sequence[object]],
    labels: Sequence[str] | None = None,
    values: Sequence[Num] | None = None,
    numeric: str = RATIONAL,
    eps: Num | None = None,
    name: str = "",
) -> SymmetricGame:
    """Convenience constructor for a SymmetricGame with positional labels."""
    m = len(payoffs)
    acts = ActionSet(
        tuple(labels) if labels is not None else default_labels(m),
        tuple(values) if values is not None else None,
    )
    return SymmetricGame(acts, tuple(tuple(r) for r in payoffs), numeric, eps, name)


def make_skew(
    delta: Sequence[Sequence[object]],
    labels: Sequence[str] | None = None,
    values: Sequence[Num] | None = None,
    numeric: str = RATIONAL,
    eps: Num | None = None,
    name: str = "",
) -> SkewGame:
    """Convenience constructor for a SkewGame; validates skew-symmetry."""
    m = len(delta)
    acts = ActionSet(
        tuple(labels) if labels is not None else default_labels(m),
        tuple(values) if values is not None else None,
    )
    return SkewGame(acts, tuple(tuple(r) for r in delta), numeric, eps, name)


def validate_skew(grid: Sequence[Sequence[Num]], eps: Num = 0) -> bool:
    """True iff ``|grid(i,j) + grid(j,i)| <= eps`` for all i, j.

    The i == j case covers the diagonal, so a zero diagonal (within
    tolerance) is implied.  Raises InvalidGameError for a non-square grid.
    """
    rows = [tuple(r) for r in grid]
    m = len(rows)
    if m == 0 or any(len(r) != m for r in rows):
        raise InvalidGameError("skew validation requires a square grid")
    for i in range(m):
        for j in range(i, m):
            if compare(rows[i][j] + rows[j][i], 0, eps) != 0:
                return False
    return True


def relative_payoff(g: SymmetricGame) -> SkewGame:
    """The relative-payoff transform: delta(i,j) = payoffs(i,j) - payoffs(j,i).

    The result is always skew-symmetric (exactly so in rational mode).
    Applied to a game that is already skew this doubles the grid.
    """
    p = g.payoffs
    delta = tuple(
        tuple(p[i][j] - p[j][i] for j in range(g.m)) for i in range(g.m)
    )
    return SkewGame(g.actions, delta, g.numeric, g.eps, g.name)


def halve_embed(d: SymmetricGame) -> SymmetricGame:
    """The underlying symmetric game (X, delta/2) of a skew grid.

    Inverse embedding of :func:`relative_payoff`:
    ``relative_payoff(halve_embed(d)) == d`` holds exactly in rational mode.
    Raises SkewViolationError if the input grid is not skew.
    """
    grid, eps = d.payoffs, d.eps
    for i in range(d.m):
        for j in range(i, d.m):
            if compare(grid[i][j] + grid[j][i], 0, eps) != 0:
                raise SkewViolationError(i, j)
    if d.numeric == RATIONAL:
        half = tuple(
            tuple(Fraction(x) / 2 for x in row) for row in grid
        )
    else:
        half = tuple(tuple(x / 2.0 for x in row) for row in grid)
    return SymmetricGame(d.actions, half, d.numeric, d.eps, d.name)


def validate_ordering(order: Sequence[int], m: int) -> tuple[int, ...]:
    """Check that ``order`` is a permutation of range(m); return it as a tuple."""
    perm = tuple(order)
    if sorted(perm) != list(range(m)):
        raise InvalidGameError(
            f"ordering {perm!r} is not a permutation of the {m} action indices"
        )
    return perm


def identity_ordering(m: int) -> tuple[int, ...]:
    return tuple(range(m))


def permute_game(g: SymmetricGame, order: Sequence[int]) -> SymmetricGame:
    """Apply one permutation to rows, columns, and labels.

    Per-action values are dropped (they would no longer be increasing in the
    new label order).  Returns the same game type as the input.
    """
    perm = validate_ordering(order, g.m)
    acts = ActionSet(tuple(g.actions.labels[i] for i in perm), None)
    grid = tuple(
        tuple(g.payoffs[perm[i]][perm[j]] for j in range(g.m)) for i in range(g.m)
    )
    cls = type(g)
    return cls(acts, grid, g.numeric, g.eps, g.name)
