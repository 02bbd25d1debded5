"""Pure saddle points of symmetric zero-sum games.

The brute-force enumerator :func:`pure_saddle_points` is the oracle all
existence claims are checked against.  :func:`saddle_exists` answers the
same question through the generalized rock-paper-scissors test only; the
two must agree, which the test suite enforces as a law.
"""

from __future__ import annotations

import itertools
from typing import Iterator, NamedTuple, Sequence

from .core import (
    CapacityError,
    InvalidGameError,
    Num,
    QuasiconcavityError,
    LawViolationError,
    SkewGame,
    compare,
    identity_ordering,
    validate_ordering,
)


class SaddlePoint(NamedTuple):
    """An action pair whose payoff is a column maximum and a row minimum."""

    row: int
    col: int
    value: Num


def _require_skew(d: SkewGame) -> SkewGame:
    if not isinstance(d, SkewGame):
        raise InvalidGameError(
            "expected a skew (symmetric zero-sum) game; apply relative_payoff first"
        )
    return d


def best_response_set(d: SkewGame, col: int) -> set[int]:
    """Rows maximizing delta(., col) under the tolerance comparison."""
    _require_skew(d)
    if not 0 <= col < d.m:
        raise InvalidGameError(f"column index {col} out of range for m={d.m}")
    delta, eps = d.delta, d.eps
    best: set[int] = set()
    for r in range(d.m):
        v = delta[r][col]
        if all(compare(delta[s][col], v, eps) <= 0 for s in range(d.m)):
            best.add(r)
    return best


def pure_saddle_points(d: SkewGame) -> list[SaddlePoint]:
    """Exhaustive enumeration of pure saddle points.

    Cell (i, j) qualifies iff delta(i, j) is maximal in column j and minimal
    in row i.  This brute force is deliberately independent of the
    characterization in :func:`saddle_exists`.
    """
    _require_skew(d)
    delta, eps, m = d.delta, d.eps, d.m
    out: list[SaddlePoint] = []
    for i in range(m):
        for j in range(m):
            v = delta[i][j]
            if all(compare(delta[r][j], v, eps) <= 0 for r in range(m)) and all(
                compare(delta[i][c], v, eps) >= 0 for c in range(m)
            ):
                out.append(SaddlePoint(i, j, v))
    return out


def symmetric_saddle_actions(d: SkewGame) -> set[int]:
    """Actions x with (x, x) a saddle point: delta(r, x) <= 0 for every row r.

    The zero diagonal of a skew game collapses the row-minimum and
    column-maximum conditions into this single column test.  The set is
    nonempty iff any saddle point exists at all.
    """
    _require_skew(d)
    delta, eps, m = d.delta, d.eps, d.m
    return {
        x for x in range(m) if all(compare(delta[r][x], 0, eps) <= 0 for r in range(m))
    }


def is_grps(d: SkewGame) -> bool:
    """Generalized rock-paper-scissors test: every column has a strictly
    positive entry."""
    _require_skew(d)
    delta, eps, m = d.delta, d.eps, d.m
    return all(
        any(compare(delta[r][c], 0, eps) > 0 for r in range(m)) for c in range(m)
    )


def saddle_exists(d: SkewGame) -> bool:
    """A pure saddle point exists iff the game is not generalized RPS.

    This is decided purely through :func:`is_grps` and must coincide with
    non-emptiness of :func:`pure_saddle_points`; the agreement is a tested
    law, not an assumption.
    """
    return not is_grps(d)


def _column_single_peaked(
    delta: Sequence[Sequence[Num]], order: Sequence[int], j: int, eps: Num
) -> bool:
    # single peak with plateaus: no strict rise after a strict fall
    col = order[j]
    fell = False
    prev = delta[order[0]][col]
    for i in range(1, len(order)):
        cur = delta[order[i]][col]
        c = compare(cur, prev, eps)
        if c > 0 and fell:
            return False
        if c < 0:
            fell = True
        prev = cur
    return True


def is_quasiconcave_under(d: SkewGame, order: Sequence[int]) -> bool:
    """Single-peakedness of every column after permuting rows and columns by
    ``order`` (weak inequalities: plateaus are allowed on both slopes)."""
    _require_skew(d)
    perm = validate_ordering(order, d.m)
    return all(
        _column_single_peaked(d.delta, perm, j, d.eps) for j in range(d.m)
    )


def find_quasiconcave_ordering(d: SkewGame, max_m: int = 9) -> tuple[int, ...] | None:
    """Search all m! simultaneous row/column orderings for quasiconcavity.

    Returns the lexicographically smallest passing ordering, or None when
    none of them works.  Exhaustive by design so that a negative verdict is
    a proof; refuses (CapacityError) rather than truncating when m exceeds
    ``max_m``.
    """
    _require_skew(d)
    if d.m > max_m:
        raise CapacityError(
            f"ordering search over {d.m}! permutations exceeds the cap max_m={max_m}"
        )
    delta, eps, m = d.delta, d.eps, d.m
    for perm in itertools.permutations(range(m)):
        if all(_column_single_peaked(delta, perm, j, eps) for j in range(m)):
            return perm
    return None


def saddle_by_induction(d: SkewGame) -> int:
    """Constructive symmetric saddle action for a quasiconcave skew game.

    Precondition: ``is_quasiconcave_under(d, identity)`` (pre-permute the
    game to supply any other ordering).  Walks the leading principal blocks,
    maintaining k = the largest (by index) symmetric saddle action of the
    current block:

    * the newly adjoined action is checked first, so "largest" survives
      every step;
    * otherwise delta(n+1, k) <= 0 keeps k (the old saddle still tops its
      column);
    * otherwise k must have been the top of the previous block and the new
      action takes over; if instead k was interior, single-peakedness is
      violated and a contradiction witness is raised.
    """
    _require_skew(d)
    delta, eps = d.delta, d.eps
    k = 0
    for n1 in range(1, d.m):
        if all(compare(delta[r][n1], 0, eps) <= 0 for r in range(n1 + 1)):
            k = n1
        elif compare(delta[n1][k], 0, eps) <= 0:
            pass  # Case A: k stays a saddle of the extended block
        elif k == n1 - 1:
            k = n1  # Case B: previous largest saddle was the block's top action
        else:
            raise QuasiconcavityError(
                column=k,
                rows=(k, n1),
                message=(
                    f"input is not quasiconcave under the identity ordering: "
                    f"column {k + 1} has a saddle at row {k + 1} dominated by "
                    f"row {n1 + 1} (delta={delta[n1][k]!r} > 0) while interior "
                    f"rows {k + 2}..{n1} block the hand-off"
                ),
            )
    return k


def strong_solution_set(d: SkewGame) -> set[int]:
    """All saddle actions, verified interchangeable.

    Every pair drawn from the returned set must itself be a saddle point
    (the strong-solution property); a failure would contradict saddle-point
    interchangeability in zero-sum games and raises LawViolationError.
    """
    saddles = pure_saddle_points(d)
    cells = {(p.row, p.col) for p in saddles}
    actions = {p.row for p in saddles} | {p.col for p in saddles}
    for x in actions:
        for y in actions:
            if (x, y) not in cells:
                raise LawViolationError(
                    f"saddle actions {x + 1} and {y + 1} are not interchangeable"
                )
    return actions
