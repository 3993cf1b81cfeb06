"""Backtracking search for collineations between small planes."""

import logging

import numpy as np

from orthogoval.exception import IncidenceError

__all__ = ["find_plane_isomorphism", "is_isomorphism"]

logger = logging.getLogger(__name__)


def is_isomorphism(source, target, permutation):
    """True if `permutation` maps the lines of `source` onto those of `target`."""
    perm = np.asarray(permutation)
    images = {frozenset(perm[list(line)].tolist()) for line in source.lines}
    return images == target.line_sets()


def _point_order(plane):
    # each next point lies on the most lines through already placed points
    order = [0]
    pl = plane.point_lines
    placed_lines = set(pl[0].tolist())
    remaining = set(range(1, plane.num_points))
    while remaining:
        best = max(
            sorted(remaining),
            key=lambda p: len(placed_lines & set(pl[p].tolist())),
        )
        order.append(best)
        remaining.remove(best)
        placed_lines.update(pl[best].tolist())
    return order


def find_plane_isomorphism(source, target, limit=None):
    """Find a point bijection carrying the lines of `source` onto `target`.

    Points of `source` are placed one at a time; every line through a placed
    point and an earlier one fixes the image line, which prunes the
    candidates for later points.

    Parameters
    ----------
    source, target : PlaneIncidence
        Planes of the same kind and order.
    limit : int, optional
        Maximum number of search nodes before giving up.

    Returns
    -------
    tuple of int or None
        ``permutation[p]`` is the image of point ``p``.
    """
    if (source.kind, source.q, source.num_points) != (
        target.kind,
        target.q,
        target.num_points,
    ):
        raise IncidenceError("planes of different kinds or orders are not isomorphic")
    m = source.num_points
    spl, tpl = source.point_lines, target.point_lines
    t_lines = [set(line) for line in target.lines]
    order = _point_order(source)

    image = [-1] * m
    used = [False] * m
    line_map = {}
    line_used = {}
    nodes = 0

    def candidates(p):
        allowed = None
        for line in spl[p].tolist():
            if line in line_map:
                pts = t_lines[line_map[line]]
                allowed = set(pts) if allowed is None else allowed & pts
        pool = range(m) if allowed is None else sorted(allowed)
        return [t for t in pool if not used[t]]

    def assign(p, t):
        added = []
        for line in spl[p].tolist():
            if line in line_map:
                continue
            others = [image[x] for x in source.lines[line] if image[x] >= 0 and x != p]
            if not others:
                continue
            target_line = _common_line(tpl, t, others[0])
            if target_line is None or target_line in line_used:
                undo(added)
                return None
            if any(o not in t_lines[target_line] for o in others):
                undo(added)
                return None
            line_map[line] = target_line
            line_used[target_line] = line
            added.append(line)
        # lines of the target through t must not already be the image of a
        # source line missing p
        for target_line in tpl[t].tolist():
            src = line_used.get(target_line)
            if src is not None and src not in added and p not in source.lines[src]:
                undo(added)
                return None
        image[p], used[t] = t, True
        return added

    def undo(added):
        for line in added:
            del line_used[line_map.pop(line)]

    def search(depth):
        nonlocal nodes
        if depth == m:
            return True
        nodes += 1
        if limit is not None and nodes > limit:
            return False
        p = order[depth]
        for t in candidates(p):
            added = assign(p, t)
            if added is None:
                continue
            if search(depth + 1):
                return True
            image[p], used[t] = -1, False
            undo(added)
        return False

    if not search(0):
        logger.debug("no isomorphism found after %d nodes", nodes)
        return None
    result = tuple(image)
    if not is_isomorphism(source, target, result):
        raise IncidenceError("isomorphism search produced an inconsistent map")
    return result


def _common_line(point_lines, a, b):
    common = set(point_lines[a].tolist()) & set(point_lines[b].tolist())
    return common.pop() if len(common) == 1 else None
