"""Exact cover by backtracking on the most constrained item."""

__all__ = ["exact_cover"]


def exact_cover(items, subsets, *, limit=None):
    """Yield every exact cover of `items` by members of `subsets`.

    Parameters
    ----------
    items : iterable of hashable
        The elements that must each be covered exactly once.
    subsets : dict
        Maps a subset label to the collection of items it covers. Labels must
        be sortable; they are tried in sorted order so enumeration order is
        deterministic.
    limit : int, optional
        Stop after this many covers.

    Yields
    ------
    list
        Labels of one exact cover, in the order they were chosen.
    """
    columns = {item: set() for item in items}
    rows = {}
    for label in sorted(subsets):
        members = tuple(subsets[label])
        if any(m not in columns for m in members):
            continue
        rows[label] = members
        for m in members:
            columns[m].add(label)

    found = 0
    partial = []

    def select(label):
        removed = []
        for m in rows[label]:
            for other in columns[m]:
                for n in rows[other]:
                    if n != m:
                        columns[n].discard(other)
            removed.append(columns.pop(m))
        return removed

    def deselect(label, removed):
        for m in reversed(rows[label]):
            columns[m] = removed.pop()
            for other in columns[m]:
                for n in rows[other]:
                    if n != m:
                        columns[n].add(other)

    def search():
        nonlocal found
        if not columns:
            found += 1
            yield list(partial)
            return
        item = min(columns, key=lambda c: (len(columns[c]), _sort_key(c)))
        for label in sorted(columns[item]):
            partial.append(label)
            removed = select(label)
            yield from search()
            deselect(label, removed)
            partial.pop()
            if limit is not None and found >= limit:
                return

    yield from search()


def _sort_key(item):
    return item if isinstance(item, tuple) else (item,)
