"""Pure-Python kernels. Same contracts as the compiled ``_ckernels`` module.

Letters are signed ints: generator ``i`` is ``i + 1`` and its inverse ``-(i + 1)``.
"""
from bisect import bisect_left


def free_reduce_codes(codes):
    stack = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return stack


def common_prefix_length(a, b):
    n = min(len(a), len(b))
    i = 0
    while i < n and a[i] == b[i]:
        i += 1
    return i


def max_overlaps(words):
    """For each word, the longest common prefix it shares with any *other* entry.

    ``words`` is a list of int tuples; duplicates count as distinct entries.
    Returns ``(order, best, adjacent)`` where ``order`` sorts ``words``,
    ``best[i]`` is the overlap for ``words[i]`` and ``adjacent[k]`` is the LCP
    of ``words[order[k]]`` and ``words[order[k + 1]]``.
    """
    n = len(words)
    order = sorted(range(n), key=words.__getitem__)
    adjacent = [common_prefix_length(words[order[k]], words[order[k + 1]]) for k in range(n - 1)]
    best = [0] * n
    for k in range(n - 1):
        lcp = adjacent[k]
        if lcp > best[order[k]]:
            best[order[k]] = lcp
        if lcp > best[order[k + 1]]:
            best[order[k + 1]] = lcp
    return order, best, adjacent


class DehnTable:
    """Lookup structure over a sorted list of relator words (symmetric closure).

    Entries are bucketed by length; inside a bucket a bisect finds the entries
    sharing the longest prefix with a given suffix of the word being reduced.
    """

    def __init__(self, rstar):
        self.rstar = list(rstar)
        buckets = {}
        for idx, r in enumerate(self.rstar):
            buckets.setdefault(len(r), []).append(idx)
        self.buckets = [(length, [self.rstar[i] for i in idxs], idxs)
                        for length, idxs in sorted(buckets.items())]
        self.maxlen = max((len(r) for r in self.rstar), default=0)

    def match_at(self, word, i):
        """Best ``(length, index)`` for a Dehn subword starting at ``word[i]``, or None."""
        best = None
        for length, entries, idxs in self.buckets:
            key = tuple(word[i:i + length])
            k = bisect_left(entries, key)
            m = 0
            if k < len(entries):
                m = common_prefix_length(entries[k], key)
            if k > 0:
                m = max(m, common_prefix_length(entries[k - 1], key))
            if 2 * m <= length:
                continue
            # first entry in sorted order carrying that prefix
            j = bisect_left(entries, key[:m])
            cand = (m, idxs[j])
            if best is None or cand[0] > best[0] or (cand[0] == best[0] and cand[1] < best[1]):
                best = cand
        return best


def dehn_find(word, table, start=0):
    """Leftmost position ``i >= start`` with a subword of some ``r`` longer than ``|r|/2``.

    Returns ``(i, length, index)``: the longest such subword at ``i``, ties to the
    smallest index in ``table.rstar``. None if the word is Dehn-reduced.
    """
    for i in range(start, len(word)):
        hit = table.match_at(word, i)
        if hit is not None:
            return i, hit[0], hit[1]
    return None
