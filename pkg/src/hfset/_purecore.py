"""Pure-Python versions of the bitmask kernels.

Two encodings are used.  A hereditarily finite set of small rank is its
Ackermann code: bit ``k`` is set iff the set whose code is ``k`` is a member.
A relation on ``n`` indexed points is a list of row masks: bit ``j`` of
``rows[i]`` is set iff ``i <= j``.
"""


def code_members(code):
    out = []
    k = 0
    while code:
        if code & 1:
            out.append(k)
        code >>= 1
        k += 1
    return out


def code_is_transitive(code):
    for m in code_members(code):
        if m & ~code:
            return False
    return True


def code_is_ordinal(code):
    if not code_is_transitive(code):
        return False
    return all(code_is_transitive(m) for m in code_members(code))


def rows_is_order(rows):
    n = len(rows)
    for i in range(n):
        ri = rows[i]
        if not (ri >> i) & 1:
            return False
        if ri >> n:
            return False
        for j in range(n):
            if j != i and (ri >> j) & 1:
                if (rows[j] >> i) & 1:
                    return False
                if rows[j] & ~ri:
                    return False
    return True


def rows_is_total(rows):
    n = len(rows)
    for i in range(n):
        for j in range(i + 1, n):
            if not ((rows[i] >> j) & 1 or (rows[j] >> i) & 1):
                return False
    return True


def rows_least_in(rows, mask):
    i = 0
    m = mask
    while m:
        if m & 1 and rows[i] & mask == mask:
            return i
        m >>= 1
        i += 1
    return -1


def rows_all_subsets_have_least(rows):
    for mask in range(1, 1 << len(rows)):
        if rows_least_in(rows, mask) < 0:
            return False
    return True


def rows_subsets_have_least(rows, masks):
    for mask in masks:
        if mask and rows_least_in(rows, mask) < 0:
            return False
    return True


def rows_maximal(rows):
    return [i for i, r in enumerate(rows) if r & ~(1 << i) == 0]


def rows_strictly_below(rows, j):
    mask = 0
    for i, r in enumerate(rows):
        if i != j and (r >> j) & 1:
            mask |= 1 << i
    return mask
