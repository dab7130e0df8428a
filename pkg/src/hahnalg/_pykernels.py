"""Pure-Python F2 support kernels (reference and fallback)."""


def xor_merge(a, b):
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(set(a).symmetric_difference(b)))


def mul_mod2(a, b, cap=None):
    acc = set()
    for x in a:
        for y in b:
            s = x + y
            if cap is not None and s > cap:
                break
            if s in acc:
                acc.remove(s)
            else:
                acc.add(s)
    return tuple(sorted(acc))
