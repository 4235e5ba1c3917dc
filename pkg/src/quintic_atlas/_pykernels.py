"""Pure-Python kernels; the reference implementation for ``_ckernels``."""


def eval_table(exps, coeffs, point):
    """Evaluate ``sum(c * prod(point[v] ** e[v]))`` at an integer point.

    ``exps`` is a flat sequence of 5 exponents per term, ``coeffs`` holds the
    integer coefficients in the same order.
    """
    powers = []
    for v in range(5):
        top = max(exps[v::5]) if exps else 0
        row = [1]
        base = point[v]
        for _ in range(top):
            row.append(row[-1] * base)
        powers.append(row)
    p0, p1, p2, p3, p4 = powers
    total = 0
    k = 0
    for c in coeffs:
        total += c * p0[exps[k]] * p1[exps[k + 1]] * p2[exps[k + 2]] * p3[exps[k + 3]] * p4[exps[k + 4]]
        k += 5
    return total


def eval_homogeneous(coeffs, num, den):
    """``sum(c_i * num**i * den**(n - i))`` for integer coefficients, ``n = len - 1``.

    Equals ``den**n * f(num / den)``, so it carries the sign of ``f`` at that point
    whenever ``den > 0``.
    """
    acc = 0
    dpow = 1
    for c in reversed(coeffs):
        acc = acc * num + c * dpow
        dpow *= den
    return acc


def sign_variations_at(chain, num, den):
    """Sign changes of the integer-coefficient ``chain`` at ``num / den``, zeros dropped."""
    count = 0
    prev = 0
    for coeffs in chain:
        v = eval_homogeneous(coeffs, num, den)
        if v:
            s = 1 if v > 0 else -1
            if prev and s != prev:
                count += 1
            prev = s
    return count
