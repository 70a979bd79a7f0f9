"""Dense coefficient-list algorithms over any field-ops object.

Coefficient lists are ordered by exponent (index i holds the coefficient
of x^i). Element values are whatever the field object works on: plain
residues for ``PrimeModulus``, residue polynomials for ``ExtField``.
"""

from typing import Any, List, Sequence

from ..errors import DuplicateAbscissa
from ..field.prime import FieldOps


def horner(field: FieldOps, coeffs: Sequence[Any], x: Any) -> Any:
    """Evaluate sum(coeffs[i] * x^i) at x."""
    acc = field.zero
    for c in reversed(coeffs):
        acc = field.add(field.mul(acc, x), c)
    return acc


def determinant(field: FieldOps, rows: Sequence[Sequence[Any]]) -> Any:
    """Determinant by Gaussian elimination; the empty matrix has determinant 1."""
    n = len(rows)
    if n == 0:
        return field.one
    m = [list(r) for r in rows]
    result = field.one

    for col in range(n):
        pivot = None
        for r in range(col, n):
            if not field.is_zero(m[r][col]):
                pivot = r
                break
        if pivot is None:
            return field.zero
        if pivot != col:
            m[col], m[pivot] = m[pivot], m[col]
            result = field.neg(result)

        pivot_value = m[col][col]
        result = field.mul(result, pivot_value)
        pivot_inv = field.inv(pivot_value)
        pivot_row = m[col]

        for r in range(col + 1, n):
            row = m[r]
            if field.is_zero(row[col]):
                continue
            factor = field.mul(row[col], pivot_inv)
            for c in range(col + 1, n):
                row[c] = field.sub(row[c], field.mul(factor, pivot_row[c]))

    return result


def sylvester_rows(
    field: FieldOps, a: Sequence[Any], b: Sequence[Any]
) -> List[List[Any]]:
    """Sylvester matrix of two coefficient lists with formal degrees len-1.

    The first deg(b) rows carry a's coefficients from highest to lowest
    degree, shifted right by the row index; the next deg(a) rows carry b's.
    """
    da = len(a) - 1
    db = len(b) - 1
    size = da + db
    rows: List[List[Any]] = []

    for i in range(db):
        row = [field.zero] * size
        for k, c in enumerate(reversed(a)):
            row[i + k] = c
        rows.append(row)

    for j in range(da):
        row = [field.zero] * size
        for k, c in enumerate(reversed(b)):
            row[j + k] = c
        rows.append(row)

    return rows


def interpolate(field: FieldOps, xs: Sequence[Any], ys: Sequence[Any]) -> List[Any]:
    """Coefficients (low to high, length len(xs)) of the interpolating polynomial.

    Newton divided differences, then conversion to monomial form.
    """
    if len(xs) != len(ys):
        raise ValueError("Abscissae and ordinates differ in length")
    if not xs:
        raise ValueError("At least one point is required")
    if len(set(xs)) != len(xs):
        raise DuplicateAbscissa("Interpolation points must have distinct abscissae")

    n = len(xs)
    dd = list(ys)
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            denom = field.sub(xs[i], xs[i - j])
            dd[i] = field.mul(field.sub(dd[i], dd[i - 1]), field.inv(denom))

    result = [dd[n - 1]]
    for i in range(n - 2, -1, -1):
        shifted = [field.zero] * (len(result) + 1)
        for k, c in enumerate(result):
            shifted[k + 1] = field.add(shifted[k + 1], c)
            shifted[k] = field.sub(shifted[k], field.mul(c, xs[i]))
        shifted[0] = field.add(shifted[0], dd[i])
        result = shifted

    return result
