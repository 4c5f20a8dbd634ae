"""Finite-dimensional Lie colour algebras from graded structure constants.

An algebra is a graded basis plus a sparse table of bracket coefficients.
Construction verifies, exhaustively over basis pairs and triples:

* grading compatibility     c_{ij}^k = 0 unless deg_k = deg_i + deg_j
* eps-antisymmetry          [[x,y]] = -eps(a,b) [[y,x]]
* the eps-Jacobi identity   eps(c,a)[[x,[[y,z]]]] + cyclic = 0

Failures raise with the offending pair or triple, which is what the fuzz
tests downstream lean on.
"""

from __future__ import annotations

from .errors import AlgebraValidationError, InvalidInput, InvalidMultiplier
from .grading import multiplier_inverse, parity_split, twisted_factor


class ColourAlgebra:
    __slots__ = ("group", "epsilon", "field", "basis", "constants", "_table")

    def __init__(self, group, epsilon, basis, constants, validate=True):
        """`basis` is a list of (name, degree); `constants` maps (i, j) to
        {k: coefficient}.  Missing (j, i) entries are filled in from
        eps-antisymmetry; supplied ones are checked against it."""
        if epsilon.group != group:
            raise InvalidInput("commutation factor is on a different group")
        self.group = group
        self.epsilon = epsilon
        self.field = epsilon.field
        self.basis = tuple((str(n), group.reduce(d)) for n, d in basis)
        table = {}
        for (i, j), comp in constants.items():
            if not (0 <= i < len(self.basis) and 0 <= j < len(self.basis)):
                raise InvalidInput(f"bracket indices ({i},{j}) out of range")
            row = {}
            for k, c in comp.items():
                c = self._scalar(c)
                if not c.is_zero():
                    row[int(k)] = c
            table[(i, j)] = row
        self._table = self._complete(table)
        self.constants = {
            ij: dict(row) for ij, row in self._table.items() if row
        }
        if validate:
            self._validate()

    # -- construction helpers -------------------------------------------------

    def _scalar(self, c):
        from .cyclotomic import CycloNum

        if isinstance(c, CycloNum):
            if c.field is not self.field:
                raise InvalidInput("constant from a different field")
            return c
        return self.field.from_rational(c)

    def _complete(self, table):
        n = len(self.basis)
        full = {}
        for i in range(n):
            for j in range(n):
                if (i, j) in table:
                    full[(i, j)] = table[(i, j)]
        for i in range(n):
            for j in range(n):
                if (i, j) in full or (j, i) not in full:
                    continue
                # [[x_i, x_j]] = -eps(deg_i, deg_j) [[x_j, x_i]]
                sign = -self.epsilon.eval(self.basis[i][1], self.basis[j][1])
                full[(i, j)] = {k: sign * c for k, c in full[(j, i)].items()}
        for i in range(n):
            for j in range(n):
                full.setdefault((i, j), {})
        return full

    def dim(self):
        return len(self.basis)

    def degree(self, i):
        return self.basis[i][1]

    def bracket_basis(self, i, j):
        """Coefficient dict of [[x_i, x_j]] over the basis."""
        return self._table[(i, j)]

    # -- validation -----------------------------------------------------------

    def _validate(self):
        n = len(self.basis)
        eps = self.epsilon
        zero = self.field.zero
        for (i, j), row in self._table.items():
            want = self.group.add(self.basis[i][1], self.basis[j][1])
            for k, c in row.items():
                if not c.is_zero() and self.basis[k][1] != want:
                    raise AlgebraValidationError(
                        "grading",
                        (i, j, k),
                        f"bracket ({i},{j}) hits basis {k} outside degree {want}",
                    )
        for i in range(n):
            for j in range(n):
                sign = -eps.eval(self.basis[i][1], self.basis[j][1])
                lhs = self._table[(i, j)]
                rhs = self._table[(j, i)]
                keys = set(lhs) | set(rhs)
                for k in keys:
                    if lhs.get(k, zero) != sign * rhs.get(k, zero):
                        raise AlgebraValidationError(
                            "antisymmetry",
                            (i, j),
                            f"[[x{i},x{j}]] != -eps [[x{j},x{i}]] at basis {k}",
                        )
        for i in range(n):
            a = self.basis[i][1]
            for j in range(n):
                b = self.basis[j][1]
                for k in range(n):
                    c = self.basis[k][1]
                    acc = {}
                    for term, (p, q, r) in (
                        (eps.eval(c, a), (i, j, k)),
                        (eps.eval(a, b), (j, k, i)),
                        (eps.eval(b, c), (k, i, j)),
                    ):
                        inner = self._table[(q, r)]
                        for t, ct in inner.items():
                            outer = self._table[(p, t)]
                            for u, cu in outer.items():
                                acc[u] = acc.get(u, zero) + term * ct * cu
                    for u, cu in acc.items():
                        if not cu.is_zero():
                            raise AlgebraValidationError(
                                "jacobi",
                                (i, j, k),
                                f"eps-Jacobi fails on triple ({i},{j},{k})",
                            )

    # -- algebra operations -----------------------------------------------------

    def bracket(self, x, y):
        """Bracket of two coefficient vectors over the basis."""
        n = len(self.basis)
        if len(x) != n or len(y) != n:
            raise InvalidInput("coefficient vector has wrong length")
        out = [self.field.zero] * n
        for i, xi in enumerate(x):
            xi = self._scalar(xi)
            if xi.is_zero():
                continue
            for j, yj in enumerate(y):
                yj = self._scalar(yj)
                if yj.is_zero():
                    continue
                for k, c in self._table[(i, j)].items():
                    out[k] = out[k] + xi * yj * c
        return out

    def basis_element(self, i):
        v = [self.field.zero] * len(self.basis)
        v[i] = self.field.one
        return v

    def to_json(self, include_derived=False):
        brackets = []
        for (i, j), row in sorted(self._table.items()):
            if not row:
                continue
            if not include_derived and i > j:
                continue
            brackets.append(
                {
                    "i": i,
                    "j": j,
                    "coeffs": {str(k): c.to_json() for k, c in sorted(row.items())},
                }
            )
        return {
            "group": self.group.to_json(),
            "epsilon": self.epsilon.to_json(),
            "basis": [{"name": n, "degree": list(d)} for n, d in self.basis],
            "brackets": brackets,
        }

    def __eq__(self, other):
        if not isinstance(other, ColourAlgebra):
            return NotImplemented
        if (
            self.group != other.group
            or self.epsilon != other.epsilon
            or self.basis != other.basis
        ):
            return False
        keys = set(self._table) | set(other._table)
        zero = self.field.zero
        for key in keys:
            a, b = self._table.get(key, {}), other._table.get(key, {})
            for k in set(a) | set(b):
                if a.get(k, zero) != b.get(k, zero):
                    return False
        return True

    def __repr__(self):
        return f"ColourAlgebra(dim={len(self.basis)}, group={self.group})"


def make_algebra(group, epsilon, basis, constants) -> ColourAlgebra:
    return ColourAlgebra(group, epsilon, basis, constants)


def bracket(algebra, x, y):
    return algebra.bracket(x, y)


def discolour(algebra, sigma) -> ColourAlgebra:
    """Deform all brackets by sigma and twist the commutation factor."""
    if sigma.group != algebra.group or sigma.field is not algebra.field:
        raise InvalidInput("multiplier lives on different data")
    new_eps = twisted_factor(algebra.epsilon, sigma)
    constants = {}
    for (i, j), row in algebra._table.items():
        if not row:
            continue
        s = sigma.eval(algebra.basis[i][1], algebra.basis[j][1])
        constants[(i, j)] = {k: s * c for k, c in row.items()}
    try:
        return ColourAlgebra(algebra.group, new_eps, algebra.basis, constants)
    except AlgebraValidationError as exc:
        raise InvalidMultiplier(f"discoloured algebra is invalid: {exc}") from exc


def recolour(algebra, sigma) -> ColourAlgebra:
    return discolour(algebra, multiplier_inverse(sigma))


def is_superalgebra(algebra) -> bool:
    """True iff eps is exactly the super sign of its own parity split."""
    eps = algebra.epsilon
    split = parity_split(eps)
    one = algebra.field.one
    for a in algebra.group.elements():
        for b in algebra.group.elements():
            want = -one if (split.parity(a) and split.parity(b)) else one
            if eps.eval(a, b) != want:
                return False
    return True
