"""The loop construction and the lift from coarse to fine gradings.

Given V graded by Gamma/H and K <= H with H/K of prime order, the loop
module lives inside V (x) F[Gamma]: the sector at a coset c of K is
V_{pi(c)} (x) e_c, and an element of degree a sends v (x) e_c to
(a.v) (x) e_{a+c}.  Exactly one of the following holds for irreducible V:
the loop is graded irreducible (then V admits no finer grading), or it is
reducible and any proper graded irreducible submodule is a regrading of V.
That dichotomy decides the lift step; walking a composition series of
Gamma lifts an ungraded irreducible all the way to a Gamma-graded one.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field as dc_field
from typing import Optional

from .abelian import jordan_holder, quotient, twist_reps
from .errors import InconclusiveIrreducibility, InvalidInput, InvalidSubgroupStep
from .gmodule import (
    GradedModule,
    Submodule,
    is_graded_irreducible,
    is_isomorphic,
    parity_shift,
    submodule_to_module,
    twist,
)
from .linalg import RowBasis


@dataclass
class LoopModule:
    """A loop module plus the bookkeeping tying it back to its source."""

    module: GradedModule
    source: GradedModule
    refiner: object  # subgroup K, the new (finer) grading subgroup
    bookkeeping: tuple  # per basis vector: (source index, coset rep of K)

    @property
    def dim(self):
        return self.module.dim

    def index_of(self, source_index, coset_rep):
        for i, (si, rep) in enumerate(self.bookkeeping):
            if si == source_index and rep == coset_rep:
                return i
        raise InvalidInput(f"no loop basis vector ({source_index}, {coset_rep})")


def _is_prime(n):
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def loop(module, refiner, sector_order=None) -> LoopModule:
    """Loop module of a Gamma/H-graded module along K <= H with H/K simple."""
    g = module.algebra.group
    hsub = module.hsub
    if not refiner.is_subset_of(hsub):
        raise InvalidSubgroupStep("refining subgroup must sit inside the grading subgroup")
    step = hsub.order() // refiner.order()
    if not _is_prime(step):
        raise InvalidSubgroupStep(
            f"index {step} of the refining subgroup is not prime"
        )
    f = module.field
    quo_fine = quotient(g, refiner)
    reps = list(quo_fine.coset_reps) if sector_order is None else [
        quo_fine.rep(r) for r in sector_order
    ]
    if sorted(reps) != sorted(quo_fine.coset_reps):
        raise InvalidInput("sector order must list every coset exactly once")
    coarse = module.quo
    sectors = module.sector_indices()
    bookkeeping = []
    degrees = []
    for rep in reps:
        for i in sectors[coarse.rep(rep)]:
            bookkeeping.append((i, rep))
            degrees.append(rep)
    dim = len(bookkeeping)
    position = {bk: t for t, bk in enumerate(bookkeeping)}
    mats = []
    for k in range(module.algebra.dim()):
        alpha = module.algebra.degree(k)
        src = module.action[k]
        mat = [[f.zero] * dim for _ in range(dim)]
        for col, (i, rep) in enumerate(bookkeeping):
            target_rep = quo_fine.add(rep, alpha)
            for j in range(module.dim):
                c = src[j][i]
                if not c.is_zero():
                    mat[position[(j, target_rep)]][col] = c
        mats.append(mat)
    looped = GradedModule(module.algebra, refiner, degrees, mats)
    return LoopModule(
        module=looped, source=module, refiner=refiner, bookkeeping=tuple(bookkeeping)
    )


def shift_intertwiner(loopmod, h):
    """The e-label relabelling showing loop^{+h} = loop for h in H."""
    f = loopmod.module.field
    g = loopmod.module.algebra.group
    dim = loopmod.dim
    quo = loopmod.module.quo
    mat = [[f.zero] * dim for _ in range(dim)]
    for col, (i, rep) in enumerate(loopmod.bookkeeping):
        mat[loopmod.index_of(i, quo.add(rep, g.reduce(h)))][col] = f.one
    return mat


@dataclass
class BijectionOutcome:
    """Result of one lift step: a finer grading of V, or its loop module."""

    gradable: bool
    module: GradedModule  # the representative, graded by Gamma/K
    loop: LoopModule
    source: GradedModule
    embedding: Optional[list] = None  # columns: module coordinates inside V

    def to_json(self):
        return {
            "outcome": "gradable" if self.gradable else "loop",
            "dim": self.module.dim,
            "sector_dims": self.module.sector_dims(),
        }


def _forget_labels(loopmod, rows):
    """Apply v (x) e_c -> v to submodule rows; columns of the result express
    the submodule basis inside the source module."""
    V = loopmod.source
    f = V.field
    cols = []
    for row in rows:
        v = [f.zero] * V.dim
        for t, x in enumerate(row):
            if not x.is_zero():
                i, _ = loopmod.bookkeeping[t]
                v[i] = v[i] + x
        cols.append(v)
    return [[cols[c][r] for c in range(len(cols))] for r in range(V.dim)]


def bijection_F(module, refiner) -> BijectionOutcome:
    """Decide gradability of an irreducible module along one simple step.

    The loop along the refining subgroup is tested for graded
    irreducibility; a proper graded submodule, shrunk to an irreducible
    one, is a regrading of the input and becomes the Gradable output.
    """
    pre = is_graded_irreducible(module)
    if not pre.irreducible:
        raise InvalidInput("bijection input must be graded irreducible")
    lm = loop(module, refiner)
    verdict = is_graded_irreducible(lm.module)
    if verdict.irreducible:
        return BijectionOutcome(
            gradable=False, module=lm.module, loop=lm, source=module
        )
    sub = verdict.witness
    restricted, rows = submodule_to_module(
        _shrink_to_irreducible(lm.module, sub)
    )
    if restricted.dim != module.dim:
        raise InconclusiveIrreducibility(
            "proper graded submodule of the loop is not a copy of the source"
        )
    embedding = _forget_labels(lm, rows)
    # the forgetful map restricted to an irreducible proper submodule is an
    # isomorphism onto the source, so the embedding matrix must be square
    # and invertible; this is asserted rather than assumed
    from .linalg import is_invertible

    if not is_invertible(module.field, embedding):
        raise InconclusiveIrreducibility("loop bookkeeping did not invert")
    return BijectionOutcome(
        gradable=True,
        module=restricted,
        loop=lm,
        source=module,
        embedding=embedding,
    )


def _shrink_to_irreducible(module, sub):
    while True:
        restricted, rows = submodule_to_module(sub)
        verdict = is_graded_irreducible(restricted)
        if verdict.irreducible:
            return sub
        f = module.field
        lifted = []
        for wrow in verdict.witness.rows:
            v = [f.zero] * module.dim
            for coef, parent_row in zip(wrow, rows):
                if not coef.is_zero():
                    for j, x in enumerate(parent_row):
                        if not x.is_zero():
                            v[j] = v[j] + coef * x
            lifted.append(v)
        basis = RowBasis(f, module.dim)
        for v in lifted:
            basis.add(v)
        sub = Submodule(
            parent=module,
            rows=tuple(tuple(r) for r in basis.rows),
            homogeneous=True,
        )


@dataclass
class LiftStep:
    gradable: bool
    dim: int
    sector_dims: list

    def to_json(self):
        return {
            "outcome": "gradable" if self.gradable else "loop",
            "dim": self.dim,
            "sector_dims": list(self.sector_dims),
        }


@dataclass
class LiftReport:
    chain: object  # CompositionSeries
    steps: list = dc_field(default_factory=list)
    final: Optional[GradedModule] = None
    classes: list = dc_field(default_factory=list)

    def to_json(self):
        return {
            "chain": [
                [list(g) for g in sub.generators] for sub in self.chain.chain
            ],
            "steps": [s.to_json() for s in self.steps],
            "classes": [
                {"dim": m.dim, "sector_dims": m.sector_dims()} for m in self.classes
            ],
        }


def iterate_lift(module, group=None) -> LiftReport:
    """Walk the composition series from the ungraded end up to Gamma.

    The input must be an ungraded irreducible module (H = Gamma); each step
    applies the loop dichotomy along one prime-order link of the chain.
    """
    g = module.algebra.group if group is None else group
    if g != module.algebra.group:
        raise InvalidInput("lift group must be the algebra's grading group")
    if not module.is_ungraded():
        raise InvalidInput("iterate_lift starts from an ungraded module")
    series = jordan_holder(g)
    report = LiftReport(chain=series)
    current = module
    for sub in series.chain[1:]:
        outcome = bijection_F(current, sub)
        current = outcome.module
        report.steps.append(
            LiftStep(
                gradable=outcome.gradable,
                dim=current.dim,
                sector_dims=current.sector_dims(),
            )
        )
    report.final = current
    report.classes = iso_classes_of_module(current)
    return report


def twist_orbit(module, hsub=None):
    """Twists of the module by coset representatives of H-perp, deduplicated."""
    hsub = module.hsub if hsub is None else hsub
    g = module.algebra.group
    out = []
    for ch in twist_reps(g, hsub):
        cand = twist(module, ch)
        if not any(is_isomorphic(cand, seen) for seen in out):
            out.append(cand)
    return out


def _module_sort_key(m):
    return (
        m.sector_dims(),
        json.dumps(
            [[x.to_json()["coeffs"] for x in row] for mat in m.action for row in mat]
        ),
    )


def iso_classes_of_module(module):
    """Parity shifts over Gamma (mod the grading kernel), up to isomorphism."""
    g = module.algebra.group
    seen_reps = set()
    classes = []
    for h in g.elements():
        rep = module.quo.rep(h)
        if rep in seen_reps:
            continue
        seen_reps.add(rep)
        cand = parity_shift(module, rep)
        if not any(is_isomorphic(cand, c) for c in classes):
            classes.append(cand)
    classes.sort(key=_module_sort_key)
    return classes


def iso_classes(outcome):
    """All isomorphism classes inside the equivalence class of an outcome."""
    if isinstance(outcome, BijectionOutcome):
        return iso_classes_of_module(outcome.module)
    return iso_classes_of_module(outcome)
