"""Finite graded modules over the mod-2 Steenrod algebra.

A :class:`GradedModule` is an explicit table model of the reduced mod-2
cohomology of a space: generators with positive degrees, a Sq-action
table, and a partial cup-product table where absent pairs multiply to
zero.  Everything above ``top_degree`` is truncated to zero, so the
models are finite stand-ins for possibly infinite complexes.

The catalog covers spheres, real and complex projective spaces, wedges
and suspensions.  :func:`verify_axioms` checks the Steenrod axioms on
any module and reports failures as data; :func:`distinguish_pi4` runs
the Sq^2 comparison of the suspended complex projective plane against
the wedge of spheres and concludes that pi_4 of the 3-sphere is
nonzero.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .adem import AdemElement, Word
from .f2 import adem_coeff, binom_mod2
from .linalg import matrix_rank

SqTable = dict[tuple[str, int], frozenset[str]]
ProductTable = dict[tuple[str, str], frozenset[str]]


@dataclass(frozen=True, eq=False)
class GradedModule:
    """A finite graded F2-module with a Steenrod action and cup products.

    ``sq`` maps (generator, i) with i >= 1 to the F2-sum Sq^i(g);
    absent keys mean zero.  ``products`` maps unordered generator pairs
    (stored sorted) to their cup product; absent pairs multiply to
    zero.  An optional degree-0 ``unit`` acts as a product identity.
    Instances are immutable after construction.
    """

    name: str
    generators: tuple[tuple[str, int], ...]
    sq: SqTable
    products: ProductTable
    top_degree: int
    unit: str | None = None
    _degrees: dict[str, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        degrees = {}
        for gid, d in self.generators:
            if gid in degrees:
                raise ValueError(f"duplicate generator id {gid!r}")
            if d < 1:
                raise ValueError(f"generator {gid!r} must have positive degree")
            degrees[gid] = d
        object.__setattr__(self, "_degrees", degrees)

    def degree_of(self, gid: str) -> int:
        if self.unit is not None and gid == self.unit:
            return 0
        return self._degrees[gid]

    def gens_in_degree(self, d: int) -> list[str]:
        return sorted(gid for gid, deg in self.generators if deg == d)

    def sq_gen(self, gid: str, i: int) -> frozenset[str]:
        """Sq^i of a single generator; identity for i = 0, instability applied."""
        if i < 0:
            raise ValueError("square index must be a natural number")
        if i == 0:
            return frozenset({gid})
        if i > self.degree_of(gid):
            return frozenset()
        return self.sq.get((gid, i), frozenset())

    def cup_gens(self, g: str, h: str) -> frozenset[str]:
        if self.unit is not None:
            if g == self.unit:
                return frozenset({h})
            if h == self.unit:
                return frozenset({g})
        key = (g, h) if g <= h else (h, g)
        return self.products.get(key, frozenset())

    def element(self, gens: str | list[str] | frozenset[str]) -> "ModuleElement":
        ids = frozenset({gens} if isinstance(gens, str) else gens)
        for gid in ids:
            self.degree_of(gid)  # raises KeyError for unknown ids
        return ModuleElement(self, ids)

    def zero_element(self) -> "ModuleElement":
        return ModuleElement(self, frozenset())

    def __str__(self) -> str:
        return f"{self.name} ({len(self.generators)} generators, top degree {self.top_degree})"


@dataclass(frozen=True, eq=False)
class ModuleElement:
    """An F2-sum of generators of one module.

    Homogeneous elements are the normal case; mixed-degree sums can
    arise from mixed-degree operator sums and are tolerated, with
    per-degree contracts applying to each component.
    """

    module: GradedModule
    gens: frozenset[str]

    def is_zero(self) -> bool:
        return not self.gens

    def degree(self) -> int | None:
        """Common degree of the summands; None for zero, error if mixed."""
        degrees = {self.module.degree_of(g) for g in self.gens}
        if not degrees:
            return None
        if len(degrees) > 1:
            raise ValueError(f"element is not homogeneous (degrees {sorted(degrees)})")
        return degrees.pop()

    def __add__(self, other: "ModuleElement") -> "ModuleElement":
        if self.module is not other.module:
            raise ValueError("elements live in different modules")
        return ModuleElement(self.module, self.gens ^ other.gens)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ModuleElement):
            return NotImplemented
        return self.module is other.module and self.gens == other.gens

    def __hash__(self) -> int:
        return hash((id(self.module), self.gens))

    def __str__(self) -> str:
        if not self.gens:
            return "0"
        return " + ".join(sorted(self.gens, key=lambda g: (self.module.degree_of(g), g)))


def _apply_sq_set(module: GradedModule, i: int, gens: frozenset[str]) -> frozenset[str]:
    acc: frozenset[str] = frozenset()
    for g in gens:
        acc ^= module.sq_gen(g, i)
    return acc


def _cup_sets(module: GradedModule, xs: frozenset[str], ys: frozenset[str]) -> frozenset[str]:
    acc: frozenset[str] = frozenset()
    for g in xs:
        for h in ys:
            acc ^= module.cup_gens(g, h)
    return acc


def act_on_module(element: AdemElement, x: ModuleElement) -> ModuleElement:
    """Apply a sum of Sq-words through the module's action table.

    Words act rightmost square first; degrees past the truncation
    bound collapse to zero through the table.
    """
    module = x.module
    acc: frozenset[str] = frozenset()
    for word in element.words:
        gens = x.gens
        for i in reversed(word):
            gens = _apply_sq_set(module, i, gens)
            if not gens:
                break
        acc ^= gens
    return ModuleElement(module, acc)


def cup_elements(x: ModuleElement, y: ModuleElement) -> ModuleElement:
    """Cup product of module elements through the product table."""
    if x.module is not y.module:
        raise ValueError("elements live in different modules")
    return ModuleElement(x.module, _cup_sets(x.module, x.gens, y.gens))


# ---------------------------------------------------------------------------
# Catalog constructors


def point() -> GradedModule:
    """The empty module (a point has no reduced cohomology)."""
    return GradedModule("pt", (), {}, {}, 0)


def sphere(n: int) -> GradedModule:
    """S^n: one generator in degree n, all squares and products zero."""
    if n < 1:
        raise ValueError("sphere dimension must be >= 1")
    return GradedModule(f"s{n}", ((f"x{n}", n),), {}, {}, n)


def real_proj(n: int) -> GradedModule:
    """RP^n truncation of F2[t]: generators t, t^2, ..., t^n.

    Sq^i(t^m) = C(m, i) t^(m+i), cut off above degree n.
    """
    if n < 0:
        raise ValueError("dimension must be a natural number")
    gens = tuple((f"t{k}", k) for k in range(1, n + 1))
    sq: SqTable = {}
    for k in range(1, n + 1):
        for i in range(1, k + 1):
            if k + i <= n and binom_mod2(k, i):
                sq[(f"t{k}", i)] = frozenset({f"t{k + i}"})
    products: ProductTable = {}
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if a + b <= n:
                products[(f"t{a}", f"t{b}")] = frozenset({f"t{a + b}"})
    return GradedModule(f"rp{n}", gens, sq, products, n)


def complex_proj(n: int) -> GradedModule:
    """CP^n: generators x, x^2, ..., x^n in degrees 2, 4, ..., 2n.

    Sq^1(x) = 0 and Sq^2(x) = x^2; the Cartan formula then forces
    Sq^(2j)(x^k) = C(k, j) x^(k+j) with all odd squares zero.
    """
    if n < 1:
        raise ValueError("dimension must be >= 1")
    gens = tuple((f"x{k}", 2 * k) for k in range(1, n + 1))
    sq: SqTable = {}
    for k in range(1, n + 1):
        for j in range(1, k + 1):
            if k + j <= n and binom_mod2(k, j):
                sq[(f"x{k}", 2 * j)] = frozenset({f"x{k + j}"})
    products: ProductTable = {}
    for a in range(1, n + 1):
        for b in range(a, n + 1):
            if a + b <= n:
                products[(f"x{a}", f"x{b}")] = frozenset({f"x{a + b}"})
    return GradedModule(f"cp{n}", gens, sq, products, 2 * n)


def suspend(module: GradedModule) -> GradedModule:
    """Suspension: shift degrees by one, carry the action, kill all products.

    The square table transfers unchanged onto the shifted generators
    (the action is stable); cup products of positive-degree classes on
    a suspension vanish.
    """
    rename = {gid: f"s_{gid}" for gid, _ in module.generators}
    gens = tuple((rename[gid], d + 1) for gid, d in module.generators)
    sq: SqTable = {
        (rename[gid], i): frozenset(rename[t] for t in targets)
        for (gid, i), targets in module.sq.items()
    }
    return GradedModule(f"susp({module.name})", gens, sq, {}, module.top_degree + 1)


def wedge(left: GradedModule, right: GradedModule) -> GradedModule:
    """One-point union: disjoint generators, cross products zero.

    Colliding generator ids are renamed with l_/r_ prefixes.
    """
    left_ids = {gid for gid, _ in left.generators}
    right_ids = {gid for gid, _ in right.generators}
    if left_ids & right_ids:
        lmap = {gid: f"l_{gid}" for gid in left_ids}
        rmap = {gid: f"r_{gid}" for gid in right_ids}
    else:
        lmap = {gid: gid for gid in left_ids}
        rmap = {gid: gid for gid in right_ids}

    def carry(module: GradedModule, names: dict[str, str], gens, sq, products):
        for gid, d in module.generators:
            gens.append((names[gid], d))
        for (gid, i), targets in module.sq.items():
            sq[(names[gid], i)] = frozenset(names[t] for t in targets)
        for (g, h), targets in module.products.items():
            a, b = sorted((names[g], names[h]))
            products[(a, b)] = frozenset(names[t] for t in targets)

    gens: list[tuple[str, int]] = []
    sq: SqTable = {}
    products: ProductTable = {}
    carry(left, lmap, gens, sq, products)
    carry(right, rmap, gens, sq, products)
    return GradedModule(
        f"wedge({left.name},{right.name})",
        tuple(sorted(gens, key=lambda gd: (gd[1], gd[0]))),
        sq,
        products,
        max(left.top_degree, right.top_degree),
    )


def builtin_catalog() -> dict[str, GradedModule]:
    """The named builtin modules: s1..s8, rp1..rp8, cp1..cp3."""
    catalog: dict[str, GradedModule] = {}
    for n in range(1, 9):
        catalog[f"s{n}"] = sphere(n)
        catalog[f"rp{n}"] = real_proj(n)
    for n in range(1, 4):
        catalog[f"cp{n}"] = complex_proj(n)
    return catalog


def full_verification_catalog() -> list[GradedModule]:
    """Builtins, all pairwise wedges, and single suspensions of everything."""
    base = list(builtin_catalog().values())
    wedges = [wedge(a, b) for i, a in enumerate(base) for b in base[i:]]
    return base + wedges + [suspend(m) for m in base + wedges]


# ---------------------------------------------------------------------------
# Matrices, axiom verification, and the pi_4(S^3) computation


def sq_matrix(module: GradedModule, i: int, d: int) -> list[list[int]]:
    """Matrix of Sq^i from the degree-d to the degree-(d+i) part.

    Rows are indexed by the degree-d source generators, columns by the
    degree-(d+i) targets, both sorted by id; entry 1 marks that the
    target occurs in Sq^i(source).
    """
    sources = module.gens_in_degree(d)
    targets = module.gens_in_degree(d + i)
    return [
        [1 if t in module.sq_gen(s, i) else 0 for t in targets]
        for s in sources
    ]


@dataclass(frozen=True)
class AxiomFailure:
    axiom: str
    where: str
    detail: str

    def as_dict(self) -> dict:
        return {"axiom": self.axiom, "where": self.where, "detail": self.detail}


@dataclass(frozen=True)
class VerifyReport:
    module_name: str
    max_degree: int
    checks: int
    failures: tuple[AxiomFailure, ...]

    @property
    def ok(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict:
        return {
            "module": self.module_name,
            "max_degree": self.max_degree,
            "checks": self.checks,
            "failures": [f.as_dict() for f in self.failures],
            "ok": self.ok,
        }


def _adem_rhs_words(n: int, k: int) -> list[Word]:
    # Right-hand side of the Adem identity for Sq^n Sq^k, n < 2k,
    # assembled from the coefficient formula alone (the rewriting
    # engine stays out of the verifier).
    words = []
    for c in range(n // 2 + 1):
        if adem_coeff(n, k, c):
            words.append((n + k - c,) if c == 0 else ((n + k - c, c)))
    return words


def verify_axioms(module: GradedModule, max_degree: int, *, rng_seed: int = 0) -> VerifyReport:
    """Check the Steenrod axioms on a module up to the given degree.

    Covers table consistency, the identity and instability rules, the
    top-square rule, the Cartan formula on all generator pairs,
    additivity on random sums, and the Adem identities evaluated
    through the action on both sides.  Failures are collected in the
    report, not raised.
    """
    failures: list[AxiomFailure] = []
    checks = 0

    def fail(axiom: str, where: str, detail: str) -> None:
        failures.append(AxiomFailure(axiom, where, detail))

    # Table consistency: stored squares respect degrees and instability.
    for (gid, i), targets in sorted(module.sq.items()):
        checks += 1
        d = module.degree_of(gid)
        if i < 1:
            fail("table", f"Sq{i}({gid})", "stored square index must be >= 1")
            continue
        if i > d:
            fail("(I2)", f"Sq{i}({gid})", f"stored entry above generator degree {d}")
        for t in sorted(targets):
            if module.degree_of(t) != d + i:
                fail(
                    "degree",
                    f"Sq{i}({gid})",
                    f"target {t} has degree {module.degree_of(t)}, expected {d + i}",
                )
    for (g, h), targets in sorted(module.products.items()):
        checks += 1
        dsum = module.degree_of(g) + module.degree_of(h)
        for t in sorted(targets):
            if module.degree_of(t) != dsum:
                fail(
                    "degree",
                    f"{g} cup {h}",
                    f"target {t} has degree {module.degree_of(t)}, expected {dsum}",
                )

    positive = list(module.generators)

    # (I1) the empty word acts as the identity.
    for gid, d in positive:
        if d > max_degree:
            continue
        checks += 1
        if act_on_module(AdemElement.one(), module.element(gid)) != module.element(gid):
            fail("(I1)", gid, "identity word does not act as identity")

    # (I3) top square equals cup square (absent products mean zero).
    for gid, d in positive:
        if d > max_degree:
            continue
        checks += 1
        top = module.sq_gen(gid, d)
        square = module.cup_gens(gid, gid)
        if top != square:
            fail(
                "(I3)",
                f"Sq{d}({gid})",
                f"top square {sorted(top)} != cup square {sorted(square)}",
            )

    # (C) Cartan formula on all generator pairs.
    for a, (g, dg) in enumerate(positive):
        for h, dh in positive[a:]:
            if dg + dh > max_degree:
                continue
            product_gh = module.cup_gens(g, h)
            for n in range(1, min(max_degree, dg + dh) + 1):
                checks += 1
                lhs = _apply_sq_set(module, n, product_gh)
                rhs: frozenset[str] = frozenset()
                for i in range(n + 1):
                    rhs ^= _cup_sets(
                        module, module.sq_gen(g, i), module.sq_gen(h, n - i)
                    )
                if lhs != rhs:
                    fail(
                        "(C)",
                        f"Sq{n}({g} cup {h})",
                        f"lhs {sorted(lhs)} != rhs {sorted(rhs)}",
                    )

    # Additivity on random sums (true by construction; exercised anyway).
    rng = random.Random(rng_seed)
    by_degree: dict[int, list[str]] = {}
    for gid, d in positive:
        by_degree.setdefault(d, []).append(gid)
    for d, gens in sorted(by_degree.items()):
        if d > max_degree or len(gens) < 2:
            continue
        for _ in range(4):
            xs = frozenset(g for g in gens if rng.random() < 0.5)
            ys = frozenset(g for g in gens if rng.random() < 0.5)
            for word in ((1,), (2,), (2, 1)):
                checks += 1
                op = AdemElement(frozenset({word}))
                both = act_on_module(op, ModuleElement(module, xs ^ ys))
                split = act_on_module(op, ModuleElement(module, xs)) + act_on_module(
                    op, ModuleElement(module, ys)
                )
                if both != split:
                    fail("additivity", f"{word} on degree {d}", "action is not additive")

    # (A) Adem identities, both sides evaluated through the action.
    for k in range(1, max_degree):
        for n in range(1, min(2 * k, max_degree - k + 1)):
            if n + k > max_degree:
                continue
            lhs_op = AdemElement(frozenset({(n, k)}))
            rhs_op = AdemElement(frozenset(_adem_rhs_words(n, k)))
            for gid, d in positive:
                if d > max_degree:
                    continue
                checks += 1
                x = module.element(gid)
                if act_on_module(lhs_op, x) != act_on_module(rhs_op, x):
                    fail(
                        "(A)",
                        f"Sq{n} Sq{k} on {gid}",
                        "composite disagrees with its Adem expansion",
                    )

    return VerifyReport(module.name, max_degree, checks, tuple(failures))


@dataclass(frozen=True)
class Pi4Report:
    """Outcome of the Sq^2 comparison distinguishing the two mapping cofibres."""

    suspension_name: str
    wedge_name: str
    suspension_matrix: tuple[tuple[int, ...], ...]
    wedge_matrix: tuple[tuple[int, ...], ...]
    suspension_rank: int
    wedge_rank: int
    h3_dimensions: tuple[int, int]
    h5_dimensions: tuple[int, int]
    distinct: bool
    conclusion: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return self.distinct

    def as_dict(self) -> dict:
        return {
            "spaces": [self.suspension_name, self.wedge_name],
            "sq2_matrices": {
                self.suspension_name: [list(r) for r in self.suspension_matrix],
                self.wedge_name: [list(r) for r in self.wedge_matrix],
            },
            "sq2_ranks": {
                self.suspension_name: self.suspension_rank,
                self.wedge_name: self.wedge_rank,
            },
            "h3_dimensions": list(self.h3_dimensions),
            "h5_dimensions": list(self.h5_dimensions),
            "distinct": self.distinct,
            "conclusion": list(self.conclusion),
        }


def distinguish_pi4() -> Pi4Report:
    """Compare Sq^2 : H^3 -> H^5 on the two candidate cofibres.

    The suspension of CP^2 is the cofibre of the suspended Hopf map;
    the wedge S^5 v S^3 is the cofibre of the constant map.  A nonzero
    Sq^2 on the first and a zero Sq^2 on the second shows the spaces
    differ, hence the suspended Hopf map is essential, hence pi_4(S^3)
    is nonzero.
    """
    sigma_cp2 = suspend(complex_proj(2))
    wedge_53 = wedge(sphere(5), sphere(3))
    m_susp = sq_matrix(sigma_cp2, 2, 3)
    m_wedge = sq_matrix(wedge_53, 2, 3)
    r_susp = matrix_rank(m_susp)
    r_wedge = matrix_rank(m_wedge)
    distinct = r_susp == 1 and r_wedge == 0
    if distinct:
        conclusion = (
            f"Sq^2 : H^3 -> H^5 has rank {r_susp} on {sigma_cp2.name} "
            f"and rank {r_wedge} on {wedge_53.name}",
            "the two cofibres are not equivalent",
            "the suspended Hopf map is therefore essential",
            "π₄(S³) ≠ 0",
        )
    else:
        conclusion = (
            f"unexpected ranks {r_susp} and {r_wedge}: comparison is inconclusive",
        )
    return Pi4Report(
        suspension_name=sigma_cp2.name,
        wedge_name=wedge_53.name,
        suspension_matrix=tuple(tuple(r) for r in m_susp),
        wedge_matrix=tuple(tuple(r) for r in m_wedge),
        suspension_rank=r_susp,
        wedge_rank=r_wedge,
        h3_dimensions=(len(sigma_cp2.gens_in_degree(3)), len(wedge_53.gens_in_degree(3))),
        h5_dimensions=(len(sigma_cp2.gens_in_degree(5)), len(wedge_53.gens_in_degree(5))),
        distinct=distinct,
        conclusion=conclusion,
    )
