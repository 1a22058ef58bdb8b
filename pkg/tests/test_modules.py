"""Graded module catalog, axiom verifier, and the pi_4(S^3) comparison."""

import pytest

from steenrod import modfile
from steenrod.adem import AdemElement, Sq
from steenrod.modules import (
    GradedModule,
    act_on_module,
    complex_proj,
    cup_elements,
    distinguish_pi4,
    full_verification_catalog,
    point,
    real_proj,
    sphere,
    sq_matrix,
    suspend,
    verify_axioms,
    wedge,
)
from steenrod.parsing import parse_poly
from steenrod.poly import act


def corrupted_rp4() -> GradedModule:
    """rp4 with the wrong differential Sq1(t1) := t1 (a negative control)."""
    good = real_proj(4)
    bad_sq = dict(good.sq)
    bad_sq[("t1", 1)] = frozenset({"t1"})
    return GradedModule("bad_rp4", good.generators, bad_sq, good.products, 4)


def test_sphere_action_is_trivial():
    s3 = sphere(3)
    x = s3.element("x3")
    assert act_on_module(Sq(2), x).is_zero()
    assert act_on_module(Sq(1), sphere(1).element("x1")).is_zero()
    assert act_on_module(AdemElement.one(), x) == x


def test_real_proj_action():
    rp5 = real_proj(5)
    assert act_on_module(Sq(1), rp5.element("t1")) == rp5.element("t2")
    assert act_on_module(Sq(2), rp5.element("t3")) == rp5.element("t5")
    rp3 = real_proj(3)
    assert act_on_module(Sq(2), rp3.element("t3")).is_zero()  # truncated


def test_complex_proj_action():
    cp2 = complex_proj(2)
    x = cp2.element("x1")
    assert act_on_module(Sq(2), x) == cp2.element("x2")
    assert act_on_module(Sq(2), x) == cup_elements(x, x)
    assert act_on_module(Sq(1), x).is_zero()
    assert act_on_module(Sq(2), complex_proj(1).element("x1")).is_zero()


def test_suspension_shifts_and_kills_products():
    scp2 = suspend(complex_proj(2))
    assert [d for _, d in scp2.generators] == [3, 5]
    x = scp2.element("s_x1")
    assert act_on_module(Sq(2), x) == scp2.element("s_x2")
    assert cup_elements(x, x).is_zero()
    # suspending a sphere is the next sphere up to naming
    ss3 = suspend(sphere(3))
    assert [d for _, d in ss3.generators] == [4]
    assert not ss3.sq


def test_suspension_preserves_instability():
    for module in [real_proj(6), complex_proj(3)]:
        s = suspend(module)
        for (gid, i), _ in s.sq.items():
            assert i <= s.degree_of(gid)


def test_wedge_combines_and_renames():
    w = wedge(sphere(5), sphere(3))
    assert {gid for gid, _ in w.generators} == {"x5", "x3"}
    assert act_on_module(Sq(2), w.element("x3")).is_zero()
    # collision forces prefixes
    ww = wedge(real_proj(2), real_proj(2))
    assert {gid for gid, _ in ww.generators} == {"l_t1", "l_t2", "r_t1", "r_t2"}
    assert cup_elements(ww.element("l_t1"), ww.element("r_t1")).is_zero()
    assert cup_elements(ww.element("l_t1"), ww.element("l_t1")) == ww.element("l_t2")


def test_wedge_with_point_is_identity_up_to_name():
    m = real_proj(3)
    w = wedge(m, point())
    assert w.generators == m.generators
    assert w.sq == m.sq
    assert w.products == m.products


def test_act_on_module_adem_instance():
    rp8 = real_proj(8)
    for k in range(1, 9):
        x = rp8.element(f"t{k}")
        assert act_on_module(Sq(2, 2), x) == act_on_module(Sq(3, 1), x)


def all_words_up_to(max_degree: int):
    out = [()]
    for d in range(1, max_degree + 1):
        stack = [((), d)]
        while stack:
            prefix, left = stack.pop()
            for part in range(1, left + 1):
                word = prefix + (part,)
                if part == left:
                    out.append(word)
                else:
                    stack.append((word, left - part))
    return out


def test_module_action_agrees_with_polynomial_action():
    # on rp_n the table action is the polynomial action followed by truncation
    for n in range(1, 9):
        rpn = real_proj(n)
        for word in all_words_up_to(n):
            op = AdemElement(frozenset({word}))
            for k in range(1, n + 1):
                poly_image = act(op, parse_poly(f"t1^{k}"))
                expected = frozenset(
                    f"t{sum(e for _, e in mono)}"
                    for mono in poly_image.monomials
                    if sum(e for _, e in mono) <= n
                )
                got = act_on_module(op, rpn.element(f"t{k}"))
                assert got.gens == expected, (n, word, k)


def test_sq_matrix_examples():
    assert sq_matrix(suspend(complex_proj(2)), 2, 3) == [[1]]
    assert sq_matrix(wedge(sphere(5), sphere(3)), 2, 3) == [[0]]
    rp4 = real_proj(4)
    assert sq_matrix(rp4, 0, 2) == [[1]]  # Sq^0 is the identity
    assert sq_matrix(rp4, 1, 1) == [[1]]  # Sq^1(t) = t^2
    assert sq_matrix(rp4, 2, 1) == [[0]]  # instability: 2 > deg(t)


def test_sq_matrix_zero_above_degree():
    for module in [real_proj(6), complex_proj(3)]:
        for d in range(1, 5):
            for i in range(d + 1, d + 3):
                matrix = sq_matrix(module, i, d)
                assert all(v == 0 for row in matrix for v in row)


def test_verify_axioms_on_catalog_samples():
    assert verify_axioms(real_proj(8), 8).ok
    assert verify_axioms(complex_proj(2), 6).ok
    assert verify_axioms(wedge(real_proj(4), complex_proj(2)), 8).ok
    assert verify_axioms(suspend(real_proj(5)), 8).ok


def test_verify_axioms_catches_corruption():
    report = verify_axioms(corrupted_rp4(), 4)
    assert not report.ok
    axioms = {f.axiom for f in report.failures}
    assert "(I3)" in axioms
    assert "(C)" in axioms


def test_verify_full_catalog_up_to_degree_ten():
    catalog = full_verification_catalog()
    assert len(catalog) > 400
    for module in catalog:
        report = verify_axioms(module, 10)
        assert report.ok, (module.name, [f.as_dict() for f in report.failures][:3])


def test_suspension_preserves_verification():
    for module in [sphere(4), real_proj(5), complex_proj(3), wedge(sphere(2), real_proj(3))]:
        base = verify_axioms(module, 9)
        lifted = verify_axioms(suspend(module), 10)
        assert base.ok and lifted.ok, module.name


def test_distinguish_pi4_report():
    report = distinguish_pi4()
    assert report.ok
    assert report.suspension_rank == 1
    assert report.wedge_rank == 0
    assert report.h3_dimensions == (1, 1)
    assert report.h5_dimensions == (1, 1)
    assert report.conclusion[-1] == "π₄(S³) ≠ 0"
    # deterministic across runs
    assert distinguish_pi4() == report


def test_inhomogeneous_elements_tolerated():
    rp4 = real_proj(4)
    mixed = rp4.element(["t1", "t3"])
    with pytest.raises(ValueError):
        mixed.degree()
    # Sq1(t) = t^2 and Sq1(t^3) = 3 t^4 = t^4; Sq1(t^2) would vanish
    image = act_on_module(Sq(1), mixed)
    assert image == rp4.element("t2") + rp4.element("t4")


def test_module_file_round_trip():
    for module in [real_proj(4), complex_proj(3), suspend(complex_proj(2)),
                   wedge(real_proj(2), real_proj(2)), sphere(3)]:
        text = modfile.dumps(module)
        again = modfile.loads(text)
        assert modfile.dumps(again) == text
        assert again.generators == module.generators
        assert again.sq == module.sq
        assert again.products == module.products
        assert again.top_degree == module.top_degree
        assert verify_axioms(again, 8).ok == verify_axioms(module, 8).ok


def test_module_file_rejects_bad_documents():
    with pytest.raises(ValueError):
        modfile.loads('{"name": "x"}')
    with pytest.raises(ValueError):
        modfile.loads(
            '{"name": "x", "top_degree": 1, "generators": [["a b", 1]], "sq": {}, "products": {}}'
        )
    with pytest.raises(ValueError):
        modfile.loads(
            '{"name": "x", "top_degree": 2, "generators": [["a", 1]],'
            ' "sq": {"a": {"1": ["missing"]}}, "products": {}}'
        )


def test_module_file_loads_semantically_wrong_tables():
    # structure-only validation: a wrong action table loads, verify reports it
    bad = corrupted_rp4()
    again = modfile.loads(modfile.dumps(bad))
    assert not verify_axioms(again, 4).ok
