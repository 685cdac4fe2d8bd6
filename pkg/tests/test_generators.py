import pytest

from balanced_betti import (
    GluingPlan,
    clique_complex_multipartite,
    cone_join,
    connected_sum,
    cross_polytope_boundary,
    even_cycle,
    generate,
    graded_betti,
    point_set,
    simplex,
    stacked_cross_polytopal,
    stacked_sphere,
    suspension,
    vertex_degrees,
)
from balanced_betti.complex import ComplexError, from_facets


def test_cross_polytope_boundaries():
    assert cross_polytope_boundary(1).f_vector() == (1, 2)
    assert cross_polytope_boundary(2).f_vector() == (1, 4, 4)
    assert cross_polytope_boundary(3).f_vector() == (1, 6, 12, 8)
    assert cross_polytope_boundary(3).coloring == (0, 0, 1, 1, 2, 2)


def test_clique_complexes():
    assert clique_complex_multipartite(1, 1).f_vector() == (1, 2, 1)
    cx = clique_complex_multipartite(3, 3, 3, 3)
    assert cx.f_vector() == (1, 12, 54, 108, 81)
    assert cx.color_class_sizes() == (3, 3, 3, 3)
    assert cx.is_balanced() and cx.is_cohen_macaulay()
    with pytest.raises(ComplexError):
        clique_complex_multipartite(2, 0)


def test_simple_families():
    assert simplex(3).f_vector() == (1, 3, 3, 1)
    assert point_set(4).f_vector() == (1, 4)
    assert even_cycle(3).f_vector() == (1, 6, 6)
    assert even_cycle(3).is_balanced()
    octa = suspension(even_cycle(2))
    assert octa.f_vector() == (1, 6, 12, 8) and octa.is_balanced()
    with pytest.raises(ComplexError):
        even_cycle(1)


def test_cone_join_is_balanced_cm():
    cx = cone_join(8, 4)
    assert cx.f_vector()[1] == 8
    assert cx.is_balanced() and cx.is_cohen_macaulay()
    assert len(cx.facets) == 5
    with pytest.raises(ComplexError):
        cone_join(3, 4)


def test_connected_sum_of_octahedra():
    octa = cross_polytope_boundary(3)
    F = [0, 2, 4]
    G = [1, 3, 5]
    cx = connected_sum(octa, F, octa, G)
    assert cx.n == 9 and len(cx.facets) == 14
    assert cx.is_balanced() and cx.is_normal_pseudomanifold()


def test_connected_sum_of_tetrahedra_is_stacked():
    tet = from_facets(4, [[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]])
    cx = connected_sum(tet, [0, 1, 2], tet, [0, 1, 2])
    assert cx.n == 5 and len(cx.facets) == 6
    assert cx.f_vector() == stacked_sphere(3, 5).f_vector()


def test_connected_sum_errors():
    octa = cross_polytope_boundary(3)
    with pytest.raises(ComplexError, match="not a facet"):
        connected_sum(octa, [0, 1, 2], octa, [1, 3, 5])
    with pytest.raises(ComplexError, match="equal dimension"):
        connected_sum(octa, [0, 2, 4], cross_polytope_boundary(2), [0, 2])
    with pytest.raises(ComplexError, match="preserve colors"):
        connected_sum(octa, [0, 2, 4], octa, [1, 3, 5], {0: 3, 2: 1, 4: 5})


def test_stacked_spheres():
    assert stacked_sphere(4, 5) == from_facets(5, [[a for a in range(5) if a != v] for v in range(5)])
    assert len(stacked_sphere(3, 6).facets) == 8
    for n in range(4, 9):
        cx = stacked_sphere(3, n)
        assert cx.is_normal_pseudomanifold() and cx.is_cohen_macaulay()
    with pytest.raises(ComplexError):
        stacked_sphere(3, 3)


def test_two_copy_stack_is_the_cross_polytope():
    for d in (2, 3, 4):
        assert stacked_cross_polytopal(d, 2) == cross_polytope_boundary(d)


@pytest.mark.parametrize("d", [3, 4, 5])
@pytest.mark.parametrize("k", [2, 3, 4])
def test_stacked_cross_polytopal_is_balanced_pseudomanifold(d, k):
    cx = stacked_cross_polytopal(d, k)
    assert cx.n == k * d
    assert len(cx.facets) == (k - 1) * 2 ** d - 2 * (k - 2)
    assert cx.is_balanced() and cx.is_normal_pseudomanifold()


def test_gluing_plans_change_the_complex_not_the_f_vector():
    d, k = 3, 4
    plans = [GluingPlan("path"), GluingPlan("star"), GluingPlan("random", seed=3), GluingPlan("random", seed=11)]
    cxs = [stacked_cross_polytopal(d, k, p) for p in plans]
    assert len({cx.f_vector() for cx in cxs}) == 1
    assert vertex_degrees(cxs[0]) != vertex_degrees(cxs[1])


def test_gluing_plan_does_not_change_betti_numbers():
    tables = [graded_betti(stacked_cross_polytopal(3, 4, GluingPlan(kind))) for kind in ("path", "star")]
    assert tables[0] == tables[1]


def test_random_plan_is_reproducible():
    a = stacked_cross_polytopal(3, 4, GluingPlan("random", seed=5))
    b = stacked_cross_polytopal(3, 4, GluingPlan("random", seed=5))
    assert a == b


def test_explicit_plan_steps():
    cx = stacked_cross_polytopal(3, 3, GluingPlan(steps=[[0, 2, 4]]))
    assert cx.n == 9 and cx.is_normal_pseudomanifold()
    with pytest.raises(ComplexError, match="not a current facet"):
        stacked_cross_polytopal(3, 3, GluingPlan(steps=[[0, 1, 2]]))
    with pytest.raises(ComplexError, match="steps"):
        stacked_cross_polytopal(3, 4, GluingPlan(steps=[[0, 2, 4]]))
    with pytest.raises(ValueError):
        GluingPlan("spiral")


def test_generate_dispatch():
    assert generate("cross-polytope", d=3) == cross_polytope_boundary(3)
    assert generate("clique", sizes=[2, 2]) == clique_complex_multipartite(2, 2)
    assert generate("stacked", d=3, n=6) == stacked_sphere(3, 6)
    assert generate("cone-join", n=7, d=3) == cone_join(7, 3)
    with pytest.raises(ValueError, match="needs --k"):
        generate("cross-stacked", d=3)
    with pytest.raises(ValueError, match="unknown family"):
        generate("torus")
