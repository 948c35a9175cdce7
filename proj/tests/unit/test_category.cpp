#include "doctest.h"

#include <random>

#include "fixtures.hpp"
#include "qhopf/category.hpp"

using namespace qhopf;

namespace {

// grading module of the function algebra on G: delta_b |> e_a = [b = a] e_a
LeftModule graded_module(const QuasiHopfAlgebra& H, const std::string& name) {
    Space v = make_space(H.dim(), name);
    LinearMap act({H.space, v}, {v});
    for (int a = 0; a < H.dim(); ++a)
        act.add_entry((std::uint64_t)a * H.dim() + a, (std::uint64_t)a, Scalar::one());
    return LeftModule{&H, v, std::move(act), name};
}

LinearMap id_on(const LeftModule& V) { return LinearMap::identity({V.space}); }

} // namespace

TEST_CASE("module axioms and tensor products over a group algebra") {
    QuasiTriangularQH H = fixtures::group_hopf(fixtures::s3_group(), "kS3");
    LeftModule triv = trivial_module(H);
    LeftModule reg = regular_module(H);
    LeftModule ad = adjoint_module(H);

    CHECK(verify_module(triv).pass());
    CHECK(verify_module(reg).pass());
    CHECK(verify_module(ad).pass());

    // group algebra adjoint action is conjugation
    const FiniteGroup G = fixtures::s3_group();
    for (int h = 0; h < 6; ++h)
        for (int g = 0; g < 6; ++g) {
            SparseVec expect{{(std::uint64_t)G.op(G.op(h, g), G.inv[(std::size_t)h]),
                              Scalar::one()}};
            CHECK(ad.action.at((std::uint64_t)h, (std::uint64_t)g) == expect);
        }

    // trivial (x) V acts exactly as V on the second factor
    LeftModule tv = module_tensor(triv, reg);
    CHECK(verify_module(tv).pass());
    for (int h = 0; h < 6; ++h)
        for (int v = 0; v < 6; ++v)
            CHECK(tv.action.at((std::uint64_t)h, (std::uint64_t)v) ==
                  reg.action.at((std::uint64_t)h, (std::uint64_t)v));

    // grouplike coproduct: h |> (a (x) b) = ha (x) hb
    LeftModule rr = module_tensor(reg, reg);
    CHECK(verify_module(rr).pass());
    for (int h = 0; h < 6; ++h)
        for (int a = 0; a < 6; ++a)
            for (int b = 0; b < 6; ++b) {
                SparseVec expect{
                    {(std::uint64_t)G.op(h, a) * 6 + (std::uint64_t)G.op(h, b), Scalar::one()}};
                CHECK(rr.action.at((std::uint64_t)h, (std::uint64_t)(a * 6 + b)) == expect);
            }

    // trivial associator: the constraint is the identity matrix
    ModuleMorphismCandidate assoc = associator(reg, ad, reg);
    CHECK(assoc.map == LinearMap::identity({assoc.source.space}));
    CHECK(verify_module_morphism(assoc).pass());

    // R = 1 (x) 1: the braiding is the plain swap
    ModuleMorphismCandidate br = braiding(H, reg, ad);
    for (int u = 0; u < 6; ++u)
        for (int v = 0; v < 6; ++v) {
            SparseVec expect{{(std::uint64_t)(v * 6 + u), Scalar::one()}};
            CHECK(br.map.column((std::uint64_t)(u * 6 + v)) == expect);
        }
    CHECK(verify_module_morphism(br).pass());
}

TEST_CASE("associator and braiding on semion modules") {
    QuasiTriangularQH H = fixtures::semion_algebra();
    LeftModule reg = regular_module(H);
    Cochain3 phi = cyclic_cocycle(2, 1);

    // the associator is diagonal with the cocycle values on basis triples
    ModuleMorphismCandidate assoc = associator(reg, reg, reg);
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                std::uint64_t i = (std::uint64_t)((a * 2 + b) * 2 + c);
                SparseVec expect{{i, phi.at(a, b, c)}};
                CHECK(assoc.map.column(i) == expect);
            }
    CHECK(verify_module_morphism(assoc).pass());

    // inverse constraint composes to the identity both ways
    ModuleMorphismCandidate ainv = associator_inverse(reg, reg, reg);
    CHECK(ainv.map.compose(assoc.map) == LinearMap::identity({assoc.source.space}));
    CHECK(assoc.map.compose(ainv.map) == LinearMap::identity({assoc.target.space}));

    // braiding is the swap weighted by r, and the inverse undoes it
    ModuleMorphismCandidate br = braiding(H, reg, reg);
    CHECK(verify_module_morphism(br).pass());
    CHECK(br.map.column(3) == SparseVec{{3, Scalar::root_of_unity(4, 1)}});
    ModuleMorphismCandidate binv = braiding_inverse(H, reg, reg);
    CHECK(binv.map.compose(br.map) == LinearMap::identity({br.source.space}));
    CHECK(br.map.compose(binv.map) == LinearMap::identity({br.target.space}));

    // pentagon: both composites ((U(x)V)(x)W)(x)Z -> U(x)(V(x)(W(x)Z)) agree
    LeftModule u = reg, v = reg, w = reg, z = reg;
    LeftModule vw = module_tensor(v, w), wz = module_tensor(w, z), uv = module_tensor(u, v);
    LinearMap lhs = associator(u, v, wz).map.compose(associator(uv, w, z).map);
    LinearMap rhs = map_tensor(id_on(u), associator(v, w, z).map)
                        .compose(associator(u, vw, z).map)
                        .compose(map_tensor(associator(u, v, w).map, id_on(z)));
    CHECK(lhs == rhs);

    // hexagon for the braiding out of the first slot:
    // Psi_{U,V(x)W} = Phi'_{V,W,U} (id (x) Psi_{U,W}) Phi_{V,U,W} (Psi_{U,V} (x) id) Phi'_{U,V,W}
    LinearMap hex1_lhs = braiding(H, u, vw).map;
    LinearMap hex1_rhs = associator_inverse(v, w, u)
                             .map.compose(map_tensor(id_on(v), braiding(H, u, w).map))
                             .compose(associator(v, u, w).map)
                             .compose(map_tensor(braiding(H, u, v).map, id_on(w)))
                             .compose(associator_inverse(u, v, w).map);
    CHECK(hex1_lhs == hex1_rhs);

    // hexagon for the braiding out of the second slot:
    // Psi_{U(x)V,W} = Phi_{W,U,V} (Psi_{U,W} (x) id) Phi'_{U,W,V} (id (x) Psi_{V,W}) Phi_{U,V,W}
    LinearMap hex2_lhs = braiding(H, uv, w).map;
    LinearMap hex2_rhs = associator(w, u, v)
                             .map.compose(map_tensor(braiding(H, u, w).map, id_on(v)))
                             .compose(associator_inverse(u, w, v).map)
                             .compose(map_tensor(id_on(u), braiding(H, v, w).map))
                             .compose(associator(u, v, w).map);
    CHECK(hex2_lhs == hex2_rhs);
}

TEST_CASE("duals, evaluation and the snake identities") {
    SUBCASE("group algebra: ev pairs dual basis vectors") {
        QuasiTriangularQH H = fixtures::group_hopf(make_group(std::vector<int>{2}), "kZ2");
        LeftModule reg = regular_module(H);
        RigidDual d = dual_module(reg);
        for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
                SparseVec expect;
                if (a == b) expect[0] = Scalar::one();
                CHECK(d.ev.map.column((std::uint64_t)(a * 2 + b)) == expect);
            }
        CHECK(verify_rigidity(reg).pass());
    }
    SUBCASE("semion: beta enters coev and the snakes still close") {
        QuasiTriangularQH H = fixtures::semion_algebra();
        LeftModule reg = regular_module(H);
        RigidDual d = dual_module(reg);
        // coev = sum_a beta |> e_a (x) f^a with beta = d_0 - d_1
        SparseVec expect{{0, Scalar::one()}, {3, Scalar(-1)}};
        CHECK(d.coev.map.column(0) == expect);
        Report rep = verify_rigidity(reg);
        CHECK_MESSAGE(rep.pass(), rep.text());
        CHECK(verify_rigidity(adjoint_module(H)).pass());
    }
    SUBCASE("octonion grading: 8-dimensional module over the twisted function algebra") {
        FiniteGroup G = make_group({2, 2, 2});
        Cochain3 phi = coboundary3(octonion_cochain(G));
        QuasiTriangularQH H = fixtures::function_hopf(phi, octonion_braiding(G), "k(Z2^3)");
        REQUIRE(verify_all(H).pass());
        LeftModule gr = graded_module(H, "kG_F");
        CHECK(verify_module(gr).pass());
        Report rep = verify_rigidity(gr);
        CHECK_MESSAGE(rep.pass(), rep.text());
    }
}

TEST_CASE("reconstruction maps between equivariant maps and natural families") {
    SUBCASE("ordinary Hopf algebra: the component at M is plain action") {
        QuasiTriangularQH H = fixtures::group_hopf(fixtures::s3_group(), "kS3");
        LeftModule ad = adjoint_module(H);
        ThetaFamily th = theta(H, ModuleMorphismCandidate{ad, ad, id_on(ad)});
        LinearMap at_reg = th.component(regular_module(H));
        // q = 1 (x) 1 so xi(b (x) m) = b m
        for (int b = 0; b < 6; ++b)
            for (int m = 0; m < 6; ++m)
                CHECK(at_reg.column((std::uint64_t)(b * 6 + m)) ==
                      H.mult.at((std::uint64_t)b, (std::uint64_t)m));
        Report rep = verify_theta(H, ModuleMorphismCandidate{ad, ad, id_on(ad)});
        CHECK_MESSAGE(rep.pass(), rep.text());
    }
    SUBCASE("semion: identity morphism round-trips through the family") {
        QuasiTriangularQH H = fixtures::semion_algebra();
        LeftModule ad = adjoint_module(H);
        Report rep = verify_theta(H, ModuleMorphismCandidate{ad, ad, id_on(ad)});
        CHECK_MESSAGE(rep.pass(), rep.text());
    }
    SUBCASE("semion: random equivariant maps round-trip") {
        QuasiTriangularQH H = fixtures::semion_algebra();
        LeftModule ad = adjoint_module(H);
        std::mt19937_64 rng(20240817);
        for (int trial = 0; trial < 5; ++trial) {
            LinearMap psi({ad.space}, {ad.space});
            for (int v = 0; v < 2; ++v)
                for (int r = 0; r < 2; ++r) {
                    std::int64_t c = (std::int64_t)(rng() % 7) - 3;
                    if (c != 0) psi.add_entry((std::uint64_t)v, (std::uint64_t)r, Scalar(c));
                }
            ModuleMorphismCandidate cand{ad, ad, psi};
            if (!verify_module_morphism(cand).pass()) continue;
            Report rep = verify_theta(H, cand);
            CHECK_MESSAGE(rep.pass(), rep.text());
        }
    }
    SUBCASE("non-equivariant input is rejected") {
        QuasiTriangularQH H = fixtures::group_hopf(fixtures::s3_group(), "kS3");
        LeftModule reg = regular_module(H);
        LeftModule ad = adjoint_module(H);
        // the identity matrix is not equivariant from regular to adjoint
        ModuleMorphismCandidate bad{reg, ad, LinearMap::identity({reg.space})};
        CHECK_THROWS_AS((void)theta(H, bad), std::invalid_argument);
    }
}
