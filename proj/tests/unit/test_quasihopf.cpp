#include "doctest.h"

#include "fixtures.hpp"
#include "qhopf/derived.hpp"

using namespace qhopf;

namespace {

bool check_failed(const Report& r, const std::string& name) {
    for (const auto& c : r.checks)
        if (c.name == name) return !c.pass();
    return false;
}

} // namespace

TEST_CASE("group algebra of S3 passes every axiom") {
    QuasiTriangularQH H = fixtures::group_hopf(fixtures::s3_group(), "kS3");
    Report rep = verify_all(H);
    CHECK_MESSAGE(rep.pass(), rep.text());

    // on an ordinary cocommutative Hopf algebra every derived element collapses
    DerivedElements d = derive_elements(H);
    Tensor id2 = tensor_of(H.unit, H.unit);
    CHECK(d.gamma == id2);
    CHECK(d.delta_el == id2);
    CHECK(d.f == id2);
    CHECK(d.g == id2);
    CHECK(d.q == id2);
    CHECK(d.p == id2);
    Report drep = verify_derived(H, d);
    CHECK_MESSAGE(drep.pass(), drep.text());
    CHECK(r_inverse_formula(H) == H.r_inv);
}

TEST_CASE("two-point semion algebra is a quasitriangular quasi-Hopf algebra") {
    QuasiTriangularQH H = fixtures::semion_algebra();
    // braiding phase satisfies the cocycle-corrected bicharacter laws
    Cochain3 phi = cyclic_cocycle(2, 1);
    Cochain2 r = constant_cochain2(*phi.group, Scalar::one());
    r.at(1, 1) = Scalar::root_of_unity(4, 1);
    CHECK(check_r_function(r, phi).pass());

    Report rep = verify_all(H);
    CHECK_MESSAGE(rep.pass(), rep.text());
    CHECK(r_inverse_formula(H) == H.r_inv);
}

TEST_CASE("semion derived elements match hand computation") {
    QuasiTriangularQH H = fixtures::semion_algebra();
    DerivedElements d = derive_elements(H);

    // gamma = sum (-1)^(ab(1+a+b)) d_a (x) d_b: only (1,1) is negative
    Tensor gamma({H.space, H.space});
    gamma.add({0, 0}, Scalar(1));
    gamma.add({0, 1}, Scalar(1));
    gamma.add({1, 0}, Scalar(1));
    gamma.add({1, 1}, Scalar(-1));
    CHECK(d.gamma == gamma);

    // delta = sum (-1)^(ab(a+b) + ab + a + b) d_a (x) d_b: only (0,0) positive
    Tensor delta_el({H.space, H.space});
    delta_el.add({0, 0}, Scalar(1));
    delta_el.add({0, 1}, Scalar(-1));
    delta_el.add({1, 0}, Scalar(-1));
    delta_el.add({1, 1}, Scalar(-1));
    CHECK(d.delta_el == delta_el);

    // q(a,b) = (-1)^(ab), p(a,b) = (-1)^(ab+b)
    Tensor q({H.space, H.space}), p({H.space, H.space});
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) {
            q.add({a, b}, Scalar((a * b) % 2 ? -1 : 1));
            p.add({a, b}, Scalar((a * b + b) % 2 ? -1 : 1));
        }
    CHECK(d.q == q);
    CHECK(d.p == p);

    Report drep = verify_derived(H, d);
    CHECK_MESSAGE(drep.pass(), drep.text());
}

TEST_CASE("verifiers name the axiom a broken structure violates") {
    SUBCASE("non-cocycle associator trips the pentagon") {
        QuasiTriangularQH H = fixtures::semion_algebra();
        H.phi.add({0, 1, 1}, Scalar(-2)); // flips the entry to -1
        Report rep = verify_quasibialgebra(H);
        CHECK_FALSE(rep.pass());
        CHECK(check_failed(rep, "pentagon"));
    }
    SUBCASE("stale inverse trips associator invertibility") {
        QuasiTriangularQH H = fixtures::semion_algebra();
        H.phi_inv.add({1, 1, 1}, Scalar(-1)); // entry is now wrong
        Report rep = verify_quasibialgebra(H);
        CHECK(check_failed(rep, "associator invertible"));
    }
    SUBCASE("non-normalized associator trips counitality") {
        QuasiTriangularQH H = fixtures::semion_algebra();
        H.phi.add({0, 0, 1}, Scalar(-2));
        H.phi_inv.add({0, 0, 1}, Scalar(-2));
        Report rep = verify_quasibialgebra(H);
        CHECK(check_failed(rep, "associator counital"));
    }
    SUBCASE("wrong braiding phase trips the hexagons") {
        QuasiTriangularQH H = fixtures::semion_algebra();
        H.r.add({1, 1}, Scalar::one() - Scalar::root_of_unity(4, 1)); // now 1
        H.r_inv.add({1, 1}, Scalar::one() - Scalar::root_of_unity(4, 3));
        Report rep = verify_quasitriangular(H);
        CHECK_FALSE(rep.pass());
        CHECK(check_failed(rep, "hexagon left"));
    }
    SUBCASE("broken antipode trips an antipode law") {
        QuasiTriangularQH H = fixtures::semion_algebra();
        H.antipode.set_column(1, {{0, Scalar::one()}}); // S(d1) = d0
        Report rep = verify_antipode(H);
        CHECK_FALSE(rep.pass());
        bool named = check_failed(rep, "antipode left law") ||
                     check_failed(rep, "antipode right law") ||
                     check_failed(rep, "antipode associator laws");
        CHECK(named);
    }
    SUBCASE("non-multiplicative coproduct is reported") {
        QuasiTriangularQH H = fixtures::semion_algebra();
        H.delta.set_column(1, {{0, Scalar::one()}}); // Delta(d1) = d0 (x) d0
        Report rep = verify_quasibialgebra(H);
        CHECK(check_failed(rep, "coproduct is multiplicative"));
    }
}

TEST_CASE("verification reports count their instances") {
    QuasiTriangularQH H = fixtures::semion_algebra();
    Report rep = verify_quasibialgebra(H);
    for (const auto& c : rep.checks) {
        CAPTURE(c.name);
        CHECK(c.checked > 0);
        if (c.name == "associativity") CHECK(c.checked == 8);
        if (c.name == "quasi-coassociativity") CHECK(c.checked == 2);
    }
}
