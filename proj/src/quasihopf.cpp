#include "qhopf/quasihopf.hpp"

#include <stdexcept>

namespace qhopf {

namespace {

std::vector<const LinearMap*> mults(const QuasiBialgebra& H, int n) {
    return std::vector<const LinearMap*>((std::size_t)n, &H.mult);
}

} // namespace

Tensor QuasiBialgebra::product(const Tensor& a, const Tensor& b) const {
    return convolve(a, b, mults(*this, (int)a.leg_count()));
}

Tensor QuasiBialgebra::coproduct(const Tensor& t, int leg) const {
    return apply_at(delta, t, {leg});
}

Tensor QuasiBialgebra::op_coproduct(const Tensor& t, int leg) const {
    Tensor s = apply_at(delta, t, {leg});
    std::vector<int> perm((std::size_t)s.leg_count());
    for (int j = 0; j < (int)perm.size(); ++j) perm[(std::size_t)j] = j;
    perm[(std::size_t)leg] = leg + 1;
    perm[(std::size_t)leg + 1] = leg;
    return permute_legs(s, perm);
}

Tensor QuasiBialgebra::counit_at(const Tensor& t, int leg) const {
    return apply_at(counit, t, {leg});
}

Tensor QuasiBialgebra::embed(const Tensor& t, int total, const std::vector<int>& at) const {
    std::vector<Space> ambient((std::size_t)total, space);
    std::vector<Tensor> units((std::size_t)total, unit);
    return embed_with_units(t, ambient, at, units);
}

Tensor QuasiBialgebra::phi_at(int i, int j, int k, bool inverse) const {
    return permute_legs(inverse ? phi_inv : phi, {i - 1, j - 1, k - 1});
}

Tensor QuasiHopfAlgebra::antipode_at(const Tensor& t, int leg) const {
    return apply_at(antipode, t, {leg});
}

Tensor QuasiHopfAlgebra::s_op_coproduct(const Tensor& t, int leg) const {
    Tensor s = op_coproduct(t, leg);
    s = apply_at(antipode, s, {leg});
    return apply_at(antipode, s, {leg + 1});
}

Report verify_quasibialgebra(const QuasiBialgebra& H, const VerifyPolicy& pol) {
    Report rep;
    const int n = H.dim();
    const Space& h = H.space;

    {
        auto& cr = rep.add("unit laws");
        for (int a = 0; a < n; ++a) {
            Tensor e = H.basis(a);
            check_tensor_eq(cr, apply_at(H.mult, tensor_of(H.unit, e), {0, 1}), e,
                            "1*e_" + std::to_string(a));
            check_tensor_eq(cr, apply_at(H.mult, tensor_of(e, H.unit), {0, 1}), e,
                            "e_" + std::to_string(a) + "*1");
        }
    }
    {
        auto& cr = rep.add("associativity");
        for_tuples({n, n, n}, pol, [&](const std::vector<int>& t) {
            Tensor e({h, h, h});
            e.add(t, Scalar::one());
            Tensor lhs = apply_at(H.mult, apply_at(H.mult, e, {0, 1}), {0, 1});
            Tensor rhs = apply_at(H.mult, apply_at(H.mult, e, {1, 2}), {0, 1});
            check_tensor_eq(cr, lhs, rhs,
                            "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                std::to_string(t[2]) + ")");
        });
    }
    {
        auto& cr = rep.add("coproduct is multiplicative");
        for_tuples({n, n}, pol, [&](const std::vector<int>& t) {
            Tensor e({h, h});
            e.add(t, Scalar::one());
            Tensor lhs = H.coproduct(apply_at(H.mult, e, {0, 1}), 0);
            Tensor rhs = H.product(H.coproduct(H.basis(t[0]), 0), H.coproduct(H.basis(t[1]), 0));
            check_tensor_eq(cr, lhs, rhs,
                            "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ")");
        });
        check_tensor_eq(cr, H.coproduct(H.unit, 0), tensor_of(H.unit, H.unit), "unit");
    }
    {
        auto& cr = rep.add("counit is multiplicative");
        for_tuples({n, n}, pol, [&](const std::vector<int>& t) {
            Tensor e({h, h});
            e.add(t, Scalar::one());
            Tensor lhs = H.counit_at(apply_at(H.mult, e, {0, 1}), 0);
            Tensor rhs = H.counit_at(H.basis(t[0]), 0).scaled(H.counit_at(H.basis(t[1]), 0).at({}));
            check_tensor_eq(cr, lhs, rhs,
                            "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ")");
        });
        check_tensor_eq(cr, H.counit_at(H.unit, 0), Tensor::unit_scalar(Scalar::one()), "unit");
    }
    {
        auto& cr = rep.add("counit laws");
        for (int a = 0; a < n; ++a) {
            Tensor d = H.coproduct(H.basis(a), 0);
            check_tensor_eq(cr, H.counit_at(d, 0), H.basis(a), "left e_" + std::to_string(a));
            check_tensor_eq(cr, H.counit_at(d, 1), H.basis(a), "right e_" + std::to_string(a));
        }
    }
    {
        auto& cr = rep.add("quasi-coassociativity");
        for (int a = 0; a < n; ++a) {
            Tensor d = H.coproduct(H.basis(a), 0);
            Tensor lhs = H.product(H.coproduct(d, 1), H.phi);
            Tensor rhs = H.product(H.phi, H.coproduct(d, 0));
            check_tensor_eq(cr, lhs, rhs, "e_" + std::to_string(a));
        }
    }
    {
        auto& cr = rep.add("pentagon");
        Tensor lhs = H.product(H.product(H.embed(H.phi, 4, {1, 2, 3}), H.coproduct(H.phi, 1)),
                               H.embed(H.phi, 4, {0, 1, 2}));
        Tensor rhs = H.product(H.coproduct(H.phi, 2), H.coproduct(H.phi, 0));
        check_tensor_eq(cr, lhs, rhs, "phi");
    }
    {
        auto& cr = rep.add("associator counital");
        check_tensor_eq(cr, H.counit_at(H.phi, 1), tensor_of(H.unit, H.unit), "phi");
    }
    {
        auto& cr = rep.add("associator invertible");
        Tensor id3 = tensor_of(tensor_of(H.unit, H.unit), H.unit);
        check_tensor_eq(cr, H.product(H.phi, H.phi_inv), id3, "phi*phi_inv");
        check_tensor_eq(cr, H.product(H.phi_inv, H.phi), id3, "phi_inv*phi");
    }
    return rep;
}

Report verify_antipode(const QuasiHopfAlgebra& H, const VerifyPolicy& pol) {
    Report rep;
    const int n = H.dim();
    const Space& h = H.space;

    {
        auto& cr = rep.add("antipode antihomomorphism");
        for_tuples({n, n}, pol, [&](const std::vector<int>& t) {
            Tensor e({h, h});
            e.add(t, Scalar::one());
            Tensor lhs = H.antipode_at(apply_at(H.mult, e, {0, 1}), 0);
            Tensor rhs = apply_at(
                H.mult, tensor_of(H.antipode_at(H.basis(t[1]), 0), H.antipode_at(H.basis(t[0]), 0)),
                {0, 1});
            check_tensor_eq(cr, lhs, rhs,
                            "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + ")");
        });
        check_tensor_eq(cr, H.antipode_at(H.unit, 0), H.unit, "unit");
    }
    {
        auto& cr = rep.add("antipode left law");
        for (int a = 0; a < n; ++a) {
            // S(h1) alpha h2 = eps(h) alpha
            Tensor d = H.antipode_at(H.coproduct(H.basis(a), 0), 0);
            Tensor lhs = merge_mul(attach(d, H.alpha, {{0, Fold::RMul, 0, &H.mult}}), 0, 1, H.mult);
            Tensor rhs = H.alpha.scaled(H.counit_at(H.basis(a), 0).at({}));
            check_tensor_eq(cr, lhs, rhs, "e_" + std::to_string(a));
        }
    }
    {
        auto& cr = rep.add("antipode right law");
        for (int a = 0; a < n; ++a) {
            // h1 beta S(h2) = eps(h) beta
            Tensor d = H.antipode_at(H.coproduct(H.basis(a), 0), 1);
            Tensor lhs = merge_mul(attach(d, H.beta, {{0, Fold::RMul, 0, &H.mult}}), 0, 1, H.mult);
            Tensor rhs = H.beta.scaled(H.counit_at(H.basis(a), 0).at({}));
            check_tensor_eq(cr, lhs, rhs, "e_" + std::to_string(a));
        }
    }
    {
        auto& cr = rep.add("antipode associator laws");
        // X1 beta S(X2) alpha X3 = 1
        Tensor t = H.antipode_at(H.phi, 1);
        t = attach(t, tensor_of(H.beta, H.alpha),
                   {{0, Fold::RMul, 0, &H.mult}, {1, Fold::RMul, 1, &H.mult}});
        t = merge_mul(merge_mul(t, 0, 1, H.mult), 0, 1, H.mult);
        check_tensor_eq(cr, t, H.unit, "phi");
        // S(x1) alpha x2 beta S(x3) = 1
        Tensor s = H.antipode_at(H.antipode_at(H.phi_inv, 0), 2);
        s = attach(s, tensor_of(H.alpha, H.beta),
                   {{0, Fold::RMul, 0, &H.mult}, {1, Fold::RMul, 1, &H.mult}});
        s = merge_mul(merge_mul(s, 0, 1, H.mult), 0, 1, H.mult);
        check_tensor_eq(cr, s, H.unit, "phi_inv");
    }
    {
        auto& cr = rep.add("alpha beta counit");
        Tensor one = Tensor::unit_scalar(Scalar::one());
        check_tensor_eq(cr, H.counit_at(H.alpha, 0), one, "eps(alpha)");
        check_tensor_eq(cr, H.counit_at(H.beta, 0), one, "eps(beta)");
    }
    {
        auto& cr = rep.add("antipode invertible");
        bool ok = true;
        try {
            (void)H.antipode.inverse();
        } catch (const std::domain_error&) {
            ok = false;
        }
        ++cr.checked;
        if (!ok) cr.violations.push_back({"antipode", "singular", "invertible"});
    }
    return rep;
}

Report verify_quasitriangular(const QuasiTriangularQH& H, const VerifyPolicy& pol) {
    Report rep;
    const int n = H.dim();
    (void)pol;

    {
        auto& cr = rep.add("r invertible");
        Tensor id2 = tensor_of(H.unit, H.unit);
        check_tensor_eq(cr, H.product(H.r, H.r_inv), id2, "r*r_inv");
        check_tensor_eq(cr, H.product(H.r_inv, H.r), id2, "r_inv*r");
    }
    {
        auto& cr = rep.add("r counit legs");
        check_tensor_eq(cr, H.counit_at(H.r, 0), H.unit, "eps x id");
        check_tensor_eq(cr, H.counit_at(H.r, 1), H.unit, "id x eps");
    }
    {
        auto& cr = rep.add("r intertwines coproducts");
        for (int a = 0; a < n; ++a) {
            Tensor lhs = H.product(H.op_coproduct(H.basis(a), 0), H.r);
            Tensor rhs = H.product(H.r, H.coproduct(H.basis(a), 0));
            check_tensor_eq(cr, lhs, rhs, "e_" + std::to_string(a));
        }
    }
    Tensor r13 = H.embed(H.r, 3, {0, 2});
    Tensor r23 = H.embed(H.r, 3, {1, 2});
    Tensor r12 = H.embed(H.r, 3, {0, 1});
    {
        auto& cr = rep.add("hexagon left");
        Tensor lhs = H.coproduct(H.r, 0);
        Tensor rhs = H.product(
            H.product(H.product(H.product(H.phi_at(3, 1, 2), r13), H.phi_at(1, 3, 2, true)), r23),
            H.phi);
        check_tensor_eq(cr, lhs, rhs, "r");
    }
    {
        auto& cr = rep.add("hexagon right");
        Tensor lhs = H.coproduct(H.r, 1);
        Tensor rhs = H.product(
            H.product(H.product(H.product(H.phi_at(2, 3, 1, true), r13), H.phi_at(2, 1, 3)), r12),
            H.phi_inv);
        check_tensor_eq(cr, lhs, rhs, "r");
    }
    {
        auto& cr = rep.add("quasi Yang-Baxter");
        Tensor lhs = H.product(
            H.product(H.product(H.product(H.product(r12, H.phi_at(3, 1, 2)), r13),
                                H.phi_at(1, 3, 2, true)),
                      r23),
            H.phi);
        Tensor rhs = H.product(
            H.product(H.product(H.product(H.product(H.phi_at(3, 2, 1), r23), H.phi_at(2, 3, 1, true)),
                                r13),
                      H.phi_at(2, 1, 3)),
            r12);
        check_tensor_eq(cr, lhs, rhs, "r");
    }
    return rep;
}

Report verify_quasihopf(const QuasiHopfAlgebra& H, const VerifyPolicy& pol) {
    Report rep = verify_quasibialgebra(H, pol);
    rep.merge(verify_antipode(H, pol));
    return rep;
}

Report verify_all(const QuasiTriangularQH& H, const VerifyPolicy& pol) {
    Report rep = verify_quasihopf(H, pol);
    rep.merge(verify_quasitriangular(H, pol));
    return rep;
}

} // namespace qhopf
