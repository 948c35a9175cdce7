#include "qhopf/derived.hpp"

namespace qhopf {

DerivedElements derive_elements(const QuasiHopfAlgebra& H) {
    const LinearMap& m = H.mult;

    // A = (phi x 1)(Delta x id x id)(phi_inv), B = (Delta x id x id)(phi)(phi_inv x 1)
    Tensor big_a = H.product(tensor_of(H.phi, H.unit), H.coproduct(H.phi_inv, 0));
    Tensor big_b = H.product(H.coproduct(H.phi, 0), tensor_of(H.phi_inv, H.unit));

    // gamma = S(A2) alpha A3 (x) S(A1) alpha A4
    Tensor ga = H.antipode_at(H.antipode_at(big_a, 0), 1);
    ga = attach(ga, tensor_of(H.alpha, H.alpha),
                {{0, Fold::RMul, 1, &m}, {1, Fold::RMul, 0, &m}});
    ga = merge_mul(ga, 1, 2, m); // S(A2)alpha * A3
    ga = merge_mul(ga, 0, 2, m); // S(A1)alpha * A4
    Tensor gamma = permute_legs(ga, {1, 0});

    // delta = B1 beta S(B4) (x) B2 beta S(B3)
    Tensor de = H.antipode_at(H.antipode_at(big_b, 2), 3);
    de = attach(de, tensor_of(H.beta, H.beta),
                {{0, Fold::RMul, 0, &m}, {1, Fold::RMul, 1, &m}});
    de = merge_mul(de, 0, 3, m);
    Tensor delta_el = merge_mul(de, 1, 2, m);

    // f = (S x S)(Delta_op(x1)) gamma Delta(x2 beta S(x3))
    Tensor ft = H.antipode_at(H.phi_inv, 2);
    ft = attach(ft, H.beta, {{0, Fold::RMul, 1, &m}});
    ft = merge_mul(ft, 1, 2, m);      // [x1, x2 beta S(x3)]
    ft = H.coproduct(ft, 1);          // [x1, D1, D2]
    ft = H.s_op_coproduct(ft, 0);     // [S(x1_2), S(x1_1), D1, D2]
    ft = attach(ft, gamma, {{0, Fold::RMul, 0, &m}, {1, Fold::RMul, 1, &m}});
    ft = merge_mul(ft, 0, 2, m);
    Tensor f = merge_mul(ft, 1, 2, m);

    // g = Delta(S(x1) alpha x2) delta (S x S)(Delta_op(x3))
    Tensor gt = H.antipode_at(H.phi_inv, 0);
    gt = attach(gt, H.alpha, {{0, Fold::RMul, 0, &m}});
    gt = merge_mul(gt, 0, 1, m);      // [S(x1) alpha x2, x3]
    gt = H.coproduct(gt, 0);          // [E1, E2, x3]
    gt = H.s_op_coproduct(gt, 2);     // [E1, E2, S(x3_2), S(x3_1)]
    gt = attach(gt, delta_el, {{0, Fold::LMul, 2, &m}, {1, Fold::LMul, 3, &m}});
    gt = merge_mul(gt, 0, 2, m);
    Tensor g = merge_mul(gt, 1, 2, m);

    LinearMap s_inv = H.antipode.inverse();

    // q = X1 (x) S_inv(alpha X3) X2
    Tensor qt = attach(H.phi, H.alpha, {{0, Fold::LMul, 2, &m}});
    qt = apply_at(s_inv, qt, {2});
    Tensor q = merge_mul(qt, 2, 1, m); // [X1, S_inv(alpha X3) X2]

    // p = x1 (x) x2 beta S(x3)
    Tensor pt = H.antipode_at(H.phi_inv, 2);
    pt = attach(pt, H.beta, {{0, Fold::RMul, 1, &m}});
    Tensor p = merge_mul(pt, 1, 2, m);

    return {big_a, big_b, gamma, delta_el, f, g, q, p, s_inv};
}

Report verify_derived(const QuasiHopfAlgebra& H, const DerivedElements& d,
                      const VerifyPolicy& pol) {
    Report rep;
    const int n = H.dim();
    const LinearMap& m = H.mult;
    (void)pol;
    Tensor id2 = tensor_of(H.unit, H.unit);

    {
        auto& cr = rep.add("twist normalizations");
        check_tensor_eq(cr, H.product(d.f, H.coproduct(H.alpha, 0)), d.gamma, "f Delta(alpha)");
        check_tensor_eq(cr, H.product(H.coproduct(H.beta, 0), d.g), d.delta_el, "Delta(beta) g");
        check_tensor_eq(cr, H.product(d.f, d.g), id2, "f g");
        check_tensor_eq(cr, H.product(d.g, d.f), id2, "g f");
    }
    {
        auto& cr = rep.add("twist conjugates the antipode");
        // f Delta(S(h)) g = (S x S)(Delta_op(h))
        for (int a = 0; a < n; ++a) {
            Tensor lhs = H.product(H.product(d.f, H.coproduct(H.antipode_at(H.basis(a), 0), 0)), d.g);
            Tensor rhs = H.s_op_coproduct(H.basis(a), 0);
            check_tensor_eq(cr, lhs, rhs, "e_" + std::to_string(a));
        }
    }
    {
        auto& cr = rep.add("associator contractions");
        // Delta(X1) delta (S x S)(Delta_op(X2)) gamma Delta(X3) = 1 (x) 1
        Tensor t = H.coproduct(H.phi, 0);  // [X1_1, X1_2, X2, X3]
        t = H.s_op_coproduct(t, 2);        // [X1_1, X1_2, S(X2_2), S(X2_1), X3]
        t = H.coproduct(t, 4);             // [.., X3_1, X3_2]
        t = attach(t, d.delta_el, {{0, Fold::RMul, 0, &m}, {1, Fold::RMul, 1, &m}});
        t = merge_mul(t, 0, 2, m);         // X1_1 d1 S(X2_2)
        t = merge_mul(t, 1, 2, m);         // X1_2 d2 S(X2_1)
        t = attach(t, d.gamma, {{0, Fold::RMul, 0, &m}, {1, Fold::RMul, 1, &m}});
        t = merge_mul(t, 0, 2, m);
        t = merge_mul(t, 1, 2, m);
        check_tensor_eq(cr, t, id2, "phi");

        // (S x S)(Delta_op(x1)) gamma Delta(x2) delta (S x S)(Delta_op(x3)) = 1 (x) 1
        Tensor s = H.s_op_coproduct(H.phi_inv, 0); // [S(x1_2), S(x1_1), x2, x3]
        s = H.coproduct(s, 2);                     // [.., x2_1, x2_2, x3]
        s = H.s_op_coproduct(s, 4);                // [.., S(x3_2), S(x3_1)]
        s = attach(s, d.gamma, {{0, Fold::RMul, 0, &m}, {1, Fold::RMul, 1, &m}});
        s = merge_mul(s, 0, 2, m);
        s = merge_mul(s, 1, 2, m);
        s = attach(s, d.delta_el, {{0, Fold::RMul, 0, &m}, {1, Fold::RMul, 1, &m}});
        s = merge_mul(s, 0, 2, m);
        s = merge_mul(s, 1, 2, m);
        check_tensor_eq(cr, s, id2, "phi_inv");
    }
    {
        auto& cr = rep.add("p exchange");
        // Delta(h1) p (1 x S(h2)) = p (h x 1)
        for (int a = 0; a < n; ++a) {
            Tensor t = H.coproduct(H.basis(a), 0);  // [h1, h2]
            t = H.coproduct(t, 0);                  // [h1_1, h1_2, h2]
            t = H.antipode_at(t, 2);
            t = attach(t, d.p, {{0, Fold::RMul, 0, &m}, {1, Fold::RMul, 1, &m}});
            t = merge_mul(t, 1, 2, m);
            Tensor rhs = attach(d.p, H.basis(a), {{0, Fold::RMul, 0, &m}});
            check_tensor_eq(cr, t, rhs, "e_" + std::to_string(a));
        }
    }
    {
        auto& cr = rep.add("q exchange");
        // (1 x S_inv(h2)) q Delta(h1) = (h x 1) q
        for (int a = 0; a < n; ++a) {
            Tensor t = H.coproduct(H.basis(a), 0);
            t = H.coproduct(t, 0);                  // [h1_1, h1_2, h2]
            t = apply_at(d.antipode_inv, t, {2});
            t = attach(t, d.q, {{0, Fold::LMul, 0, &m}, {1, Fold::LMul, 1, &m}});
            t = merge_mul(t, 2, 1, m);
            Tensor rhs = attach(d.q, H.basis(a), {{0, Fold::LMul, 0, &m}});
            check_tensor_eq(cr, t, rhs, "e_" + std::to_string(a));
        }
    }
    {
        auto& cr = rep.add("qp contractions");
        // Delta(q1) p (1 x S(q2)) = 1 (x) 1
        Tensor t = H.coproduct(d.q, 0);    // [q1_1, q1_2, q2]
        t = H.antipode_at(t, 2);
        t = attach(t, d.p, {{0, Fold::RMul, 0, &m}, {1, Fold::RMul, 1, &m}});
        t = merge_mul(t, 1, 2, m);
        check_tensor_eq(cr, t, id2, "q then p");

        // (1 x S_inv(p2)) q Delta(p1) = 1 (x) 1
        Tensor s = H.coproduct(d.p, 0);    // [p1_1, p1_2, p2]
        s = apply_at(d.antipode_inv, s, {2});
        s = attach(s, d.q, {{0, Fold::LMul, 0, &m}, {1, Fold::LMul, 1, &m}});
        s = merge_mul(s, 2, 1, m);
        check_tensor_eq(cr, s, id2, "p then q");
    }
    return rep;
}

Tensor r_inverse_formula(const QuasiTriangularQH& H) {
    const LinearMap& m = H.mult;
    // X1 beta S(Y2 R1 x1 X2) alpha Y3 x3 X3_2  (x)  Y1 R2 x2 X3_1
    Tensor t = H.coproduct(H.phi, 2); // [X1, X2, X3_1, X3_2]
    t = attach(t, H.phi_inv,
               {{0, Fold::LMul, 1, &m}, {1, Fold::NewLeg, -1, nullptr}, {2, Fold::LMul, 3, &m}});
    // [X1, x1 X2, X3_1, x3 X3_2, x2]
    t = attach(t, H.r, {{0, Fold::LMul, 1, &m}, {1, Fold::LMul, 4, &m}});
    // [X1, R1 x1 X2, X3_1, x3 X3_2, R2 x2]
    t = attach(t, H.phi,
               {{0, Fold::LMul, 4, &m}, {1, Fold::LMul, 1, &m}, {2, Fold::LMul, 3, &m}});
    // [X1, Y2 R1 x1 X2, X3_1, Y3 x3 X3_2, Y1 R2 x2]
    t = H.antipode_at(t, 1);
    t = attach(t, tensor_of(H.beta, H.alpha), {{0, Fold::RMul, 0, &m}, {1, Fold::LMul, 3, &m}});
    // [X1 beta, S(..), X3_1, alpha Y3 x3 X3_2, Y1 R2 x2]
    t = merge_mul(t, 0, 1, m); // [X1 beta S(..), X3_1, alpha Y3 x3 X3_2, Y1 R2 x2]
    t = merge_mul(t, 0, 2, m); // [X1 beta S(..) alpha Y3 x3 X3_2, X3_1, Y1 R2 x2]
    t = merge_mul(t, 2, 1, m); // [first, Y1 R2 x2 X3_1]
    return t;
}

Tensor pair_element_inverse(const QuasiHopfAlgebra& H, const Tensor& element) {
    const Space S = H.space;
    AttachPlan lp(element, {{0, Fold::LMul, 0, &H.mult}, {1, Fold::LMul, 1, &H.mult}});
    LinearMap L({S, S}, {S, S}, [lp, S](std::uint64_t j) {
        Tensor w(std::vector<Space>{S, S});
        w.add(j, Scalar::one());
        w = lp.apply(w);
        SparseVec col;
        for (const auto& [k, c] : w.entries()) col[k] = c;
        return col;
    });
    L.materialize();
    return L.inverse().apply_vec(tensor_of(H.unit, H.unit));
}

} // namespace qhopf
