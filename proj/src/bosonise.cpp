#include "qhopf/bosonise.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace qhopf {

namespace {

// Same flat keys, fewer legs: [B,H] pairs collapse onto the product space.
Tensor reflatten(const Tensor& t, const std::vector<Space>& legs) {
    Tensor out(legs);
    for (const auto& [k, c] : t.entries()) out.add(k, c);
    return out;
}

Tensor basis1(const Space& s, int i) {
    Tensor t(std::vector<Space>{s});
    t.add(std::vector<int>{i}, Scalar::one());
    return t;
}

} // namespace

CrossedKernel::CrossedKernel(const BraidedGroup& B)
    : h_(B.host), act_(&B.carrier.action), bmult_(&B.b_mult), bdelta_(&B.b_delta),
      bcounit_(&B.b_counit), banti_(&B.b_antipode), vb_(B.carrier.space),
      hs_(B.host->space), nb_(B.dim()), nh_(B.host->dim()),
      m_x_(h_->phi_inv, {{0, Fold::Act, 0, act_},
                         {1, Fold::Act, 2, act_},
                         {2, Fold::LMul, 1, &h_->mult}}) {
    const QuasiTriangularQH& H = *B.host;
    // coproduct decorations in application order: the capital copy splits its
    // last leg over the two host slots, the small inverse follows, then the
    // braiding crosses the second braided leg past the first host slot, and
    // the remaining copies close the rebracketings
    d_cap_.emplace(H.coproduct(H.phi, 2), std::vector<AttachOp>{{0, Fold::Act, 0, act_},
                                                                {1, Fold::Act, 2, act_},
                                                                {2, Fold::LMul, 1, &h_->mult},
                                                                {3, Fold::LMul, 3, &h_->mult}});
    d_sm_.emplace(H.phi_inv, std::vector<AttachOp>{{0, Fold::Act, 2, act_},
                                                   {1, Fold::LMul, 1, &h_->mult},
                                                   {2, Fold::LMul, 3, &h_->mult}});
    d_r_.emplace(H.r, std::vector<AttachOp>{{0, Fold::Act, 2, act_},
                                            {1, Fold::LMul, 1, &h_->mult}});
    d_y_cap_.emplace(H.phi, std::vector<AttachOp>{{0, Fold::LMul, 1, &h_->mult},
                                                  {1, Fold::Act, 2, act_},
                                                  {2, Fold::LMul, 3, &h_->mult}});
    d_y_sm_.emplace(H.coproduct(H.phi_inv, 2),
                    std::vector<AttachOp>{{0, Fold::Act, 0, act_},
                                          {1, Fold::LMul, 1, &h_->mult},
                                          {2, Fold::Act, 2, act_},
                                          {3, Fold::LMul, 3, &h_->mult}});
    s_r_.emplace(H.r, std::vector<AttachOp>{{0, Fold::Act, 0, act_},
                                            {1, Fold::LMul, 1, &h_->mult}});
    s_x_.emplace(H.coproduct(H.antipode_at(H.phi_inv, 2), 0),
                 std::vector<AttachOp>{{0, Fold::LMul, 1, &h_->mult},
                                       {1, Fold::Act, 0, act_},
                                       {2, Fold::NewLeg},
                                       {3, Fold::NewLeg}});
    s_beta_.emplace(H.beta, std::vector<AttachOp>{{0, Fold::LMul, 3, &h_->mult}});
    s_cap_.emplace(H.phi, std::vector<AttachOp>{{0, Fold::LMul, 1, &h_->mult},
                                                {1, Fold::Act, 0, act_},
                                                {2, Fold::LMul, 2, &h_->mult}});
    s_alpha_.emplace(H.alpha, std::vector<AttachOp>{{0, Fold::RMul, 1, &h_->mult}});
}

CrossedKernel::CrossedKernel(const LeftModule& carrier, const LinearMap& product)
    : h_(carrier.algebra), act_(&carrier.action), bmult_(&product), vb_(carrier.space),
      hs_(carrier.algebra->space), nb_(carrier.dim()), nh_(carrier.algebra->dim()),
      m_x_(h_->phi_inv, {{0, Fold::Act, 0, act_},
                         {1, Fold::Act, 2, act_},
                         {2, Fold::LMul, 1, &h_->mult}}) {}

SparseVec CrossedKernel::mult_column(std::uint64_t i, std::uint64_t j) const {
    Tensor w(std::vector<Space>{vb_, hs_, vb_, hs_});
    w.add(std::vector<int>{(int)(i / nh_), (int)(i % nh_), (int)(j / nh_), (int)(j % nh_)},
          Scalar::one());
    w = apply_at(h_->delta, w, {1}); // [b, h1, h2, c, g]
    w = merge_act(w, 1, 3, *act_);   // [b, h2, h1|>c, g]
    w = m_x_.apply(w);
    w = merge_mul(w, 0, 2, *bmult_); // [bc, x3h2, g]
    w = merge_mul(w, 1, 2, h_->mult);
    return w.entries();
}

SparseVec CrossedKernel::delta_column(std::uint64_t i) const {
    if (!full()) throw std::logic_error("CrossedKernel: no coproduct in algebra-only form");
    Tensor w(std::vector<Space>{vb_, hs_, vb_, hs_});
    for (const auto& [bb, cb] : bdelta_->column(i / nh_))
        for (const auto& [hh, ch] : h_->delta.column(i % nh_))
            w.add(std::vector<int>{(int)(bb / nb_), (int)(hh / nh_), (int)(bb % nb_),
                                   (int)(hh % nh_)},
                  cb * ch);
    w = d_y_sm_->apply(d_y_cap_->apply(d_r_->apply(d_sm_->apply(d_cap_->apply(w)))));
    return w.entries();
}

SparseVec CrossedKernel::counit_column(std::uint64_t i) const {
    if (bcounit_ == nullptr)
        throw std::logic_error("CrossedKernel: no counit in algebra-only form");
    Scalar eb = Scalar::zero();
    for (const auto& [k, c] : bcounit_->column(i / nh_))
        if (k == 0) eb = c;
    SparseVec out;
    if (eb == Scalar::zero()) return out;
    for (const auto& [k, c] : h_->counit.column(i % nh_))
        if (k == 0 && !(c == Scalar::zero())) out[0] = eb * c;
    return out;
}

SparseVec CrossedKernel::antipode_column(std::uint64_t i) const {
    if (!full()) throw std::logic_error("CrossedKernel: no antipode in algebra-only form");
    Tensor sb(std::vector<Space>{vb_});
    for (const auto& [k, c] : banti_->column(i / nh_)) sb.add(k, c);
    Tensor w = tensor_of(sb, basis1(hs_, (int)(i % nh_))); // [Sb, h]
    w = s_r_->apply(w);
    w = s_x_->apply(w);                // [.., A, x2, Sx3]
    w = s_beta_->apply(w);             // beta Sx3
    w = merge_mul(w, 2, 3, h_->mult);  // [.., A, x2 beta Sx3]
    w = s_cap_->apply(w);
    w = apply_at(h_->antipode, w, {1});
    w = s_alpha_->apply(w);            // [.., S(A) alpha, K]
    w = h_->coproduct(w, 1);           // [.., u1, u2, K]
    w = merge_act(w, 1, 0, *act_);     // [u1 |> .., u2, K]
    w = merge_mul(w, 1, 2, h_->mult);
    return w.entries();
}

Bosonisation bosonise(const BraidedGroup& B, const std::string& name,
                      std::uint64_t table_budget) {
    if (B.host == nullptr) throw std::invalid_argument("bosonise: braided group has no host");
    const QuasiTriangularQH& H = *B.host;
    const Space Vb = B.carrier.space;
    const Space Hs = H.space;
    const int nb = B.dim();
    const int nh = H.dim();
    const std::uint64_t N = (std::uint64_t)nb * nh;
    std::string nm = name.empty() ? B.carrier.name + " x| " + H.name : name;
    Space S = make_space(nb * nh, nm);

    Bosonisation bos{B, &H, true, N * N <= table_budget, QuasiHopfAlgebra(S, nm), {}, {}};
    QuasiHopfAlgebra& Q = bos.result;
    auto idx = [nh](std::uint64_t b, std::uint64_t h) { return b * nh + h; };

    // The kernel and the braided copy it reads are kept alive by the lazy
    // generators below; in the eager branch they only live for the loops.
    auto hold = std::make_shared<BraidedGroup>(B);
    auto ker = std::make_shared<CrossedKernel>(*hold);
    if (bos.tabulated) {
        for (std::uint64_t i = 0; i < N; ++i) {
            for (std::uint64_t j = 0; j < N; ++j)
                Q.mult.set_column(i * N + j, ker->mult_column(i, j));
            Q.delta.set_column(i, ker->delta_column(i));
            Q.antipode.set_column(i, ker->antipode_column(i));
        }
    } else {
        Q.mult = LinearMap({S, S}, {S}, [hold, ker, N](std::uint64_t k) {
            return ker->mult_column(k / N, k % N);
        });
        Q.delta = LinearMap({S}, {S, S}, [hold, ker](std::uint64_t i) {
            return ker->delta_column(i);
        });
        Q.antipode = LinearMap({S}, {S}, [hold, ker](std::uint64_t i) {
            return ker->antipode_column(i);
        });
    }
    for (std::uint64_t i = 0; i < N; ++i) Q.counit.set_column(i, ker->counit_column(i));

    Q.unit = reflatten(tensor_of(B.b_unit, H.unit), {S});
    Q.alpha = reflatten(tensor_of(B.b_unit, H.alpha), {S});
    Q.beta = reflatten(tensor_of(B.b_unit, H.beta), {S});

    Q.phi = Tensor(std::vector<Space>{S, S, S});
    Q.phi_inv = Tensor(std::vector<Space>{S, S, S});
    for (const auto& [u1, c1] : B.b_unit.entries())
        for (const auto& [u2, c2] : B.b_unit.entries())
            for (const auto& [u3, c3] : B.b_unit.entries()) {
                Scalar cu = c1 * c2 * c3;
                for (const auto& [k, c] : H.phi.entries()) {
                    std::vector<int> ix = H.phi.unflatten(k);
                    Q.phi.add(std::vector<int>{(int)idx(u1, (std::uint64_t)ix[0]),
                                               (int)idx(u2, (std::uint64_t)ix[1]),
                                               (int)idx(u3, (std::uint64_t)ix[2])},
                              cu * c);
                }
                for (const auto& [k, c] : H.phi_inv.entries()) {
                    std::vector<int> ix = H.phi_inv.unflatten(k);
                    Q.phi_inv.add(std::vector<int>{(int)idx(u1, (std::uint64_t)ix[0]),
                                                   (int)idx(u2, (std::uint64_t)ix[1]),
                                                   (int)idx(u3, (std::uint64_t)ix[2])},
                              cu * c);
                }
            }

    bos.embed_b = LinearMap({Vb}, {S});
    for (int b = 0; b < nb; ++b) {
        SparseVec col;
        for (const auto& [t, ct] : H.unit.entries()) col[idx(b, t)] = ct;
        bos.embed_b.set_column((std::uint64_t)b, std::move(col));
    }
    bos.embed_h = LinearMap({Hs}, {S});
    for (int h = 0; h < nh; ++h) {
        SparseVec col;
        for (const auto& [u, cu] : B.b_unit.entries()) col[idx(u, h)] = cu;
        bos.embed_h.set_column((std::uint64_t)h, std::move(col));
    }
    return bos;
}

Bosonisation bosonise(const GradedQuasiAlgebra&) {
    throw std::invalid_argument(
        "bosonise: a graded quasialgebra has no braided coproduct; "
        "use bosonise_algebra for its crossed product");
}

Bosonisation bosonise_algebra(const LeftModule& carrier, const LinearMap& product,
                              const Tensor& unit, const std::string& name) {
    if (carrier.algebra == nullptr)
        throw std::invalid_argument("bosonise_algebra: carrier has no host algebra");
    const QuasiHopfAlgebra& H = *carrier.algebra;
    const Space Vb = carrier.space;
    const Space Hs = H.space;
    const int nb = carrier.dim();
    const int nh = H.dim();
    const std::uint64_t N = (std::uint64_t)nb * nh;
    std::string nm = name.empty() ? carrier.name + " x| " + H.name : name;
    Space S = make_space(nb * nh, nm);

    Bosonisation bos{{}, nullptr, false, true, QuasiHopfAlgebra(S, nm), {}, {}};
    bos.braided.carrier = carrier;
    bos.braided.b_mult = product;
    bos.braided.b_unit = unit;
    QuasiHopfAlgebra& Q = bos.result;
    auto idx = [nh](std::uint64_t b, std::uint64_t h) { return b * nh + h; };

    CrossedKernel ker(carrier, product);
    for (std::uint64_t i = 0; i < N; ++i)
        for (std::uint64_t j = 0; j < N; ++j)
            Q.mult.set_column(i * N + j, ker.mult_column(i, j));

    Q.unit = reflatten(tensor_of(unit, H.unit), {S});

    bos.embed_b = LinearMap({Vb}, {S});
    for (int b = 0; b < nb; ++b) {
        SparseVec col;
        for (const auto& [t, ct] : H.unit.entries()) col[idx(b, t)] = ct;
        bos.embed_b.set_column((std::uint64_t)b, std::move(col));
    }
    bos.embed_h = LinearMap({Hs}, {S});
    for (int h = 0; h < nh; ++h) {
        SparseVec col;
        for (const auto& [u, cu] : unit.entries()) col[idx(u, h)] = cu;
        bos.embed_h.set_column((std::uint64_t)h, std::move(col));
    }
    return bos;
}

Bosonisation bosonise_algebra(const GradedQuasiAlgebra& A, const std::string& name) {
    Bosonisation bos = bosonise_algebra(A.carrier, A.product, A.unit,
                                        name.empty() ? A.carrier.name : name);
    bos.host = A.host.get();
    bos.braided.host = A.host.get();
    return bos;
}

Report verify_algebra(const LinearMap& mult, const Tensor& unit, const VerifyPolicy& pol) {
    Report rep;
    const Space S = unit.legs().at(0);
    const int n = S->dim;
    {
        CheckResult& cr = rep.add("unit laws");
        for (int a = 0; a < n; ++a) {
            Tensor e = basis1(S, a);
            check_tensor_eq(cr, merge_mul(tensor_of(unit, e), 0, 1, mult), e,
                            "(left, " + std::to_string(a) + ")");
            check_tensor_eq(cr, merge_mul(tensor_of(e, unit), 0, 1, mult), e,
                            "(right, " + std::to_string(a) + ")");
        }
    }
    {
        CheckResult& cr = rep.add("associativity");
        for_tuples({n, n, n}, pol, [&](const std::vector<int>& t) {
            Tensor w(std::vector<Space>{S, S, S});
            w.add(t, Scalar::one());
            check_tensor_eq(cr, merge_mul(merge_mul(w, 0, 1, mult), 0, 1, mult),
                            merge_mul(merge_mul(w, 1, 2, mult), 0, 1, mult),
                            "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                std::to_string(t[2]) + ")");
        });
    }
    return rep;
}

Report verify_braided_module(const BraidedModule& V, const VerifyPolicy& pol) {
    Report rep;
    const BraidedGroup& B = *V.braided;
    const QuasiTriangularQH& H = *B.host;
    const LinearMap& act = B.carrier.action;
    const Space Vb = B.carrier.space;
    const Space Vs = V.carrier.space;
    const int nb = B.dim();
    const int nv = V.carrier.dim();

    {
        CheckResult& cr = rep.add("braided module unit");
        for (int x = 0; x < nv; ++x) {
            Tensor w(std::vector<Space>{Vb, Vs});
            for (const auto& [u, cu] : B.b_unit.entries())
                w.add(std::vector<int>{(int)u, x}, cu);
            check_tensor_eq(cr, merge_act(w, 0, 1, V.action), basis1(Vs, x),
                            "(" + std::to_string(x) + ")");
        }
    }
    {
        CheckResult& cr = rep.add("braided module composition");
        AttachPlan xp(H.phi_inv, {{0, Fold::Act, 0, &act},
                                  {1, Fold::Act, 1, &act},
                                  {2, Fold::Act, 2, &V.carrier.action}});
        for_tuples({nb, nb, nv}, pol, [&](const std::vector<int>& t) {
            Tensor w(std::vector<Space>{Vb, Vb, Vs});
            w.add(t, Scalar::one());
            Tensor rhs = merge_act(merge_mul(xp.apply(w), 0, 1, B.b_mult), 0, 1, V.action);
            Tensor inner(std::vector<Space>{Vb, Vs});
            inner.add(std::vector<int>{t[1], t[2]}, Scalar::one());
            inner = merge_act(inner, 0, 1, V.action);
            Tensor lhs(std::vector<Space>{Vb, Vs});
            for (const auto& [k, c] : inner.entries())
                lhs.add(std::vector<int>{t[0], (int)k}, c);
            lhs = merge_act(lhs, 0, 1, V.action);
            check_tensor_eq(cr, lhs, rhs,
                            "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                std::to_string(t[2]) + ")");
        });
    }
    {
        LeftModule bv = module_tensor(B.carrier, V.carrier);
        ModuleMorphismCandidate f{bv, V.carrier,
                                  with_legs(V.action, {bv.space}, {V.carrier.space})};
        rep.merge(verify_module_morphism(f, pol, "braided module action"));
    }
    return rep;
}

LeftModule module_transfer_to_ordinary(const Bosonisation& bos, const BraidedModule& V) {
    const int nb = bos.braided.dim();
    const int nh = bos.result.dim() / nb;
    const int nv = V.carrier.dim();
    LinearMap a({bos.result.space, V.carrier.space}, {V.carrier.space});
    for (int b = 0; b < nb; ++b)
        for (int h = 0; h < nh; ++h)
            for (int x = 0; x < nv; ++x) {
                SparseVec out;
                for (const auto& [y, cy] :
                     V.carrier.action.column((std::uint64_t)h * nv + x))
                    for (const auto& [z, cz] :
                         V.action.column((std::uint64_t)b * nv + y))
                        sv_add(out, z, cy * cz);
                a.set_column(((std::uint64_t)b * nh + h) * nv + x, std::move(out));
            }
    return {&bos.result, V.carrier.space, std::move(a), V.name};
}

BraidedModule module_transfer_to_braided(const Bosonisation& bos, const LeftModule& W) {
    if (W.algebra != &bos.result)
        throw std::invalid_argument("module_transfer_to_braided: module is not over this crossed product");
    if (bos.host == nullptr)
        throw std::invalid_argument("module_transfer_to_braided: crossed product has no host");
    const QuasiTriangularQH& H = *bos.host;
    const int nb = bos.braided.dim();
    const int nh = H.dim();
    const int nv = W.dim();

    LinearMap ah({H.space, W.space}, {W.space});
    for (int h = 0; h < nh; ++h)
        for (int x = 0; x < nv; ++x) {
            SparseVec out;
            for (const auto& [u, cu] : bos.embed_h.column((std::uint64_t)h))
                for (const auto& [y, cy] : W.action.column(u * nv + x))
                    sv_add(out, y, cu * cy);
            ah.set_column((std::uint64_t)h * nv + x, std::move(out));
        }
    LinearMap ab({bos.braided.carrier.space, W.space}, {W.space});
    for (int b = 0; b < nb; ++b)
        for (int x = 0; x < nv; ++x) {
            SparseVec out;
            for (const auto& [u, cu] : bos.embed_b.column((std::uint64_t)b))
                for (const auto& [y, cy] : W.action.column(u * nv + x))
                    sv_add(out, y, cu * cy);
            ab.set_column((std::uint64_t)b * nv + x, std::move(out));
        }
    return {&bos.braided, LeftModule{&H, W.space, std::move(ah), W.name}, std::move(ab),
            W.name};
}

} // namespace qhopf