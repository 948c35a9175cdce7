#include "qhopf/category.hpp"

#include <stdexcept>

namespace qhopf {

namespace {

// maps whose column count fits comfortably are materialized up front, which
// unlocks the contraction engine's support indexes
constexpr std::uint64_t kEagerColumns = 1ull << 12;

LinearMap finished(LinearMap m) {
    if (m.dom_dim() <= kEagerColumns) m.materialize();
    return m;
}

Tensor vec_tensor(const Space& s, const SparseVec& v) {
    Tensor t({s});
    for (const auto& [k, c] : v) t.add(k, c);
    return t;
}

// apply a single-composite-leg map to a multi-leg tensor whose flattened
// index space coincides with the map's domain
SparseVec apply_flat(const LinearMap& f, const Tensor& t) {
    SparseVec out;
    for (const auto& [k, c] : t.entries())
        for (const auto& [r, fc] : f.column(k)) sv_add(out, r, c * fc);
    return out;
}

void same_algebra(const LeftModule& a, const LeftModule& b, const char* who) {
    if (a.algebra != b.algebra)
        throw std::invalid_argument(std::string(who) + ": modules over different algebras");
}

} // namespace

SparseVec LeftModule::act(int h, const SparseVec& v) const {
    SparseVec out;
    for (const auto& [i, c] : v)
        for (const auto& [r, ac] : action.at((std::uint64_t)h, i)) sv_add(out, r, c * ac);
    return out;
}

Space product_space(const Space& a, const Space& b) {
    std::vector<std::string> labels;
    labels.reserve((std::size_t)a->dim * (std::size_t)b->dim);
    for (int i = 0; i < a->dim; ++i)
        for (int j = 0; j < b->dim; ++j)
            labels.push_back(a->labels[(std::size_t)i] + "(x)" + b->labels[(std::size_t)j]);
    return make_space(a->dim * b->dim, std::move(labels), a->name + "(x)" + b->name);
}

LinearMap map_tensor(const LinearMap& f, const LinearMap& g) {
    Space dom = product_space(f.dom()[0], g.dom()[0]);
    Space cod = product_space(f.cod()[0], g.cod()[0]);
    std::uint64_t gdom = g.dom_dim(), gcod = g.cod_dim();
    return finished(LinearMap({dom}, {cod}, [f, g, gdom, gcod](std::uint64_t col) {
        SparseVec out;
        for (const auto& [rf, cf] : f.column(col / gdom))
            for (const auto& [rg, cg] : g.column(col % gdom)) sv_add(out, rf * gcod + rg, cf * cg);
        return out;
    }));
}

Report verify_module(const LeftModule& V, const VerifyPolicy& pol, const std::string& label) {
    const QuasiHopfAlgebra& H = *V.algebra;
    const int n = H.dim(), dv = V.dim();
    Report rep;
    {
        auto& cr = rep.add(label + " unit law");
        for (int v = 0; v < dv; ++v) {
            Tensor e = basis_tensor(V.space, v);
            check_tensor_eq(cr, apply_at(V.action, tensor_of(H.unit, e), {0, 1}), e,
                            "v=" + std::to_string(v));
        }
    }
    {
        auto& cr = rep.add(label + " composition law");
        for_tuples({n, n, dv}, pol, [&](const std::vector<int>& t) {
            SparseVec lhs;
            for (const auto& [k, c] : H.mult.at((std::uint64_t)t[0], (std::uint64_t)t[1]))
                for (const auto& [r, ac] : V.action.at(k, (std::uint64_t)t[2]))
                    sv_add(lhs, r, c * ac);
            SparseVec rhs = V.act(t[0], V.action.at((std::uint64_t)t[1], (std::uint64_t)t[2]));
            check_tensor_eq(cr, vec_tensor(V.space, lhs), vec_tensor(V.space, rhs),
                            "(" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
                                std::to_string(t[2]) + ")");
        });
    }
    return rep;
}

Report verify_module_morphism(const ModuleMorphismCandidate& f, const VerifyPolicy& pol,
                              const std::string& label) {
    same_algebra(f.source, f.target, "verify_module_morphism");
    const int n = f.source.algebra->dim(), dv = f.source.dim();
    Report rep;
    auto& cr = rep.add(label + " equivariance");
    for_tuples({n, dv}, pol, [&](const std::vector<int>& t) {
        SparseVec lhs = apply_flat(f.map, vec_tensor(f.source.space,
                                                     f.source.action.at((std::uint64_t)t[0],
                                                                        (std::uint64_t)t[1])));
        SparseVec rhs = f.target.act(t[0], f.map.column((std::uint64_t)t[1]));
        check_tensor_eq(cr, vec_tensor(f.target.space, lhs), vec_tensor(f.target.space, rhs),
                        "(h=" + std::to_string(t[0]) + ",v=" + std::to_string(t[1]) + ")");
    });
    return rep;
}

LeftModule trivial_module(const QuasiHopfAlgebra& H) {
    Space k = make_space(1, {"1"}, "k");
    LinearMap act({H.space, k}, {k});
    for (int h = 0; h < H.dim(); ++h) {
        const SparseVec& e = H.counit.column((std::uint64_t)h);
        auto it = e.find(0);
        if (it != e.end()) act.add_entry((std::uint64_t)h, 0, it->second);
    }
    return LeftModule{&H, k, std::move(act), "k"};
}

LeftModule regular_module(const QuasiHopfAlgebra& H) {
    return LeftModule{&H, H.space, H.mult, H.name};
}

LeftModule adjoint_module(const QuasiHopfAlgebra& H) {
    const QuasiHopfAlgebra* Hp = &H;
    const int dv = H.dim();
    LinearMap act({H.space, H.space}, {H.space}, [Hp, dv](std::uint64_t col) {
        int h = (int)(col / (std::uint64_t)dv), b = (int)(col % (std::uint64_t)dv);
        Tensor d = Hp->antipode_at(Hp->coproduct(Hp->basis(h), 0), 1); // h1 (x) S(h2)
        Tensor w = attach(d, Hp->basis(b), {{0, Fold::RMul, 0, &Hp->mult}});
        return merge_mul(w, 0, 1, Hp->mult).entries();
    });
    return LeftModule{&H, H.space, finished(std::move(act)), H.name + "(ad)"};
}

LeftModule module_tensor(const LeftModule& V, const LeftModule& W) {
    same_algebra(V, W, "module_tensor");
    const QuasiHopfAlgebra* Hp = V.algebra;
    Space vw = product_space(V.space, W.space);
    const std::uint64_t n = (std::uint64_t)Hp->dim(), dv = (std::uint64_t)V.dim(),
                        dw = (std::uint64_t)W.dim();
    LinearMap av = V.action, aw = W.action;
    LinearMap delta = Hp->delta;
    LinearMap act({Hp->space, vw}, {vw}, [av, aw, delta, n, dv, dw](std::uint64_t col) {
        std::uint64_t x = col % (dv * dw);
        std::uint64_t h = col / (dv * dw), v = x / dw, w = x % dw;
        SparseVec out;
        for (const auto& [dk, dc] : delta.column(h)) {
            const SparseVec& cv = av.at(dk / n, v);
            const SparseVec& cw = aw.at(dk % n, w);
            for (const auto& [rv, c1] : cv)
                for (const auto& [rw, c2] : cw) sv_add(out, rv * dw + rw, dc * c1 * c2);
        }
        return out;
    });
    return LeftModule{V.algebra, vw, finished(std::move(act)), vw->name};
}

namespace {

ModuleMorphismCandidate associator_impl(const LeftModule& U, const LeftModule& V,
                                        const LeftModule& W, bool inverse) {
    same_algebra(U, V, "associator");
    same_algebra(U, W, "associator");
    const QuasiHopfAlgebra* Hp = U.algebra;
    LeftModule left = module_tensor(module_tensor(U, V), W);
    LeftModule right = module_tensor(U, module_tensor(V, W));
    if (inverse) std::swap(left, right); // phi_inv runs right-bracketed to left
    const Tensor& phi = inverse ? Hp->phi_inv : Hp->phi;
    const std::uint64_t n = (std::uint64_t)Hp->dim(), dv = (std::uint64_t)V.dim(),
                        dw = (std::uint64_t)W.dim();
    LinearMap au = U.action, av = V.action, aw = W.action;
    LinearMap m({left.space}, {right.space},
                [phi, au, av, aw, n, dv, dw](std::uint64_t col) {
                    std::uint64_t w = col % dw, v = (col / dw) % dv, u = col / (dv * dw);
                    SparseVec out;
                    for (const auto& [k, c] : phi.entries()) {
                        std::uint64_t x3 = k % n, x2 = (k / n) % n, x1 = k / (n * n);
                        for (const auto& [ru, c1] : au.at(x1, u)) {
                            for (const auto& [rv, c2] : av.at(x2, v)) {
                                Scalar c12 = c * c1 * c2;
                                for (const auto& [rw, c3] : aw.at(x3, w))
                                    sv_add(out, (ru * dv + rv) * dw + rw, c12 * c3);
                            }
                        }
                    }
                    return out;
                });
    return ModuleMorphismCandidate{std::move(left), std::move(right), finished(std::move(m))};
}

} // namespace

ModuleMorphismCandidate associator(const LeftModule& U, const LeftModule& V, const LeftModule& W) {
    return associator_impl(U, V, W, false);
}

ModuleMorphismCandidate associator_inverse(const LeftModule& U, const LeftModule& V,
                                           const LeftModule& W) {
    return associator_impl(U, V, W, true);
}

ModuleMorphismCandidate braiding(const QuasiTriangularQH& H, const LeftModule& U,
                                 const LeftModule& V) {
    same_algebra(U, V, "braiding");
    if (U.algebra != &H) throw std::invalid_argument("braiding: modules not over this algebra");
    LeftModule src = module_tensor(U, V);
    LeftModule dst = module_tensor(V, U);
    const std::uint64_t n = (std::uint64_t)H.dim(), du = (std::uint64_t)U.dim(),
                        dv = (std::uint64_t)V.dim();
    Tensor r = H.r;
    LinearMap au = U.action, av = V.action;
    LinearMap m({src.space}, {dst.space}, [r, au, av, n, du, dv](std::uint64_t col) {
        std::uint64_t u = col / dv, v = col % dv;
        SparseVec out;
        for (const auto& [k, c] : r.entries()) {
            std::uint64_t r1 = k / n, r2 = k % n;
            for (const auto& [rv, c2] : av.at(r2, v))
                for (const auto& [ru, c1] : au.at(r1, u)) sv_add(out, rv * du + ru, c * c2 * c1);
        }
        return out;
    });
    return ModuleMorphismCandidate{std::move(src), std::move(dst), finished(std::move(m))};
}

ModuleMorphismCandidate braiding_inverse(const QuasiTriangularQH& H, const LeftModule& U,
                                         const LeftModule& V) {
    same_algebra(U, V, "braiding_inverse");
    if (U.algebra != &H)
        throw std::invalid_argument("braiding_inverse: modules not over this algebra");
    LeftModule src = module_tensor(V, U);
    LeftModule dst = module_tensor(U, V);
    const std::uint64_t n = (std::uint64_t)H.dim(), du = (std::uint64_t)U.dim(),
                        dv = (std::uint64_t)V.dim();
    Tensor rinv = H.r_inv;
    LinearMap au = U.action, av = V.action;
    LinearMap m({src.space}, {dst.space}, [rinv, au, av, n, du, dv](std::uint64_t col) {
        std::uint64_t v = col / du, u = col % du;
        SparseVec out;
        for (const auto& [k, c] : rinv.entries()) {
            std::uint64_t r1 = k / n, r2 = k % n;
            for (const auto& [ru, c1] : au.at(r1, u))
                for (const auto& [rv, c2] : av.at(r2, v)) sv_add(out, ru * dv + rv, c * c1 * c2);
        }
        return out;
    });
    return ModuleMorphismCandidate{std::move(src), std::move(dst), finished(std::move(m))};
}

RigidDual dual_module(const LeftModule& V) {
    const QuasiHopfAlgebra& H = *V.algebra;
    const int dv = V.dim();
    std::vector<std::string> labels;
    for (int a = 0; a < dv; ++a) labels.push_back(V.space->labels[(std::size_t)a] + "*");
    Space ds = make_space(dv, std::move(labels), V.space->name + "*");

    LinearMap av = V.action;
    LinearMap s = H.antipode;
    LinearMap dact({H.space, ds}, {ds}, [av, s, dv](std::uint64_t col) {
        std::uint64_t h = col / (std::uint64_t)dv, a = col % (std::uint64_t)dv;
        SparseVec out;
        for (int b = 0; b < dv; ++b) {
            Scalar c = Scalar::zero();
            for (const auto& [k, ck] : s.column(h)) {
                const SparseVec& ab = av.at(k, (std::uint64_t)b);
                auto it = ab.find(a);
                if (it != ab.end()) c += ck * it->second;
            }
            if (!c.is_zero()) out[(std::uint64_t)b] = c;
        }
        return out;
    });
    LeftModule dual{&H, ds, finished(std::move(dact)), ds->name};

    LeftModule triv = trivial_module(H);
    LeftModule dv_mod = module_tensor(dual, V);
    LinearMap evm({dv_mod.space}, {triv.space});
    for (int a = 0; a < dv; ++a)
        for (int b = 0; b < dv; ++b) {
            Scalar c = Scalar::zero();
            for (const auto& [k, ck] : H.alpha.entries()) {
                const SparseVec& col = V.action.at(k, (std::uint64_t)b);
                auto it = col.find((std::uint64_t)a);
                if (it != col.end()) c += ck * it->second;
            }
            if (!c.is_zero()) evm.add_entry((std::uint64_t)a * dv + b, 0, c);
        }

    LeftModule vd_mod = module_tensor(V, dual);
    LinearMap coevm({triv.space}, {vd_mod.space});
    for (int a = 0; a < dv; ++a)
        for (const auto& [k, ck] : H.beta.entries())
            for (const auto& [rv, c] : V.action.at(k, (std::uint64_t)a))
                coevm.add_entry(0, rv * (std::uint64_t)dv + (std::uint64_t)a, ck * c);

    RigidDual out;
    out.ev = ModuleMorphismCandidate{dv_mod, triv, std::move(evm)};
    out.coev = ModuleMorphismCandidate{std::move(triv), std::move(vd_mod), std::move(coevm)};
    out.dual = std::move(dual);
    return out;
}

LinearMap left_unit_map(const LeftModule& V) {
    Space i = make_space(1, {"1"}, "k");
    LinearMap m({V.space}, {product_space(i, V.space)});
    for (int v = 0; v < V.dim(); ++v) m.add_entry((std::uint64_t)v, (std::uint64_t)v, Scalar::one());
    return m;
}

LinearMap right_unit_map(const LeftModule& V) {
    Space i = make_space(1, {"1"}, "k");
    LinearMap m({V.space}, {product_space(V.space, i)});
    for (int v = 0; v < V.dim(); ++v) m.add_entry((std::uint64_t)v, (std::uint64_t)v, Scalar::one());
    return m;
}

Report verify_rigidity(const LeftModule& V, const VerifyPolicy& pol) {
    Report rep;
    RigidDual d = dual_module(V);
    rep.merge(verify_module(d.dual, pol, "dual module"));
    rep.merge(verify_module_morphism(d.ev, pol, "ev"));
    rep.merge(verify_module_morphism(d.coev, pol, "coev"));

    LinearMap idv = LinearMap::identity({V.space});
    LinearMap idd = LinearMap::identity({d.dual.space});
    {
        auto& cr = rep.add("snake on object");
        LinearMap chain = right_unit_map(V)
                              .inverse()
                              .compose(map_tensor(idv, d.ev.map))
                              .compose(associator(V, d.dual, V).map)
                              .compose(map_tensor(d.coev.map, idv))
                              .compose(left_unit_map(V));
        for (int v = 0; v < V.dim(); ++v)
            check_tensor_eq(cr, vec_tensor(V.space, chain.column((std::uint64_t)v)),
                            basis_tensor(V.space, v), "v=" + std::to_string(v));
    }
    {
        auto& cr = rep.add("snake on dual");
        LinearMap chain = left_unit_map(d.dual)
                              .inverse()
                              .compose(map_tensor(d.ev.map, idd))
                              .compose(associator_inverse(d.dual, V, d.dual).map)
                              .compose(map_tensor(idd, d.coev.map))
                              .compose(right_unit_map(d.dual));
        for (int a = 0; a < d.dual.dim(); ++a)
            check_tensor_eq(cr, vec_tensor(d.dual.space, chain.column((std::uint64_t)a)),
                            basis_tensor(d.dual.space, a), "f=" + std::to_string(a));
    }
    return rep;
}

LinearMap ThetaFamily::component(const LeftModule& M) const {
    if (M.algebra != static_cast<const QuasiHopfAlgebra*>(algebra))
        throw std::invalid_argument("theta component: module over a different algebra");
    const QuasiTriangularQH* Hp = algebra;
    Space vm = product_space(source.space, M.space);
    const std::uint64_t dm = (std::uint64_t)M.dim();
    LinearMap ps = psi;
    Tensor qs = q_s;
    LeftModule mod = M;
    return finished(LinearMap({vm}, {M.space}, [Hp, ps, qs, mod, dm](std::uint64_t col) {
        std::uint64_t v = col / dm, m = col % dm;
        Tensor w = tensor_of(vec_tensor(Hp->space, ps.column(v)), basis_tensor(mod.space, (int)m));
        w = attach(w, qs, {{0, Fold::LMul, 0, &Hp->mult}, {1, Fold::RMul, 0, &Hp->mult}});
        return merge_act(w, 0, 1, mod.action).entries();
    }));
}

ThetaFamily theta(const QuasiTriangularQH& H, const ModuleMorphismCandidate& psi) {
    if (psi.source.algebra != static_cast<const QuasiHopfAlgebra*>(&H) ||
        psi.target.algebra != psi.source.algebra)
        throw std::invalid_argument("theta: morphism not over this algebra");
    if (psi.target.space->dim != H.dim())
        throw std::invalid_argument("theta: target is not the adjoint carrier");
    Report morph = verify_module_morphism(psi);
    if (!morph.pass())
        throw std::invalid_argument("theta: not an equivariant map (" + morph.first_failure() +
                                    ")");
    DerivedElements d = derive_elements(H);
    ThetaFamily fam;
    fam.algebra = &H;
    fam.source = psi.source;
    fam.psi = psi.map;
    fam.q_s = H.antipode_at(d.q, 1);
    return fam;
}

ModuleMorphismCandidate theta_inverse(const QuasiTriangularQH& H, const LeftModule& V,
                                      const LinearMap& xi_at_regular) {
    DerivedElements d = derive_elements(H);
    Tensor p = d.p;
    LeftModule mod = V;
    LinearMap xi = xi_at_regular;
    LinearMap m({V.space}, {H.space}, [p, mod, xi](std::uint64_t v) {
        Tensor w = basis_tensor(mod.space, (int)v);
        w = attach(w, p, {{0, Fold::Act, 0, &mod.action}, {1, Fold::NewLeg}});
        return apply_flat(xi, w);
    });
    return ModuleMorphismCandidate{V, adjoint_module(H), finished(std::move(m))};
}

Report verify_theta(const QuasiTriangularQH& H, const ModuleMorphismCandidate& psi,
                    const VerifyPolicy& pol) {
    ThetaFamily fam = theta(H, psi);
    Report rep;
    LeftModule bl = regular_module(H);
    LeftModule b = adjoint_module(H);
    LeftModule bb = module_tensor(b, b);
    const LeftModule* family[] = {&bl, &b, &bb};
    const char* names[] = {"component at regular", "component at adjoint",
                           "component at adjoint square"};
    for (int i = 0; i < 3; ++i) {
        ModuleMorphismCandidate cand{module_tensor(fam.source, *family[i]), *family[i],
                                     fam.component(*family[i])};
        rep.merge(verify_module_morphism(cand, pol, names[i]));
    }
    {
        auto& cr = rep.add("round trip recovers the morphism");
        ModuleMorphismCandidate back = theta_inverse(H, fam.source, fam.component(bl));
        for (int v = 0; v < fam.source.dim(); ++v)
            check_tensor_eq(cr, vec_tensor(H.space, back.map.column((std::uint64_t)v)),
                            vec_tensor(H.space, psi.map.column((std::uint64_t)v)),
                            "v=" + std::to_string(v));
    }
    return rep;
}

} // namespace qhopf
