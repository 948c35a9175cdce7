#include "qhopf/linear_map.hpp"

#include <algorithm>
#include <mutex>
#include <stdexcept>

namespace qhopf {

void sv_add(SparseVec& v, std::uint64_t k, const Scalar& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = v.try_emplace(k, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) v.erase(it);
    }
}

SparseVec sv_scaled(const SparseVec& v, const Scalar& c) {
    SparseVec r;
    if (c.is_zero()) return r;
    for (const auto& [k, x] : v) {
        Scalar p = x * c;
        if (!p.is_zero()) r.emplace_hint(r.end(), k, p);
    }
    return r;
}

struct LinearMap::Impl {
    std::vector<Space> dom, cod;
    std::uint64_t dom_total = 1, cod_total = 1;
    mutable std::unordered_map<std::uint64_t, SparseVec> cols;
    std::function<SparseVec(std::uint64_t)> gen; // null: cols is the whole map
    mutable std::shared_mutex mu;
    mutable std::atomic<bool> full{false};
    // pair supports for 2-leg domains, built on demand once materialized
    mutable std::vector<std::vector<std::uint32_t>> lsup, rsup;
    mutable std::once_flag sup_once;
    SparseVec empty;

    static std::uint64_t total(const std::vector<Space>& legs) {
        std::uint64_t t = 1;
        for (const auto& s : legs) t *= (std::uint64_t)s->dim;
        return t;
    }
};

void LinearMap::ensure() const {
    if (!impl_) throw std::logic_error("LinearMap: empty");
}

LinearMap::LinearMap(std::vector<Space> dom, std::vector<Space> cod)
    : impl_(std::make_shared<Impl>()) {
    impl_->dom = std::move(dom);
    impl_->cod = std::move(cod);
    impl_->dom_total = Impl::total(impl_->dom);
    impl_->cod_total = Impl::total(impl_->cod);
    impl_->full.store(true);
}

LinearMap::LinearMap(std::vector<Space> dom, std::vector<Space> cod,
                     std::function<SparseVec(std::uint64_t)> gen)
    : impl_(std::make_shared<Impl>()) {
    impl_->dom = std::move(dom);
    impl_->cod = std::move(cod);
    impl_->dom_total = Impl::total(impl_->dom);
    impl_->cod_total = Impl::total(impl_->cod);
    impl_->gen = std::move(gen);
}

LinearMap LinearMap::identity(const std::vector<Space>& v) {
    LinearMap m(v, v, [](std::uint64_t i) { return SparseVec{{i, Scalar::one()}}; });
    return m;
}

const std::vector<Space>& LinearMap::dom() const { ensure(); return impl_->dom; }
const std::vector<Space>& LinearMap::cod() const { ensure(); return impl_->cod; }
std::uint64_t LinearMap::dom_dim() const { ensure(); return impl_->dom_total; }
std::uint64_t LinearMap::cod_dim() const { ensure(); return impl_->cod_total; }

void LinearMap::set_column(std::uint64_t i, SparseVec col) {
    ensure();
    if (impl_->gen) throw std::logic_error("LinearMap: cannot set column of generated map");
    if (col.empty())
        impl_->cols.erase(i);
    else
        impl_->cols[i] = std::move(col);
}

void LinearMap::add_entry(std::uint64_t col, std::uint64_t row, const Scalar& c) {
    ensure();
    if (impl_->gen) throw std::logic_error("LinearMap: cannot edit generated map");
    sv_add(impl_->cols[col], row, c);
    if (impl_->cols[col].empty()) impl_->cols.erase(col);
}

bool LinearMap::lazy() const { ensure(); return (bool)impl_->gen; }
bool LinearMap::materialized() const {
    ensure();
    return !impl_->gen || impl_->full.load(std::memory_order_acquire);
}

const SparseVec& LinearMap::column(std::uint64_t i) const {
    ensure();
    if (i >= impl_->dom_total) throw std::out_of_range("LinearMap: column out of range");
    if (!impl_->gen || impl_->full.load(std::memory_order_acquire)) {
        auto it = impl_->cols.find(i);
        return it == impl_->cols.end() ? impl_->empty : it->second;
    }
    {
        std::shared_lock lock(impl_->mu);
        auto it = impl_->cols.find(i);
        if (it != impl_->cols.end()) return it->second;
    }
    SparseVec col = impl_->gen(i);
    std::unique_lock lock(impl_->mu);
    return impl_->cols.try_emplace(i, std::move(col)).first->second;
}

void LinearMap::materialize() const {
    ensure();
    if (materialized()) return;
    if (impl_->dom_total > (1u << 24))
        throw std::logic_error("LinearMap: refusing to materialize a huge domain");
    for (std::uint64_t i = 0; i < impl_->dom_total; ++i) column(i);
    impl_->full.store(true, std::memory_order_release);
}

const SparseVec& LinearMap::at(std::uint64_t a, std::uint64_t b) const {
    ensure();
    if (impl_->dom.size() != 2) throw std::logic_error("LinearMap::at needs a 2-leg domain");
    return column(a * (std::uint64_t)impl_->dom[1]->dim + b);
}

const std::vector<std::uint32_t>& LinearMap::left_support(std::uint64_t b) const {
    ensure();
    if (impl_->dom.size() != 2) throw std::logic_error("LinearMap::left_support needs 2 legs");
    if (!materialized()) throw std::logic_error("LinearMap::left_support needs materialized map");
    std::call_once(impl_->sup_once, [&] {
        std::uint64_t da = impl_->dom[0]->dim, db = impl_->dom[1]->dim;
        impl_->lsup.assign(db, {});
        impl_->rsup.assign(da, {});
        for (const auto& [k, col] : impl_->cols) {
            if (col.empty()) continue;
            std::uint64_t a = k / db, bb = k % db;
            impl_->lsup[bb].push_back((std::uint32_t)a);
            impl_->rsup[a].push_back((std::uint32_t)bb);
        }
        for (auto& v : impl_->lsup) std::sort(v.begin(), v.end());
        for (auto& v : impl_->rsup) std::sort(v.begin(), v.end());
    });
    return impl_->lsup[b];
}

const std::vector<std::uint32_t>& LinearMap::right_support(std::uint64_t a) const {
    left_support(0); // force build
    return impl_->rsup[a];
}

Tensor LinearMap::apply_vec(const Tensor& t) const {
    ensure();
    if (t.leg_count() != (int)impl_->dom.size())
        throw std::invalid_argument("LinearMap::apply_vec: arity mismatch");
    for (int i = 0; i < t.leg_count(); ++i)
        if (!compatible(t.legs()[i], impl_->dom[i]))
            throw std::invalid_argument("LinearMap::apply_vec: leg mismatch");
    Tensor out(impl_->cod);
    for (const auto& [k, c] : t.entries())
        for (const auto& [row, v] : column(k)) out.add(row, c * v);
    return out;
}

LinearMap LinearMap::compose(const LinearMap& inner) const {
    ensure();
    inner.ensure();
    if (impl_->dom.size() != inner.impl_->cod.size())
        throw std::invalid_argument("LinearMap::compose: arity mismatch");
    for (std::size_t i = 0; i < impl_->dom.size(); ++i)
        if (!compatible(impl_->dom[i], inner.impl_->cod[i]))
            throw std::invalid_argument("LinearMap::compose: leg mismatch");
    LinearMap outer = *this;
    LinearMap in = inner;
    LinearMap r(inner.impl_->dom, impl_->cod, [outer, in](std::uint64_t i) {
        SparseVec acc;
        for (const auto& [mid, c] : in.column(i))
            for (const auto& [row, v] : outer.column(mid)) sv_add(acc, row, c * v);
        return acc;
    });
    if (r.dom_dim() <= 4096) r.materialize();
    return r;
}

Tensor LinearMap::to_tensor() const {
    ensure();
    materialize();
    std::vector<Space> legs = impl_->cod;
    for (const auto& s : impl_->dom) legs.push_back(s);
    Tensor t(legs);
    for (const auto& [k, col] : impl_->cols)
        for (const auto& [row, v] : col) t.add(row * impl_->dom_total + k, v);
    return t;
}

bool operator==(const LinearMap& a, const LinearMap& b) {
    a.ensure();
    b.ensure();
    if (a.impl_->dom.size() != b.impl_->dom.size() ||
        a.impl_->cod.size() != b.impl_->cod.size())
        return false;
    for (std::size_t i = 0; i < a.impl_->dom.size(); ++i)
        if (!compatible(a.impl_->dom[i], b.impl_->dom[i])) return false;
    for (std::size_t i = 0; i < a.impl_->cod.size(); ++i)
        if (!compatible(a.impl_->cod[i], b.impl_->cod[i])) return false;
    if (a.impl_->dom_total != b.impl_->dom_total) return false;
    for (std::uint64_t i = 0; i < a.impl_->dom_total; ++i)
        if (a.column(i) != b.column(i)) return false;
    return true;
}

LinearMap LinearMap::inverse() const {
    ensure();
    if (impl_->dom_total != impl_->cod_total)
        throw std::invalid_argument("LinearMap::inverse: not square");
    materialize();
    std::uint64_t n = impl_->dom_total;
    // row-major copies: rows[r] maps column -> value
    std::vector<SparseVec> rows(n), inv(n);
    for (std::uint64_t c = 0; c < n; ++c)
        for (const auto& [r, v] : column(c)) rows[r][c] = v;
    for (std::uint64_t r = 0; r < n; ++r) inv[r][r] = Scalar::one();
    for (std::uint64_t c = 0; c < n; ++c) {
        // pivot search
        std::uint64_t piv = n;
        for (std::uint64_t r = c; r < n; ++r) {
            auto it = rows[r].find(c);
            if (it != rows[r].end()) { piv = r; break; }
        }
        if (piv == n) throw std::domain_error("LinearMap::inverse: singular matrix");
        std::swap(rows[c], rows[piv]);
        std::swap(inv[c], inv[piv]);
        Scalar d = rows[c][c].inverse();
        rows[c] = sv_scaled(rows[c], d);
        inv[c] = sv_scaled(inv[c], d);
        // eliminate c from every other row that has it
        for (std::uint64_t r = 0; r < n; ++r) {
            if (r == c) continue;
            auto it = rows[r].find(c);
            if (it == rows[r].end()) continue;
            Scalar f = it->second;
            for (const auto& [k, v] : rows[c]) sv_add(rows[r], k, -(f * v));
            for (const auto& [k, v] : inv[c]) sv_add(inv[r], k, -(f * v));
        }
    }
    LinearMap out(impl_->cod, impl_->dom);
    for (std::uint64_t r = 0; r < n; ++r)
        for (const auto& [k, v] : inv[r]) out.add_entry(k, r, v);
    return out;
}

// ---- positional application -------------------------------------------------

Tensor apply_at(const LinearMap& m, const Tensor& t, const std::vector<int>& legs) {
    if (legs.empty() && m.dom().size() != 0)
        throw std::invalid_argument("apply_at: no legs selected");
    for (std::size_t i = 0; i + 1 < legs.size(); ++i)
        if (legs[i] >= legs[i + 1])
            throw std::invalid_argument("apply_at: legs must be strictly increasing");
    if (legs.size() != m.dom().size())
        throw std::invalid_argument("apply_at: selected legs do not match map arity");
    for (std::size_t i = 0; i < legs.size(); ++i) {
        if (legs[i] < 0 || legs[i] >= t.leg_count())
            throw std::invalid_argument("apply_at: leg out of range");
        if (!compatible(t.legs()[legs[i]], m.dom()[i]))
            throw std::invalid_argument("apply_at: leg dimension mismatch");
    }
    int insert_pos = legs.empty() ? t.leg_count() : legs[0];
    std::vector<Space> out_legs;
    std::vector<int> kept; // positions of untouched legs, in order
    for (int i = 0; i < t.leg_count(); ++i) {
        if (i == insert_pos)
            for (const auto& s : m.cod()) out_legs.push_back(s);
        if (std::find(legs.begin(), legs.end(), i) == legs.end()) {
            out_legs.push_back(t.legs()[i]);
            kept.push_back(i);
        }
    }
    if (insert_pos == t.leg_count())
        for (const auto& s : m.cod()) out_legs.push_back(s);
    Tensor out(out_legs);

    // strides in the output for the cod block and the kept legs
    std::vector<int> out_idx(out_legs.size());
    for (const auto& [k, c] : t.entries()) {
        auto idx = t.unflatten(k);
        std::uint64_t dflat = 0;
        for (std::size_t i = 0; i < legs.size(); ++i)
            dflat = dflat * (std::uint64_t)m.dom()[i]->dim + (std::uint64_t)idx[legs[i]];
        const SparseVec& col = m.column(dflat);
        if (col.empty()) continue;
        for (const auto& [row, v] : col) {
            // decompose row into cod block digits
            std::uint64_t rest = row;
            std::vector<int> cod_digits(m.cod().size());
            for (int i = (int)m.cod().size() - 1; i >= 0; --i) {
                cod_digits[i] = (int)(rest % (std::uint64_t)m.cod()[i]->dim);
                rest /= (std::uint64_t)m.cod()[i]->dim;
            }
            int pos = 0;
            std::size_t kept_i = 0;
            for (int i = 0; i < t.leg_count(); ++i) {
                if (i == insert_pos)
                    for (std::size_t d = 0; d < cod_digits.size(); ++d)
                        out_idx[pos++] = cod_digits[d];
                if (kept_i < kept.size() && kept[kept_i] == i) {
                    out_idx[pos++] = idx[i];
                    ++kept_i;
                }
            }
            if (insert_pos == t.leg_count())
                for (std::size_t d = 0; d < cod_digits.size(); ++d)
                    out_idx[pos++] = cod_digits[d];
            out.add(out_idx, c * v);
        }
    }
    return out;
}

// ---- contraction engine ------------------------------------------------------

namespace {

struct AttachCtx {
    const std::vector<AttachOp>& ops;
    const std::vector<int>& nw_positions; // result position per op (NewLeg only)
    Tensor& out;
    std::vector<int>& cur; // working index, length = out legs
    const std::vector<int>* uidx = nullptr;

    void run(std::size_t k, Scalar coeff) {
        if (k == ops.size()) {
            out.add(cur, coeff);
            return;
        }
        const AttachOp& o = ops[k];
        int uv = (*uidx)[o.uleg];
        if (o.mode == Fold::NewLeg) {
            cur[nw_positions[k]] = uv;
            run(k + 1, coeff);
            return;
        }
        int wv = cur[o.wleg];
        const SparseVec& vec = o.mode == Fold::RMul
                                   ? o.op->at((std::uint64_t)wv, (std::uint64_t)uv)
                                   : o.op->at((std::uint64_t)uv, (std::uint64_t)wv);
        if (vec.empty()) return;
        int saved = cur[o.wleg];
        for (const auto& [row, v] : vec) {
            cur[o.wleg] = (int)row;
            run(k + 1, coeff * v);
        }
        cur[o.wleg] = saved;
    }
};

} // namespace

AttachPlan::AttachPlan(Tensor u, std::vector<AttachOp> ops)
    : u_(std::move(u)), ops_(std::move(ops)) {
    if ((int)ops_.size() != u_.leg_count())
        throw std::invalid_argument("attach: need exactly one op per u leg");
    std::vector<bool> used(u_.leg_count(), false);
    for (const auto& o : ops_) {
        if (o.uleg < 0 || o.uleg >= u_.leg_count() || used[o.uleg])
            throw std::invalid_argument("attach: u legs must be covered exactly once");
        used[o.uleg] = true;
        if (o.mode != Fold::NewLeg) {
            if (o.wleg < 0)
                throw std::invalid_argument("attach: target leg out of range");
            if (!o.op) throw std::invalid_argument("attach: missing op");
            if (o.op->dom().size() != 2 || o.op->cod().size() != 1)
                throw std::invalid_argument("attach: op must be bilinear with 1-leg result");
        }
    }
    uterms_.reserve(u_.entries().size());
    for (const auto& [k, c] : u_.entries()) uterms_.push_back({u_.unflatten(k), c});

    // Join candidates: ops that still see the original w value (first op per
    // target leg) with a support index available.  Their u legs become the
    // joint key; later ops are applied term by term during the fold.
    int bits = 0;
    std::map<int, bool> written;
    for (std::size_t k = 0; k < ops_.size(); ++k) {
        const AttachOp& o = ops_[k];
        if (o.mode == Fold::NewLeg) continue;
        bool first = !written[o.wleg];
        written[o.wleg] = true;
        if (!first || !o.op->materialized()) continue;
        std::uint64_t d0 = o.op->dom()[0]->dim, d1 = o.op->dom()[1]->dim;
        if (d0 * d1 > (1u << 20)) continue;
        std::uint64_t uvals = (std::uint64_t)u_.legs()[o.uleg]->dim;
        int need = 1;
        while ((1ull << need) < uvals) ++need;
        if (bits + need > 62) continue;

        JoinOp jo;
        jo.op_index = (int)k;
        jo.shift = bits;
        std::vector<char> present((std::size_t)uvals, 0);
        for (std::uint32_t t = 0; t < uterms_.size(); ++t) {
            auto uval = (std::uint32_t)uterms_[t].first[o.uleg];
            present[uval] = 1;
            jo.bucket[uval].push_back(t);
        }
        bool u_left = o.mode != Fold::RMul; // u is the left argument of op->at
        std::uint64_t dw = u_left ? d1 : d0;
        jo.surv.resize(dw);
        jo.cost.assign(dw, 0);
        for (std::uint64_t wv = 0; wv < dw; ++wv) {
            const auto& sup = u_left ? o.op->left_support(wv) : o.op->right_support(wv);
            for (std::uint32_t s : sup) {
                if (s >= present.size() || !present[s]) continue;
                jo.surv[wv].push_back(s);
                jo.cost[wv] += jo.bucket.find(s)->second.size();
            }
        }
        bits += need;
        join_.push_back(std::move(jo));
    }
    if (!join_.empty()) {
        for (std::uint32_t t = 0; t < uterms_.size(); ++t) {
            std::uint64_t key = 0;
            for (const auto& jo : join_)
                key |= (std::uint64_t)uterms_[t].first[ops_[jo.op_index].uleg] << jo.shift;
            keyed_[key].push_back(t);
        }
    }
}

Tensor AttachPlan::apply(const Tensor& w) const {
    for (const auto& o : ops_)
        if (o.mode != Fold::NewLeg && o.wleg >= w.leg_count())
            throw std::invalid_argument("attach: target leg out of range");
    std::vector<Space> out_legs = w.legs();
    std::vector<int> nw_positions(ops_.size(), -1);
    for (std::size_t k = 0; k < ops_.size(); ++k)
        if (ops_[k].mode == Fold::NewLeg) {
            nw_positions[k] = (int)out_legs.size();
            out_legs.push_back(u_.legs()[ops_[k].uleg]);
        }
    Tensor out(out_legs);
    if (w.is_zero() || u_.is_zero()) return out;

    std::vector<int> cur(out_legs.size(), 0);
    AttachCtx ctx{ops_, nw_positions, out, cur, nullptr};
    std::vector<const std::vector<std::uint32_t>*> lists(join_.size());

    for (const auto& [wk, wc] : w.entries()) {
        auto widx = w.unflatten(wk);
        auto process = [&](std::uint32_t t) {
            ctx.uidx = &uterms_[t].first;
            for (std::size_t i = 0; i < widx.size(); ++i) cur[i] = widx[i];
            ctx.run(0, wc * uterms_[t].second);
        };
        if (join_.empty()) {
            for (std::uint32_t t = 0; t < (std::uint32_t)uterms_.size(); ++t) process(t);
            continue;
        }
        // admissible u values per join op for this w term
        bool dead = false;
        std::uint64_t prod = 1, best_cost = ~0ull;
        std::size_t best = 0;
        for (std::size_t j = 0; j < join_.size(); ++j) {
            const JoinOp& jo = join_[j];
            int wv = widx[ops_[jo.op_index].wleg];
            lists[j] = &jo.surv[wv];
            if (lists[j]->empty()) {
                dead = true;
                break;
            }
            if (prod <= (1u << 20)) prod *= lists[j]->size();
            if (jo.cost[wv] < best_cost) {
                best_cost = jo.cost[wv];
                best = j;
            }
        }
        if (dead) continue;
        if (prod <= best_cost) {
            // walk the product of admissible values, probing the joint key
            std::vector<std::size_t> odo(join_.size(), 0);
            for (;;) {
                std::uint64_t key = 0;
                for (std::size_t j = 0; j < join_.size(); ++j)
                    key |= (std::uint64_t)(*lists[j])[odo[j]] << join_[j].shift;
                auto it = keyed_.find(key);
                if (it != keyed_.end())
                    for (std::uint32_t t : it->second) process(t);
                std::size_t j = 0;
                while (j < join_.size() && ++odo[j] == lists[j]->size()) odo[j++] = 0;
                if (j == join_.size()) break;
            }
        } else {
            // cheaper to scan the single-leg buckets of the tightest op
            const JoinOp& jo = join_[best];
            for (std::uint32_t uval : *lists[best]) {
                auto it = jo.bucket.find(uval);
                if (it != jo.bucket.end())
                    for (std::uint32_t t : it->second) process(t);
            }
        }
    }
    return out;
}

Tensor attach(const Tensor& w, const Tensor& u, const std::vector<AttachOp>& ops) {
    return AttachPlan(u, ops).apply(w);
}

static Tensor merge_generic(const Tensor& w, int i, int j, const LinearMap& op, bool result_at_j) {
    if (i == j || i < 0 || j < 0 || i >= w.leg_count() || j >= w.leg_count())
        throw std::invalid_argument("merge: bad leg indices");
    if (op.dom().size() != 2 || op.cod().size() != 1)
        throw std::invalid_argument("merge: op must be bilinear with 1-leg result");
    int res = result_at_j ? j : i;
    int gone = result_at_j ? i : j;
    std::vector<Space> out_legs;
    for (int k = 0; k < w.leg_count(); ++k) {
        if (k == gone) continue;
        out_legs.push_back(k == res ? op.cod()[0] : w.legs()[k]);
    }
    Tensor out(out_legs);
    std::vector<int> oidx(out_legs.size());
    for (const auto& [k, c] : w.entries()) {
        auto idx = w.unflatten(k);
        const SparseVec& vec = op.at((std::uint64_t)idx[i], (std::uint64_t)idx[j]);
        if (vec.empty()) continue;
        for (const auto& [row, v] : vec) {
            int pos = 0;
            for (int m = 0; m < w.leg_count(); ++m) {
                if (m == gone) continue;
                oidx[pos++] = m == res ? (int)row : idx[m];
            }
            out.add(oidx, c * v);
        }
    }
    return out;
}

Tensor merge_mul(const Tensor& w, int i, int j, const LinearMap& op) {
    return merge_generic(w, i, j, op, false);
}

Tensor merge_act(const Tensor& w, int i, int j, const LinearMap& act) {
    return merge_generic(w, i, j, act, true);
}

Tensor convolve(const Tensor& a, const Tensor& b, const std::vector<const LinearMap*>& mults) {
    if (a.leg_count() != b.leg_count() || (int)mults.size() != a.leg_count())
        throw std::invalid_argument("convolve: arity mismatch");
    std::vector<AttachOp> ops;
    for (int k = 0; k < a.leg_count(); ++k)
        ops.push_back(AttachOp{k, Fold::RMul, k, mults[k]});
    return attach(a, b, ops);
}

LinearMap with_legs(const LinearMap& m, std::vector<Space> dom, std::vector<Space> cod) {
    std::uint64_t dt = 1, ct = 1;
    for (const auto& s : dom) dt *= (std::uint64_t)s->dim;
    for (const auto& s : cod) ct *= (std::uint64_t)s->dim;
    if (dt != m.dom_dim() || ct != m.cod_dim())
        throw std::invalid_argument("with_legs: flattened dimensions must match");
    LinearMap src = m;
    LinearMap r(std::move(dom), std::move(cod),
                [src](std::uint64_t i) { return src.column(i); });
    if (m.materialized() && r.dom_dim() <= 4096) r.materialize();
    return r;
}

Tensor embed_with_units(const Tensor& t, const std::vector<Space>& ambient,
                        const std::vector<int>& positions, const std::vector<Tensor>& units) {
    if ((int)positions.size() != t.leg_count())
        throw std::invalid_argument("embed_with_units: positions arity mismatch");
    for (std::size_t i = 0; i + 1 < positions.size(); ++i)
        if (positions[i] >= positions[i + 1])
            throw std::invalid_argument("embed_with_units: positions must increase");
    if (units.size() != ambient.size())
        throw std::invalid_argument("embed_with_units: one unit per ambient slot required");
    Tensor out(ambient);
    std::vector<int> free_slots;
    for (int s = 0; s < (int)ambient.size(); ++s)
        if (std::find(positions.begin(), positions.end(), s) == positions.end())
            free_slots.push_back(s);
    std::vector<int> oidx(ambient.size(), 0);
    for (const auto& [k, c] : t.entries()) {
        auto idx = t.unflatten(k);
        for (std::size_t m = 0; m < positions.size(); ++m) oidx[positions[m]] = idx[m];
        // cartesian product over the unit entries of free slots
        std::function<void(std::size_t, Scalar)> rec = [&](std::size_t fi, Scalar coeff) {
            if (fi == free_slots.size()) {
                out.add(oidx, coeff);
                return;
            }
            int slot = free_slots[fi];
            for (const auto& [uk, uc] : units[slot].entries()) {
                oidx[slot] = (int)uk;
                rec(fi + 1, coeff * uc);
            }
        };
        rec(0, c);
    }
    return out;
}

} // namespace qhopf
