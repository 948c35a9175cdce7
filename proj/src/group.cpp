#include "qhopf/group.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

namespace qhopf {

bool FiniteGroup::is_abelian() const {
    for (int g = 0; g < n; ++g)
        for (int h = g + 1; h < n; ++h)
            if (mul[g][h] != mul[h][g]) return false;
    return true;
}

namespace {

void finish_group(FiniteGroup& g) {
    int n = g.n;
    // identity at index 0
    for (int a = 0; a < n; ++a) {
        if (g.mul[0][a] != a || g.mul[a][0] != a)
            throw std::invalid_argument("make_group: element 0 is not a two-sided identity at " +
                                        std::to_string(a));
    }
    // closure / Latin square
    for (int a = 0; a < n; ++a) {
        std::vector<bool> seen_row(n, false), seen_col(n, false);
        for (int b = 0; b < n; ++b) {
            int r = g.mul[a][b], c = g.mul[b][a];
            if (r < 0 || r >= n || c < 0 || c >= n)
                throw std::invalid_argument("make_group: entry out of range at (" +
                                            std::to_string(a) + "," + std::to_string(b) + ")");
            if (seen_row[r])
                throw std::invalid_argument("make_group: row " + std::to_string(a) +
                                            " is not a permutation");
            if (seen_col[c])
                throw std::invalid_argument("make_group: column " + std::to_string(a) +
                                            " is not a permutation");
            seen_row[r] = seen_col[c] = true;
        }
    }
    // associativity, exhaustive (supported group sizes are <= 64)
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (g.mul[g.mul[a][b]][c] != g.mul[a][g.mul[b][c]])
                    throw std::invalid_argument(
                        "make_group: associativity fails at (" + std::to_string(a) + "," +
                        std::to_string(b) + "," + std::to_string(c) + ")");
    g.inv.assign(n, -1);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (g.mul[a][b] == 0) {
                g.inv[a] = b;
                break;
            }
    for (int a = 0; a < n; ++a)
        if (g.inv[a] < 0 || g.mul[g.inv[a]][a] != 0)
            throw std::invalid_argument("make_group: no two-sided inverse for " +
                                        std::to_string(a));
    if (g.labels.empty()) {
        for (int a = 0; a < n; ++a) g.labels.push_back("g" + std::to_string(a));
    }
}

} // namespace

FiniteGroup make_group(const std::vector<int>& cyclic_orders) {
    if (cyclic_orders.empty()) throw std::invalid_argument("make_group: no cyclic factors");
    int n = 1;
    for (int m : cyclic_orders) {
        if (m < 1) throw std::invalid_argument("make_group: cyclic order must be >= 1");
        n *= m;
    }
    FiniteGroup g;
    g.n = n;
    g.cyclic_orders = cyclic_orders;
    int k = (int)cyclic_orders.size();
    // lexicographic by component, last component fastest
    g.component.assign(n, std::vector<int>(k, 0));
    for (int a = 0; a < n; ++a) {
        int rest = a;
        for (int i = k - 1; i >= 0; --i) {
            g.component[a][i] = rest % cyclic_orders[i];
            rest /= cyclic_orders[i];
        }
    }
    auto index_of = [&](const std::vector<int>& t) {
        int a = 0;
        for (int i = 0; i < k; ++i) a = a * cyclic_orders[i] + t[i];
        return a;
    };
    g.mul.assign(n, std::vector<int>(n, 0));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::vector<int> t(k);
            for (int i = 0; i < k; ++i)
                t[i] = (g.component[a][i] + g.component[b][i]) % cyclic_orders[i];
            g.mul[a][b] = index_of(t);
        }
    for (int a = 0; a < n; ++a) {
        std::string s = "(";
        for (int i = 0; i < k; ++i) {
            if (i) s += ",";
            s += std::to_string(g.component[a][i]);
        }
        s += ")";
        g.labels.push_back(s);
    }
    finish_group(g);
    return g;
}

FiniteGroup make_group(const std::vector<std::vector<int>>& table) {
    FiniteGroup g;
    g.n = (int)table.size();
    if (g.n == 0) throw std::invalid_argument("make_group: empty table");
    if (g.n > 64) throw std::invalid_argument("make_group: tables larger than 64 not supported");
    for (const auto& row : table)
        if ((int)row.size() != g.n)
            throw std::invalid_argument("make_group: table is not square");
    g.mul = table;
    finish_group(g);
    return g;
}

Cochain2 constant_cochain2(const FiniteGroup& g, const Scalar& value) {
    Cochain2 c;
    c.group = &g;
    c.values.assign((std::size_t)g.n * g.n, value);
    return c;
}

Cochain3 constant_cochain3(const FiniteGroup& g, const Scalar& value) {
    Cochain3 c;
    c.group = &g;
    c.values.assign((std::size_t)g.n * g.n * g.n, value);
    return c;
}

Report is_3cocycle(const Cochain3& phi) {
    const FiniteGroup& G = *phi.group;
    Report rep;
    auto& nonzero = rep.add("cochain values invertible");
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            for (int c = 0; c < G.n; ++c) {
                ++nonzero.checked;
                if (phi.at(a, b, c).is_zero())
                    nonzero.violations.push_back(
                        {"(" + G.labels[a] + "," + G.labels[b] + "," + G.labels[c] + ")", "0",
                         "nonzero"});
            }
    auto& norm = rep.add("normalization phi(a,e,b) = 1");
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b) {
            ++norm.checked;
            if (!phi.at(a, 0, b).is_one())
                norm.violations.push_back(
                    {"(" + G.labels[a] + ",e," + G.labels[b] + ")", phi.at(a, 0, b).str(), "1"});
        }
    auto& pent = rep.add("pentagon phi(b,c,d) phi(a,bc,d) phi(a,b,c) = phi(a,b,cd) phi(ab,c,d)");
    for (int a = 0; a < G.n; ++a)
        for (int b = 0; b < G.n; ++b)
            for (int c = 0; c < G.n; ++c)
                for (int d = 0; d < G.n; ++d) {
                    ++pent.checked;
                    Scalar lhs = phi.at(b, c, d) * phi.at(a, G.op(b, c), d) * phi.at(a, b, c);
                    Scalar rhs = phi.at(a, b, G.op(c, d)) * phi.at(G.op(a, b), c, d);
                    if (lhs != rhs)
                        pent.violations.push_back({"(" + G.labels[a] + "," + G.labels[b] + "," +
                                                       G.labels[c] + "," + G.labels[d] + ")",
                                                   lhs.str(), rhs.str()});
                }
    return rep;
}

Cochain3 coboundary3(const Cochain2& f) {
    const FiniteGroup& G = *f.group;
    Cochain3 out;
    out.group = &G;
    out.values.assign((std::size_t)G.n * G.n * G.n, Scalar::one());
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h)
            for (int k = 0; k < G.n; ++k)
                out.at(g, h, k) =
                    f.at(g, h) * f.at(G.op(g, h), k) / (f.at(h, k) * f.at(g, G.op(h, k)));
    return out;
}

Cochain2 octonion_cochain(const FiniteGroup& g) {
    if (g.cyclic_orders != std::vector<int>{2, 2, 2})
        throw std::invalid_argument("octonion_cochain: group must be Z2 x Z2 x Z2");
    Cochain2 c;
    c.group = &g;
    c.values.assign((std::size_t)g.n * g.n, Scalar::one());
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b) {
            const auto& x = g.component[a];
            const auto& y = g.component[b];
            int f = 0;
            for (int i = 0; i < 3; ++i)
                for (int j = i; j < 3; ++j) f += x[i] * y[j];
            f += y[0] * x[1] * x[2] + x[0] * y[1] * x[2] + x[0] * x[1] * y[2];
            if (f % 2 != 0) c.at(a, b) = Scalar(-1);
        }
    return c;
}

Cochain2 octonion_braiding(const FiniteGroup& g) {
    if (g.cyclic_orders != std::vector<int>{2, 2, 2})
        throw std::invalid_argument("octonion_braiding: group must be Z2 x Z2 x Z2");
    Cochain2 c;
    c.group = &g;
    c.values.assign((std::size_t)g.n * g.n, Scalar(-1));
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            if (a == 0 || b == 0 || a == b) c.at(a, b) = Scalar::one();
    return c;
}

Cochain3 cyclic_cocycle(int n, int q) {
    // cochains hold raw group pointers, so Z_n instances live in a registry
    // with stable addresses
    static std::map<int, FiniteGroup> registry;
    static std::mutex mu;
    const FiniteGroup* gp;
    {
        std::lock_guard<std::mutex> lock(mu);
        auto it = registry.find(n);
        if (it == registry.end())
            it = registry.emplace(n, make_group(std::vector<int>{n})).first;
        gp = &it->second;
    }
    const FiniteGroup& G = *gp;
    Cochain3 out;
    out.group = &G;
    out.values.assign((std::size_t)n * n * n, Scalar::one());
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                out.at(a, b, c) = Scalar::root_of_unity((std::uint32_t)n,
                                                        (std::int64_t)q * a * ((b + c) / n));
    return out;
}

Report check_r_function(const Cochain2& r, const Cochain3& phi) {
    const FiniteGroup& G = *r.group;
    if (phi.group != r.group && phi.group->mul != G.mul)
        throw std::invalid_argument("check_r_function: r and phi live on different groups");
    if (!G.is_abelian())
        throw std::invalid_argument("check_r_function: group must be abelian");
    Report rep;
    auto& norm = rep.add("normalization r(u,e) = r(e,u) = 1");
    for (int u = 0; u < G.n; ++u) {
        ++norm.checked;
        if (!r.at(u, 0).is_one() || !r.at(0, u).is_one())
            norm.violations.push_back(
                {G.labels[u], r.at(u, 0).str() + "," + r.at(0, u).str(), "1,1"});
    }
    auto& m1 = rep.add("r(gh,t) = r(g,t) r(h,t) phi(t,g,h) phi(g,h,t) / phi(g,t,h)");
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h)
            for (int t = 0; t < G.n; ++t) {
                ++m1.checked;
                Scalar lhs = r.at(G.op(g, h), t);
                Scalar rhs = r.at(g, t) * r.at(h, t) * phi.at(t, g, h) * phi.at(g, h, t) /
                             phi.at(g, t, h);
                if (lhs != rhs)
                    m1.violations.push_back({"(" + G.labels[g] + "," + G.labels[h] + "," +
                                                 G.labels[t] + ")",
                                             lhs.str(), rhs.str()});
            }
    auto& m2 = rep.add("r(t,gh) = r(t,g) r(t,h) phi(g,t,h) / (phi(t,g,h) phi(g,h,t))");
    for (int g = 0; g < G.n; ++g)
        for (int h = 0; h < G.n; ++h)
            for (int t = 0; t < G.n; ++t) {
                ++m2.checked;
                Scalar lhs = r.at(t, G.op(g, h));
                Scalar rhs = r.at(t, g) * r.at(t, h) * phi.at(g, t, h) /
                             (phi.at(t, g, h) * phi.at(g, h, t));
                if (lhs != rhs)
                    m2.violations.push_back({"(" + G.labels[g] + "," + G.labels[h] + "," +
                                                 G.labels[t] + ")",
                                             lhs.str(), rhs.str()});
            }
    return rep;
}

} // namespace qhopf
