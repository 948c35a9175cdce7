#include "doctest.h"

#include <random>

#include "qhopf/linear_map.hpp"
#include "qhopf/tensor.hpp"

using namespace qhopf;

namespace {

// group algebra multiplication of Z_n as a bilinear map
LinearMap zn_mult(const Space& h) {
    int n = h->dim;
    LinearMap m({h, h}, {h});
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            m.add_entry((std::uint64_t)a * n + b, (a + b) % n, Scalar::one());
    return m;
}

Tensor random_tensor(std::mt19937_64& rng, const std::vector<Space>& legs, int terms) {
    Tensor t(legs);
    std::uniform_int_distribution<int> coeff(-3, 3);
    for (int i = 0; i < terms; ++i) {
        std::vector<int> idx;
        for (const auto& s : legs)
            idx.push_back((int)(rng() % (std::uint64_t)s->dim));
        t.add(idx, Scalar(coeff(rng)));
    }
    return t;
}

} // namespace

TEST_CASE("tensor entries stay pruned and ordered") {
    Space v = make_space(3, "v");
    Tensor t({v, v});
    t.add({0, 1}, Scalar(2));
    t.add({2, 2}, Scalar(1));
    t.add({0, 1}, Scalar(-2)); // cancels
    CHECK(t.term_count() == 1);
    CHECK(t.at({0, 1}).is_zero());
    CHECK(t.at({2, 2}).is_one());
    // flatten is leg-0 major
    CHECK(t.flatten({2, 2}) == 8);
    CHECK(t.unflatten(5) == std::vector<int>{1, 2});
}

TEST_CASE("addition and scaling match dense arithmetic") {
    std::mt19937_64 rng(42);
    Space v = make_space(4, "v");
    for (int trial = 0; trial < 10; ++trial) {
        Tensor a = random_tensor(rng, {v, v}, 6);
        Tensor b = random_tensor(rng, {v, v}, 6);
        Tensor s = a + b;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(s.at({i, j}) == a.at({i, j}) + b.at({i, j}));
        Tensor d = a - b;
        for (int i = 0; i < 4; ++i)
            for (int j = 0; j < 4; ++j)
                CHECK(d.at({i, j}) == a.at({i, j}) - b.at({i, j}));
        CHECK(a.scaled(Scalar(0)).is_zero());
    }
}

TEST_CASE("outer product agrees with coefficient products") {
    std::mt19937_64 rng(7);
    Space v = make_space(3, "v"), w = make_space(2, "w");
    Tensor a = random_tensor(rng, {v}, 3);
    Tensor b = random_tensor(rng, {w, w}, 3);
    Tensor p = tensor_of(a, b);
    REQUIRE(p.leg_count() == 3);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                CHECK(p.at({i, j, k}) == a.at({i}) * b.at({j, k}));
}

TEST_CASE("permute_legs places component j in slot perm[j]") {
    Space u = make_space(2, "u"), v = make_space(3, "v"), w = make_space(5, "w");
    Tensor t({u, v, w});
    t.add({1, 2, 4}, Scalar(1));
    // the 312 convention: first component lands in slot 3
    Tensor p = permute_legs(t, {2, 0, 1});
    REQUIRE(p.legs()[0]->dim == 3); // v first
    REQUIRE(p.legs()[1]->dim == 5);
    REQUIRE(p.legs()[2]->dim == 2);
    CHECK(p.at({2, 4, 1}).is_one());

    // composition law: permute(permute(t,p),q) = permute(t, q o p)
    std::mt19937_64 rng(3);
    Tensor r = random_tensor(rng, {u, v, w}, 8);
    std::vector<int> pp{2, 0, 1}, qq{1, 2, 0}, comp(3);
    for (int j = 0; j < 3; ++j) comp[j] = qq[pp[j]];
    CHECK(permute_legs(permute_legs(r, pp), qq) == permute_legs(r, comp));

    // identity and inverse round trip
    std::vector<int> invp(3);
    for (int j = 0; j < 3; ++j) invp[pp[j]] = j;
    CHECK(permute_legs(permute_legs(r, pp), invp) == r);
}

TEST_CASE("apply_at splices codomain legs at the first selected slot") {
    Space h = make_space(3, "h");
    // delta-like map h -> h (x) h : e_a -> e_a (x) e_a
    LinearMap diag({h}, {h, h});
    for (int a = 0; a < 3; ++a) diag.add_entry(a, (std::uint64_t)a * 3 + a, Scalar::one());
    // counit-like map h -> (scalar)
    LinearMap eps({h}, {});
    for (int a = 0; a < 3; ++a) eps.add_entry(a, 0, Scalar::one());

    Tensor t({h, h});
    t.add({1, 2}, Scalar(5));
    Tensor split = apply_at(diag, t, {1});
    REQUIRE(split.leg_count() == 3);
    CHECK(split.at({1, 2, 2}) == Scalar(5));

    Tensor dropped = apply_at(eps, t, {0});
    REQUIRE(dropped.leg_count() == 1);
    CHECK(dropped.at({2}) == Scalar(5));

    // multi-leg selection on non-adjacent legs: multiply legs 0 and 2
    LinearMap m = zn_mult(h);
    Tensor t3({h, h, h});
    t3.add({1, 0, 2}, Scalar(1));
    Tensor merged = apply_at(m, t3, {0, 2});
    REQUIRE(merged.leg_count() == 2);
    CHECK(merged.at({0, 0}).is_one()); // 1+2 = 0 mod 3, result at slot of leg 0
}

TEST_CASE("apply_vec and compose agree with dense matrix algebra") {
    std::mt19937_64 rng(99);
    Space v = make_space(4, "v");
    LinearMap f({v}, {v}), g({v}, {v});
    for (int c = 0; c < 4; ++c)
        for (int r = 0; r < 4; ++r) {
            f.add_entry(c, r, Scalar((std::int64_t)(rng() % 5) - 2));
            g.add_entry(c, r, Scalar((std::int64_t)(rng() % 5) - 2));
        }
    LinearMap fg = f.compose(g);
    for (int c = 0; c < 4; ++c) {
        Tensor e = basis_tensor(v, c);
        CHECK(fg.apply_vec(e) == f.apply_vec(g.apply_vec(e)));
    }
}

TEST_CASE("lazy maps memoize and materialize consistently") {
    Space v = make_space(6, "v");
    int calls = 0;
    LinearMap lazy({v}, {v}, [&calls](std::uint64_t i) {
        ++calls;
        return SparseVec{{(i + 1) % 6, Scalar(2)}};
    });
    CHECK(lazy.lazy());
    CHECK_FALSE(lazy.materialized());
    (void)lazy.column(3);
    (void)lazy.column(3);
    CHECK(calls == 1); // memoized
    lazy.materialize();
    CHECK(calls == 6);
    CHECK(lazy.materialized());
    CHECK(lazy.column(5) == SparseVec{{0, Scalar(2)}});
}

TEST_CASE("matrix inverse via exact elimination") {
    Space v = make_space(5, "v");
    std::mt19937_64 rng(1234);
    // random unit upper-triangular times permutation is always invertible
    LinearMap m({v}, {v});
    std::vector<int> perm{3, 0, 4, 2, 1};
    for (int c = 0; c < 5; ++c) {
        m.add_entry(c, perm[c], Scalar::one());
        for (int r = 0; r < 5; ++r)
            if (perm[r] < perm[c] && rng() % 2)
                m.add_entry(c, perm[r], Scalar(Rational((std::int64_t)(rng() % 7) - 3, 2)));
    }
    LinearMap inv = m.inverse();
    LinearMap idm = LinearMap::identity({v});
    idm.materialize();
    CHECK(m.compose(inv) == idm);
    CHECK(inv.compose(m) == idm);

    LinearMap sing({v}, {v});
    sing.add_entry(0, 0, Scalar::one()); // rank 1
    CHECK_THROWS_AS(sing.inverse(), std::domain_error);
}

TEST_CASE("convolve multiplies leg by leg") {
    Space h = make_space(4, "h");
    LinearMap m = zn_mult(h);
    std::vector<const LinearMap*> ms{&m, &m};
    std::mt19937_64 rng(5);
    Tensor a = random_tensor(rng, {h, h}, 6);
    Tensor b = random_tensor(rng, {h, h}, 6);
    Tensor c = convolve(a, b, ms);
    // dense oracle
    Tensor expect({h, h});
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j)
            for (int k = 0; k < 4; ++k)
                for (int l = 0; l < 4; ++l)
                    expect.add({(i + k) % 4, (j + l) % 4}, a.at({i, j}) * b.at({k, l}));
    CHECK(c == expect);

    // convolution is associative since the leg algebra is
    Tensor d = random_tensor(rng, {h, h}, 5);
    CHECK(convolve(convolve(a, b, ms), d, ms) == convolve(a, convolve(b, d, ms), ms));
}

TEST_CASE("embed_with_units builds decorated embeddings like R_13") {
    Space h = make_space(3, "h");
    Tensor r({h, h});
    r.add({1, 2}, Scalar(4));
    Tensor unit = basis_tensor(h, 0); // group-algebra unit
    Tensor r13 = embed_with_units(r, {h, h, h}, {0, 2}, {unit, unit, unit});
    REQUIRE(r13.leg_count() == 3);
    CHECK(r13.at({1, 0, 2}) == Scalar(4));
    CHECK(r13.term_count() == 1);

    // a two-term unit in the free slot fans out
    Tensor u2({h});
    u2.add({0}, Scalar(1));
    u2.add({1}, Scalar(1));
    Tensor emb = embed_with_units(r, {h, h, h}, {0, 2}, {unit, u2, unit});
    CHECK(emb.term_count() == 2);
    CHECK(emb.at({1, 1, 2}) == Scalar(4));
}

TEST_CASE("attach folds decorations with left/right order preserved") {
    Space h = make_space(5, "h");
    LinearMap m = zn_mult(h);
    // W = e_1 (x) e_2
    Tensor w({h, h});
    w.add({1, 2}, Scalar(1));
    // u = e_3 (x) e_4: LMul leg0 by u0, RMul leg1 by u1
    Tensor u({h, h});
    u.add({3, 4}, Scalar(2));
    Tensor out = attach(w, u, {{0, Fold::LMul, 0, &m}, {1, Fold::RMul, 1, &m}});
    // leg0: 3+1 = 4; leg1: 2+4 = 1
    CHECK(out.at({4, 1}) == Scalar(2));

    // two ops on the same leg apply in listed order (Z_n is abelian, so
    // check order sensitivity through a NewLeg + merge instead below)
    Tensor out2 = attach(w, u, {{0, Fold::LMul, 0, &m}, {1, Fold::LMul, 0, &m}});
    CHECK(out2.at({(3 + 4 + 1) % 5, 2}) == Scalar(2));

    // NewLeg appends at the end
    Tensor out3 = attach(w, u, {{0, Fold::RMul, 1, &m}, {1, Fold::NewLeg, -1, nullptr}});
    REQUIRE(out3.leg_count() == 3);
    CHECK(out3.at({1, 0, 4}) == Scalar(2));
}

TEST_CASE("attach on a noncommutative table respects sides") {
    // smallest noncommutative monoid-as-table we care about: use 2x2 matrix
    // units over indices {0=E11,1=E12,2=E21,3=E22}; partial products go to
    // zero, which also exercises pruning
    Space a = make_space(4, "a");
    LinearMap m({a, a}, {a});
    auto row = [](int x) { return x / 2; };
    auto col = [](int x) { return x % 2; };
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            if (col(x) == row(y)) m.add_entry((std::uint64_t)x * 4 + y, row(x) * 2 + col(y), Scalar::one());
    Tensor w({a});
    w.add({1}, Scalar(1)); // E12
    Tensor u({a});
    u.add({2}, Scalar(1)); // E21
    // E21 * E12 = E22 ; E12 * E21 = E11
    Tensor lm = attach(w, u, {{0, Fold::LMul, 0, &m}});
    CHECK(lm.at({3}).is_one());
    Tensor rm = attach(w, u, {{0, Fold::RMul, 0, &m}});
    CHECK(rm.at({0}).is_one());
    // zero product prunes
    Tensor z({a});
    z.add({1}, Scalar(1));
    CHECK(attach(w, z, {{0, Fold::LMul, 0, &m}}).is_zero());
}

TEST_CASE("merge_mul and merge_act combine legs in place") {
    Space h = make_space(6, "h");
    LinearMap m = zn_mult(h);
    Tensor w({h, h, h});
    w.add({1, 2, 3}, Scalar(1));
    Tensor t = merge_mul(w, 0, 2, m); // leg0 * leg2 at position 0
    REQUIRE(t.leg_count() == 2);
    CHECK(t.at({4, 2}).is_one());

    // action: treat m as an action of h on itself
    Tensor s = merge_act(w, 0, 2, m); // leg0 acts on leg2, result at slot of leg2
    REQUIRE(s.leg_count() == 2);
    CHECK(s.at({2, 4}).is_one());
}

TEST_CASE("attach support filter matches unfiltered evaluation") {
    // projective op: only a == b survives; filtered and lazy paths must agree
    Space h = make_space(8, "h");
    LinearMap proj({h, h}, {h});
    for (int x = 0; x < 8; ++x) proj.add_entry((std::uint64_t)x * 8 + x, x, Scalar(3));
    LinearMap lazy_proj({h, h}, {h}, [](std::uint64_t i) {
        SparseVec v;
        if (i / 8 == i % 8) v[i / 8] = Scalar(3);
        return v;
    });
    std::mt19937_64 rng(8);
    Tensor w = random_tensor(rng, {h, h}, 10);
    Tensor u = random_tensor(rng, {h}, 6);
    Tensor f1 = attach(w, u, {{0, Fold::LMul, 1, &proj}});
    Tensor f2 = attach(w, u, {{0, Fold::LMul, 1, &lazy_proj}});
    CHECK(f1 == f2);
}
