#include <catch2/catch_amalgamated.hpp>

#include <set>

#include <bchf/types.hpp>
#include <bchf/weyl.hpp>

using namespace bchf;

TEST_CASE("group orders") {
    CHECK(weyl_group(1).size() == 2);
    CHECK(weyl_group(2).size() == 8);
    CHECK(weyl_group(3).size() == 48);
    CHECK(weyl_order(0) == 1);
    CHECK(weyl_order(2) == 8);
    CHECK(weyl_order(3) == 48);
}

TEST_CASE("orbit of a generic vector is free") {
    for (int r = 1; r <= 3; ++r) {
        const rvec v = {1.0, 2.25, 3.5};
        std::set<rvec> orbit;
        for (const auto& w : weyl_group(r)) {
            rvec img(r);
            for (int j = 0; j < r; ++j) img[j] = double(w.sign[j]) * v[w.perm[j]];
            orbit.insert(img);
        }
        CHECK(int(orbit.size()) == weyl_order(r));
    }
}

TEST_CASE("signed permutations preserve the coordinate multiset up to sign") {
    const rvec v = {0.3, 1.7, 2.9};
    for (const auto& w : weyl_group(3)) {
        std::multiset<double> in, out;
        for (int j = 0; j < 3; ++j) {
            in.insert(std::abs(v[j]));
            out.insert(std::abs(double(w.sign[j]) * v[w.perm[j]]));
        }
        CHECK(in == out);
    }
}

TEST_CASE("sign flips above a facet") {
    for (int r = 1; r <= 3; ++r) {
        for (int i = 0; i <= r; ++i) {
            const auto flips = sign_flips_above(r, i);
            CHECK(int(flips.size()) == (1 << (r - i)));
            for (const auto& w : flips) {
                for (int j = 0; j < r; ++j) {
                    CHECK(w.perm[j] == j);
                    if (j < i) CHECK(w.sign[j] == 1);
                }
            }
        }
    }
}

TEST_CASE("plain permutations") {
    const auto perms = permutations_only(3);
    CHECK(perms.size() == 6);
    std::set<std::array<int, max_rank>> seen;
    for (const auto& w : perms) {
        for (int j = 0; j < 3; ++j) CHECK(w.sign[j] == 1);
        std::array<int, max_rank> p{};
        for (int j = 0; j < 3; ++j) p[j] = w.perm[j];
        seen.insert(p);
    }
    CHECK(seen.size() == 6);
}

TEST_CASE("positive root inventory") {
    const multiplicity k{1.5, 0.7, -0.4};
    CHECK(positive_roots(1, k).size() == 2);
    CHECK(positive_roots(2, k).size() == 6);
    CHECK(positive_roots(3, k).size() == 12);
    // Class counts for r = 3: 3 short, 3 long, 6 medium.
    int ns = 0, nl = 0, nm = 0;
    for (const auto& root : positive_roots(3, k)) {
        if (root.k == k.ks) ++ns;
        if (root.k == k.kl) ++nl;
        if (root.k == k.km) ++nm;
    }
    CHECK(ns == 3);
    CHECK(nl == 3);
    CHECK(nm == 6);
}

TEST_CASE("rho in lambda coordinates") {
    const multiplicity k{3.0, 0.5, -3.0};
    const rvec rho = k.rho(2);
    CHECK(rho[0] == -3.0);
    CHECK(rho[1] == -2.0);
    const multiplicity k1{3.0, 0.0, -2.0};
    CHECK(k1.rho(1)[0] == -1.0);
}

TEST_CASE("dual multiplicity") {
    const multiplicity k{3.0, 0.5, -3.0};
    const multiplicity kt = k.dual();
    CHECK(kt.ks == -4.0);
    CHECK(kt.km == 0.5);
    CHECK(kt.kl == 4.0);
    // The dual of the dual is the original.
    const multiplicity kb = kt.dual();
    CHECK(kb.ks == k.ks);
    CHECK(kb.kl == k.kl);
}

TEST_CASE("validity region") {
    CHECK(multiplicity{3.0, 0.5, -3.0}.in_valid_regime());
    CHECK(multiplicity{5.0, 0.0, -4.0}.in_valid_regime());
    CHECK_FALSE(multiplicity{3.0, -0.1, -3.0}.in_valid_regime());  // km < 0
    CHECK_FALSE(multiplicity{0.0, 0.5, -1.0}.in_valid_regime());   // alpha <= -1
}
