#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gs/rootsys.hpp"

using namespace gs;

namespace {
Weight W4(long long a, long long b, long long c, long long d, long long den = 1) {
    return {Rat(a, den), Rat(b, den), Rat(c, den), Rat(d, den)};
}
} // namespace

TEST_CASE("positive root counts") {
    CHECK(RootSystem::build("A", 3).num_positive() == 6);
    CHECK(RootSystem::build("D", 4).num_positive() == 12);
    CHECK(RootSystem::build("B", 4).num_positive() == 16);
    CHECK(RootSystem::build("C", 3).num_positive() == 9);
    CHECK(RootSystem::build("G", 2).num_positive() == 6);
    CHECK(RootSystem::build("F", 4).num_positive() == 24);
    CHECK(RootSystem::build("E", 6).num_positive() == 36);
    CHECK(RootSystem::build("E", 7).num_positive() == 63);
    CHECK(RootSystem::build("E", 8).num_positive() == 120);
}

TEST_CASE("invalid type/rank rejected") {
    CHECK_THROWS_AS(RootSystem::build("E", 9), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("F", 5), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("G", 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("D", 3), std::invalid_argument);
    CHECK_THROWS_AS(RootSystem::build("Q", 2), std::invalid_argument);
}

TEST_CASE("roots closed under negation; simples pair correctly with fundamental weights") {
    for (auto tr : {TypeRank{CartanType::A, 4}, TypeRank{CartanType::B, 3},
                    TypeRank{CartanType::D, 5}, TypeRank{CartanType::G, 2},
                    TypeRank{CartanType::F, 4}, TypeRank{CartanType::E, 6}}) {
        auto rs = RootSystem::build(tr.type, tr.rank);
        for (const auto& r : rs.roots()) CHECK(rs.is_root(-r));
        for (int i = 0; i < rs.rank(); ++i)
            for (int j = 0; j < rs.rank(); ++j) {
                Rat p = pair_coroot(rs.fundamental_weights()[i], rs.simple_roots()[j]);
                CHECK(p == Rat(i == j ? 1 : 0));
            }
    }
}

TEST_CASE("canonical lambda") {
    auto d4 = RootSystem::build("D", 4);
    CHECK(canonical_lambda(d4) == W4(3, 2, 1, 0, 2));  // rho/2 = (3/2,1,1/2,0)

    auto a1 = RootSystem::build("A", 1);
    Weight expect{Rat(1, 4), Rat(-1, 4)};
    CHECK(canonical_lambda(a1) == expect);

    auto b2 = RootSystem::build("B", 2);
    Weight eb2{Rat(1), Rat(1, 2)};  // rho(C_2)/2
    CHECK(canonical_lambda(b2) == eb2);
}

TEST_CASE("integral subsystems of the canonical infinitesimal character") {
    auto d4 = RootSystem::build("D", 4);
    auto sub = integral_subsystem(d4, canonical_lambda(d4));
    CHECK(type_decomposition_str(sub.type_id) == "A1xA1xA1xA1");
    // Simple integral roots are {e1 +- e3, e2 +- e4}.
    CHECK(sub.simple.size() == 4);
    for (const auto& a : sub.simple) {
        bool ok = a == W4(1, 0, -1, 0) || a == W4(1, 0, 1, 0) ||
                  a == W4(0, 1, 0, -1) || a == W4(0, 1, 0, 1);
        CHECK(ok);
    }

    auto e8 = RootSystem::build("E", 8);
    auto sub8 = integral_subsystem(e8, canonical_lambda(e8));
    CHECK(type_decomposition_str(sub8.type_id) == "D8");

    auto a3 = RootSystem::build("A", 3);
    auto sub3 = integral_subsystem(a3, canonical_lambda(a3));
    CHECK(type_decomposition_str(sub3.type_id) == "A1xA1");

    auto e6 = RootSystem::build("E", 6);
    CHECK(type_decomposition_str(integral_subsystem(e6, canonical_lambda(e6)).type_id) ==
          "A1xA5");
    auto e7 = RootSystem::build("E", 7);
    CHECK(type_decomposition_str(integral_subsystem(e7, canonical_lambda(e7)).type_id) == "A7");
    auto f4 = RootSystem::build("F", 4);
    CHECK(type_decomposition_str(integral_subsystem(f4, canonical_lambda(f4)).type_id) == "B4");
    auto g2 = RootSystem::build("G", 2);
    CHECK(type_decomposition_str(integral_subsystem(g2, canonical_lambda(g2)).type_id) ==
          "A1xA1");
}

TEST_CASE("at rho every root is integral") {
    for (auto tr : {TypeRank{CartanType::A, 3}, TypeRank{CartanType::B, 3},
                    TypeRank{CartanType::D, 4}, TypeRank{CartanType::G, 2}}) {
        auto rs = RootSystem::build(tr.type, tr.rank);
        auto sub = integral_subsystem(rs, rs.rho());
        CHECK(sub.roots.size() == rs.roots().size());
    }
}

TEST_CASE("gk dimension") {
    auto check = [](const char* t, int n, long long expect) {
        auto rs = RootSystem::build(t, n);
        CHECK(gk_dimension(rs, canonical_lambda(rs)) == expect);
    };
    check("E", 8, 128);
    check("E", 7, 70);
    check("E", 6, 40);
    check("G", 2, 8);
    check("F", 4, 16);
    check("A", 3, 8);    // n^2/2 with n = 4
    check("D", 4, 16);   // n^2 with n = 4
    check("B", 4, 16);   // n^2 with n = 4
    check("C", 3, 6);    // 2n
}

TEST_CASE("lattice quotients: fundamental groups P/R") {
    auto check_PR = [](const char* t, int n, std::vector<long long> expect) {
        auto rs = RootSystem::build(t, n);
        auto q = quotient(rs, rs.lattice_P(), rs.lattice_R());
        CHECK(q.invariant_factors() == expect);
    };
    check_PR("A", 3, {4});
    check_PR("A", 4, {5});
    check_PR("D", 4, {2, 2});
    check_PR("D", 6, {2, 2});
    check_PR("D", 5, {4});
    check_PR("E", 6, {3});
    check_PR("E", 7, {2});
    check_PR("E", 8, {});
}

TEST_CASE("lattice quotients: P/(2P+R)") {
    auto order_of = [](const char* t, int n) {
        auto rs = RootSystem::build(t, n);
        return quotient(rs, rs.lattice_P(), rs.lattice_2P_plus_R()).order();
    };
    CHECK(order_of("A", 3) == 2);
    CHECK(order_of("A", 2) == 1);
    CHECK(order_of("A", 5) == 2);
    CHECK(order_of("D", 4) == 4);
    CHECK(order_of("D", 5) == 2);
    CHECK(order_of("E", 6) == 1);
    CHECK(order_of("E", 7) == 2);
    CHECK(order_of("E", 8) == 1);

    auto a3 = RootSystem::build("A", 3);
    auto q = quotient(a3, a3.lattice_P(), a3.lattice_2P_plus_R());
    CHECK(q.invariant_factors() == std::vector<long long>{2});
    // coset(0) = identity
    Weight zero(a3.ambient_dim());
    for (long long x : q.coset(zero)) CHECK(x == 0);
}

TEST_CASE("type identification stable under reordering") {
    auto d5 = RootSystem::build("D", 5);
    auto sub = integral_subsystem(d5, canonical_lambda(d5));
    auto base = sub.simple;
    std::sort(base.begin(), base.end(), [](const Weight& a, const Weight& b) {
        return weight_str(a) < weight_str(b);
    });
    do {
        CHECK(type_decomposition_str(identify_type(base)) ==
              type_decomposition_str(sub.type_id));
    } while (std::next_permutation(base.begin(), base.end(),
                                   [](const Weight& a, const Weight& b) {
                                       return weight_str(a) < weight_str(b);
                                   }));
}

TEST_CASE("serialization anchors: weight strings") {
    auto d4 = RootSystem::build("D", 4);
    CHECK(weight_str(canonical_lambda(d4)) == "(3/2, 1, 1/2, 0)");
}
