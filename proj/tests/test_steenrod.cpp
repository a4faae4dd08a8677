#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "stasheff/steenrod.hpp"

using namespace stasheff;

namespace {

// Pascal's triangle mod p; independent of the Lucas evaluation.
int pascal_mod(int n, int k, int p) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::vector<int> row{1};
    for (int i = 1; i <= n; ++i) {
        std::vector<int> next(static_cast<std::size_t>(i) + 1, 1);
        for (int j = 1; j < i; ++j)
            next[static_cast<std::size_t>(j)] =
                (row[static_cast<std::size_t>(j - 1)] + row[static_cast<std::size_t>(j)]) % p;
        row = std::move(next);
    }
    return row[static_cast<std::size_t>(k)];
}

SteenrodElement word(int p, std::vector<int> w) { return SteenrodElement::from_word(PowerWord{p, std::move(w)}); }

// F_p[x] with |x| = 2: the unstable rules force the whole action.
struct CP {
    int p;
    GradedAlgebra alg;
    explicit CP(int prime) : p(prime), alg(prime, {{"x", 2}}) {}
};

// F_p[z] with |z| = 4, P^1 z = 2 z^{(p+1)/2}, the image of (x + x^p)^2.
struct HP {
    int p;
    GradedAlgebra alg;
    ActionTable table;
    explicit HP(int prime) : p(prime), alg(prime, {{"z", 4}}) {
        table[{0, 1}] = alg.monomial({(p + 1) / 2}, 2);
    }
};

std::vector<int> random_word(std::mt19937_64& rng, int max_len, int max_exp) {
    std::uniform_int_distribution<int> len(1, max_len), ex(1, max_exp);
    std::vector<int> w(static_cast<std::size_t>(len(rng)));
    for (auto& a : w) a = ex(rng);
    return w;
}

}  // namespace

TEST_CASE("admissibility") {
    CHECK(is_admissible(PowerWord{3, {3, 1}}));
    CHECK_FALSE(is_admissible(PowerWord{3, {1, 1}}));
    CHECK_FALSE(is_admissible(PowerWord{5, {2, 1}}));
    CHECK(is_admissible(PowerWord{5, {}}));
    CHECK(is_admissible(PowerWord{7, {4}}));
    CHECK(PowerWord{3, {3, 1}}.degree() == 16);
}

TEST_CASE("word parsing") {
    CHECK(parse_word("P^1.P^1", 3).exponents == std::vector<int>{1, 1});
    CHECK(parse_word(" P^3 . P^0 . P^1 ", 3).exponents == std::vector<int>{3, 1});
    CHECK(parse_word("1", 3).exponents.empty());
    CHECK_THROWS_AS(parse_word("Q^1", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("P^a", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("P^-1", 3), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("P^1", 4), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("P^1", 2), std::invalid_argument);

    const auto e = SteenrodElement::parse("2*P^2 + P^3.P^1", 3);
    CHECK(e.terms().size() == 2);
    CHECK(e.terms().at({2}) == 2);
    CHECK(SteenrodElement::parse("P^1 + 2*P^1", 3).is_zero());
    CHECK_THROWS_AS(SteenrodElement::parse("P^1 - P^1", 3), std::invalid_argument);
    CHECK_THROWS_AS(SteenrodElement::parse("P^1 + ", 3), std::invalid_argument);
}

TEST_CASE("binomials mod p by Lucas") {
    for (int p : {3, 5, 7})
        for (int n = 0; n <= 60; ++n)
            for (int k = -1; k <= n + 1; ++k) CHECK(binomial_mod(n, k, p) == pascal_mod(n, k, p));
    CHECK(binomial_mod(-1, 0, 3) == 0);
}

TEST_CASE("P^1 P^1 = 2 P^2") {
    for (int p : {3, 5, 7, 11, 13}) {
        const auto r = adem_reduce(word(p, {1, 1}));
        CHECK(r == SteenrodElement::from_word(PowerWord{p, {2}}, 2));
        CHECK(r.to_string() == "2*P^2");
        // P^2 = 2^{-1} P^1 P^1; the two constants coincide only at p = 3.
        const int c = p2_over_p1p1(p);
        CHECK((2 * c) % p == 1);
        CHECK((c == 2) == (p == 3));
    }
}

TEST_CASE("Adem relation coefficients") {
    for (int p : {3, 5, 7})
        for (int b = 1; b <= 4; ++b)
            for (int a = 1; a < p * b; ++a) {
                const auto rel = adem_relation(p, a, b);
                SteenrodElement oracle(p);
                for (int t = 0; p * t <= a; ++t) {
                    const int c = pascal_mod((p - 1) * (b - t) - 1, a - p * t, p);
                    const int sign = (a + t) % 2 == 0 ? 1 : -1;
                    std::vector<int> w{a + b - t};
                    if (t) w.push_back(t);
                    oracle.add(w, sign * c);
                }
                CHECK(rel == oracle);
                CHECK(rel.is_admissible());
                if (!rel.is_zero()) CHECK(rel.degree() == 2 * (a + b) * (p - 1));
            }
    CHECK_THROWS_AS(adem_relation(3, 3, 1), std::invalid_argument);
    CHECK_THROWS_AS(adem_relation(3, 0, 1), std::invalid_argument);
}

TEST_CASE("reduction basics") {
    CHECK(adem_reduce(word(3, {3, 1})) == word(3, {3, 1}));
    CHECK(adem_reduce(word(3, {})) == word(3, {}));
    // P^1 P^2 = 0 at p = 3: C(3,1) = 3 = 0, and t = 0 is the only term.
    CHECK(adem_reduce(word(3, {1, 2})).is_zero());
    // P^2 P^1 = 0 at p = 3: the only term has C(1, 2) = 0.
    CHECK(adem_reduce(word(3, {2, 1})).is_zero());
}

TEST_CASE("reduction is admissible, idempotent and degree-preserving") {
    std::mt19937_64 rng(7);
    for (int p : {3, 5, 7}) {
        for (int i = 0; i < 300; ++i) {
            const auto w = random_word(rng, 4, 9);
            const auto e = word(p, w);
            RewriteStats stats;
            const auto r = adem_reduce(e, RewriteStrategy::Leftmost, &stats);
            CHECK(r.is_admissible());
            CHECK(adem_reduce(r) == r);
            CHECK(stats.degree_violations == 0);
            if (!r.is_zero()) CHECK(r.degree() == e.degree());
            CHECK(adem_reduce(e, RewriteStrategy::Rightmost) == r);
        }
    }
}

TEST_CASE("confluence probe") {
    for (int p : {3, 5, 7, 11}) {
        const auto rep = confluence_probe(p, 1000, 4, 9, 1234);
        CHECK(rep.ok());
        CHECK(rep.disagreements == 0);
        CHECK(rep.degree_violations == 0);
        CHECK(rep.fixed_point_failures == 0);
        CHECK(rep.admissible_inputs > 0);
        CHECK(rep.rewrite_steps > 0);
    }
    const auto a = confluence_probe(5, 200, 4, 9, 99, Exec::Serial);
    const auto b = confluence_probe(5, 200, 4, 9, 99, Exec::Parallel);
    CHECK(a.rewrite_steps == b.rewrite_steps);
    CHECK(a.admissible_inputs == b.admissible_inputs);
    CHECK_THROWS_AS(confluence_probe(4, 10, 4, 9, 1), std::invalid_argument);
    CHECK_THROWS_AS(confluence_probe(3, 10, 0, 9, 1), std::invalid_argument);
}

TEST_CASE("Cartan expansion") {
    const std::vector<GradedClass> xy{{"x", 2}, {"y", 4}};
    CHECK(cartan_expand(0, xy).size() == 1);
    CHECK(cartan_expand(0, xy)[0].powers == std::vector<int>{0, 0});
    const auto one = cartan_expand(1, xy);
    REQUIRE(one.size() == 2);
    CHECK(format_cartan(one, xy) == "P^1x·y + x·P^1y");
    for (int m = 1; m <= 5; ++m) {
        const std::vector<GradedClass> f(static_cast<std::size_t>(m), GradedClass{"z", 4});
        CHECK(cartan_expand(1, f).size() == static_cast<std::size_t>(m));
        // compositions of 3 into m parts: C(m+2, 3)
        CHECK(cartan_expand(3, f).size() == static_cast<std::size_t>((m + 2) * (m + 1) * m / 6));
    }
    CHECK(cartan_expand(2, std::vector<GradedClass>{}).empty());
    CHECK_THROWS_AS(cartan_expand(-1, xy), std::invalid_argument);
}

TEST_CASE("unstable action on z_4") {
    for (int p : {3, 5, 7}) {
        GradedAlgebra alg(p, {{"z4", 4}});
        const ActionTable none;
        const auto z = alg.generator("z4");
        CHECK(act(word(p, {2}), z, alg, none) == alg.generator("z4", p));
        CHECK(act_power(2, z, alg, none) == alg.generator("z4", p));
        CHECK(act(word(p, {3}), z, alg, none).is_zero());
        CHECK(act_power(0, z, alg, none) == z);
        CHECK_THROWS_AS(act(word(p, {1}), z, alg, none), std::out_of_range);
    }
}

TEST_CASE("P^k on F_p[x] is binomial") {
    for (int p : {3, 5, 7}) {
        CP cp(p);
        const ActionTable none;
        for (int m = 0; m <= 12; ++m)
            for (int k = 0; k <= 8; ++k) {
                const auto got = act_power(k, cp.alg.generator("x", m), cp.alg, none);
                const auto want = cp.alg.monomial({m + k * (p - 1)}, pascal_mod(m, k, p));
                CHECK(got == want);
            }
    }
}

TEST_CASE("acting by a word equals acting by its normal form") {
    std::mt19937_64 rng(11);
    for (int p : {3, 5}) {
        CP cp(p);
        HP hp(p);
        const ActionTable none;
        for (int i = 0; i < 60; ++i) {
            const auto w = random_word(rng, 3, 2 * p);
            const auto e = word(p, w);
            const auto r = adem_reduce(e);
            for (int m = 1; m <= 4; ++m) {
                const auto x = cp.alg.generator("x", m);
                CHECK(act(e, x, cp.alg, none) == act(r, x, cp.alg, none));
                const auto z = hp.alg.generator("z", m);
                CHECK(act(e, z, hp.alg, hp.table) == act(r, z, hp.alg, hp.table));
            }
        }
    }
}

TEST_CASE("P^1 P^1 z_4 with a table at p = 3") {
    GradedAlgebra alg(3, {{"z4", 4}, {"z6", 6}, {"z8", 8}});
    ActionTable table;
    table[{0, 1}] = alg.generator("z8");  // P^1 z_4 := z_8
    table[{2, 1}] = alg.scale(alg.generator("z4", 3), 2);
    const auto z4 = alg.generator("z4");
    const auto e = word(3, {1, 1});
    CHECK(act(e, z4, alg, table) == act_power(1, alg.generator("z8"), alg, table));
    CHECK(act(adem_reduce(e), z4, alg, table) == act(e, z4, alg, table));
    CHECK(act(e, z4, alg, table) == alg.scale(alg.generator("z4", 3), 2));

    // A table that contradicts the Adem relation is caught by the comparison.
    ActionTable wrong = table;
    wrong[{2, 1}] = alg.generator("z4", 3);
    CHECK(act(adem_reduce(e), z4, alg, wrong) != act(e, z4, alg, wrong));

    ActionTable bad_degree = table;
    bad_degree[{0, 1}] = alg.generator("z6");
    CHECK_THROWS_AS(act(word(3, {1}), z4, alg, bad_degree), std::invalid_argument);
}

TEST_CASE("truncation is applied last") {
    GradedAlgebra trunc(3, {{"x", 2}}, {{3}});
    const ActionTable none;
    const auto x = trunc.generator("x");
    // P^1 x = x^3 lies in the ideal.
    CHECK(act(word(3, {1}), x, trunc, none).is_zero());
    CHECK(act(word(3, {1, 1}), x, trunc, none).is_zero());
    CHECK(act(word(3, {}), x, trunc, none) == x);
    GradedAlgebra big(3, {{"x", 2}}, {{7}});
    // P^1 x^2 = 2 x^4 survives below x^7.
    CHECK(act(word(3, {1}), big.generator("x", 2), big, none) == big.monomial({4}, 2));
}

TEST_CASE("graded algebra arithmetic") {
    GradedAlgebra alg(5, {{"a", 2}, {"b", 4}});
    const auto a = alg.generator("a");
    const auto b = alg.generator("b");
    const auto s = alg.add(a, a);
    CHECK(alg.to_string(s) == "2*a");
    CHECK(alg.add(alg.scale(a, 3), alg.scale(a, 2)).is_zero());
    CHECK(alg.degree(alg.multiply(a, b)) == 6);
    CHECK(alg.degree(alg.add(a, b)) == -1);
    CHECK(alg.to_string(alg.zero()) == "0");
    CHECK(alg.to_string(alg.one()) == "1");
    CHECK_THROWS_AS(alg.index_of("c"), std::invalid_argument);
    CHECK_THROWS_AS(GradedAlgebra(3, {{"odd", 3}}), std::invalid_argument);
    CHECK_THROWS_AS(GradedAlgebra(3, {{"a", 2}}, {{1, 1}}), std::invalid_argument);
}
