#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "doctest.h"
#include "stasheff/arith.hpp"
#include "stasheff/gauge.hpp"

using namespace stasheff;

namespace {

int v(std::int64_t k, std::int64_t p) {
    const auto val = p_adic_valuation(k, p);
    return val.is_infinite() ? 1000 : static_cast<int>(val.value());
}

}  // namespace

TEST_CASE("p-adic valuation") {
    CHECK(p_adic_valuation(12, 2) == Valuation::finite(2));
    CHECK(p_adic_valuation(0, 3).is_infinite());
    CHECK(p_adic_valuation(-45, 3) == Valuation::finite(2));
    CHECK(p_adic_valuation(1, 7) == Valuation::finite(0));
    CHECK(p_adic_valuation(std::numeric_limits<std::int64_t>::min(), 2) == Valuation::finite(63));
    CHECK_THROWS_AS(p_adic_valuation(12, 4), std::invalid_argument);
    CHECK_THROWS_AS(p_adic_valuation(12, 1), std::invalid_argument);
    CHECK_THROWS_AS(Valuation::infinity().value(), std::logic_error);
    CHECK(Valuation::infinity().capped(4) == 4);
    CHECK(Valuation::finite(9).capped(4) == 4);
    CHECK(Valuation::finite(3) < Valuation::infinity());
    CHECK_FALSE(Valuation::infinity() < Valuation::finite(3));
    CHECK(Valuation::infinity().to_string() == "inf");
}

TEST_CASE("caps") {
    CHECK(su2_cap(2, 1) == 2);
    CHECK(su2_cap(3, 1) == 1);
    CHECK(su2_cap(7, 2) == 0);
    CHECK(su2_cap(5, 3) == 1);
    CHECK_THROWS_AS(su2_cap(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(su2_cap(9, 2), std::invalid_argument);
}

TEST_CASE("invariants") {
    CHECK(su2_invariant(24, 1).to_string() == "{2:2, 3:1}");
    CHECK(su2_invariant(0, 1).to_string() == "{2:2, 3:1}");
    CHECK(su2_invariant(5, 1).to_string() == "{2:0, 3:0}");
    CHECK(su2_invariant(12, 3).to_string() == "{2:2, 3:1, 5:0, 7:0}");
    CHECK(su2_invariant(20, 3).to_string() == "{2:2, 3:0, 5:1, 7:0}");
    // primes with positive cap are exactly those <= 2n + 1
    for (int n = 1; n <= 8; ++n) {
        const auto inv = su2_invariant(1, n);
        std::vector<int> primes;
        for (const auto& e : inv.entries) {
            CHECK(e.cap > 0);
            primes.push_back(e.prime);
        }
        CHECK(primes == primes_up_to(2 * n + 1));
    }
}

TEST_CASE("verdicts from the examples") {
    CHECK(su2_an_equivalent(5, 7, 1) == Verdict::Equivalent);
    CHECK(su2_an_equivalent(2, 4, 1) == Verdict::NotEquivalent);
    CHECK(su2_an_equivalent(4, 8, 1) == Verdict::Equivalent);
    CHECK(su2_invariant(12, 3) != su2_invariant(20, 3));
    CHECK(v(12, 2) == 2);
    CHECK(v(20, 2) == 2);
    CHECK(su2_an_equivalent(12, 20, 3) == Verdict::Inconclusive);
    CHECK(su2_an_equivalent(0, 0, 2) == Verdict::Equivalent);
    CHECK(su2_an_equivalent(0, 3, 1) == Verdict::NotEquivalent);
    CHECK(std::string(to_string(Verdict::Inconclusive)) == "Inconclusive");
}

TEST_CASE("verdict logic on a random grid") {
    std::mt19937_64 rng(42);
    std::uniform_int_distribution<std::int64_t> dist(-100000, 100000);
    std::vector<std::int64_t> ks(200);
    for (auto& k : ks) k = dist(rng);
    ks[0] = 0;
    ks[1] = 4096;
    for (int n = 1; n <= 3; ++n)
        for (auto k : ks) {
            CHECK(su2_an_equivalent(k, k, n) == Verdict::Equivalent);
            for (auto k2 : ks) {
                const auto a = su2_an_equivalent(k, k2, n);
                CHECK(a == su2_an_equivalent(k2, k, n));
                const bool same = su2_invariant(k, n) == su2_invariant(k2, n);
                CHECK(same == (a == Verdict::Equivalent));
                if (a == Verdict::NotEquivalent) CHECK(std::min(v(k, 2), v(k2, 2)) <= 1);
                if (a == Verdict::Inconclusive) CHECK(std::min(v(k, 2), v(k2, 2)) >= 2);
            }
        }
}

TEST_CASE("gcd criterion") {
    CHECK(gcd_equivalent(12, 5, 7));
    CHECK_FALSE(gcd_equivalent(12, 2, 4));
    CHECK(gcd_equivalent(12, 0, 24));
    CHECK(gcd_equivalent(12, -6, 6));
    CHECK_THROWS_AS(gcd_equivalent(0, 1, 1), std::invalid_argument);
    std::set<std::int64_t> values;
    for (std::int64_t k = -1000; k <= 1000; ++k) values.insert(std::gcd(std::int64_t(12), k));
    CHECK(values == std::set<std::int64_t>{1, 2, 3, 4, 6, 12});
}

TEST_CASE("gcd agreement matches odd-prime invariant agreement") {
    for (int n = 1; n <= 3; ++n) {
        const auto order = an_triviality_order(n);
        const BigInt N = order.odd_part * (BigInt(1) << (2 * n));
        for (std::int64_t k = -300; k <= 300; k += 1)
            for (std::int64_t k2 = -300; k2 <= 300; k2 += 7) {
                const auto a = su2_invariant(k, n), b = su2_invariant(k2, n);
                if (gcd_equivalent(N, k, k2)) {
                    for (std::size_t i = 0; i < a.entries.size(); ++i)
                        if (a.entries[i].prime != 2) CHECK(a.entries[i] == b.entries[i]);
                }
                // at each odd p, agreement modulo p^{c_p} is capped-valuation
                // agreement
                for (std::size_t i = 0; i < a.entries.size(); ++i) {
                    const auto& e = a.entries[i];
                    if (e.prime == 2) continue;
                    const BigInt m = boost::multiprecision::pow(BigInt(e.prime), static_cast<unsigned>(e.cap));
                    CHECK(gcd_equivalent(m, k, k2) == (e.value == b.entries[i].value));
                }
            }
    }
}

TEST_CASE("triviality order") {
    const auto t1 = an_triviality_order(1);
    CHECK(t1.odd_part == 3);
    CHECK(t1.v2_lower == 1);
    CHECK(t1.v2_upper == 2);
    CHECK(t1.odd_part * 4 == 12);

    const auto t2 = an_triviality_order(2);
    CHECK(t2.odd_part == 45);
    CHECK(t2.v2_lower == 2);
    CHECK(t2.v2_upper == 4);
    CHECK(t2.odd_part * 4 == 180);

    CHECK(an_triviality_order(3).odd_part == 945);

    // n = 30 exceeds 64 bits
    const auto big = an_triviality_order(30);
    CHECK(big.odd_part > BigInt(std::numeric_limits<std::uint64_t>::max()));
    CHECK(big.odd_part % 59 == 0);
    CHECK(big.odd_part % 61 == 0);
    CHECK(big.odd_part % 67 != 0);
    CHECK_THROWS_AS(an_triviality_order(0), std::invalid_argument);
}

TEST_CASE("ad-triviality at odd primes") {
    CHECK(is_ad_p_trivial(0, 5, 3));
    CHECK(is_ad_p_trivial(3, 3, 1));
    CHECK_FALSE(is_ad_p_trivial(3, 3, 2));
    CHECK_THROWS_AS(is_ad_p_trivial(4, 2, 1), std::invalid_argument);
    CHECK_THROWS_AS(is_ad_p_trivial(4, 9, 1), std::invalid_argument);
    for (int n = 1; n <= 4; ++n) {
        const auto a = an_triviality_order(n).odd_part.convert_to<std::int64_t>();
        for (int p : primes_up_to(2 * n + 1)) {
            if (p == 2) continue;
            CHECK(is_ad_p_trivial(a, p, n));
            CHECK_FALSE(is_ad_p_trivial(a / p, p, n));
        }
    }
}

TEST_CASE("invariant is periodic modulo 2^{2n} times the odd part") {
    for (int n = 1; n <= 2; ++n) {
        const auto period = (an_triviality_order(n).odd_part << (2 * n)).convert_to<std::int64_t>();
        for (std::int64_t k = -period; k <= period; ++k) CHECK(su2_invariant(k, n) == su2_invariant(k + period, n));
    }
}

TEST_CASE("class counts") {
    CHECK(count_su2_classes(1) == 6);
    CHECK(count_su2_classes(2) == 30);
    CHECK(count_su2_classes(3) == 7 * 4 * 2 * 2);

    for (int n = 1; n <= 2; ++n) {
        const auto period = (an_triviality_order(n).odd_part << (2 * n)).convert_to<std::int64_t>();
        std::set<SU2Invariant> seen;
        for (std::int64_t k = -period; k <= period; ++k) seen.insert(su2_invariant(k, n));
        CHECK(BigInt(seen.size()) == count_su2_classes(n));
    }

    std::set<SU2Invariant> seen;
    for (std::int64_t k = -1000; k <= 1000; ++k) seen.insert(su2_invariant(k, 1));
    CHECK(seen.size() == 6);
}

TEST_CASE("witnesses attain their invariant") {
    for (int n = 1; n <= 3; ++n)
        for (const auto& row : census(n, 2000)) {
            const auto w = invariant_witness(row.invariant).convert_to<std::int64_t>();
            CHECK(su2_invariant(w, n) == row.invariant);
            CHECK(su2_invariant(row.representative, n) == row.invariant);
        }
}

TEST_CASE("census") {
    const auto rows = census(1, 1000);
    CHECK(rows.size() == 6);
    std::size_t total = 0;
    for (const auto& r : rows) total += r.count;
    CHECK(total == 2001);
    CHECK(rows.back().invariant.to_string() == "{2:2, 3:1}");
    CHECK(rows.back().representative == 0);
    CHECK(rows.front().representative == 1);
    for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i - 1].invariant < rows[i].invariant);

    const auto s = census(3, 3000, Exec::Serial);
    const auto p = census(3, 3000, Exec::Parallel);
    REQUIRE(s.size() == p.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(s[i].invariant == p[i].invariant);
        CHECK(s[i].count == p[i].count);
        CHECK(s[i].representative == p[i].representative);
    }
    CHECK(census(2, 0).size() == 1);
    CHECK_THROWS_AS(census(1, -1), std::invalid_argument);

    std::map<std::string, std::size_t> oracle;
    for (std::int64_t k = -1000; k <= 1000; ++k) ++oracle[su2_invariant(k, 1).to_string()];
    for (const auto& r : rows) CHECK(oracle[r.invariant.to_string()] == r.count);
}
