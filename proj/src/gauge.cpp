#include "stasheff/gauge.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "stasheff/arith.hpp"

namespace stasheff {

namespace {

void check_level(int n) {
    if (n < 1) throw std::invalid_argument("A_n level must be >= 1");
}

std::uint64_t magnitude(std::int64_t k) {
    return k < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(k) : static_cast<std::uint64_t>(k);
}

}  // namespace

unsigned Valuation::value() const {
    if (!value_) throw std::logic_error("valuation is infinite");
    return *value_;
}

Valuation p_adic_valuation(std::int64_t k, std::int64_t p) {
    if (!is_prime(p)) throw std::invalid_argument("p_adic_valuation: " + std::to_string(p) + " is not prime");
    std::uint64_t m = magnitude(k);
    if (m == 0) return Valuation::infinity();
    const auto q = static_cast<std::uint64_t>(p);
    unsigned v = 0;
    while (m % q == 0) {
        m /= q;
        ++v;
    }
    return Valuation::finite(v);
}

int su2_cap(int p, int n) {
    check_level(n);
    if (!is_prime(p)) throw std::invalid_argument("su2_cap: " + std::to_string(p) + " is not prime");
    return p == 2 ? 2 * n : 2 * n / (p - 1);
}

std::string SU2Invariant::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) out += ", ";
        out += std::to_string(entries[i].prime) + ":" + std::to_string(entries[i].value);
    }
    return out + "}";
}

SU2Invariant su2_invariant(std::int64_t k, int n) {
    check_level(n);
    SU2Invariant inv;
    inv.n = n;
    for (int p : primes_up_to(2 * n + 1)) {
        const int cap = su2_cap(p, n);
        if (cap == 0) continue;
        const auto v = p_adic_valuation(k, p);
        inv.entries.push_back({p, cap, static_cast<int>(v.capped(static_cast<unsigned>(cap)))});
    }
    return inv;
}

const char* to_string(Verdict v) {
    switch (v) {
        case Verdict::Equivalent: return "Equivalent";
        case Verdict::NotEquivalent: return "NotEquivalent";
        case Verdict::Inconclusive: return "Inconclusive";
    }
    return "?";
}

Verdict su2_an_equivalent(std::int64_t k, std::int64_t k2, int n) {
    if (su2_invariant(k, n) == su2_invariant(k2, n)) return Verdict::Equivalent;
    // The converse clause needs v_2 <= 1 on one side; equivalence is
    // symmetric, so either side qualifies.
    const auto v = std::min(p_adic_valuation(k, 2), p_adic_valuation(k2, 2));
    if (!v.is_infinite() && v.value() <= 1) return Verdict::NotEquivalent;
    return Verdict::Inconclusive;
}

bool gcd_equivalent(const BigInt& N, std::int64_t k, std::int64_t k2) {
    if (N < 1) throw std::invalid_argument("gcd_equivalent needs N >= 1");
    const BigInt a = gcd(N, BigInt(magnitude(k)));
    const BigInt b = gcd(N, BigInt(magnitude(k2)));
    return a == b;
}

TrivialityOrder an_triviality_order(int n) {
    check_level(n);
    TrivialityOrder t;
    t.n = n;
    t.odd_part = 1;
    for (int p : primes_up_to(2 * n + 1)) {
        if (p == 2) continue;
        t.odd_part *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(su2_cap(p, n)));
    }
    t.v2_lower = n;
    t.v2_upper = 2 * n;
    return t;
}

bool is_ad_p_trivial(std::int64_t k, int p, int n) {
    check_level(n);
    if (p == 2) throw std::invalid_argument("is_ad_p_trivial: only bounds are known at p = 2");
    if (!is_prime(p)) throw std::invalid_argument("is_ad_p_trivial: " + std::to_string(p) + " is not prime");
    const auto v = p_adic_valuation(k, p);
    return v.is_infinite() || static_cast<int>(v.value()) >= su2_cap(p, n);
}

BigInt count_su2_classes(int n) {
    check_level(n);
    BigInt count = 1;
    for (int p : primes_up_to(2 * n + 1)) count *= su2_cap(p, n) + 1;
    return count;
}

BigInt invariant_witness(const SU2Invariant& inv) {
    BigInt k = 1;
    for (const auto& e : inv.entries) k *= boost::multiprecision::pow(BigInt(e.prime), static_cast<unsigned>(e.value));
    return k;
}

std::vector<CensusRow> census(int n, std::int64_t kmax, Exec exec) {
    check_level(n);
    if (kmax < 0) throw std::invalid_argument("census needs kmax >= 0");
    const auto span = static_cast<std::size_t>(2 * kmax + 1);
    auto invariants = map_indexed<SU2Invariant>(
        span, [&](std::size_t i) { return su2_invariant(static_cast<std::int64_t>(i) - kmax, n); }, exec);

    std::map<SU2Invariant, CensusRow> rows;
    for (std::size_t i = 0; i < span; ++i) {
        const std::int64_t k = static_cast<std::int64_t>(i) - kmax;
        auto [it, inserted] = rows.try_emplace(invariants[i], CensusRow{invariants[i], 0, k});
        auto& row = it->second;
        ++row.count;
        const auto better = magnitude(k) < magnitude(row.representative) ||
                            (magnitude(k) == magnitude(row.representative) && k > row.representative);
        if (better) row.representative = k;
    }
    std::vector<CensusRow> out;
    out.reserve(rows.size());
    for (auto& [inv, row] : rows) out.push_back(std::move(row));
    return out;
}

}  // namespace stasheff
