#pragma once

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stasheff/parallel.hpp"

namespace stasheff {

using BigInt = boost::multiprecision::cpp_int;

/// p-adic valuation; infinite only for 0.
class Valuation {
public:
    static Valuation finite(unsigned v) { return Valuation(v); }
    static Valuation infinity() { return Valuation(); }

    bool is_infinite() const { return !value_; }
    /// Throws std::logic_error when infinite.
    unsigned value() const;
    /// min(cap, v), saturating for infinity.
    unsigned capped(unsigned cap) const { return value_ ? std::min(*value_, cap) : cap; }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

    friend bool operator==(const Valuation&, const Valuation&) = default;
    friend bool operator<(const Valuation& a, const Valuation& b) {
        if (!a.value_) return false;
        if (!b.value_) return true;
        return *a.value_ < *b.value_;
    }

private:
    Valuation() = default;
    explicit Valuation(unsigned v) : value_(v) {}
    std::optional<unsigned> value_;
};

/// Exponent of p in |k|. Throws std::invalid_argument if p is not prime.
Valuation p_adic_valuation(std::int64_t k, std::int64_t p);

/// 2n at p = 2, floor(2n / (p - 1)) at odd p. Requires n >= 1.
int su2_cap(int p, int n);

struct InvariantEntry {
    int prime = 2;
    int cap = 0;
    int value = 0;  // min(cap, v_p(k))

    friend bool operator==(const InvariantEntry&, const InvariantEntry&) = default;
    friend auto operator<=>(const InvariantEntry&, const InvariantEntry&) = default;
};

/// Capped valuations at p = 2 and at every odd p <= 2n + 1 (exactly the
/// primes with a positive cap), in increasing order of p.
struct SU2Invariant {
    int n = 1;
    std::vector<InvariantEntry> entries;

    std::string to_string() const;  // "{2:2, 3:1}"
    friend bool operator==(const SU2Invariant&, const SU2Invariant&) = default;
    friend auto operator<=>(const SU2Invariant&, const SU2Invariant&) = default;
};

SU2Invariant su2_invariant(std::int64_t k, int n);

enum class Verdict { Equivalent, NotEquivalent, Inconclusive };

const char* to_string(Verdict v);

/// Decision for the gauge groups of P_k and P_k' up to A_n-equivalence:
/// equal invariants are sufficient; unequal invariants decide
/// NotEquivalent only when min(v_2(k), v_2(k')) <= 1, and are Inconclusive
/// otherwise.
Verdict su2_an_equivalent(std::int64_t k, std::int64_t k2, int n);

/// gcd(N, |k|) == gcd(N, |k'|), with gcd(N, 0) = N. Requires N >= 1.
bool gcd_equivalent(const BigInt& N, std::int64_t k, std::int64_t k2);

struct TrivialityOrder {
    int n = 1;
    BigInt odd_part;  // product over odd p <= 2n+1 of p^floor(2n/(p-1))
    int v2_lower = 1;
    int v2_upper = 2;
};

/// The odd part of the least N with ad P_N A_n-trivial, and the known bounds
/// n <= v_2 <= 2n on its 2-exponent. The exact 2-exponent is not returned.
TrivialityOrder an_triviality_order(int n);

/// v_p(k) >= floor(2n/(p-1)). Throws std::invalid_argument for p = 2 or
/// non-prime p.
bool is_ad_p_trivial(std::int64_t k, int p, int n);

/// Number of distinct invariants over all k:
/// (2n + 1) * product over odd p <= 2n+1 of (floor(2n/(p-1)) + 1).
BigInt count_su2_classes(int n);

/// k = product of p^e_p realizing each entry value; attains the invariant.
BigInt invariant_witness(const SU2Invariant& inv);

struct CensusRow {
    SU2Invariant invariant;
    std::size_t count = 0;          // k in the scanned range with this invariant
    std::int64_t representative = 0;  // smallest |k|, ties to the positive one
};

/// Groups every k in [-kmax, kmax] by invariant (k = 0 included), sorted by
/// invariant.
std::vector<CensusRow> census(int n, std::int64_t kmax, Exec exec = Exec::Parallel);

}  // namespace stasheff
