#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "stasheff/parallel.hpp"

namespace stasheff {

// Reduced powers P^a at an odd prime p, without Bocksteins.

/// The composite P^{a_1} o ... o P^{a_m}; the empty word is P^0 = 1.
struct PowerWord {
    int prime = 3;
    std::vector<int> exponents;

    /// Throws std::invalid_argument unless p is an odd prime and every
    /// exponent is positive.
    void validate() const;
    int degree() const;
    std::string to_string() const;
};

/// a_i >= p * a_{i+1} for every adjacent pair.
bool is_admissible(const PowerWord& w);

/// Parses "P^a.P^b..." (P^0 factors are dropped; "1" is the empty word).
PowerWord parse_word(std::string_view text, int prime);

/// C(n, k) mod p by Lucas' theorem.
int binomial_mod(std::int64_t n, std::int64_t k, int p);

/// F_p-linear combination of power words, nonzero coefficients only.
class SteenrodElement {
public:
    using Word = std::vector<int>;

    explicit SteenrodElement(int prime);
    static SteenrodElement from_word(const PowerWord& w, int coefficient = 1);
    /// Parses sums like "2*P^2 + P^3.P^1".
    static SteenrodElement parse(std::string_view text, int prime);

    int prime() const { return prime_; }
    const std::map<Word, int>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_admissible() const;
    /// Common degree of the words, or -1 if they disagree (0 when zero).
    int degree() const;

    void add(const Word& w, std::int64_t coefficient);
    SteenrodElement& operator+=(const SteenrodElement& other);
    std::string to_string() const;

    friend bool operator==(const SteenrodElement& a, const SteenrodElement& b) {
        return a.prime_ == b.prime_ && a.terms_ == b.terms_;
    }

private:
    int prime_;
    std::map<Word, int> terms_;
};

/// P^a P^b expanded into admissible words by the Adem relation (a < p b):
///   sum_t (-1)^{a+t} C((p-1)(b-t)-1, a-pt) P^{a+b-t} P^t.
SteenrodElement adem_relation(int p, int a, int b);

/// The unit c with P^2 = c P^1 P^1 mod p, read off the Adem relation
/// P^1 P^1 = 2 P^2 (so c = 2^{-1} mod p).
int p2_over_p1p1(int p);

enum class RewriteStrategy { Leftmost, Rightmost };

struct RewriteStats {
    std::size_t steps = 0;
    std::size_t degree_violations = 0;
};

/// Rewrites to the admissible basis by repeatedly expanding an inadmissible
/// adjacent pair. Leftmost is the default; Rightmost exists for confluence
/// probing.
SteenrodElement adem_reduce(const SteenrodElement& e, RewriteStrategy strategy = RewriteStrategy::Leftmost,
                            RewriteStats* stats = nullptr);

struct ConfluenceReport {
    int prime = 3;
    int trials = 0;
    std::uint64_t seed = 0;
    std::size_t disagreements = 0;
    std::size_t rewrite_steps = 0;
    std::size_t degree_violations = 0;
    std::size_t admissible_inputs = 0;
    std::size_t fixed_point_failures = 0;
    std::size_t non_admissible_outputs = 0;
    std::vector<std::string> examples;  // first few disagreements

    bool ok() const {
        return disagreements == 0 && degree_violations == 0 && fixed_point_failures == 0 && non_admissible_outputs == 0;
    }
};

/// Reduces `trials` random words (length 1..max_len, exponents 1..max_exp)
/// with both strategies and compares normal forms.
ConfluenceReport confluence_probe(int p, int trials, int max_len, int max_exp, std::uint64_t seed,
                                  Exec exec = Exec::Parallel);

// ------------------------------------------------------------------ action

struct GradedClass {
    std::string name;
    int degree = 2;
};

using Monomial = std::vector<int>;  // exponent per generator

/// One term of a Cartan expansion: powers[j] acts on factor j.
struct CartanTerm {
    std::vector<int> powers;
};

/// Every way of writing k = i_1 + ... + i_m with i_j >= 0, the first factor
/// taking the most first.
std::vector<CartanTerm> cartan_expand(int k, std::span<const GradedClass> factors);
std::string format_cartan(const std::vector<CartanTerm>& terms, std::span<const GradedClass> factors);

struct Polynomial {
    std::map<Monomial, int> terms;  // nonzero coefficients mod p

    bool is_zero() const { return terms.empty(); }
    friend bool operator==(const Polynomial&, const Polynomial&) = default;
};

/// Graded-commutative polynomial algebra on even-degree generators over F_p,
/// modulo the monomial ideal generated by `truncation`.
class GradedAlgebra {
public:
    GradedAlgebra(int prime, std::vector<GradedClass> generators, std::vector<Monomial> truncation = {});

    int prime() const { return prime_; }
    const std::vector<GradedClass>& generators() const { return generators_; }
    int index_of(std::string_view name) const;

    Polynomial zero() const { return {}; }
    Polynomial one() const;
    Polynomial generator(std::string_view name, int power = 1) const;
    Polynomial monomial(const Monomial& m, std::int64_t coefficient = 1) const;

    Polynomial add(const Polynomial& a, const Polynomial& b) const;
    Polynomial scale(const Polynomial& a, std::int64_t c) const;
    Polynomial multiply(const Polynomial& a, const Polynomial& b) const;
    Polynomial truncate(const Polynomial& a) const;

    int degree(const Monomial& m) const;
    /// Common degree of the terms, -1 if mixed, 0 for the zero polynomial.
    int degree(const Polynomial& a) const;
    bool vanishes(const Monomial& m) const;
    std::string to_string(const Polynomial& a) const;

private:
    int prime_;
    std::vector<GradedClass> generators_;
    std::vector<Monomial> truncation_;
};

/// P^k on generators: key (generator index, k) -> value.
using ActionTable = std::map<std::pair<int, int>, Polynomial>;

/// Applies an element of the Steenrod algebra. Products are expanded with
/// the Cartan formula; with `unstable`, P^n y = y^p when deg y = 2n and
/// P^n y = 0 when 2n > deg y. Remaining values come from the table; a needed
/// entry that is missing raises std::out_of_range. The truncation ideal is
/// applied to the final result.
Polynomial act(const SteenrodElement& e, const Polynomial& x, const GradedAlgebra& alg, const ActionTable& table,
               bool unstable = true);
Polynomial act_power(int k, const Polynomial& x, const GradedAlgebra& alg, const ActionTable& table,
                     bool unstable = true);

}  // namespace stasheff
