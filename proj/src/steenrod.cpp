#include "stasheff/steenrod.hpp"

#include <algorithm>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "stasheff/arith.hpp"

namespace stasheff {

namespace {

void check_odd_prime(int p) {
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("prime must be an odd prime, got " + std::to_string(p));
}

int word_degree(const std::vector<int>& w, int p) {
    int d = 0;
    for (int a : w) d += 2 * a * (p - 1);
    return d;
}

std::string word_to_string(const std::vector<int>& w) {
    if (w.empty()) return "1";
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += '.';
        out += "P^" + std::to_string(w[i]);
    }
    return out;
}

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

// Index i of an inadmissible pair (w[i], w[i+1]), or -1.
int find_inadmissible(const std::vector<int>& w, int p, RewriteStrategy strategy) {
    const int n = static_cast<int>(w.size());
    if (strategy == RewriteStrategy::Leftmost) {
        for (int i = 0; i + 1 < n; ++i)
            if (w[static_cast<std::size_t>(i)] < p * w[static_cast<std::size_t>(i + 1)]) return i;
    } else {
        for (int i = n - 2; i >= 0; --i)
            if (w[static_cast<std::size_t>(i)] < p * w[static_cast<std::size_t>(i + 1)]) return i;
    }
    return -1;
}

}  // namespace

// ---------------------------------------------------------------- words

void PowerWord::validate() const {
    check_odd_prime(prime);
    for (int a : exponents)
        if (a < 1) throw std::invalid_argument("power word exponents must be positive");
}

int PowerWord::degree() const { return word_degree(exponents, prime); }

std::string PowerWord::to_string() const { return word_to_string(exponents); }

bool is_admissible(const PowerWord& w) {
    for (std::size_t i = 0; i + 1 < w.exponents.size(); ++i)
        if (w.exponents[i] < w.prime * w.exponents[i + 1]) return false;
    return true;
}

PowerWord parse_word(std::string_view text, int prime) {
    check_odd_prime(prime);
    PowerWord w{prime, {}};
    const std::string body = trim(text);
    if (body == "1" || body.empty()) return w;
    std::stringstream ss(body);
    std::string token;
    while (std::getline(ss, token, '.')) {
        token = trim(token);
        if (token.size() < 3 || token[0] != 'P' || token[1] != '^')
            throw std::invalid_argument("bad power token '" + token + "', expected P^a");
        std::size_t used = 0;
        int a = 0;
        try {
            a = std::stoi(token.substr(2), &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad exponent in '" + token + "'");
        }
        if (used != token.size() - 2 || a < 0) throw std::invalid_argument("bad exponent in '" + token + "'");
        if (a > 0) w.exponents.push_back(a);
    }
    return w;
}

int binomial_mod(std::int64_t n, std::int64_t k, int p) {
    if (k < 0 || n < 0 || k > n) return 0;
    std::int64_t result = 1;
    while (n > 0 || k > 0) {
        const int ni = static_cast<int>(n % p), ki = static_cast<int>(k % p);
        if (ki > ni) return 0;
        // C(ni, ki) mod p with ni < p.
        std::int64_t num = 1, den = 1;
        for (int j = 0; j < ki; ++j) {
            num = num * (ni - j) % p;
            den = den * (j + 1) % p;
        }
        result = result * num % p * inverse_mod(den, p) % p;
        n /= p;
        k /= p;
    }
    return static_cast<int>(result);
}

// ---------------------------------------------------------------- elements

SteenrodElement::SteenrodElement(int prime) : prime_(prime) { check_odd_prime(prime); }

SteenrodElement SteenrodElement::from_word(const PowerWord& w, int coefficient) {
    w.validate();
    SteenrodElement e(w.prime);
    e.add(w.exponents, coefficient);
    return e;
}

SteenrodElement SteenrodElement::parse(std::string_view text, int prime) {
    SteenrodElement e(prime);
    std::string body(text);
    if (body.find('-') != std::string::npos)
        throw std::invalid_argument("write signs as coefficients mod p, e.g. 2*P^2");
    std::stringstream ss(body);
    std::string term;
    while (std::getline(ss, term, '+')) {
        term = trim(term);
        if (term.empty()) throw std::invalid_argument("empty term in '" + std::string(text) + "'");
        std::int64_t coef = 1;
        auto star = term.find('*');
        if (star != std::string::npos) {
            try {
                coef = std::stoll(term.substr(0, star));
            } catch (const std::exception&) {
                throw std::invalid_argument("bad coefficient in '" + term + "'");
            }
            term = term.substr(star + 1);
        }
        e.add(parse_word(term, prime).exponents, coef);
    }
    return e;
}

bool SteenrodElement::is_admissible() const {
    for (const auto& [w, c] : terms_)
        if (!stasheff::is_admissible(PowerWord{prime_, w})) return false;
    return true;
}

int SteenrodElement::degree() const {
    int d = -2;
    for (const auto& [w, c] : terms_) {
        const int wd = word_degree(w, prime_);
        if (d == -2)
            d = wd;
        else if (d != wd)
            return -1;
    }
    return d == -2 ? 0 : d;
}

void SteenrodElement::add(const Word& w, std::int64_t coefficient) {
    const int c = mod_p(coefficient, prime_);
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(w, c);
    if (!inserted) {
        it->second = (it->second + c) % prime_;
        if (it->second == 0) terms_.erase(it);
    }
}

SteenrodElement& SteenrodElement::operator+=(const SteenrodElement& other) {
    if (other.prime_ != prime_) throw std::invalid_argument("adding elements at different primes");
    for (const auto& [w, c] : other.terms_) add(w, c);
    return *this;
}

std::string SteenrodElement::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    // Highest words first reads like the usual admissible-basis listings.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!out.empty()) out += " + ";
        if (it->second != 1) out += std::to_string(it->second) + "*";
        out += word_to_string(it->first);
    }
    return out;
}

// ---------------------------------------------------------------- rewriting

SteenrodElement adem_relation(int p, int a, int b) {
    check_odd_prime(p);
    if (a < 1 || b < 1) throw std::invalid_argument("adem_relation needs positive exponents");
    if (a >= p * b) throw std::invalid_argument("P^a P^b is already admissible");
    SteenrodElement out(p);
    for (int t = 0; p * t <= a; ++t) {
        const std::int64_t top = static_cast<std::int64_t>(p - 1) * (b - t) - 1;
        const int c = binomial_mod(top, a - p * t, p);
        if (c == 0) continue;
        const int sign = (a + t) % 2 == 0 ? 1 : -1;
        std::vector<int> w{a + b - t};
        if (t > 0) w.push_back(t);
        out.add(w, sign * c);
    }
    return out;
}

int p2_over_p1p1(int p) {
    const auto rel = adem_relation(p, 1, 1);
    auto it = rel.terms().find(std::vector<int>{2});
    if (rel.terms().size() != 1 || it == rel.terms().end())
        throw std::logic_error("P^1 P^1 is not a multiple of P^2");
    return inverse_mod(it->second, p);
}

SteenrodElement adem_reduce(const SteenrodElement& e, RewriteStrategy strategy, RewriteStats* stats) {
    const int p = e.prime();
    SteenrodElement result(p);
    std::vector<std::pair<std::vector<int>, int>> work(e.terms().begin(), e.terms().end());
    while (!work.empty()) {
        auto [w, c] = std::move(work.back());
        work.pop_back();
        const int i = find_inadmissible(w, p, strategy);
        if (i < 0) {
            result.add(w, c);
            continue;
        }
        const auto pos = static_cast<std::size_t>(i);
        const auto expansion = adem_relation(p, w[pos], w[pos + 1]);
        const int before = word_degree(w, p);
        for (const auto& [u, d] : expansion.terms()) {
            std::vector<int> next(w.begin(), w.begin() + i);
            next.insert(next.end(), u.begin(), u.end());
            next.insert(next.end(), w.begin() + i + 2, w.end());
            if (stats && word_degree(next, p) != before) ++stats->degree_violations;
            work.emplace_back(std::move(next), static_cast<int>(static_cast<std::int64_t>(c) * d % p));
        }
        if (stats) ++stats->steps;
    }
    return result;
}

ConfluenceReport confluence_probe(int p, int trials, int max_len, int max_exp, std::uint64_t seed, Exec exec) {
    check_odd_prime(p);
    if (trials < 0 || max_len < 1 || max_exp < 1) throw std::invalid_argument("confluence_probe: bad bounds");
    ConfluenceReport rep;
    rep.prime = p;
    rep.trials = trials;
    rep.seed = seed;

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> len_dist(1, max_len);
    std::uniform_int_distribution<int> exp_dist(1, max_exp);
    std::vector<std::vector<int>> words(static_cast<std::size_t>(trials));
    for (auto& w : words) {
        w.resize(static_cast<std::size_t>(len_dist(rng)));
        for (auto& a : w) a = exp_dist(rng);
    }

    struct Outcome {
        bool admissible_input = false;
        bool agree = true;
        bool fixed_point_ok = true;
        bool output_admissible = true;
        RewriteStats stats;
        std::string note;
    };
    auto outcomes = map_indexed<Outcome>(
        words.size(),
        [&](std::size_t i) {
            Outcome o;
            const auto input = SteenrodElement::from_word(PowerWord{p, words[i]});
            RewriteStats left_stats, right_stats;
            const auto left = adem_reduce(input, RewriteStrategy::Leftmost, &left_stats);
            const auto right = adem_reduce(input, RewriteStrategy::Rightmost, &right_stats);
            o.stats.steps = left_stats.steps + right_stats.steps;
            o.stats.degree_violations = left_stats.degree_violations + right_stats.degree_violations;
            o.agree = left == right;
            o.output_admissible = left.is_admissible() && right.is_admissible();
            o.admissible_input = is_admissible(PowerWord{p, words[i]});
            if (o.admissible_input) o.fixed_point_ok = left == input && right == input;
            if (!o.agree) o.note = word_to_string(words[i]) + ": " + left.to_string() + " vs " + right.to_string();
            return o;
        },
        exec);

    for (const auto& o : outcomes) {
        rep.rewrite_steps += o.stats.steps;
        rep.degree_violations += o.stats.degree_violations;
        if (o.admissible_input) ++rep.admissible_inputs;
        if (!o.fixed_point_ok) ++rep.fixed_point_failures;
        if (!o.output_admissible) ++rep.non_admissible_outputs;
        if (!o.agree) {
            ++rep.disagreements;
            if (rep.examples.size() < 5) rep.examples.push_back(o.note);
        }
    }
    return rep;
}

// ---------------------------------------------------------------- Cartan

std::vector<CartanTerm> cartan_expand(int k, std::span<const GradedClass> factors) {
    if (k < 0) throw std::invalid_argument("cartan_expand needs k >= 0");
    std::vector<CartanTerm> out;
    const std::size_t m = factors.size();
    if (m == 0) {
        if (k == 0) out.push_back({});
        return out;
    }
    std::vector<int> cur(m, 0);
    auto rec = [&](auto&& self, std::size_t j, int remaining) -> void {
        if (j + 1 == m) {
            cur[j] = remaining;
            out.push_back({cur});
            return;
        }
        for (int i = remaining; i >= 0; --i) {
            cur[j] = i;
            self(self, j + 1, remaining - i);
        }
    };
    rec(rec, 0, k);
    return out;
}

std::string format_cartan(const std::vector<CartanTerm>& terms, std::span<const GradedClass> factors) {
    std::string out;
    for (const auto& t : terms) {
        if (!out.empty()) out += " + ";
        for (std::size_t j = 0; j < factors.size(); ++j) {
            if (j) out += "·";
            if (t.powers[j] > 0) out += "P^" + std::to_string(t.powers[j]);
            out += factors[j].name;
        }
    }
    return out.empty() ? "0" : out;
}

// ---------------------------------------------------------------- algebra

GradedAlgebra::GradedAlgebra(int prime, std::vector<GradedClass> generators, std::vector<Monomial> truncation)
    : prime_(prime), generators_(std::move(generators)), truncation_(std::move(truncation)) {
    check_odd_prime(prime);
    for (const auto& g : generators_)
        if (g.degree <= 0 || g.degree % 2 != 0)
            throw std::invalid_argument("generator " + g.name + " must have positive even degree");
    for (const auto& t : truncation_)
        if (t.size() != generators_.size()) throw std::invalid_argument("truncation monomial has the wrong length");
}

int GradedAlgebra::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].name == name) return static_cast<int>(i);
    throw std::invalid_argument("unknown generator " + std::string(name));
}

Polynomial GradedAlgebra::one() const { return monomial(Monomial(generators_.size(), 0)); }

Polynomial GradedAlgebra::generator(std::string_view name, int power) const {
    Monomial m(generators_.size(), 0);
    m[static_cast<std::size_t>(index_of(name))] = power;
    return monomial(m);
}

Polynomial GradedAlgebra::monomial(const Monomial& m, std::int64_t coefficient) const {
    if (m.size() != generators_.size()) throw std::invalid_argument("monomial has the wrong length");
    Polynomial out;
    const int c = mod_p(coefficient, prime_);
    if (c) out.terms.emplace(m, c);
    return out;
}

Polynomial GradedAlgebra::add(const Polynomial& a, const Polynomial& b) const {
    Polynomial out = a;
    for (const auto& [m, c] : b.terms) {
        auto [it, inserted] = out.terms.emplace(m, c);
        if (!inserted) {
            it->second = (it->second + c) % prime_;
            if (it->second == 0) out.terms.erase(it);
        }
    }
    return out;
}

Polynomial GradedAlgebra::scale(const Polynomial& a, std::int64_t c) const {
    Polynomial out;
    const int s = mod_p(c, prime_);
    if (s == 0) return out;
    for (const auto& [m, v] : a.terms) out.terms.emplace(m, static_cast<int>(static_cast<std::int64_t>(v) * s % prime_));
    return out;
}

Polynomial GradedAlgebra::multiply(const Polynomial& a, const Polynomial& b) const {
    Polynomial out;
    for (const auto& [ma, ca] : a.terms)
        for (const auto& [mb, cb] : b.terms) {
            Monomial m(ma.size());
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            out = add(out, monomial(m, static_cast<std::int64_t>(ca) * cb));
        }
    return out;
}

bool GradedAlgebra::vanishes(const Monomial& m) const {
    for (const auto& t : truncation_) {
        bool divides = true;
        for (std::size_t i = 0; i < m.size() && divides; ++i) divides = m[i] >= t[i];
        if (divides) return true;
    }
    return false;
}

Polynomial GradedAlgebra::truncate(const Polynomial& a) const {
    Polynomial out;
    for (const auto& [m, c] : a.terms)
        if (!vanishes(m)) out.terms.emplace(m, c);
    return out;
}

int GradedAlgebra::degree(const Monomial& m) const {
    int d = 0;
    for (std::size_t i = 0; i < m.size(); ++i) d += m[i] * generators_[i].degree;
    return d;
}

int GradedAlgebra::degree(const Polynomial& a) const {
    int d = -2;
    for (const auto& [m, c] : a.terms) {
        const int md = degree(m);
        if (d == -2)
            d = md;
        else if (d != md)
            return -1;
    }
    return d == -2 ? 0 : d;
}

std::string GradedAlgebra::to_string(const Polynomial& a) const {
    if (a.terms.empty()) return "0";
    std::string out;
    for (auto it = a.terms.rbegin(); it != a.terms.rend(); ++it) {
        if (!out.empty()) out += " + ";
        std::string mono;
        for (std::size_t i = 0; i < it->first.size(); ++i) {
            if (it->first[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += generators_[i].name;
            if (it->first[i] > 1) mono += "^" + std::to_string(it->first[i]);
        }
        if (it->second != 1 || mono.empty()) out += std::to_string(it->second) + (mono.empty() ? "" : "*");
        out += mono;
    }
    return out;
}

// ---------------------------------------------------------------- action

namespace {

Polynomial power_on_generator(int i, int gen, const GradedAlgebra& alg, const ActionTable& table, bool unstable) {
    const auto& g = alg.generators()[static_cast<std::size_t>(gen)];
    Monomial m(alg.generators().size(), 0);
    m[static_cast<std::size_t>(gen)] = 1;
    if (i == 0) return alg.monomial(m);
    if (unstable) {
        if (2 * i == g.degree) {
            m[static_cast<std::size_t>(gen)] = alg.prime();
            return alg.monomial(m);
        }
        if (2 * i > g.degree) return alg.zero();
    }
    auto it = table.find({gen, i});
    if (it == table.end())
        throw std::out_of_range("missing action-table entry P^" + std::to_string(i) + " " + g.name);
    const int want = g.degree + 2 * i * (alg.prime() - 1);
    const int got = alg.degree(it->second);
    if (!it->second.is_zero() && got != want)
        throw std::invalid_argument("action-table entry P^" + std::to_string(i) + " " + g.name + " has degree " +
                                    std::to_string(got) + ", expected " + std::to_string(want));
    return it->second;
}

// Truncated total power [P^0 y, ..., P^k y]; the Cartan formula makes it
// multiplicative, so a monomial is a product of generator series. Entries
// are fetched only when they can contribute.
Polynomial power_untruncated(int k, const Polynomial& x, const GradedAlgebra& alg, const ActionTable& table,
                             bool unstable) {
    const auto len = static_cast<std::size_t>(k) + 1;
    Polynomial out;
    for (const auto& [m, c] : x.terms) {
        std::vector<std::pair<int, int>> factors;  // (generator, remaining uses)
        int left = 0;
        for (std::size_t g = 0; g < m.size(); ++g)
            if (m[g] > 0) {
                factors.emplace_back(static_cast<int>(g), m[g]);
                left += m[g];
            }
        std::vector<Polynomial> total(len, alg.zero());
        total[0] = alg.one();
        for (const auto& [g, e] : factors) {
            std::vector<std::optional<Polynomial>> gen(len);
            auto entry = [&](std::size_t i) -> const Polynomial& {
                if (!gen[i]) gen[i] = power_on_generator(static_cast<int>(i), g, alg, table, unstable);
                return *gen[i];
            };
            for (int r = 0; r < e; ++r) {
                const bool last = --left == 0;
                std::vector<Polynomial> next(len, alg.zero());
                for (std::size_t i = 0; i < len; ++i) {
                    if (total[i].is_zero()) continue;
                    for (std::size_t j = last ? len - 1 - i : 0; i + j < len; ++j) {
                        const auto& b = entry(j);
                        if (!b.is_zero()) next[i + j] = alg.add(next[i + j], alg.multiply(total[i], b));
                    }
                }
                total = std::move(next);
            }
        }
        out = alg.add(out, alg.scale(total[len - 1], c));
    }
    return out;
}

}  // namespace

Polynomial act_power(int k, const Polynomial& x, const GradedAlgebra& alg, const ActionTable& table, bool unstable) {
    if (k < 0) throw std::invalid_argument("act_power needs k >= 0");
    return alg.truncate(power_untruncated(k, x, alg, table, unstable));
}

Polynomial act(const SteenrodElement& e, const Polynomial& x, const GradedAlgebra& alg, const ActionTable& table,
               bool unstable) {
    if (e.prime() != alg.prime()) throw std::invalid_argument("element and algebra at different primes");
    Polynomial out;
    for (const auto& [word, c] : e.terms()) {
        Polynomial y = x;
        for (auto it = word.rbegin(); it != word.rend() && !y.is_zero(); ++it)
            y = power_untruncated(*it, y, alg, table, unstable);
        out = alg.add(out, alg.scale(y, c));
    }
    return alg.truncate(out);
}

}  // namespace stasheff
