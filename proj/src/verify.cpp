#include "stasheff/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "stasheff/facemaps.hpp"

namespace stasheff {

const CheckTally* FaceMapReport::tally(const std::string& check) const {
    for (const auto& t : tallies)
        if (t.check == check) return &t;
    return nullptr;
}

namespace {

using Outcome = std::optional<Failure>;

// Faces of K_2..K_n and J_1..J_n, indexed by leaf count.
struct FaceTables {
    std::vector<std::vector<PlanarTree>> k;
    std::vector<std::vector<PaintedTree>> j;

    explicit FaceTables(int n_max) : k(static_cast<std::size_t>(n_max) + 1), j(static_cast<std::size_t>(n_max) + 1) {
        for (int n = 2; n <= n_max; ++n) k[static_cast<std::size_t>(n)] = enumerate_planar(n);
        for (int n = 1; n <= n_max; ++n) j[static_cast<std::size_t>(n)] = enumerate_painted(n);
    }
    const std::vector<PlanarTree>& K(int n) const { return k.at(static_cast<std::size_t>(n)); }
    const std::vector<PaintedTree>& J(int n) const { return j.at(static_cast<std::size_t>(n)); }
};

std::string join_codes(std::initializer_list<std::string> parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += ' ';
        out += p;
    }
    return out;
}

std::string describe_tuple(const std::vector<const PaintedTree*>& rhos) {
    std::string out = "[";
    for (std::size_t i = 0; i < rhos.size(); ++i) {
        if (i) out += ',';
        out += rhos[i]->canonical();
    }
    return out + "]";
}

template <class A, class B>
Outcome expect_equal(const std::string& check, const std::string& inputs, const A& expected, const B& got) {
    if (expected == got) return std::nullopt;
    return Failure{check, inputs, expected.canonical(), got.canonical()};
}

class Harness {
public:
    Harness(std::string name, int n_max, Exec exec) : exec_(exec) {
        report_.map_name = std::move(name);
        report_.n_max = n_max;
    }

    // Runs fn on every instance (serially or in parallel), converting thrown
    // exceptions into failures, then merges in instance order.
    template <class Inst, class Fn>
    void run(const std::string& check, const std::vector<Inst>& insts, Fn fn) {
        auto results = map_indexed<Outcome>(
            insts.size(),
            [&](std::size_t i) -> Outcome {
                try {
                    return fn(insts[i]);
                } catch (const std::exception& e) {
                    return Failure{check, insts[i].describe(), "no exception", e.what()};
                }
            },
            exec_);
        CheckTally tally{check, insts.size(), 0};
        for (auto& r : results) {
            if (r) {
                ++tally.failed;
                report_.failures.push_back(std::move(*r));
            }
        }
        report_.instances += tally.instances;
        report_.checks_passed += tally.instances - tally.failed;
        report_.tallies.push_back(std::move(tally));
    }

    FaceMapReport take() { return std::move(report_); }

private:
    Exec exec_;
    FaceMapReport report_;
};

// ---------------------------------------------------------------- instances

struct PlanarTriple {
    int r, s, u, k, j;
    const PlanarTree *a, *b, *c;
    std::string describe() const {
        return join_codes({"k=" + std::to_string(k), "j=" + std::to_string(j), a->canonical(), b->canonical(),
                           c->canonical()});
    }
};

struct PlanarPair {
    int r, s, k;
    const PlanarTree *a, *b;
    std::string describe() const { return join_codes({"k=" + std::to_string(k), a->canonical(), b->canonical()}); }
};

struct Exchange {
    PlanarPair p;
    int j;
    std::string describe() const { return "j=" + std::to_string(j) + " " + p.describe(); }
};

struct PlanarIndexed {
    int k;
    const PlanarTree* t;
    std::string describe() const { return join_codes({"k=" + std::to_string(k), t->canonical()}); }
};

struct PaintedIndexed {
    int k;
    const PaintedTree* t;
    std::string describe() const { return join_codes({"k=" + std::to_string(k), t->canonical()}); }
};

struct PlanarSingle {
    const PlanarTree* t;
    std::string describe() const { return t->canonical(); }
};

struct PaintedSingle {
    const PaintedTree* t;
    std::string describe() const { return t->canonical(); }
};

struct LowerTriple {
    int r, s, u, k, j;
    const PaintedTree* a;
    const PlanarTree *b, *c;
    std::string describe() const {
        return join_codes({"k=" + std::to_string(k), "j=" + std::to_string(j), a->canonical(), b->canonical(),
                           c->canonical()});
    }
};

struct LowerPair {
    int r, s, k;
    const PaintedTree* a;
    const PlanarTree* b;
    std::string describe() const { return join_codes({"k=" + std::to_string(k), a->canonical(), b->canonical()}); }
};

struct UpperInstance {
    const PlanarTree* tau;
    std::vector<const PaintedTree*> rhos;
    std::vector<int> rs() const {
        std::vector<int> out;
        for (const auto* r : rhos) out.push_back(r->leaf_count());
        return out;
    }
    int total() const {
        int n = 0;
        for (const auto* r : rhos) n += r->leaf_count();
        return n;
    }
    std::string describe() const { return join_codes({tau->canonical(), describe_tuple(rhos)}); }
};

struct UpperLower {
    UpperInstance upper;
    int m;
    const PlanarTree* sigma;
    std::string describe() const {
        return join_codes({"m=" + std::to_string(m), upper.describe(), sigma->canonical()});
    }
};

struct UpperBoundary {
    int k;
    const PlanarTree *tau1, *tau2;
    std::vector<const PaintedTree*> rhos;
    std::string describe() const {
        return join_codes({"k=" + std::to_string(k), tau1->canonical(), tau2->canonical(), describe_tuple(rhos)});
    }
};

struct CoverageInstance {
    PolytopeKind kind;
    int n;
    std::string describe() const { return std::string(to_string(kind)) + "_" + std::to_string(n); }
};

// Calls emit(rs) for each sequence of `parts` positive integers with sum <= max_total.
void for_each_block_sizes(int parts, int max_total, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int budget) {
        if (static_cast<int>(cur.size()) == parts) {
            emit(cur);
            return;
        }
        const int still_needed = parts - static_cast<int>(cur.size()) - 1;
        for (int r = 1; r <= budget - still_needed; ++r) {
            cur.push_back(r);
            rec(budget - r);
            cur.pop_back();
        }
    };
    rec(max_total);
}

// Every tuple of painted faces with the given leaf counts.
void for_each_painted_tuple(const FaceTables& ft, const std::vector<int>& rs,
                            const std::function<void(const std::vector<const PaintedTree*>&)>& emit) {
    std::vector<const PaintedTree*> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == rs.size()) {
            emit(cur);
            return;
        }
        for (const auto& t : ft.J(rs[i])) {
            cur.push_back(&t);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
}

std::vector<PaintedTree> deref(const std::vector<const PaintedTree*>& ptrs) {
    std::vector<PaintedTree> out;
    out.reserve(ptrs.size());
    for (const auto* p : ptrs) out.push_back(*p);
    return out;
}

// Arity of the vertex holding leaf k.
int leaf_parent_arity(const Node& n, int& remaining) {
    for (const auto& c : n.children) {
        if (c.is_leaf()) {
            if (--remaining == 0) return n.arity();
        } else if (int a = leaf_parent_arity(c, remaining)) {
            return a;
        }
    }
    return 0;
}

// ------------------------------------------------------------- K families

void run_K(Harness& h, const FaceTables& ft, int n_max) {
    std::vector<PlanarTriple> triples_nested, triples_disjoint;
    for (int r = 2; r <= n_max; ++r)
        for (int s = 2; r + s - 1 <= n_max; ++s)
            for (int u = 2; r + s + u - 2 <= n_max; ++u)
                for (const auto& a : ft.K(r))
                    for (const auto& b : ft.K(s))
                        for (const auto& c : ft.K(u))
                            for (int k = 1; k <= r; ++k) {
                                for (int j = 1; j <= s; ++j) triples_nested.push_back({r, s, u, k, j, &a, &b, &c});
                                for (int l = k + 1; l <= r; ++l)
                                    triples_disjoint.push_back({r, s, u, k, l, &a, &b, &c});
                            }

    h.run("K.graft-nested", triples_nested, [](const PlanarTriple& x) {
        auto lhs = boundary_K(x.k, x.r, x.s + x.u - 1, *x.a, boundary_K(x.j, x.s, x.u, *x.b, *x.c));
        auto rhs = boundary_K(x.k + x.j - 1, x.r + x.s - 1, x.u, boundary_K(x.k, x.r, x.s, *x.a, *x.b), *x.c);
        return expect_equal("K.graft-nested", x.describe(), lhs, rhs);
    });

    // Here j plays the role of the second, larger graft position l.
    h.run("K.graft-disjoint", triples_disjoint, [](const PlanarTriple& x) {
        const int k = x.k, l = x.j;
        auto lhs = boundary_K(k, x.r + x.u - 1, x.s, boundary_K(l, x.r, x.u, *x.a, *x.c), *x.b);
        auto rhs = boundary_K(l + x.s - 1, x.r + x.s - 1, x.u, boundary_K(k, x.r, x.s, *x.a, *x.b), *x.c);
        return expect_equal("K.graft-disjoint", x.describe(), lhs, rhs);
    });

    std::vector<PlanarPair> pairs;
    for (int r = 2; r <= n_max; ++r)
        for (int s = 2; r + s - 1 <= n_max; ++s)
            for (const auto& a : ft.K(r))
                for (const auto& b : ft.K(s))
                    for (int k = 1; k <= r; ++k) pairs.push_back({r, s, k, &a, &b});

    h.run("K.boundary-image", pairs, [](const PlanarPair& x) -> Outcome {
        auto t = boundary_K(x.k, x.r, x.s, *x.a, *x.b);
        if (t.leaf_count() != x.r + x.s - 1)
            return Failure{"K.boundary-image", x.describe(), "leaves " + std::to_string(x.r + x.s - 1),
                           "leaves " + std::to_string(t.leaf_count())};
        const int want = x.a->dimension() + x.b->dimension();
        if (t.dimension() != want)
            return Failure{"K.boundary-image", x.describe(), "dim " + std::to_string(want),
                           "dim " + std::to_string(t.dimension())};
        return std::nullopt;
    });

    std::vector<PlanarIndexed> degens;
    for (int i = 3; i <= n_max; ++i)
        for (const auto& t : ft.K(i))
            for (int k = 1; k <= i; ++k) degens.push_back({k, &t});

    h.run("K.degeneracy-image", degens, [](const PlanarIndexed& x) -> Outcome {
        auto out = degeneracy_K(x.k, *x.t);
        if (out.leaf_count() != x.t->leaf_count() - 1)
            return Failure{"K.degeneracy-image", x.describe(), "one leaf fewer", out.canonical()};
        int remaining = x.k;
        const int parent = leaf_parent_arity(x.t->root(), remaining);
        const int drop = parent >= 3 ? 1 : 0;
        if (x.t->dimension() - out.dimension() != drop)
            return Failure{"K.degeneracy-image", x.describe(), "dimension drop " + std::to_string(drop),
                           "dimension drop " + std::to_string(x.t->dimension() - out.dimension())};
        return std::nullopt;
    });

    std::vector<Exchange> ex;
    for (const auto& p : pairs)
        if (p.r + p.s - 1 >= 3)
            for (int j = 1; j <= p.r + p.s - 1; ++j) ex.push_back({p, j});

    h.run("K.degeneracy-boundary", ex, [](const Exchange& x) {
        const auto& p = x.p;
        auto lhs = degeneracy_K(x.j, boundary_K(p.k, p.r, p.s, *p.a, *p.b));
        std::optional<PlanarTree> rhs;
        if (x.j >= p.k && x.j <= p.k + p.s - 1) {
            if (p.s >= 3)
                rhs = boundary_K(p.k, p.r, p.s - 1, *p.a, degeneracy_K(x.j - p.k + 1, *p.b));
            else
                rhs = *p.a;
        } else if (p.r >= 3) {
            const bool before = x.j < p.k;
            const int j2 = before ? x.j : x.j - p.s + 1;
            const int k2 = before ? p.k - 1 : p.k;
            rhs = boundary_K(k2, p.r - 1, p.s, degeneracy_K(j2, *p.a), *p.b);
        } else {
            rhs = *p.b;
        }
        return expect_equal("K.degeneracy-boundary", x.describe(), *rhs, lhs);
    });

    std::vector<CoverageInstance> cov;
    for (int n = 3; n <= n_max; ++n) cov.push_back({PolytopeKind::K, n});
    h.run("K.facet-coverage", cov, [](const CoverageInstance& x) -> Outcome {
        auto c = facet_coverage(x.kind, x.n);
        if (c.ok()) return std::nullopt;
        return Failure{"K.facet-coverage", x.describe(), std::to_string(c.facets) + " facets hit once",
                       "images " + std::to_string(c.images) + " dup " + std::to_string(c.duplicates) + " miss " +
                           std::to_string(c.misses) + " extra " + std::to_string(c.extras)};
    });
}

// ------------------------------------------------------------- J families

std::vector<UpperInstance> upper_instances(const FaceTables& ft, int max_total) {
    std::vector<UpperInstance> out;
    for (int t = 2; t <= max_total; ++t)
        for_each_block_sizes(t, max_total, [&](const std::vector<int>& rs) {
            for (const auto& tau : ft.K(t))
                for_each_painted_tuple(ft, rs, [&](const std::vector<const PaintedTree*>& rhos) {
                    out.push_back({&tau, rhos});
                });
        });
    return out;
}

void run_J(Harness& h, const FaceTables& ft, int n_max) {
    std::vector<LowerTriple> nested, disjoint;
    for (int r = 1; r <= n_max; ++r)
        for (int s = 2; r + s - 1 <= n_max; ++s)
            for (int u = 2; r + s + u - 2 <= n_max; ++u)
                for (const auto& a : ft.J(r))
                    for (const auto& b : ft.K(s))
                        for (const auto& c : ft.K(u))
                            for (int k = 1; k <= r; ++k) {
                                for (int j = 1; j <= s; ++j) nested.push_back({r, s, u, k, j, &a, &b, &c});
                                for (int l = k + 1; l <= r; ++l) disjoint.push_back({r, s, u, k, l, &a, &b, &c});
                            }

    h.run("J.lower-nested", nested, [](const LowerTriple& x) {
        auto lhs = boundary_J_lower(x.k, x.r, x.s + x.u - 1, *x.a, boundary_K(x.j, x.s, x.u, *x.b, *x.c));
        auto rhs =
            boundary_J_lower(x.k + x.j - 1, x.r + x.s - 1, x.u, boundary_J_lower(x.k, x.r, x.s, *x.a, *x.b), *x.c);
        return expect_equal("J.lower-nested", x.describe(), lhs, rhs);
    });

    h.run("J.lower-disjoint", disjoint, [](const LowerTriple& x) {
        const int k = x.k, l = x.j;
        auto lhs = boundary_J_lower(k, x.r + x.u - 1, x.s, boundary_J_lower(l, x.r, x.u, *x.a, *x.c), *x.b);
        auto rhs = boundary_J_lower(l + x.s - 1, x.r + x.s - 1, x.u, boundary_J_lower(k, x.r, x.s, *x.a, *x.b), *x.c);
        return expect_equal("J.lower-disjoint", x.describe(), lhs, rhs);
    });

    std::vector<LowerPair> lower_pairs;
    for (int r = 1; r <= n_max; ++r)
        for (int s = 2; r + s - 1 <= n_max; ++s)
            for (const auto& a : ft.J(r))
                for (const auto& b : ft.K(s))
                    for (int k = 1; k <= r; ++k) lower_pairs.push_back({r, s, k, &a, &b});

    h.run("J.lower-image", lower_pairs, [](const LowerPair& x) -> Outcome {
        auto t = boundary_J_lower(x.k, x.r, x.s, *x.a, *x.b);
        const int want = x.a->dimension() + x.b->dimension();
        if (t.leaf_count() != x.r + x.s - 1 || t.dimension() != want)
            return Failure{"J.lower-image", x.describe(), "dim " + std::to_string(want), t.canonical()};
        return std::nullopt;
    });

    const auto uppers = upper_instances(ft, n_max);
    h.run("J.upper-image", uppers, [](const UpperInstance& x) -> Outcome {
        auto rs = x.rs();
        auto pieces = deref(x.rhos);
        auto t = boundary_J_upper(x.tau->leaf_count(), rs, *x.tau, pieces);
        int want = x.tau->dimension();
        for (const auto* r : x.rhos) want += r->dimension();
        if (t.leaf_count() != x.total() || t.dimension() != want)
            return Failure{"J.upper-image", x.describe(), "dim " + std::to_string(want), t.canonical()};
        return std::nullopt;
    });

    std::vector<UpperLower> ul;
    for (int s = 2; s <= n_max; ++s)
        for (const auto& up : upper_instances(ft, n_max - s + 1))
            for (const auto& sigma : ft.K(s))
                for (int m = 1; m <= up.total(); ++m) ul.push_back({up, m, &sigma});

    h.run("J.upper-lower", ul, [](const UpperLower& x) {
        const auto& up = x.upper;
        const int t = up.tau->leaf_count();
        const int s = x.sigma->leaf_count();
        auto rs = up.rs();
        auto pieces = deref(up.rhos);
        auto lhs = boundary_J_lower(x.m, up.total(), s, boundary_J_upper(t, rs, *up.tau, pieces), *x.sigma);
        int block = 0, offset = 0;
        while (x.m > offset + rs[static_cast<std::size_t>(block)]) offset += rs[static_cast<std::size_t>(block++)];
        auto& target = pieces[static_cast<std::size_t>(block)];
        target = boundary_J_lower(x.m - offset, target.leaf_count(), s, target, *x.sigma);
        rs[static_cast<std::size_t>(block)] += s - 1;
        auto rhs = boundary_J_upper(t, rs, *up.tau, pieces);
        return expect_equal("J.upper-lower", x.describe(), lhs, rhs);
    });

    std::vector<UpperBoundary> ub;
    for (int r = 2; r <= n_max; ++r)
        for (int s = 2; r + s - 1 <= n_max; ++s) {
            const int t = r + s - 1;
            for_each_block_sizes(t, n_max, [&](const std::vector<int>& qs) {
                for (const auto& tau1 : ft.K(r))
                    for (const auto& tau2 : ft.K(s))
                        for_each_painted_tuple(ft, qs, [&](const std::vector<const PaintedTree*>& rhos) {
                            for (int k = 1; k <= r; ++k) ub.push_back({k, &tau1, &tau2, rhos});
                        });
            });
        }

    h.run("J.upper-boundary", ub, [](const UpperBoundary& x) {
        const int r = x.tau1->leaf_count(), s = x.tau2->leaf_count(), t = r + s - 1;
        std::vector<int> qs;
        for (const auto* p : x.rhos) qs.push_back(p->leaf_count());
        auto pieces = deref(x.rhos);
        auto lhs = boundary_J_upper(t, qs, boundary_K(x.k, r, s, *x.tau1, *x.tau2), pieces);

        const auto first = static_cast<std::ptrdiff_t>(x.k - 1);
        std::vector<int> inner_qs(qs.begin() + first, qs.begin() + first + s);
        std::vector<PaintedTree> inner(pieces.begin() + first, pieces.begin() + first + s);
        auto merged = boundary_J_upper(s, inner_qs, *x.tau2, inner);
        std::vector<int> outer_qs(qs.begin(), qs.begin() + first);
        std::vector<PaintedTree> outer(pieces.begin(), pieces.begin() + first);
        outer_qs.push_back(merged.leaf_count());
        outer.push_back(merged);
        outer_qs.insert(outer_qs.end(), qs.begin() + first + s, qs.end());
        outer.insert(outer.end(), pieces.begin() + first + s, pieces.end());
        auto rhs = boundary_J_upper(r, outer_qs, *x.tau1, outer);
        return expect_equal("J.upper-boundary", x.describe(), lhs, rhs);
    });

    std::vector<PaintedIndexed> degens;
    for (int i = 2; i <= n_max; ++i)
        for (const auto& t : ft.J(i))
            for (int k = 1; k <= i; ++k) degens.push_back({k, &t});

    h.run("J.degeneracy-image", degens, [](const PaintedIndexed& x) -> Outcome {
        auto a = degeneracy_J(x.k, *x.t, CascadeOrder::InnermostLeftmost);
        auto b = degeneracy_J(x.k, *x.t, CascadeOrder::OutermostRightmost);
        if (a.leaf_count() != x.t->leaf_count() - 1)
            return Failure{"J.degeneracy-image", x.describe(), "one leaf fewer", a.canonical()};
        return expect_equal("J.degeneracy-image", x.describe(), a, b);
    });

    std::vector<CoverageInstance> cov;
    for (int n = 2; n <= n_max; ++n) cov.push_back({PolytopeKind::J, n});
    h.run("J.facet-coverage", cov, [](const CoverageInstance& x) -> Outcome {
        auto c = facet_coverage(x.kind, x.n);
        if (c.ok()) return std::nullopt;
        return Failure{"J.facet-coverage", x.describe(), std::to_string(c.facets) + " facets hit once",
                       "images " + std::to_string(c.images) + " dup " + std::to_string(c.duplicates) + " miss " +
                           std::to_string(c.misses) + " extra " + std::to_string(c.extras)};
    });

    // Projection compatibilities.
    std::vector<PaintedSingle> all_j;
    for (int i = 2; i <= n_max; ++i)
        for (const auto& t : ft.J(i)) all_j.push_back({&t});
    h.run("pi.image", all_j, [](const PaintedSingle& x) -> Outcome {
        auto p = projection_pi(*x.t);
        if (p.leaf_count() != x.t->leaf_count())
            return Failure{"pi.image", x.describe(), "same leaf count", p.canonical()};
        return std::nullopt;
    });

    std::vector<PlanarSingle> all_k;
    for (int i = 2; i <= n_max; ++i)
        for (const auto& t : ft.K(i)) all_k.push_back({&t});
    h.run("pi.unit", all_k, [](const PlanarSingle& x) -> Outcome {
        const int i = x.t->leaf_count();
        auto unit = PaintedTree::map_corolla(1);
        auto lower = projection_pi(boundary_J_lower(1, 1, i, unit, *x.t));
        if (auto f = expect_equal("pi.unit", "lower " + x.describe(), *x.t, lower)) return f;
        std::vector<int> ones(static_cast<std::size_t>(i), 1);
        std::vector<PaintedTree> units(static_cast<std::size_t>(i), unit);
        auto upper = projection_pi(boundary_J_upper(i, ones, *x.t, units));
        return expect_equal("pi.unit", "upper " + x.describe(), *x.t, upper);
    });

    std::vector<LowerPair> pi_lower;
    for (const auto& p : lower_pairs)
        if (p.r >= 2) pi_lower.push_back(p);
    h.run("pi.lower", pi_lower, [](const LowerPair& x) {
        auto lhs = projection_pi(boundary_J_lower(x.k, x.r, x.s, *x.a, *x.b));
        auto rhs = boundary_K(x.k, x.r, x.s, projection_pi(*x.a), *x.b);
        return expect_equal("pi.lower", x.describe(), rhs, lhs);
    });

    h.run("pi.upper", uppers, [](const UpperInstance& x) {
        auto rs = x.rs();
        auto pieces = deref(x.rhos);
        auto lhs = projection_pi(boundary_J_upper(x.tau->leaf_count(), rs, *x.tau, pieces));
        std::vector<PlanarTree> projected;
        for (const auto& p : pieces) projected.push_back(projection_or_unit(p));
        auto rhs = composite_D(*x.tau, projected);
        return expect_equal("pi.upper", x.describe(), rhs, lhs);
    });

    h.run("D.iterated", uppers, [](const UpperInstance& x) {
        std::vector<PlanarTree> projected;
        for (const auto* p : x.rhos) projected.push_back(projection_or_unit(*p));
        return expect_equal("D.iterated", x.describe(), composite_D(*x.tau, projected),
                            composite_D_iterated(*x.tau, projected));
    });

    std::vector<PaintedIndexed> pi_degen;
    for (const auto& d : degens)
        if (d.t->leaf_count() >= 3) pi_degen.push_back(d);
    h.run("pi.degeneracy", pi_degen, [](const PaintedIndexed& x) {
        auto lhs = projection_pi(degeneracy_J(x.k, *x.t));
        auto rhs = degeneracy_K(x.k, projection_pi(*x.t));
        return expect_equal("pi.degeneracy", x.describe(), rhs, lhs);
    });
}

}  // namespace

FaceMapReport verify_relations(PolytopeKind kind, int n_max, Exec exec) {
    if (n_max > kFullEnumerationCap) throw std::out_of_range("n_max exceeds the enumeration cap");
    if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
    FaceTables ft(n_max);
    Harness h(kind == PolytopeKind::K ? "K-relations" : "J-relations", n_max, exec);
    if (kind == PolytopeKind::K)
        run_K(h, ft, n_max);
    else
        run_J(h, ft, n_max);
    return h.take();
}

CoverageReport facet_coverage(PolytopeKind kind, int n) {
    CoverageReport rep;
    rep.kind = kind;
    rep.n = n;
    std::vector<std::string> images;
    if (kind == PolytopeKind::K) {
        if (n < 3) throw std::invalid_argument("K_n has facets only for n >= 3");
        for (int r = 2; r <= n - 1; ++r) {
            const int s = n + 1 - r;
            for (int k = 1; k <= r; ++k)
                images.push_back(boundary_K(k, r, s, PlanarTree::corolla(r), PlanarTree::corolla(s)).canonical());
        }
    } else {
        if (n < 2) throw std::invalid_argument("J_n has facets only for n >= 2");
        for (int r = 1; r <= n - 1; ++r) {
            const int s = n + 1 - r;
            for (int k = 1; k <= r; ++k)
                images.push_back(
                    boundary_J_lower(k, r, s, PaintedTree::map_corolla(r), PlanarTree::corolla(s)).canonical());
        }
        rep.lower_images = images.size();
        for (int t = 2; t <= n; ++t)
            for_each_block_sizes(t, n, [&](const std::vector<int>& rs) {
                int total = 0;
                for (int r : rs) total += r;
                if (total != n) return;
                std::vector<PaintedTree> tops;
                for (int r : rs) tops.push_back(PaintedTree::map_corolla(r));
                images.push_back(boundary_J_upper(t, rs, PlanarTree::corolla(t), tops).canonical());
            });
        rep.upper_images = images.size() - rep.lower_images;
    }
    rep.images = images.size();

    std::set<std::string> facets;
    const int facet_dim = top_dimension(kind, n) - 1;
    if (kind == PolytopeKind::K) {
        for (const auto& t : enumerate_planar(n, facet_dim)) facets.insert(t.canonical());
    } else {
        for (const auto& t : enumerate_painted(n, facet_dim)) facets.insert(t.canonical());
    }
    rep.facets = facets.size();

    std::map<std::string, int> hits;
    for (const auto& img : images) ++hits[img];
    for (const auto& [code, count] : hits) {
        if (count > 1) rep.duplicates += static_cast<std::size_t>(count - 1);
        if (!facets.count(code)) ++rep.extras;
    }
    for (const auto& f : facets)
        if (!hits.count(f)) ++rep.misses;
    return rep;
}

SphereReport sphere_proxies(const FacePoset& poset, Exec exec) {
    SphereReport rep;
    rep.kind = poset.kind();
    rep.n = poset.n();
    rep.top_dimension = poset.top_dimension();
    auto f = poset.f_vector();
    for (int d = 0; d < rep.top_dimension; ++d) {
        const auto count = static_cast<long long>(f[static_cast<std::size_t>(d)]);
        rep.euler_proper += d % 2 == 0 ? count : -count;
    }
    rep.euler_expected = 1 + ((rep.top_dimension - 1) % 2 == 0 ? 1 : -1);
    if (rep.top_dimension >= 2) {
        const auto& codim2 = poset.faces(rep.top_dimension - 2);
        rep.codim2_faces = codim2.size();
        auto bad = map_indexed<char>(
            codim2.size(), [&](std::size_t i) -> char { return poset.facets_containing(codim2[i]).size() != 2; },
            exec);
        rep.pseudomanifold_violations = static_cast<std::size_t>(std::count(bad.begin(), bad.end(), 1));
    }
    return rep;
}

}  // namespace stasheff
