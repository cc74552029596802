#include "liftlocal/stdbasis.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <tuple>

namespace liftlocal {

OrderKind order_for(Mode mode) {
    return mode == Mode::Graded ? OrderKind::DegRevLexGlobal : OrderKind::DegRevLexLocal;
}

std::string mode_name(Mode mode) { return mode == Mode::Graded ? "graded" : "local"; }

IdealData::IdealData(ContextPtr ctx, std::vector<Polynomial> gens) : context(std::move(ctx)) {
    for (auto& g : gens) {
        if (!(*g.context() == *context)) throw ValidationError("ideal generator context mismatch");
        if (!g.is_zero()) generators.push_back(std::move(g));
    }
}

bool IdealData::contained_in_maximal() const {
    for (const auto& g : generators) {
        if (!g.constant_term().is_zero()) return false;
    }
    return true;
}

bool IdealData::is_homogeneous() const {
    for (const auto& g : generators) {
        if (!g.is_homogeneous()) return false;
    }
    return true;
}

std::string IdealData::cache_key() const {
    std::string key;
    for (const auto& g : generators) {
        key += g.to_string();
        key += ";";
    }
    return key;
}

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, OrderKind order) {
    const auto& [mf, cf] = f.leading_term(order);
    const auto& [mg, cg] = g.leading_term(order);
    const Monomial l = Monomial::lcm(mf, mg);
    return f.times_term(l.quotient_by(mf), cf.inv()) - g.times_term(l.quotient_by(mg), cg.inv());
}

// Selection key for the pair queue: smallest lcm degree first, then the lcm
// under the global order, then pair indices. Deterministic.
struct PairKey {
    unsigned degree;
    Monomial lcm;
    std::size_t i, j;
};

bool pair_key_less(const PairKey& a, const PairKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    const int c = compare(a.lcm, b.lcm, OrderKind::DegRevLexGlobal);
    if (c != 0) return c < 0;
    return std::tie(a.i, a.j) < std::tie(b.i, b.j);
}

}  // namespace

DivisionResult global_divide(const Polynomial& f, const std::vector<Polynomial>& basis,
                             OrderKind order) {
    if (order != OrderKind::DegRevLexGlobal) {
        throw InternalError("global division requires a global ordering");
    }
    const ContextPtr& ctx = f.context();
    DivisionResult out{std::vector<Polynomial>(basis.size(), Polynomial::zero(ctx)),
                       Polynomial::zero(ctx)};
    Polynomial h = f;
    while (!h.is_zero()) {
        const auto& [mh, ch] = h.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (basis[i].is_zero()) continue;
            const auto& [mb, cb] = basis[i].leading_term(order);
            if (!mb.divides(mh)) continue;
            const Monomial q = mh.quotient_by(mb);
            const Scalar c = ch / cb;
            h = h - basis[i].times_term(q, c);
            out.quotients[i] = out.quotients[i] + Polynomial::term(ctx, q, c);
            reduced = true;
            break;
        }
        if (!reduced) {
            // Move the leading term to the remainder and keep reducing the tail.
            out.remainder = out.remainder + Polynomial::term(ctx, mh, ch);
            h = h - Polynomial::term(ctx, mh, ch);
        }
    }
    return out;
}

MoraResult mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                            OrderKind order) {
    if (order != OrderKind::DegRevLexLocal) {
        throw InternalError("mora normal form requires a local ordering");
    }
    const ContextPtr& ctx = f.context();
    const std::size_t nb = basis.size();

    // Every tracked element t satisfies t.poly = t.alpha * f + sum t.beta[i] * basis[i];
    // the invariant is preserved by each reduction step, so at the end
    // alpha * f = sum (-beta[i]) * basis[i] + poly gives the witness identity.
    struct Tracked {
        Polynomial poly;
        Polynomial alpha;
        std::vector<Polynomial> beta;
    };
    const auto local_ecart = [order](const Polynomial& p) {
        return static_cast<int>(p.total_degree()) -
               static_cast<int>(p.leading_term(order).first.total_degree());
    };

    std::vector<Tracked> reducers;
    for (std::size_t i = 0; i < nb; ++i) {
        if (basis[i].is_zero()) continue;
        Tracked t{basis[i], Polynomial::zero(ctx),
                  std::vector<Polynomial>(nb, Polynomial::zero(ctx))};
        t.beta[i] = Polynomial::constant(ctx, Scalar::one(ctx->field()));
        reducers.push_back(std::move(t));
    }

    Tracked h{f, Polynomial::constant(ctx, Scalar::one(ctx->field())),
              std::vector<Polynomial>(nb, Polynomial::zero(ctx))};

    long guard = 0;
    while (!h.poly.is_zero()) {
        if (++guard > 500000) throw InternalError("local reduction failed to terminate");
        const auto& [mh, ch] = h.poly.leading_term(order);
        int best = -1;
        int best_ecart = 0;
        for (std::size_t t = 0; t < reducers.size(); ++t) {
            if (!reducers[t].poly.leading_term(order).first.divides(mh)) continue;
            const int e = local_ecart(reducers[t].poly);
            if (best < 0 || e < best_ecart) {
                best = static_cast<int>(t);
                best_ecart = e;
            }
        }
        if (best < 0) break;
        // Enlarging the reducer list with the current intermediate result is
        // what makes the local division terminate.
        if (best_ecart > local_ecart(h.poly)) reducers.push_back(h);
        const Tracked& g = reducers[static_cast<std::size_t>(best)];
        const auto& [mg, cg] = g.poly.leading_term(order);
        const Monomial q = mh.quotient_by(mg);
        const Scalar c = ch / cg;
        h.poly = h.poly - g.poly.times_term(q, c);
        h.alpha = h.alpha - g.alpha.times_term(q, c);
        for (std::size_t i = 0; i < nb; ++i) {
            h.beta[i] = h.beta[i] - g.beta[i].times_term(q, c);
        }
    }

    MoraResult out{h.poly, h.alpha, {}};
    out.quotients.reserve(nb);
    for (std::size_t i = 0; i < nb; ++i) out.quotients.push_back(-h.beta[i]);
    if (!out.unit.constant_term().is_one()) {
        throw InternalError("local reduction produced a non-unit cofactor");
    }
    return out;
}

namespace {

// Shared pair-queue driver for both basis algorithms. The reduction step and
// the use of Buchberger's two criteria differ between the global and local
// cases; the criteria are only applied where they are classically justified.
std::vector<Polynomial> complete_basis(std::vector<Polynomial> g, OrderKind order,
                                       bool use_criteria) {
    std::set<std::pair<std::size_t, std::size_t>> pending;
    for (std::size_t i = 0; i < g.size(); ++i) {
        for (std::size_t j = i + 1; j < g.size(); ++j) pending.insert({i, j});
    }
    const auto lm = [&](std::size_t i) { return g[i].leading_term(order).first; };

    while (!pending.empty()) {
        std::optional<PairKey> best;
        for (const auto& [i, j] : pending) {
            const Monomial l = Monomial::lcm(lm(i), lm(j));
            PairKey key{l.total_degree(), l, i, j};
            if (!best || pair_key_less(key, *best)) best = key;
        }
        const std::size_t i = best->i, j = best->j;
        pending.erase({i, j});

        if (use_criteria) {
            if (lm(i).coprime_with(lm(j))) continue;
            bool chained = false;
            for (std::size_t k = 0; k < g.size() && !chained; ++k) {
                if (k == i || k == j) continue;
                if (!lm(k).divides(best->lcm)) continue;
                const auto pik = std::minmax(i, k);
                const auto pjk = std::minmax(j, k);
                if (pending.count({pik.first, pik.second}) == 0 &&
                    pending.count({pjk.first, pjk.second}) == 0) {
                    chained = true;
                }
            }
            if (chained) continue;
        }

        const Polynomial s = s_polynomial(g[i], g[j], order);
        Polynomial r = order == OrderKind::DegRevLexGlobal
                           ? global_divide(s, g, order).remainder
                           : mora_normal_form(s, g, order).normal_form;
        if (r.is_zero()) continue;
        g.push_back(r.monic(order));
        const std::size_t added = g.size() - 1;
        for (std::size_t k = 0; k < added; ++k) pending.insert({k, added});
    }
    return g;
}

// Keeps only elements whose leading monomial is divided by no other kept
// leading monomial; among equal leading monomials the first survives.
std::vector<Polynomial> minimalize(std::vector<Polynomial> g, OrderKind order) {
    std::vector<std::size_t> idx(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) idx[i] = i;
    // A divisor never follows its multiple in this sort: divisibility implies
    // smaller-or-equal in the global order and larger-or-equal in the local one.
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const int c = compare(g[a].leading_term(order).first, g[b].leading_term(order).first, order);
        if (c != 0) return order == OrderKind::DegRevLexGlobal ? c < 0 : c > 0;
        return a < b;
    });
    std::vector<Polynomial> kept;
    for (std::size_t id : idx) {
        const Monomial& m = g[id].leading_term(order).first;
        bool redundant = false;
        for (const auto& k : kept) {
            if (k.leading_term(order).first.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(g[id]);
    }
    return kept;
}

}  // namespace

ComputedBasis buchberger(const IdealData& ideal, OrderKind order) {
    if (order != OrderKind::DegRevLexGlobal) {
        throw InternalError("buchberger requires a global ordering");
    }
    ComputedBasis out{ideal.context, order, BasisKind::Groebner, {}};
    if (ideal.is_zero_ideal()) return out;

    std::vector<Polynomial> g = complete_basis(ideal.generators, order, true);
    g = minimalize(std::move(g), order);
    // Tail-reduce each element against the others; leading monomials are
    // already pairwise non-dividing, so they survive reduction unchanged and
    // one pass yields the reduced basis (which is unique for the ideal).
    for (std::size_t i = 0; i < g.size(); ++i) {
        std::vector<Polynomial> others;
        for (std::size_t j = 0; j < g.size(); ++j) {
            if (j != i) others.push_back(g[j]);
        }
        g[i] = global_divide(g[i], others, order).remainder.monic(order);
    }
    std::sort(g.begin(), g.end(), [order](const Polynomial& a, const Polynomial& b) {
        return compare(a.leading_term(order).first, b.leading_term(order).first, order) < 0;
    });
    out.elements = std::move(g);
    return out;
}

ComputedBasis standard_basis(const IdealData& ideal, OrderKind order) {
    if (order != OrderKind::DegRevLexLocal) {
        throw InternalError("standard basis requires a local ordering");
    }
    ComputedBasis out{ideal.context, order, BasisKind::Standard, {}};
    if (ideal.is_zero_ideal()) return out;

    // No pair criteria here: their classical justifications assume a
    // well-ordering, and the desk-scale inputs make the extra reductions cheap.
    std::vector<Polynomial> g = complete_basis(ideal.generators, order, false);
    g = minimalize(std::move(g), order);
    for (auto& p : g) p = p.monic(order);
    std::sort(g.begin(), g.end(), [order](const Polynomial& a, const Polynomial& b) {
        const int c = compare(a.leading_term(order).first, b.leading_term(order).first, order);
        if (c != 0) return c > 0;  // largest local leading monomial first
        return compare(a.leading_term(OrderKind::DegRevLexGlobal).first,
                       b.leading_term(OrderKind::DegRevLexGlobal).first,
                       OrderKind::DegRevLexGlobal) < 0;
    });
    out.elements = std::move(g);
    return out;
}

ComputedBasis compute_basis(const IdealData& ideal, Mode mode) {
    return mode == Mode::Graded ? buchberger(ideal, OrderKind::DegRevLexGlobal)
                                : standard_basis(ideal, OrderKind::DegRevLexLocal);
}

const ComputedBasis& BasisCache::get(const IdealData& ideal, Mode mode) {
    const std::string key = mode_name(mode) + "|" + ideal.cache_key();
    auto it = store_.find(key);
    if (it == store_.end()) {
        it = store_.emplace(key, compute_basis(ideal, mode)).first;
    }
    return it->second;
}

const ComputedBasis& cached_basis(const IdealData& ideal, Mode mode, BasisCache* cache,
                                  ComputedBasis& scratch) {
    if (cache) return cache->get(ideal, mode);
    scratch = compute_basis(ideal, mode);
    return scratch;
}

bool is_member(const Polynomial& f, const IdealData& ideal, Mode mode, BasisCache* cache) {
    if (f.is_zero()) return true;
    if (ideal.is_zero_ideal()) return false;
    ComputedBasis scratch{ideal.context, order_for(mode), BasisKind::Groebner, {}};
    const ComputedBasis& basis = cached_basis(ideal, mode, cache, scratch);
    if (mode == Mode::Graded) {
        return global_divide(f, basis.elements, basis.order).remainder.is_zero();
    }
    return mora_normal_form(f, basis.elements, basis.order).normal_form.is_zero();
}

Polynomial canonical_representative(const Polynomial& f, const IdealData& ideal,
                                    BasisCache* cache) {
    if (ideal.is_zero_ideal()) return f;
    ComputedBasis scratch{ideal.context, OrderKind::DegRevLexGlobal, BasisKind::Groebner, {}};
    const ComputedBasis& basis = cached_basis(ideal, Mode::Graded, cache, scratch);
    return global_divide(f, basis.elements, basis.order).remainder;
}

}  // namespace liftlocal
