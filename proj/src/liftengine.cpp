#include "liftlocal/liftengine.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace liftlocal {

namespace {

IdealData extend_ideal(const IdealData& base, const std::vector<Polynomial>& extra) {
    std::vector<Polynomial> gens = base.generators;
    gens.insert(gens.end(), extra.begin(), extra.end());
    return IdealData(base.context, std::move(gens));
}

int dim_of(const IdealData& ideal, Mode mode, BasisCache* cache) {
    return krull_dimension(ideal, mode, cache).dimension;
}

// Normal form of f modulo the ideal under the mode's notion of reduction;
// zero exactly when f is a member.
Polynomial residue_mod(const Polynomial& f, const IdealData& ideal, Mode mode,
                       BasisCache* cache) {
    if (ideal.is_zero_ideal()) return f;
    ComputedBasis scratch;
    const ComputedBasis& basis = cached_basis(ideal, mode, cache, scratch);
    if (mode == Mode::Graded) {
        return global_divide(f, basis.elements, basis.order).remainder;
    }
    return mora_normal_form(f, basis.elements, basis.order).normal_form;
}

// All monomials of the exact total degree, ascending in the global order.
std::vector<Monomial> monomials_of_degree(std::size_t n, unsigned deg) {
    std::vector<Monomial> out;
    Monomial work = Monomial::one(n);
    const auto rec = [&](auto&& self, std::size_t pos, unsigned left) -> void {
        if (pos + 1 == n) {
            work.exponents[pos] = left;
            out.push_back(work);
            work.exponents[pos] = 0;
            return;
        }
        for (unsigned e = 0; e <= left; ++e) {
            work.exponents[pos] = e;
            self(self, pos + 1, left - e);
        }
        work.exponents[pos] = 0;
    };
    rec(rec, 0, deg);
    std::sort(out.begin(), out.end(), [](const Monomial& a, const Monomial& b) {
        return compare(a, b, OrderKind::DegRevLexGlobal) < 0;
    });
    return out;
}

// Lexicographically next size-k subset of {0..limit-1}; false when exhausted.
bool next_combination(std::vector<std::size_t>& pick, std::size_t limit) {
    const std::size_t k = pick.size();
    std::size_t i = k;
    while (i > 0) {
        --i;
        if (pick[i] + (k - i) < limit) {
            ++pick[i];
            for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
            return true;
        }
    }
    return false;
}

constexpr std::uint64_t kSeedMix = 0x9E3779B97F4A7C15ULL;
constexpr long kSweepRawCap = 5000000;

}  // namespace

Presentation Presentation::make(ContextPtr ctx, IdealData ideal, Mode mode,
                                BasisCache* cache) {
    if (!(*ideal.context == *ctx)) {
        throw ValidationError("presentation ideal lives over a different context");
    }
    if (!ideal.contained_in_maximal()) {
        throw ValidationError("presentation ideal must sit inside the maximal ideal");
    }
    if (mode == Mode::Graded && !ideal.is_homogeneous()) {
        throw ValidationError("graded mode requires a homogeneous presentation ideal");
    }
    BasisCache local;
    BasisCache* c = cache ? cache : &local;
    const int d = krull_dimension(ideal, mode, c).dimension;
    const int e = embedding_dimension(ideal);
    const int n = static_cast<int>(ctx->size());
    if (d < 0 || d > e || e > n) {
        throw InternalError("presentation invariants out of order (dim, embdim, n)");
    }
    return Presentation{std::move(ctx), std::move(ideal), mode, d, e};
}

SelfMapOnA::SelfMapOnA(Presentation pres, VariableMap map, BasisCache* cache)
    : pres_(std::move(pres)), map_(std::move(map)) {
    if (!(*map_.context() == *pres_.context)) {
        throw ValidationError("map and presentation live over different contexts");
    }
    if (pres_.mode == Mode::Graded) {
        unsigned delta = 0;
        for (const Polynomial& h : map_.images()) {
            if (h.is_zero()) continue;
            if (!h.is_homogeneous()) {
                throw ValidationError("graded mode requires homogeneous variable images");
            }
            const unsigned deg = h.total_degree();
            if (delta == 0) {
                delta = deg;
            } else if (deg != delta) {
                throw ValidationError("graded mode requires one common image degree");
            }
        }
        if (delta == 0) {
            // Zero map: any uniform degree works, so pick one the ideal's
            // generators can reach with monomial multipliers.
            for (const Polynomial& g : pres_.ideal.generators) {
                delta = std::max(delta, g.total_degree());
            }
            if (delta == 0) delta = 1;
        }
        graded_degree_ = delta;
    }
    BasisCache local;
    BasisCache* c = cache ? cache : &local;
    for (const Polynomial& g : pres_.ideal.generators) {
        if (!is_member(substitute(g, map_), pres_.ideal, pres_.mode, c)) {
            throw IllDefinedMapError("the map sends generator " + g.to_string() +
                                     " outside the ideal, so it does not descend");
        }
    }
}

bool is_finite_map(const SelfMapOnA& m, BasisCache* cache) {
    const Presentation& pres = m.presentation();
    std::vector<Polynomial> gens = m.map().images();
    gens.insert(gens.end(), pres.ideal.generators.begin(), pres.ideal.generators.end());
    return is_m_primary(IdealData(pres.context, std::move(gens)), pres.mode, cache);
}

SOPCertificate strong_sop(const Presentation& pres, const SearchOptions& opts,
                          BasisCache* cache) {
    const ContextPtr& ctx = pres.context;
    const FieldSpec& field = ctx->field();
    const std::size_t n = ctx->size();
    const int d = pres.dim_a;

    LinearSpan base(n, field);
    for (const Polynomial& g : pres.ideal.generators) {
        base.insert(linear_row(g.linear_part()));
    }
    const int base_rank = base.rank();

    // Variables whose classes minimally generate the quotient's maximal ideal:
    // exactly those extending the span of the generators' linear parts.
    std::vector<std::size_t> min_gens;
    {
        LinearSpan probe = base;
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<Scalar> unit(n, Scalar::zero(field));
            unit[v] = Scalar::one(field);
            if (probe.insert(std::move(unit))) min_gens.push_back(v);
        }
    }
    if (static_cast<int>(min_gens.size()) != pres.emb_dim) {
        throw InternalError("minimal generator count disagrees with the embedding dimension");
    }

    SOPCertificate cert{{}, {}, RankWitness{base_rank, base_rank}, 0};
    if (d == 0) return cert;

    const std::size_t e = min_gens.size();
    LinearSpan span = base;

    for (int step = 1; step <= d; ++step) {
        const int target = d - step;
        long attempts = 0;
        bool found = false;
        std::set<std::string> seen;

        const auto consider = [&](const Polynomial& cand) -> bool {
            if (cand.is_zero() || !seen.insert(cand.to_string()).second) return false;
            if (attempts >= opts.max_attempts) {
                throw SearchExhaustedError(step, attempts);
            }
            ++attempts;
            ++cert.attempts;
            std::vector<Scalar> row = linear_row(cand);
            if (span.contains(row)) return false;
            std::vector<Polynomial> prefix = cert.elements;
            prefix.push_back(cand);
            if (dim_of(extend_ideal(pres.ideal, prefix), pres.mode, cache) != target) {
                return false;
            }
            cert.elements.push_back(cand);
            cert.dimension_trace.push_back(target);
            span.insert(std::move(row));
            return true;
        };

        // Single minimal generators first.
        for (std::size_t v : min_gens) {
            if (consider(Polynomial::variable(ctx, v))) {
                found = true;
                break;
            }
        }

        // Combinations by support size, then coefficient tuples; candidates
        // are normalized to leading coefficient one since the two conditions
        // only depend on the spanned line.
        const unsigned max_bound =
            field.is_prime_field() ? 1u : static_cast<unsigned>(std::max(1, opts.coeff_bound));
        long raw = 0;
        for (unsigned bound = 1; bound <= max_bound && !found; ++bound) {
            const unsigned pool_bound = field.is_prime_field() ? 0u : bound;
            const std::uint64_t psize = pool_size(field, pool_bound);
            for (std::size_t support = 2; support <= e && !found; ++support) {
                std::vector<std::size_t> pick(support);
                for (std::size_t i = 0; i < support; ++i) pick[i] = i;
                do {
                    // Nonzero coefficient tuple over the support, last slot fastest.
                    std::vector<std::uint64_t> idx(support, 1);
                    while (true) {
                        if (++raw > kSweepRawCap) break;
                        Polynomial cand(ctx);
                        for (std::size_t k = 0; k < support; ++k) {
                            cand = cand + Polynomial::variable(ctx, min_gens[pick[k]])
                                              .scaled(pool_at(field, pool_bound, idx[k]));
                        }
                        cand = cand.scaled(pool_at(field, pool_bound, idx[0]).inv());
                        if (consider(cand)) {
                            found = true;
                            break;
                        }
                        std::size_t k = support;
                        bool carry = true;
                        while (k > 0 && carry) {
                            --k;
                            if (++idx[k] < psize) {
                                carry = false;
                            } else {
                                idx[k] = 1;
                            }
                        }
                        if (carry) break;
                    }
                } while (!found && raw <= kSweepRawCap && next_combination(pick, e));
            }
            if (raw > kSweepRawCap) break;
        }

        // Seeded sparse random stage.
        if (!found) {
            std::mt19937_64 rng(opts.seed * kSeedMix + 0x51EB851Fu +
                                static_cast<std::uint64_t>(step));
            const unsigned pool_bound =
                field.is_prime_field() ? 0u : static_cast<unsigned>(std::max(1, opts.coeff_bound));
            const std::uint64_t psize = pool_size(field, pool_bound);
            long spins = 0;
            const long spin_cap = 64 * std::max(opts.max_attempts, 1L) + 1024;
            while (!found) {
                if (++spins > spin_cap) {
                    throw SearchExhaustedError(step, attempts);
                }
                const std::size_t support =
                    1 + static_cast<std::size_t>(rng() % std::min<std::size_t>(e, 4));
                std::vector<Scalar> coeffs(e, Scalar::zero(field));
                for (std::size_t s = 0; s < support; ++s) {
                    coeffs[rng() % e] = pool_at(field, pool_bound, 1 + rng() % (psize - 1));
                }
                Polynomial cand(ctx);
                int first = -1;
                for (std::size_t k = 0; k < e; ++k) {
                    if (coeffs[k].is_zero()) continue;
                    if (first < 0) first = static_cast<int>(k);
                    cand = cand + Polynomial::variable(ctx, min_gens[k]).scaled(coeffs[k]);
                }
                if (first < 0) continue;
                cand = cand.scaled(coeffs[static_cast<std::size_t>(first)].inv());
                if (consider(cand)) found = true;
            }
        }
    }

    cert.rank_witness = RankWitness{base_rank, span.rank()};
    if (cert.rank_witness.combined_rank != base_rank + d) {
        throw InternalError("parameter ranks fail to grow one per element");
    }
    return cert;
}

CosetStep coset_avoid(const Polynomial& u, const Presentation& pres,
                      const std::vector<Polynomial>& fixed, int target_dim,
                      const SearchOptions& opts, BasisCache* cache, int step_index,
                      unsigned graded_degree) {
    const ContextPtr& ctx = pres.context;
    const FieldSpec& field = ctx->field();

    if (dim_of(extend_ideal(pres.ideal, fixed), pres.mode, cache) != 0) {
        throw InternalError("coset avoidance requires the fixed elements plus the ideal "
                            "to be m-primary");
    }

    // Atoms are monomial multiples of the ideal generators; candidates are u
    // plus small combinations of atoms. In graded mode the multiplier degree
    // is forced by the common image degree.
    std::vector<Polynomial> atoms;
    const Scalar one = Scalar::one(field);
    if (graded_degree > 0) {
        for (const Polynomial& g : pres.ideal.generators) {
            if (g.total_degree() > graded_degree) continue;
            for (const Monomial& m :
                 monomials_of_degree(ctx->size(), graded_degree - g.total_degree())) {
                atoms.push_back(g.times_term(m, one));
            }
        }
    } else {
        const unsigned cap = static_cast<unsigned>(std::max(0, opts.adjuster_degree_cap));
        for (unsigned deg = 0; deg <= cap; ++deg) {
            for (const Monomial& m : monomials_of_degree(ctx->size(), deg)) {
                for (const Polynomial& g : pres.ideal.generators) {
                    atoms.push_back(g.times_term(m, one));
                }
            }
        }
    }

    long attempts = 0;
    bool found = false;
    CosetStep result{Polynomial(ctx), Polynomial(ctx), 0};
    std::set<std::string> seen;

    const auto consider = [&](const Polynomial& adjuster) -> bool {
        if (!seen.insert(adjuster.to_string()).second) return false;
        Polynomial f = u + adjuster;
        if (f.is_zero()) return false;
        if (graded_degree > 0 && !f.is_homogeneous()) return false;
        if (attempts >= opts.max_attempts) {
            throw SearchExhaustedError(step_index, attempts);
        }
        ++attempts;
        std::vector<Polynomial> ext = fixed;
        ext.push_back(f);
        if (dim_of(IdealData(ctx, std::move(ext)), pres.mode, cache) != target_dim) {
            return false;
        }
        result = CosetStep{std::move(f), adjuster, attempts};
        found = true;
        return true;
    };

    consider(Polynomial::zero(ctx));

    const unsigned max_bound =
        field.is_prime_field() ? 1u : static_cast<unsigned>(std::max(1, opts.coeff_bound));
    long raw = 0;
    for (unsigned bound = 1; bound <= max_bound && !found; ++bound) {
        const unsigned pool_bound = field.is_prime_field() ? 0u : bound;
        const std::uint64_t psize = pool_size(field, pool_bound);
        for (std::size_t a = 0; a < atoms.size() && !found; ++a) {
            for (std::uint64_t c = 1; c < psize && !found; ++c) {
                if (++raw > kSweepRawCap) break;
                consider(atoms[a].scaled(pool_at(field, pool_bound, c)));
            }
        }
        for (std::size_t a = 0; a + 1 < atoms.size() && !found && raw <= kSweepRawCap; ++a) {
            for (std::size_t b = a + 1; b < atoms.size() && !found; ++b) {
                for (std::uint64_t ca = 1; ca < psize && !found; ++ca) {
                    for (std::uint64_t cb = 1; cb < psize && !found; ++cb) {
                        if (++raw > kSweepRawCap) break;
                        consider(atoms[a].scaled(pool_at(field, pool_bound, ca)) +
                                 atoms[b].scaled(pool_at(field, pool_bound, cb)));
                    }
                }
            }
        }
        if (raw > kSweepRawCap) break;
    }

    if (!found && !atoms.empty()) {
        std::mt19937_64 rng(opts.seed * kSeedMix + 0x2545F491u +
                            static_cast<std::uint64_t>(step_index));
        const unsigned pool_bound =
            field.is_prime_field() ? 0u : static_cast<unsigned>(std::max(1, opts.coeff_bound));
        const std::uint64_t psize = pool_size(field, pool_bound);
        long spins = 0;
        const long spin_cap = 64 * std::max(opts.max_attempts, 1L) + 1024;
        while (!found) {
            if (++spins > spin_cap) {
                throw SearchExhaustedError(step_index, attempts);
            }
            const std::size_t parts =
                1 + static_cast<std::size_t>(rng() % std::min<std::size_t>(atoms.size(), 3));
            Polynomial adjuster(ctx);
            for (std::size_t s = 0; s < parts; ++s) {
                adjuster = adjuster + atoms[rng() % atoms.size()].scaled(
                                          pool_at(field, pool_bound, 1 + rng() % (psize - 1)));
            }
            consider(adjuster);
        }
    }
    if (!found) {
        throw SearchExhaustedError(step_index, attempts);
    }
    return result;
}

LiftCertificate lift_map(const SelfMapOnA& m, const SearchOptions& opts, BasisCache* cache) {
    BasisCache fallback;
    if (!cache) cache = &fallback;
    const Presentation& pres = m.presentation();
    const ContextPtr& ctx = pres.context;
    const FieldSpec& field = ctx->field();
    const std::size_t n = ctx->size();
    const Mode mode = pres.mode;
    const int d = pres.dim_a;

    if (!is_finite_map(m, cache)) {
        throw NotFiniteError("the variable images together with the ideal are not "
                             "m-primary, so the map is not finite and has no lift here");
    }

    long attempts = 0;
    SOPCertificate sop = strong_sop(pres, opts, cache);
    attempts += sop.attempts;

    // Coordinate change: parameter linear forms first, completed to a basis
    // of the degree-one forms by coordinate variables.
    RankExtension extension = linear_rank_extend(sop.elements, ctx);
    if (extension.rank != d ||
        sop.elements.size() + extension.completion.size() != n) {
        throw InternalError("parameter linear forms do not complete to a basis");
    }
    ScalarMatrix change(field, n);
    for (std::size_t i = 0; i < n; ++i) {
        const Polynomial& form = i < static_cast<std::size_t>(d)
                                     ? sop.elements[i]
                                     : extension.completion[i - static_cast<std::size_t>(d)];
        std::vector<Scalar> row = linear_row(form);
        for (std::size_t j = 0; j < n; ++j) change.at(i, j) = row[j];
    }
    const auto inverse = change.inverse();
    if (!inverse) throw InternalError("coordinate change matrix is singular");
    const ScalarMatrix& change_inv = *inverse;
    const VariableMap to_new = matrix_substitution(change_inv, ctx);
    const VariableMap to_old = matrix_substitution(change, ctx);

    // Presentation and map images rewritten in the new coordinates, where the
    // parameters are the first d variables.
    std::vector<Polynomial> moved_gens;
    for (const Polynomial& g : pres.ideal.generators) {
        moved_gens.push_back(substitute(g, to_new));
    }
    Presentation moved = Presentation::make(ctx, IdealData(ctx, moved_gens), mode, cache);
    if (moved.dim_a != d) {
        throw InternalError("dimension changed under a linear coordinate change");
    }
    std::vector<Polynomial> moved_images;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial combo(ctx);
        for (std::size_t j = 0; j < n; ++j) {
            combo = combo + m.map().image(j).scaled(change.at(i, j));
        }
        moved_images.push_back(substitute(combo, to_new));
    }

    // First d images: canonical representatives of the parameter images; their
    // span already has the right height because the map is finite.
    std::vector<Polynomial> chosen;
    for (int i = 0; i < d; ++i) {
        chosen.push_back(canonical_representative(moved_images[i], moved.ideal, cache));
    }
    if (d > 0 &&
        dim_of(IdealData(ctx, chosen), mode, cache) != static_cast<int>(n) - d) {
        throw InternalError("parameter images have the wrong height");
    }

    // Remaining images: coset avoidance, one dimension drop per step.
    const unsigned graded_degree = mode == Mode::Graded ? m.graded_degree() : 0u;
    for (std::size_t t = d; t < n; ++t) {
        const Polynomial rep = canonical_representative(moved_images[t], moved.ideal, cache);
        CosetStep step = coset_avoid(rep, moved, chosen, static_cast<int>(n - t) - 1, opts,
                                     cache, static_cast<int>(t) + 1, graded_degree);
        attempts += step.attempts;
        chosen.push_back(step.element);
    }

    // Back to the original coordinates.
    std::vector<Polynomial> lifted;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial image(ctx);
        for (std::size_t j = 0; j < n; ++j) {
            image = image + substitute(chosen[j], to_old).scaled(change_inv.at(i, j));
        }
        lifted.push_back(image);
    }
    VariableMap psi(ctx, lifted);

    // Dimension trace and per-variable adjusters in the original coordinates.
    std::vector<TraceRow> trace;
    for (std::size_t t = 1; t <= n; ++t) {
        std::vector<Polynomial> prefix(lifted.begin(), lifted.begin() + t);
        const int dim_t = dim_of(IdealData(ctx, std::move(prefix)), mode, cache);
        if (dim_t != static_cast<int>(n - t)) {
            throw InternalError("image prefix dimensions do not drop one per step");
        }
        Polynomial adjuster = lifted[t - 1] - m.map().image(t - 1);
        if (!is_member(adjuster, pres.ideal, mode, cache)) {
            throw InternalError("a lifted image left its residue class");
        }
        trace.push_back(TraceRow{static_cast<int>(t), dim_t, std::move(adjuster)});
    }

    std::vector<Polynomial> residues;
    for (std::size_t i = 0; i < n; ++i) {
        Polynomial nf = residue_mod(lifted[i] - m.map().image(i), pres.ideal, mode, cache);
        if (!nf.is_zero()) {
            throw InternalError("commutation residue is nonzero");
        }
        residues.push_back(std::move(nf));
    }

    const auto qdim = quotient_k_dimension(IdealData(ctx, lifted), mode, cache);
    if (!qdim) {
        throw InternalError("lifted images are not m-primary despite the trace");
    }

    VerificationReport report = verify_lift(m, psi, cache);
    if (!report.all_pass()) {
        throw InternalError("final verification of the lift failed");
    }

    return LiftCertificate{std::move(psi),    change,   change_inv, std::move(trace),
                           std::move(residues), *qdim,   opts.seed,  attempts};
}

VerificationReport verify_lift(const SelfMapOnA& m, const VariableMap& psi,
                               BasisCache* cache) {
    BasisCache fallback;
    if (!cache) cache = &fallback;
    const Presentation& pres = m.presentation();
    const ContextPtr& ctx = pres.context;
    if (!(*psi.context() == *ctx)) {
        throw ValidationError("candidate lift lives over a different context");
    }
    const Mode mode = pres.mode;

    CheckResult commutation{true, "all residues zero"};
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        Polynomial nf =
            residue_mod(psi.image(i) - m.map().image(i), pres.ideal, mode, cache);
        if (!nf.is_zero()) {
            commutation = CheckResult{false, ctx->name(i) + ": residue " + nf.to_string()};
            break;
        }
    }

    CheckResult stability{true, "all generator images in the ideal"};
    for (const Polynomial& g : pres.ideal.generators) {
        Polynomial nf = residue_mod(substitute(g, psi), pres.ideal, mode, cache);
        if (!nf.is_zero()) {
            stability = CheckResult{
                false, "generator " + g.to_string() + ": residue " + nf.to_string()};
            break;
        }
    }

    CheckResult cofinite{true, ""};
    try {
        IdealData images(ctx, psi.images());
        DimensionReport report = krull_dimension(images, mode, cache);
        if (report.dimension == 0) {
            const auto qdim = quotient_k_dimension(images, mode, cache);
            if (!qdim) throw InternalError("dimension zero without a finite quotient count");
            cofinite.witness = "quotient dimension " + std::to_string(*qdim);
        } else {
            std::string vars;
            for (int v : report.witness) {
                if (!vars.empty()) vars += ", ";
                vars += ctx->name(static_cast<std::size_t>(v));
            }
            cofinite = CheckResult{false, "dimension " + std::to_string(report.dimension) +
                                              ", witness {" + vars + "}"};
        }
    } catch (const ValidationError& err) {
        cofinite = CheckResult{false, err.what()};
    }

    return VerificationReport{commutation, stability, cofinite};
}

Polynomial RingMap::apply(const Polynomial& p) const {
    if (!(*p.context() == *from)) {
        throw ValidationError("ring map applied to a polynomial over the wrong source");
    }
    std::vector<std::vector<Polynomial>> powers(from->size());
    const auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
        auto& cacheline = powers[v];
        if (cacheline.empty()) {
            cacheline.push_back(Polynomial::constant(to, Scalar::one(to->field())));
        }
        while (cacheline.size() <= e) {
            cacheline.push_back(cacheline.back() * images[v]);
        }
        return cacheline[e];
    };
    Polynomial out(to);
    for (const auto& [mono, coeff] : p.terms()) {
        Polynomial factor = Polynomial::constant(to, coeff);
        for (std::size_t v = 0; v < from->size(); ++v) {
            if (mono.exponents[v] > 0) factor = factor * power(v, mono.exponents[v]);
        }
        out = out + factor;
    }
    return out;
}

MinimalPresentationResult minimal_presentation(const Presentation& pres, BasisCache* cache) {
    const ContextPtr& old_ctx = pres.context;
    const std::size_t n = old_ctx->size();
    const FieldSpec& field = old_ctx->field();

    std::vector<Polynomial> gens = pres.ideal.generators;
    std::vector<bool> alive(n, true);
    std::vector<Polynomial> value_of;
    value_of.reserve(n);
    for (std::size_t v = 0; v < n; ++v) {
        value_of.push_back(Polynomial::variable(old_ctx, v));
    }

    while (true) {
        // A generator where some variable occurs exactly once, in a bare
        // degree-one term, can be solved for that variable.
        std::size_t gen_i = gens.size();
        std::size_t var_j = n;
        Scalar coeff = Scalar::zero(field);
        for (std::size_t gi = 0; gi < gens.size() && gen_i == gens.size(); ++gi) {
            for (std::size_t v = 0; v < n && gen_i == gens.size(); ++v) {
                Scalar c = Scalar::zero(field);
                bool elsewhere = false;
                for (const auto& [mono, sc] : gens[gi].terms()) {
                    if (mono.total_degree() == 1 && mono.exponents[v] == 1) {
                        c = sc;
                    } else if (mono.exponents[v] > 0) {
                        elsewhere = true;
                        break;
                    }
                }
                if (!c.is_zero() && !elsewhere) {
                    gen_i = gi;
                    var_j = v;
                    coeff = c;
                }
            }
        }
        if (gen_i == gens.size()) break;

        const Polynomial bare = Polynomial::variable(old_ctx, var_j).scaled(coeff);
        const Polynomial value = (gens[gen_i] - bare).scaled(coeff.inv().neg());
        std::vector<Polynomial> sub_images;
        sub_images.reserve(n);
        for (std::size_t v = 0; v < n; ++v) {
            sub_images.push_back(v == var_j ? value : Polynomial::variable(old_ctx, v));
        }
        const VariableMap sub(old_ctx, std::move(sub_images));
        for (Polynomial& g : gens) g = substitute(g, sub);
        for (Polynomial& w : value_of) w = substitute(w, sub);
        alive[var_j] = false;
        std::vector<Polynomial> kept;
        for (Polynomial& g : gens) {
            if (!g.is_zero()) kept.push_back(std::move(g));
        }
        gens = std::move(kept);
    }

    std::vector<std::string> names;
    std::vector<std::size_t> alive_idx;
    for (std::size_t v = 0; v < n; ++v) {
        if (alive[v]) {
            names.push_back(old_ctx->name(v));
            alive_idx.push_back(v);
        }
    }
    if (names.empty()) {
        throw ValidationError("the presentation collapses to the residue field; a "
                              "presentation needs at least one variable");
    }
    const ContextPtr new_ctx = make_context(names, field);

    const auto project = [&](const Polynomial& p) {
        std::vector<Polynomial::Term> terms;
        for (const auto& [mono, c] : p.terms()) {
            Monomial small = Monomial::one(alive_idx.size());
            unsigned moved = 0;
            for (std::size_t k = 0; k < alive_idx.size(); ++k) {
                small.exponents[k] = mono.exponents[alive_idx[k]];
                moved += small.exponents[k];
            }
            if (moved != mono.total_degree()) {
                throw InternalError("an eliminated variable survived the substitution");
            }
            terms.emplace_back(std::move(small), c);
        }
        return Polynomial::from_terms(new_ctx, std::move(terms));
    };

    std::vector<Polynomial> new_gens;
    for (const Polynomial& g : gens) new_gens.push_back(project(g));
    Presentation reduced =
        Presentation::make(new_ctx, IdealData(new_ctx, std::move(new_gens)), pres.mode, cache);
    if (reduced.dim_a != pres.dim_a) {
        throw InternalError("dimension changed under variable elimination");
    }

    std::vector<Polynomial> forward_images;
    for (std::size_t v = 0; v < n; ++v) forward_images.push_back(project(value_of[v]));
    std::vector<Polynomial> backward_images;
    for (std::size_t v : alive_idx) {
        backward_images.push_back(Polynomial::variable(old_ctx, v));
    }

    return MinimalPresentationResult{
        std::move(reduced), RingMap{old_ctx, new_ctx, std::move(forward_images)},
        RingMap{new_ctx, old_ctx, std::move(backward_images)}};
}

}  // namespace liftlocal
