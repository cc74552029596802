#include "liftlocal/invariants.hpp"

#include <algorithm>

namespace liftlocal {

MonomialIdeal MonomialIdeal::from_monomials(ContextPtr ctx, std::vector<Monomial> gens) {
    for (auto& m : gens) m.exponents.resize(ctx->size(), 0);
    std::vector<Monomial> minimal;
    for (std::size_t i = 0; i < gens.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < gens.size() && !redundant; ++j) {
            if (i == j) continue;
            // Strict divisor elsewhere, or an equal duplicate earlier in the list.
            if (gens[j].divides(gens[i]) && (gens[j] != gens[i] || j < i)) redundant = true;
        }
        if (!redundant) minimal.push_back(gens[i]);
    }
    std::sort(minimal.begin(), minimal.end(), [](const Monomial& a, const Monomial& b) {
        return compare(a, b, OrderKind::DegRevLexGlobal) < 0;
    });
    return MonomialIdeal{std::move(ctx), std::move(minimal)};
}

bool MonomialIdeal::is_unit() const {
    for (const auto& m : min_generators) {
        if (m.is_one()) return true;
    }
    return false;
}

bool MonomialIdeal::contains_monomial(const Monomial& m) const {
    for (const auto& g : min_generators) {
        if (g.divides(m)) return true;
    }
    return false;
}

MonomialIdeal leading_ideal(const ComputedBasis& basis) {
    std::vector<Monomial> lms;
    lms.reserve(basis.elements.size());
    for (const auto& p : basis.elements) lms.push_back(p.leading_term(basis.order).first);
    return MonomialIdeal::from_monomials(basis.context, std::move(lms));
}

DimensionReport monomial_dimension(const MonomialIdeal& m) {
    const std::size_t n = m.context->size();
    if (n > 30) throw ValidationError("dimension search limited to 30 variables");
    if (m.is_unit()) return DimensionReport{Mode::Local, -1, {}};

    // Supports as bitmasks; subset S is independent iff no support sits inside S.
    std::vector<unsigned> supports;
    supports.reserve(m.min_generators.size());
    for (const auto& g : m.min_generators) {
        unsigned s = 0;
        for (std::size_t v = 0; v < n; ++v) {
            if (g.exponents[v] > 0) s |= 1u << v;
        }
        supports.push_back(s);
    }

    int best_size = -1;
    unsigned best_mask = 0;
    const auto lex_before = [n](unsigned a, unsigned b) {
        // Compare index sequences: the first differing variable decides, and a
        // set containing it precedes one that lacks it.
        for (std::size_t v = 0; v < n; ++v) {
            const bool ina = a & (1u << v), inb = b & (1u << v);
            if (ina != inb) return ina;
        }
        return false;
    };
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        bool independent = true;
        for (unsigned s : supports) {
            if ((s & mask) == s) {
                independent = false;
                break;
            }
        }
        if (!independent) continue;
        const int size = __builtin_popcount(mask);
        if (size > best_size || (size == best_size && lex_before(mask, best_mask))) {
            best_size = size;
            best_mask = mask;
        }
    }

    DimensionReport out{Mode::Local, best_size, {}};
    for (std::size_t v = 0; v < n; ++v) {
        if (best_mask & (1u << v)) out.witness.push_back(static_cast<int>(v));
    }
    return out;
}

namespace {

void validate_for_mode(const IdealData& ideal, Mode mode) {
    if (mode == Mode::Graded) {
        if (!ideal.is_homogeneous()) {
            throw ValidationError("graded mode requires homogeneous generators");
        }
    } else if (!ideal.contained_in_maximal()) {
        throw ValidationError("local mode requires generators with zero constant term");
    }
}

}  // namespace

DimensionReport krull_dimension(const IdealData& ideal, Mode mode, BasisCache* cache) {
    validate_for_mode(ideal, mode);
    if (ideal.is_zero_ideal()) {
        DimensionReport out{mode, static_cast<int>(ideal.context->size()), {}};
        for (std::size_t v = 0; v < ideal.context->size(); ++v) {
            out.witness.push_back(static_cast<int>(v));
        }
        return out;
    }
    ComputedBasis scratch{ideal.context, order_for(mode), BasisKind::Groebner, {}};
    const ComputedBasis& basis = cached_basis(ideal, mode, cache, scratch);
    DimensionReport out = monomial_dimension(leading_ideal(basis));
    out.mode = mode;
    return out;
}

bool is_m_primary(const IdealData& ideal, Mode mode, BasisCache* cache) {
    if (!ideal.contained_in_maximal()) {
        throw ValidationError("m-primary test requires generators inside the maximal ideal");
    }
    return krull_dimension(ideal, mode, cache).dimension == 0;
}

std::optional<unsigned long long> quotient_k_dimension(const IdealData& ideal, Mode mode,
                                                       BasisCache* cache) {
    if (!is_m_primary(ideal, mode, cache)) return std::nullopt;
    ComputedBasis scratch{ideal.context, order_for(mode), BasisKind::Groebner, {}};
    const ComputedBasis& basis = cached_basis(ideal, mode, cache, scratch);
    const MonomialIdeal lead = leading_ideal(basis);
    const std::size_t n = ideal.context->size();

    // Count standard monomials degree level by degree level. Once a level is
    // empty every higher level is too (each monomial there is a variable times
    // a monomial of the empty level), and m-primariness makes that happen.
    unsigned long long total = 0;
    std::vector<unsigned> expo(n, 0);
    for (unsigned level = 0;; ++level) {
        unsigned long long count = 0;
        // Enumerate exponent tuples with total degree exactly `level`.
        const auto enumerate = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
            if (var + 1 == n) {
                expo[var] = remaining;
                if (!lead.contains_monomial(Monomial{expo})) ++count;
                return;
            }
            for (unsigned e = 0; e <= remaining; ++e) {
                expo[var] = e;
                self(self, var + 1, remaining - e);
            }
        };
        enumerate(enumerate, 0, level);
        if (count == 0) break;
        total += count;
        if (level > 10000) throw InternalError("standard monomial count failed to stabilize");
    }
    return total;
}

int embedding_dimension(const IdealData& ideal) {
    std::vector<Polynomial> parts;
    for (const auto& g : ideal.generators) parts.push_back(g.linear_part());
    return static_cast<int>(ideal.context->size()) - linear_rank(parts, ideal.context);
}

}  // namespace liftlocal
