#include "liftlocal/oracle.hpp"

#include <algorithm>
#include <array>

namespace liftlocal {

int monomial_dim_bruteforce(const MonomialIdeal& m, const OracleBudget& budget) {
    const std::size_t n = m.context->size();
    if (n > static_cast<std::size_t>(budget.max_variables)) {
        throw BudgetExceededError("subset scan beyond oracle budget");
    }
    int best = -1;
    std::vector<bool> chosen(n, false);
    // Depth-first over all subsets, deciding variable by variable.
    const auto walk = [&](auto&& self, std::size_t var) -> void {
        if (var == n) {
            for (const auto& gen : m.min_generators) {
                bool inside = true;
                for (std::size_t v = 0; v < n; ++v) {
                    if (gen.exponents[v] > 0 && !chosen[v]) {
                        inside = false;
                        break;
                    }
                }
                if (inside) return;  // a generator lives on the chosen variables
            }
            int size = 0;
            for (std::size_t v = 0; v < n; ++v) size += chosen[v] ? 1 : 0;
            best = std::max(best, size);
            return;
        }
        chosen[var] = false;
        self(self, var + 1);
        chosen[var] = true;
        self(self, var + 1);
        chosen[var] = false;
    };
    walk(walk, 0);
    return best;
}

BoundedStandardMonomials standard_monomials_bounded(const IdealData& ideal, Mode mode,
                                                    unsigned degree_bound,
                                                    const OracleBudget& budget) {
    const std::size_t n = ideal.context->size();
    if (n > static_cast<std::size_t>(budget.max_variables) ||
        degree_bound > static_cast<unsigned>(budget.max_degree)) {
        throw BudgetExceededError("standard monomial enumeration beyond oracle budget");
    }
    std::vector<Monomial> lead;
    if (!ideal.is_zero_ideal()) {
        const ComputedBasis basis = compute_basis(ideal, mode);
        for (const auto& p : basis.elements) lead.push_back(p.leading_term(basis.order).first);
    }

    BoundedStandardMonomials out{{}, false};
    std::vector<unsigned> expo(n, 0);
    const auto emit = [&](auto&& self, std::size_t var, unsigned remaining) -> void {
        if (var == n) {
            Monomial m{expo};
            for (const auto& l : lead) {
                if (l.divides(m)) return;
            }
            if (m.total_degree() == degree_bound) out.truncated = true;
            out.monomials.push_back(std::move(m));
            return;
        }
        for (unsigned e = 0; e <= remaining; ++e) {
            expo[var] = e;
            self(self, var + 1, remaining - e);
            expo[var] = 0;
        }
    };
    emit(emit, 0, degree_bound);
    std::sort(out.monomials.begin(), out.monomials.end(), [](const Monomial& a, const Monomial& b) {
        return compare(a, b, OrderKind::DegRevLexGlobal) < 0;
    });
    return out;
}

namespace {

// Element of F_{p^k} as a coefficient vector modulo a fixed irreducible.
// x^k reduces to the tabulated polynomial of degree < k.
struct ExtensionField {
    std::uint64_t p;
    unsigned k;
    std::array<std::uint64_t, 3> reduction;  // coefficients of x^k, low to high

    std::vector<std::uint64_t> zero() const { return std::vector<std::uint64_t>(k, 0); }

    std::vector<std::uint64_t> add(const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> out(k);
        for (unsigned i = 0; i < k; ++i) out[i] = (a[i] + b[i]) % p;
        return out;
    }

    std::vector<std::uint64_t> mul(const std::vector<std::uint64_t>& a,
                                   const std::vector<std::uint64_t>& b) const {
        std::vector<std::uint64_t> wide(2 * k - 1, 0);
        for (unsigned i = 0; i < k; ++i) {
            for (unsigned j = 0; j < k; ++j) {
                wide[i + j] = (wide[i + j] + a[i] * b[j]) % p;
            }
        }
        // Fold x^{k+t} = x^t * reduction(x) from the top down.
        for (unsigned d = 2 * k - 2; d >= k; --d) {
            const std::uint64_t c = wide[d];
            if (c != 0) {
                wide[d] = 0;
                for (unsigned i = 0; i < k; ++i) {
                    wide[d - k + i] = (wide[d - k + i] + c * reduction[i]) % p;
                }
            }
            if (d == k) break;
        }
        wide.resize(k);
        return wide;
    }

    bool is_zero(const std::vector<std::uint64_t>& a) const {
        for (auto c : a) {
            if (c != 0) return false;
        }
        return true;
    }
};

// Hard-coded irreducibles x^k - reduction for the small primes the scan
// supports; extensions without a table entry are skipped.
bool reduction_for(std::uint64_t p, unsigned k, std::array<std::uint64_t, 3>& out) {
    struct Entry {
        std::uint64_t p;
        unsigned k;
        std::array<std::uint64_t, 3> red;
    };
    // p=2: x^2+x+1, x^3+x+1; p=3: x^2+1, x^3+2x+1; p=5: x^2+2, x^3+x+1;
    // p=7: x^2+1, x^3+2.
    static const Entry table[] = {
        {2, 2, {1, 1, 0}}, {2, 3, {1, 1, 0}}, {3, 2, {2, 0, 0}}, {3, 3, {2, 1, 0}},
        {5, 2, {3, 0, 0}}, {5, 3, {4, 4, 0}}, {7, 2, {6, 0, 0}}, {7, 3, {5, 0, 0}},
    };
    for (const auto& e : table) {
        if (e.p == p && e.k == k) {
            out = e.red;
            return true;
        }
    }
    return false;
}

}  // namespace

bool zero_locus_scan(const IdealData& ideal, int extension_degree_cap,
                     const OracleBudget& budget) {
    if (!ideal.context->field().is_prime_field()) {
        throw ValidationError("zero locus scan requires a prime field");
    }
    if (!ideal.is_homogeneous()) {
        throw ValidationError("zero locus scan requires homogeneous generators");
    }
    const std::uint64_t p = ideal.context->field().characteristic();
    const std::size_t n = ideal.context->size();
    // The budget caps the extension degree the scan may reach.
    const int cap = std::min(extension_degree_cap, budget.max_field_scan_extension);

    for (int k = 1; k <= cap; ++k) {
        ExtensionField field{p, static_cast<unsigned>(k), {0, 0, 0}};
        if (k > 1 && !reduction_for(p, static_cast<unsigned>(k), field.reduction)) continue;

        double points = 1;
        for (std::size_t v = 0; v < n; ++v) points *= static_cast<double>(p) * (k > 1 ? p : 1) * (k > 2 ? p : 1);
        if (points > 4e6) throw BudgetExceededError("zero locus scan beyond point budget");

        // Walk all points of F_{p^k}^n by odometer over element indices.
        std::uint64_t per_coord = 1;
        for (int i = 0; i < k; ++i) per_coord *= p;
        std::vector<std::uint64_t> index(n, 0);
        while (true) {
            bool origin = true;
            for (auto idx : index) {
                if (idx != 0) origin = false;
            }
            if (!origin) {
                std::vector<std::vector<std::uint64_t>> point;
                point.reserve(n);
                for (auto idx : index) {
                    std::vector<std::uint64_t> coeffs(static_cast<std::size_t>(k));
                    std::uint64_t rest = idx;
                    for (int d = 0; d < k; ++d) {
                        coeffs[static_cast<std::size_t>(d)] = rest % p;
                        rest /= p;
                    }
                    point.push_back(std::move(coeffs));
                }
                bool all_vanish = true;
                for (const auto& g : ideal.generators) {
                    std::vector<std::uint64_t> value = field.zero();
                    for (const auto& [mono, coeff] : g.terms()) {
                        std::vector<std::uint64_t> term = field.zero();
                        term[0] = coeff.residue_value();
                        for (std::size_t v = 0; v < n; ++v) {
                            for (unsigned e = 0; e < mono.exponents[v]; ++e) {
                                term = field.mul(term, point[v]);
                            }
                        }
                        value = field.add(value, term);
                    }
                    if (!field.is_zero(value)) {
                        all_vanish = false;
                        break;
                    }
                }
                if (all_vanish) return false;
            }
            std::size_t v = 0;
            while (v < n && ++index[v] == per_coord) {
                index[v] = 0;
                ++v;
            }
            if (v == n) break;
        }
    }
    return true;
}

}  // namespace liftlocal
