#pragma once

#include <optional>

#include "liftlocal/stdbasis.hpp"

namespace liftlocal {

// Monomial ideal given by its minimal generators (pairwise non-dividing).
struct MonomialIdeal {
    ContextPtr context;
    std::vector<Monomial> min_generators;

    static MonomialIdeal from_monomials(ContextPtr ctx, std::vector<Monomial> gens);

    bool is_zero() const { return min_generators.empty(); }
    bool is_unit() const;
    bool contains_monomial(const Monomial& m) const;
};

struct DimensionReport {
    Mode mode;
    int dimension;              // -1 for the unit ideal
    std::vector<int> witness;   // variable indices, ascending
};

// Minimal generators of the leading-term ideal of a computed basis.
MonomialIdeal leading_ideal(const ComputedBasis& basis);

// Dimension of a monomial ideal: the size of a largest variable subset S such
// that no generator is supported entirely inside S, found by exhaustive subset
// enumeration. The witness is the lexicographically first maximum subset.
DimensionReport monomial_dimension(const MonomialIdeal& m);

// Krull dimension of the quotient by the ideal: of the graded ring in graded
// mode, of the localization at the maximal ideal in local mode. Computed from
// the leading ideal of the mode's basis.
DimensionReport krull_dimension(const IdealData& ideal, Mode mode, BasisCache* cache = nullptr);

// True iff the quotient has Krull dimension zero, i.e. the radical is the
// maximal ideal. Requires generators inside the maximal ideal.
bool is_m_primary(const IdealData& ideal, Mode mode, BasisCache* cache = nullptr);

// Number of standard monomials (monomials outside the leading ideal), i.e.
// the K-vector-space dimension of the quotient; empty when not m-primary.
std::optional<unsigned long long> quotient_k_dimension(const IdealData& ideal, Mode mode,
                                                       BasisCache* cache = nullptr);

// n minus the rank of the generators' linear parts: the K-dimension of
// m/(m^2 + ideal), the minimal number of generators of the quotient's
// maximal ideal.
int embedding_dimension(const IdealData& ideal);

}  // namespace liftlocal
