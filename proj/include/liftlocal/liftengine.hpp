#pragma once

#include <cstdint>

#include "liftlocal/invariants.hpp"

namespace liftlocal {

// The quotient A = K[[X_1..X_n]]/ideal presented by polynomial data, with its
// two cached basic invariants.
struct Presentation {
    ContextPtr context;
    IdealData ideal;
    Mode mode;
    int dim_a;    // Krull dimension of the quotient
    int emb_dim;  // minimal generator count of its maximal ideal

    // Validates the ideal against the mode and computes the cached invariants.
    static Presentation make(ContextPtr ctx, IdealData ideal, Mode mode,
                             BasisCache* cache = nullptr);
};

// A self map of the quotient, stored as polynomial representatives of the
// variable images. Construction proves well-definedness: every ideal generator
// must map into the ideal. In graded mode all images must additionally be
// homogeneous of one common degree.
class SelfMapOnA {
public:
    SelfMapOnA(Presentation pres, VariableMap map, BasisCache* cache = nullptr);

    const Presentation& presentation() const { return pres_; }
    const VariableMap& map() const { return map_; }
    // Common image degree; meaningful in graded mode only.
    unsigned graded_degree() const { return graded_degree_; }

private:
    Presentation pres_;
    VariableMap map_;
    unsigned graded_degree_ = 0;
};

// True iff the images of the variables generate, together with the ideal, an
// m-primary ideal of the ambient ring; for these residue-field-preserving maps
// that is exactly finiteness.
bool is_finite_map(const SelfMapOnA& m, BasisCache* cache = nullptr);

struct SearchOptions {
    std::uint64_t seed = 0;
    long max_attempts = 10000;
    int coeff_bound = 3;
    int adjuster_degree_cap = 2;
};

// Rank bookkeeping for the independence condition: the linear parts of the
// chosen elements must extend the span of the ideal generators' linear parts
// by exactly one dimension each.
struct RankWitness {
    int base_rank;      // rank of the ideal's linear parts
    int combined_rank;  // after adding the chosen elements
};

// A system of parameters that is part of a minimal generating set of the
// quotient's maximal ideal: dim_a linear forms whose prefixes drop the
// dimension by exactly one each and whose classes stay independent modulo
// squares of the maximal ideal.
struct SOPCertificate {
    std::vector<Polynomial> elements;
    std::vector<int> dimension_trace;  // dim after each prefix: d-1, d-2, ..., 0
    RankWitness rank_witness;
    long attempts;
};

// Finds a strong system of parameters by deterministic sweep over linear
// candidates (single minimal generators first, then coefficient tuples of
// growing bound, then seeded sparse random combinations). Every returned
// element is verified; exhaustion raises SearchExhaustedError.
SOPCertificate strong_sop(const Presentation& pres, const SearchOptions& opts = {},
                          BasisCache* cache = nullptr);

struct CosetStep {
    Polynomial element;   // u + adjuster
    Polynomial adjuster;  // element of the ideal, zero when u already worked
    long attempts;
};

// Picks an element of the coset u + ideal whose addition to the fixed list
// drops the ambient quotient dimension to the target. Candidates are u plus
// generator combinations with small monomial multipliers, zero first. Requires
// the fixed elements together with the ideal to be m-primary (which is what
// rules out degenerate cosets); a violation indicates a pipeline bug.
// step_index only labels a SearchExhaustedError; graded_degree, when nonzero,
// restricts candidates to homogeneous elements of that degree.
CosetStep coset_avoid(const Polynomial& u, const Presentation& pres,
                      const std::vector<Polynomial>& fixed, int target_dim,
                      const SearchOptions& opts = {}, BasisCache* cache = nullptr,
                      int step_index = 0, unsigned graded_degree = 0);

struct TraceRow {
    int step;             // t = 1..n
    int dimension;        // dim of the ambient ring modulo the first t images
    Polynomial adjuster;  // image minus given representative, a member of the ideal
};

struct LiftCertificate {
    VariableMap lift;  // the images f_1..f_n of the ambient self map
    ScalarMatrix coordinate_change;
    ScalarMatrix coordinate_change_inverse;
    std::vector<TraceRow> trace;
    std::vector<Polynomial> commutation_residues;  // normal forms, all zero
    unsigned long long quotient_dimension;         // K-dimension of R modulo the images
    std::uint64_t seed;
    long attempts;
};

// The full lifting pipeline: strong system of parameters, linear coordinate
// change moving it to the first coordinates, canonical image representatives,
// height check on the first dim_a images, coset avoidance for the remaining
// steps, inverse coordinate change, and final verification. The result is a
// finite self map of the ambient power-series ring commuting with the given
// map through the projection.
LiftCertificate lift_map(const SelfMapOnA& m, const SearchOptions& opts = {},
                         BasisCache* cache = nullptr);

struct CheckResult {
    bool pass;
    std::string witness;
};

struct VerificationReport {
    CheckResult commutation;      // psi(X_i) - image representative lies in the ideal
    CheckResult ideal_stability;  // psi maps every ideal generator into the ideal
    CheckResult cofiniteness;     // the psi images generate an m-primary ideal
    bool all_pass() const {
        return commutation.pass && ideal_stability.pass && cofiniteness.pass;
    }
};

// Re-derives the three certificate checks from scratch; failures are report
// entries with witnesses, never exceptions.
VerificationReport verify_lift(const SelfMapOnA& m, const VariableMap& psi,
                               BasisCache* cache = nullptr);

// Ring map between two presentations' ambient rings, given by images of the
// source variables.
struct RingMap {
    ContextPtr from;
    ContextPtr to;
    std::vector<Polynomial> images;  // length = from->size(), over `to`

    Polynomial apply(const Polynomial& p) const;
};

struct MinimalPresentationResult {
    Presentation reduced;
    RingMap forward;   // old variables in terms of the surviving ones
    RingMap backward;  // inclusion of the surviving variables
};

// Eliminates variables that appear linearly and alone in some generator,
// repeatedly substituting the solved form everywhere. When every linear part
// is solvable this reaches a presentation in emb_dim variables whose ideal
// sits inside the square of the maximal ideal.
MinimalPresentationResult minimal_presentation(const Presentation& pres,
                                               BasisCache* cache = nullptr);

}  // namespace liftlocal
