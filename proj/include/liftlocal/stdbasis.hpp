#pragma once

#include <map>
#include <string>
#include <vector>

#include "liftlocal/polynomial.hpp"

namespace liftlocal {

// Graded mode computes with the global ordering over the polynomial ring;
// local mode computes in the localization via the local ordering.
enum class Mode { Graded, Local };

OrderKind order_for(Mode mode);
std::string mode_name(Mode mode);

// Generators of an ideal; zero generators are dropped at construction, and an
// empty list after dropping represents the zero ideal.
struct IdealData {
    ContextPtr context;
    std::vector<Polynomial> generators;

    IdealData(ContextPtr ctx, std::vector<Polynomial> gens);

    bool is_zero_ideal() const { return generators.empty(); }
    // Every generator has zero constant term (the ideal sits inside the
    // maximal ideal), required for local-mode computations.
    bool contained_in_maximal() const;
    bool is_homogeneous() const;
    std::string cache_key() const;
};

enum class BasisKind { Groebner, Standard };

struct ComputedBasis {
    ContextPtr context;
    OrderKind order;
    BasisKind kind;
    std::vector<Polynomial> elements;  // monic, minimal leading terms, fixed order
};

// Division with quotient tracking: f = sum quotients[i] * basis[i] + remainder,
// and no remainder term is divisible by any basis leading monomial. Global
// orderings only.
struct DivisionResult {
    std::vector<Polynomial> quotients;
    Polynomial remainder;
};

DivisionResult global_divide(const Polynomial& f, const std::vector<Polynomial>& basis,
                             OrderKind order);

// Mora weak normal form for a local ordering, with the exact witness
// unit * f = sum quotients[i] * basis[i] + normal_form
// where the unit has constant term 1. The normal form's leading monomial is
// divisible by no basis leading monomial; tails are not reduced.
struct MoraResult {
    Polynomial normal_form;
    Polynomial unit;
    std::vector<Polynomial> quotients;
};

MoraResult mora_normal_form(const Polynomial& f, const std::vector<Polynomial>& basis,
                            OrderKind order);

// Reduced Groebner basis under a global ordering: pairwise non-dividing leading
// terms, fully tail-reduced, monic, sorted by leading monomial. Unique for the
// ideal, hence deterministic.
ComputedBasis buchberger(const IdealData& ideal, OrderKind order = OrderKind::DegRevLexGlobal);

// Standard basis under a local ordering: every S-polynomial has Mora normal
// form zero. Minimal leading terms and monic, but tails stay unreduced (Mora
// tail reduction need not terminate); the procedure is deterministic.
ComputedBasis standard_basis(const IdealData& ideal, OrderKind order = OrderKind::DegRevLexLocal);

ComputedBasis compute_basis(const IdealData& ideal, Mode mode);

// Memoizes bases per ideal and mode within one pipeline run.
class BasisCache {
public:
    const ComputedBasis& get(const IdealData& ideal, Mode mode);

private:
    std::map<std::string, ComputedBasis> store_;
};

const ComputedBasis& cached_basis(const IdealData& ideal, Mode mode, BasisCache* cache,
                                  ComputedBasis& scratch);

// Membership in the ideal (of the localization, in local mode), decided by
// normal form against the appropriate basis.
bool is_member(const Polynomial& f, const IdealData& ideal, Mode mode, BasisCache* cache = nullptr);

// Remainder of f modulo the global-ordering Groebner basis of the ideal. This
// is the canonical class representative used in both modes: global reduction
// subtracts polynomial multiples of the generators only, so unlike a Mora
// reduction it never scales the class by a unit.
Polynomial canonical_representative(const Polynomial& f, const IdealData& ideal,
                                    BasisCache* cache = nullptr);

}  // namespace liftlocal
