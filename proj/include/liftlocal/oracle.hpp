#pragma once

#include "liftlocal/invariants.hpp"

namespace liftlocal {

// Limits for the brute-force verifiers; they may be exponential inside these.
struct OracleBudget {
    int max_variables = 5;
    int max_degree = 6;
    int max_field_scan_extension = 2;
};

// Exhaustive reference computation of monomial-ideal dimension, written
// independently of the engine path: walks every variable subset and keeps the
// largest one containing no generator's support.
int monomial_dim_bruteforce(const MonomialIdeal& m, const OracleBudget& budget = {});

struct BoundedStandardMonomials {
    std::vector<Monomial> monomials;  // ascending global degrevlex
    bool truncated;                   // a standard monomial of exactly the bound degree exists
};

// All monomials of degree at most the bound lying outside the leading ideal.
BoundedStandardMonomials standard_monomials_bounded(const IdealData& ideal, Mode mode,
                                                    unsigned degree_bound,
                                                    const OracleBudget& budget = {});

// Scans for common zeros of a homogeneous ideal over F_p and its small
// extensions (degrees 2 and 3 come from a fixed irreducible table). Returns
// true when the origin is the only zero found. One-sided check: an m-primary
// homogeneous ideal has no other zero over any extension, so a nontrivial zero
// refutes m-primariness, while absence of zeros proves nothing.
bool zero_locus_scan(const IdealData& ideal, int extension_degree_cap,
                     const OracleBudget& budget = {});

}  // namespace liftlocal
