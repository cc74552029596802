#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liftlocal/scalar.hpp"

namespace liftlocal {

// Fixed ordered variable set plus coefficient field; shared by every object of
// one computation.
class VarContext {
public:
    VarContext(std::vector<std::string> names, FieldSpec field);

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_[i]; }
    const std::vector<std::string>& names() const { return names_; }
    const FieldSpec& field() const { return field_; }
    int index_of(const std::string& name) const;  // -1 when absent

    bool operator==(const VarContext& o) const {
        return names_ == o.names_ && field_ == o.field_;
    }

private:
    std::vector<std::string> names_;
    FieldSpec field_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

ContextPtr make_context(std::vector<std::string> names, FieldSpec field);

// Exponent tuple; length always equals the ambient context's variable count.
struct Monomial {
    std::vector<unsigned> exponents;

    static Monomial one(std::size_t n) { return Monomial{std::vector<unsigned>(n, 0)}; }
    static Monomial variable(std::size_t n, std::size_t i);

    unsigned total_degree() const;
    bool is_one() const { return total_degree() == 0; }
    bool divides(const Monomial& m) const;
    Monomial times(const Monomial& m) const;
    Monomial quotient_by(const Monomial& m) const;  // requires m.divides(*this)
    static Monomial lcm(const Monomial& a, const Monomial& b);
    bool coprime_with(const Monomial& m) const;

    bool operator==(const Monomial& o) const { return exponents == o.exponents; }
    bool operator!=(const Monomial& o) const { return !(*this == o); }
};

// Degree reverse lexicographic comparisons. The global variant is a well-order
// with 1 smallest; the local variant ranks lower total degree higher, so 1 is
// the largest monomial (a local ordering).
enum class OrderKind { DegRevLexGlobal, DegRevLexLocal };

// Negative when a is smaller than b, zero on equality, positive otherwise.
int compare(const Monomial& a, const Monomial& b, OrderKind k);

// Sparse polynomial with terms stored in one canonical order (global degrevlex,
// descending) independent of the ordering used by basis computations; equality
// is structural.
class Polynomial {
public:
    using Term = std::pair<Monomial, Scalar>;

    explicit Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}
    static Polynomial zero(ContextPtr ctx) { return Polynomial(std::move(ctx)); }
    static Polynomial constant(ContextPtr ctx, const Scalar& c);
    static Polynomial variable(ContextPtr ctx, std::size_t i);
    static Polynomial term(ContextPtr ctx, Monomial m, const Scalar& c);
    static Polynomial from_terms(ContextPtr ctx, std::vector<Term> unsorted);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    unsigned total_degree() const;             // 0 for the zero polynomial
    Scalar constant_term() const;
    bool is_homogeneous() const;               // vacuously true for zero
    Polynomial homogeneous_component(unsigned d) const;
    Polynomial linear_part() const { return homogeneous_component(1); }
    // Minimal total degree among terms; empty for the zero polynomial.
    std::optional<unsigned> order_of_vanishing() const;

    const Term& leading_term(OrderKind k) const;  // requires a nonzero polynomial
    Polynomial monic(OrderKind k) const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial scaled(const Scalar& c) const;
    // this * c * m, the workhorse of division loops.
    Polynomial times_term(const Monomial& m, const Scalar& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::vector<Term> terms_;  // descending global degrevlex, no zero coefficients
    void check_context(const Polynomial& o) const;
};

// Parses the ASCII grammar: terms joined by + or -, a term being a coefficient,
// coefficient*monomial, or a monomial; monomial factors Name or Name^k joined
// by *. Throws ParseError with position on malformed input.
Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx);

// A K-algebra self map of the power-series ring given by variable images; every
// image must lie in the maximal ideal (zero constant term).
class VariableMap {
public:
    VariableMap(ContextPtr ctx, std::vector<Polynomial> images);
    static VariableMap identity(ContextPtr ctx);

    const ContextPtr& context() const { return ctx_; }
    const std::vector<Polynomial>& images() const { return images_; }
    const Polynomial& image(std::size_t i) const { return images_[i]; }

private:
    ContextPtr ctx_;
    std::vector<Polynomial> images_;
};

// Image of p under the endomorphism sending each variable to its image.
Polynomial substitute(const Polynomial& p, const VariableMap& m);

// Row of degree-1 coefficients of p (constant and higher terms must be absent).
std::vector<Scalar> linear_row(const Polynomial& p);

// Incremental row-echelon accumulation over K.
class LinearSpan {
public:
    LinearSpan(std::size_t n, FieldSpec field);
    // True when the row enlarged the span.
    bool insert(std::vector<Scalar> row);
    bool contains(std::vector<Scalar> row) const;
    int rank() const { return static_cast<int>(rows_.size()); }

private:
    std::size_t n_;
    FieldSpec field_;
    std::vector<std::vector<Scalar>> rows_;   // echelon rows
    std::vector<std::size_t> pivots_;
    // Reduces the row against the echelon; returns pivot column or n_ when zero.
    std::size_t reduce(std::vector<Scalar>& row) const;
};

struct RankExtension {
    int rank;
    std::vector<Polynomial> completion;  // coordinate variables, in order
};

// Rank of the span of degree-1 forms, plus the coordinate variables extending
// them to a basis of the whole degree-1 space (first variable not in the span,
// then the next, and so on).
RankExtension linear_rank_extend(const std::vector<Polynomial>& vectors, const ContextPtr& ctx);

int linear_rank(const std::vector<Polynomial>& vectors, const ContextPtr& ctx);

// Dense n-by-n matrix over K, used only for linear coordinate changes.
class ScalarMatrix {
public:
    ScalarMatrix(FieldSpec field, std::size_t n);
    static ScalarMatrix identity(FieldSpec field, std::size_t n);

    std::size_t size() const { return n_; }
    const FieldSpec& field() const { return field_; }
    Scalar& at(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
    const Scalar& at(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

    ScalarMatrix times(const ScalarMatrix& o) const;
    std::optional<ScalarMatrix> inverse() const;
    bool is_identity() const;
    bool operator==(const ScalarMatrix& o) const;

private:
    FieldSpec field_;
    std::size_t n_;
    std::vector<Scalar> data_;
};

// The substitution X_i -> sum_j M(i,j) X_j.
VariableMap matrix_substitution(const ScalarMatrix& m, const ContextPtr& ctx);

}  // namespace liftlocal
