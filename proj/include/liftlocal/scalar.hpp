#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>
#include <vector>

#include "liftlocal/errors.hpp"

namespace liftlocal {

using Rational = boost::multiprecision::cpp_rational;

enum class FieldKind { Rationals, PrimeField };

// The coefficient field K: the rationals, or a prime field with word-sized
// characteristic.
class FieldSpec {
public:
    static FieldSpec rationals();
    // Validates primality by trial division; requires p < 2^32 so residue
    // products fit in 64 bits.
    static FieldSpec prime(std::uint64_t p);

    FieldKind kind() const { return kind_; }
    std::uint64_t characteristic() const { return p_; }  // 0 for the rationals
    bool is_prime_field() const { return kind_ == FieldKind::PrimeField; }

    bool operator==(const FieldSpec& o) const { return kind_ == o.kind_ && p_ == o.p_; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }

    // Problem-file syntax: "Q" or "F <p>".
    std::string to_string() const;

private:
    FieldSpec(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
    FieldKind kind_;
    std::uint64_t p_;
};

// An exact element of K in canonical form: a reduced fraction with positive
// denominator, or a residue in [0, p). Immutable value type.
class Scalar {
public:
    Scalar() : field_(FieldSpec::rationals()), rat_(0), res_(0) {}

    static Scalar zero(const FieldSpec& f);
    static Scalar one(const FieldSpec& f);
    static Scalar from_int(const FieldSpec& f, long long v);
    static Scalar from_rational(Rational r);  // rationals only
    static Scalar residue(const FieldSpec& f, std::uint64_t r);  // prime field only

    const FieldSpec& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;
    std::uint64_t residue_value() const;  // prime field only

    Scalar neg() const;
    Scalar inv() const;  // throws ValidationError on zero

    bool operator==(const Scalar& o) const;
    bool operator!=(const Scalar& o) const { return !(*this == o); }

    std::string to_string() const;

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);

private:
    Scalar(FieldSpec f, Rational r, std::uint64_t res)
        : field_(f), rat_(std::move(r)), res_(res) {}
    static void require_same_field(const Scalar& a, const Scalar& b);

    FieldSpec field_;
    Rational rat_;        // used when field is the rationals
    std::uint64_t res_;   // used when field is a prime field
};

// Scalar literals: optionally signed integers for both fields, "a/b" fractions
// for the rationals only.
Scalar parse_scalar(const std::string& text, const FieldSpec& f);

// Candidate pool for avoidance searches, addressable by index so callers can
// iterate lazily. For F_p the pool is all p residues in order 0,1,...,p-1 and
// the bound is ignored; for Q it is 0, 1, -1, 2, -2, ..., bound, -bound.
std::uint64_t pool_size(const FieldSpec& f, unsigned bound);
Scalar pool_at(const FieldSpec& f, unsigned bound, std::uint64_t index);

// The same pool, materialized.
std::vector<Scalar> enumerate_field(const FieldSpec& f, unsigned bound);

}  // namespace liftlocal
