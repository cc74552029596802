#include "liftlocal/scalar.hpp"

#include <cctype>

namespace liftlocal {

namespace {

bool is_small_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    for (std::uint64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) return false;
    }
    return true;
}

// a, b < p < 2^32, so the product fits in 64 bits.
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return (a * b) % p;
}

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    // Extended Euclid on signed 64-bit values; p < 2^32 keeps them in range.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) throw ValidationError("inverse of zero residue");
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

}  // namespace

FieldSpec FieldSpec::rationals() { return FieldSpec(FieldKind::Rationals, 0); }

FieldSpec FieldSpec::prime(std::uint64_t p) {
    if (p >= (std::uint64_t(1) << 32)) {
        throw ValidationError("prime field characteristic must be below 2^32");
    }
    if (!is_small_prime(p)) {
        throw ValidationError("field characteristic " + std::to_string(p) + " is not prime");
    }
    return FieldSpec(FieldKind::PrimeField, p);
}

std::string FieldSpec::to_string() const {
    if (kind_ == FieldKind::Rationals) return "Q";
    return "F " + std::to_string(p_);
}

Scalar Scalar::zero(const FieldSpec& f) { return Scalar(f, Rational(0), 0); }

Scalar Scalar::one(const FieldSpec& f) {
    if (f.kind() == FieldKind::Rationals) return Scalar(f, Rational(1), 0);
    return Scalar(f, Rational(0), 1 % f.characteristic());
}

Scalar Scalar::from_int(const FieldSpec& f, long long v) {
    if (f.kind() == FieldKind::Rationals) return Scalar(f, Rational(v), 0);
    const auto p = static_cast<std::int64_t>(f.characteristic());
    std::int64_t r = v % p;
    if (r < 0) r += p;
    return Scalar(f, Rational(0), static_cast<std::uint64_t>(r));
}

Scalar Scalar::from_rational(Rational r) {
    return Scalar(FieldSpec::rationals(), std::move(r), 0);
}

Scalar Scalar::residue(const FieldSpec& f, std::uint64_t r) {
    if (!f.is_prime_field()) throw ValidationError("residue constructor needs a prime field");
    return Scalar(f, Rational(0), r % f.characteristic());
}

bool Scalar::is_zero() const {
    return field_.is_prime_field() ? res_ == 0 : rat_.is_zero();
}

bool Scalar::is_one() const {
    return field_.is_prime_field() ? res_ == 1 % field_.characteristic() : rat_ == 1;
}

std::uint64_t Scalar::residue_value() const {
    if (!field_.is_prime_field()) throw ValidationError("residue value of a rational scalar");
    return res_;
}

Scalar Scalar::neg() const {
    if (field_.is_prime_field()) {
        return Scalar(field_, Rational(0), res_ == 0 ? 0 : field_.characteristic() - res_);
    }
    return Scalar(field_, -rat_, 0);
}

Scalar Scalar::inv() const {
    if (is_zero()) throw ValidationError("division by zero");
    if (field_.is_prime_field()) {
        return Scalar(field_, Rational(0), inv_mod(res_, field_.characteristic()));
    }
    return Scalar(field_, Rational(1) / rat_, 0);
}

bool Scalar::operator==(const Scalar& o) const {
    if (field_ != o.field_) return false;
    return field_.is_prime_field() ? res_ == o.res_ : rat_ == o.rat_;
}

std::string Scalar::to_string() const {
    if (field_.is_prime_field()) return std::to_string(res_);
    return rat_.str();
}

void Scalar::require_same_field(const Scalar& a, const Scalar& b) {
    if (a.field_ != b.field_) {
        throw FieldMismatchError("scalar arithmetic across different fields (" +
                                 a.field_.to_string() + " vs " + b.field_.to_string() + ")");
    }
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (a.field_.is_prime_field()) {
        const auto p = a.field_.characteristic();
        return Scalar(a.field_, Rational(0), (a.res_ + b.res_) % p);
    }
    return Scalar(a.field_, a.rat_ + b.rat_, 0);
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + b.neg(); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    Scalar::require_same_field(a, b);
    if (a.field_.is_prime_field()) {
        return Scalar(a.field_, Rational(0), mul_mod(a.res_, b.res_, a.field_.characteristic()));
    }
    return Scalar(a.field_, a.rat_ * b.rat_, 0);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }

Scalar parse_scalar(const std::string& text, const FieldSpec& f) {
    std::size_t i = 0;
    const auto fail = [&](const std::string& msg) { throw ParseError(msg, i); };
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    std::size_t num_start = i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (i == num_start) fail("expected digits in scalar literal");
    const std::string num = text.substr(num_start, i - num_start);

    std::string den;
    if (i < text.size() && text[i] == '/') {
        if (f.is_prime_field()) fail("fraction literals are only valid over Q");
        ++i;
        std::size_t den_start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == den_start) fail("expected digits after '/'");
        den = text.substr(den_start, i - den_start);
    }
    if (i != text.size()) fail("trailing characters in scalar literal");

    if (f.is_prime_field()) {
        // Reduce digit by digit so literals larger than 64 bits still work.
        const auto p = f.characteristic();
        std::uint64_t r = 0;
        for (char c : num) r = (r * 10 + static_cast<std::uint64_t>(c - '0')) % p;
        if (negative && r != 0) r = p - r;
        return Scalar::residue(f, r);
    }
    using boost::multiprecision::cpp_int;
    cpp_int n(num);
    cpp_int d = den.empty() ? cpp_int(1) : cpp_int(den);
    if (d == 0) throw ParseError("zero denominator in scalar literal", 0);
    if (negative) n = -n;
    return Scalar::from_rational(Rational(n, d));
}

std::uint64_t pool_size(const FieldSpec& f, unsigned bound) {
    if (f.is_prime_field()) return f.characteristic();
    return 2 * static_cast<std::uint64_t>(bound) + 1;
}

Scalar pool_at(const FieldSpec& f, unsigned bound, std::uint64_t index) {
    if (f.is_prime_field()) return Scalar::residue(f, index);
    (void)bound;
    if (index == 0) return Scalar::zero(f);
    const long long k = static_cast<long long>((index + 1) / 2);
    return Scalar::from_int(f, index % 2 == 1 ? k : -k);
}

std::vector<Scalar> enumerate_field(const FieldSpec& f, unsigned bound) {
    const std::uint64_t size = pool_size(f, bound);
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(size));
    for (std::uint64_t i = 0; i < size; ++i) out.push_back(pool_at(f, bound, i));
    return out;
}

}  // namespace liftlocal
