#include "liftlocal/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace liftlocal {

namespace {

bool valid_identifier(const std::string& s) {
    if (s.empty()) return false;
    if (!std::isalpha(static_cast<unsigned char>(s[0]))) return false;
    for (char c : s) {
        if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
    }
    return true;
}

}  // namespace

VarContext::VarContext(std::vector<std::string> names, FieldSpec field)
    : names_(std::move(names)), field_(field) {
    if (names_.empty()) throw ValidationError("variable list must be nonempty");
    std::set<std::string> seen;
    for (const auto& n : names_) {
        if (!valid_identifier(n)) throw ValidationError("invalid variable name '" + n + "'");
        if (!seen.insert(n).second) throw ValidationError("duplicate variable name '" + n + "'");
    }
}

int VarContext::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i] == name) return static_cast<int>(i);
    }
    return -1;
}

ContextPtr make_context(std::vector<std::string> names, FieldSpec field) {
    return std::make_shared<VarContext>(std::move(names), field);
}

Monomial Monomial::variable(std::size_t n, std::size_t i) {
    Monomial m = one(n);
    m.exponents[i] = 1;
    return m;
}

unsigned Monomial::total_degree() const {
    unsigned d = 0;
    for (unsigned e : exponents) d += e;
    return d;
}

bool Monomial::divides(const Monomial& m) const {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > m.exponents[i]) return false;
    }
    return true;
}

Monomial Monomial::times(const Monomial& m) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i) out.exponents[i] += m.exponents[i];
    return out;
}

Monomial Monomial::quotient_by(const Monomial& m) const {
    Monomial out = *this;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (m.exponents[i] > exponents[i]) throw InternalError("monomial quotient undefined");
        out.exponents[i] -= m.exponents[i];
    }
    return out;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial out = a;
    for (std::size_t i = 0; i < a.exponents.size(); ++i) {
        out.exponents[i] = std::max(a.exponents[i], b.exponents[i]);
    }
    return out;
}

bool Monomial::coprime_with(const Monomial& m) const {
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] > 0 && m.exponents[i] > 0) return false;
    }
    return true;
}

int compare(const Monomial& a, const Monomial& b, OrderKind k) {
    const unsigned da = a.total_degree(), db = b.total_degree();
    if (da != db) {
        if (k == OrderKind::DegRevLexGlobal) return da < db ? -1 : 1;
        return da < db ? 1 : -1;  // lower degree ranks higher locally
    }
    // Shared revlex tie-break: at the last position where the exponents
    // differ, the smaller exponent belongs to the larger monomial.
    for (std::size_t i = a.exponents.size(); i-- > 0;) {
        if (a.exponents[i] != b.exponents[i]) {
            return a.exponents[i] < b.exponents[i] ? 1 : -1;
        }
    }
    return 0;
}

Polynomial Polynomial::constant(ContextPtr ctx, const Scalar& c) {
    return term(std::move(ctx), Monomial::one(0), c);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t i) {
    const std::size_t n = ctx->size();
    const Scalar one = Scalar::one(ctx->field());
    return term(std::move(ctx), Monomial::variable(n, i), one);
}

Polynomial Polynomial::term(ContextPtr ctx, Monomial m, const Scalar& c) {
    Polynomial p(ctx);
    if (ctx->field() != c.field()) throw FieldMismatchError("term coefficient field differs from context");
    if (!c.is_zero()) {
        m.exponents.resize(ctx->size(), 0);
        p.terms_.push_back({std::move(m), c});
    }
    return p;
}

Polynomial Polynomial::from_terms(ContextPtr ctx, std::vector<Term> unsorted) {
    Polynomial p(ctx);
    std::sort(unsorted.begin(), unsorted.end(), [](const Term& a, const Term& b) {
        return compare(a.first, b.first, OrderKind::DegRevLexGlobal) > 0;
    });
    for (auto& t : unsorted) {
        if (!p.terms_.empty() && p.terms_.back().first == t.first) {
            Scalar merged = p.terms_.back().second + t.second;
            if (merged.is_zero()) {
                p.terms_.pop_back();
            } else {
                p.terms_.back().second = merged;
            }
        } else if (!t.second.is_zero()) {
            p.terms_.push_back(std::move(t));
        }
    }
    return p;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& t : terms_) d = std::max(d, t.first.total_degree());
    return d;
}

Scalar Polynomial::constant_term() const {
    for (const auto& t : terms_) {
        if (t.first.is_one()) return t.second;
    }
    return Scalar::zero(ctx_->field());
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const unsigned d = terms_.front().first.total_degree();
    for (const auto& t : terms_) {
        if (t.first.total_degree() != d) return false;
    }
    return true;
}

Polynomial Polynomial::homogeneous_component(unsigned d) const {
    Polynomial out(ctx_);
    for (const auto& t : terms_) {
        if (t.first.total_degree() == d) out.terms_.push_back(t);
    }
    return out;
}

std::optional<unsigned> Polynomial::order_of_vanishing() const {
    if (terms_.empty()) return std::nullopt;
    unsigned d = terms_.front().first.total_degree();
    for (const auto& t : terms_) d = std::min(d, t.first.total_degree());
    return d;
}

const Polynomial::Term& Polynomial::leading_term(OrderKind k) const {
    if (terms_.empty()) throw InternalError("leading term of the zero polynomial");
    std::size_t best = 0;
    if (k != OrderKind::DegRevLexGlobal) {
        for (std::size_t i = 1; i < terms_.size(); ++i) {
            if (compare(terms_[i].first, terms_[best].first, k) > 0) best = i;
        }
    }
    return terms_[best];
}

Polynomial Polynomial::monic(OrderKind k) const {
    if (is_zero()) return *this;
    return scaled(leading_term(k).second.inv());
}

void Polynomial::check_context(const Polynomial& o) const {
    if (!(*ctx_ == *o.ctx_)) throw ValidationError("polynomial arithmetic across different contexts");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_context(o);
    Polynomial out(ctx_);
    out.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() && j < o.terms_.size()) {
        const int c = compare(terms_[i].first, o.terms_[j].first, OrderKind::DegRevLexGlobal);
        if (c > 0) {
            out.terms_.push_back(terms_[i++]);
        } else if (c < 0) {
            out.terms_.push_back(o.terms_[j++]);
        } else {
            Scalar s = terms_[i].second + o.terms_[j].second;
            if (!s.is_zero()) out.terms_.push_back({terms_[i].first, s});
            ++i;
            ++j;
        }
    }
    while (i < terms_.size()) out.terms_.push_back(terms_[i++]);
    while (j < o.terms_.size()) out.terms_.push_back(o.terms_[j++]);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out(ctx_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) out.terms_.push_back({t.first, t.second.neg()});
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::scaled(const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ctx_);
    Polynomial out(ctx_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        // K is a field, so nonzero coefficients stay nonzero under scaling.
        out.terms_.push_back({t.first, t.second * c});
    }
    return out;
}

Polynomial Polynomial::times_term(const Monomial& m, const Scalar& c) const {
    if (c.is_zero()) return Polynomial(ctx_);
    Polynomial out(ctx_);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Scalar s = t.second * c;
        if (!s.is_zero()) out.terms_.push_back({t.first.times(m), s});
    }
    // Multiplying by one monomial preserves the relative degrevlex order.
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_context(o);
    Polynomial acc(ctx_);
    for (const auto& t : o.terms_) {
        acc = acc + times_term(t.first, t.second);
    }
    return acc;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (!(*ctx_ == *o.ctx_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        if (terms_[i].first != o.terms_[i].first) return false;
        if (terms_[i].second != o.terms_[i].second) return false;
    }
    return true;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (std::size_t i = 0; i < terms_.size(); ++i) {
        const auto& [mono, coeff] = terms_[i];
        std::string c = coeff.to_string();
        bool negative = false;
        if (!c.empty() && c[0] == '-') {  // only over Q; residues print unsigned
            negative = true;
            c = c.substr(1);
        }
        std::string mono_str;
        for (std::size_t v = 0; v < mono.exponents.size(); ++v) {
            if (mono.exponents[v] == 0) continue;
            if (!mono_str.empty()) mono_str += "*";
            mono_str += ctx_->name(v);
            if (mono.exponents[v] > 1) mono_str += "^" + std::to_string(mono.exponents[v]);
        }
        std::string body;
        if (mono_str.empty()) {
            body = c;
        } else if (c == "1") {
            body = mono_str;
        } else {
            body = c + "*" + mono_str;
        }
        if (i == 0) {
            out += (negative ? "-" : "") + body;
        } else {
            out += (negative ? " - " : " + ") + body;
        }
    }
    return out;
}

namespace {

// Recursive-descent parser for the term grammar; positions index into text.
class PolyParser {
public:
    PolyParser(const std::string& text, const ContextPtr& ctx) : text_(text), ctx_(ctx) {}

    Polynomial run() {
        skip_ws();
        if (at_end()) throw ParseError("empty polynomial", pos_);
        std::vector<Polynomial::Term> terms;
        bool negative = false;
        if (peek() == '+' || peek() == '-') {
            negative = take() == '-';
            skip_ws();
        }
        while (true) {
            parse_term(negative, terms);
            skip_ws();
            if (at_end()) break;
            const char c = take();
            if (c == '+') {
                negative = false;
            } else if (c == '-') {
                negative = true;
            } else {
                throw ParseError(std::string("expected '+' or '-', found '") + c + "'", pos_ - 1);
            }
            skip_ws();
        }
        return Polynomial::from_terms(ctx_, std::move(terms));
    }

private:
    const std::string& text_;
    const ContextPtr& ctx_;
    std::size_t pos_ = 0;

    bool at_end() const { return pos_ >= text_.size(); }
    char peek() const { return text_[pos_]; }
    char take() { return text_[pos_++]; }
    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }

    void parse_term(bool negative, std::vector<Polynomial::Term>& terms) {
        if (at_end()) throw ParseError("expected a term", pos_);
        Scalar coeff = Scalar::one(ctx_->field());
        bool saw_coeff = false;
        if (std::isdigit(static_cast<unsigned char>(peek()))) {
            coeff = parse_coefficient();
            saw_coeff = true;
        }
        Monomial mono = Monomial::one(ctx_->size());
        bool saw_factor = false;
        if (saw_coeff) {
            skip_ws();
            if (!at_end() && peek() == '*') {
                ++pos_;
                skip_ws();
                parse_factors(mono);
                saw_factor = true;
            }
        } else {
            parse_factors(mono);
            saw_factor = true;
        }
        if (!saw_coeff && !saw_factor) throw ParseError("expected a coefficient or a variable", pos_);
        if (negative) coeff = coeff.neg();
        if (!coeff.is_zero()) terms.push_back({std::move(mono), coeff});
    }

    Scalar parse_coefficient() {
        const std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        std::string lit = text_.substr(start, pos_ - start);
        if (!at_end() && peek() == '/') {
            if (ctx_->field().is_prime_field()) {
                throw ParseError("fraction coefficients are only valid over Q", pos_);
            }
            ++pos_;
            const std::size_t dstart = pos_;
            while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
            if (pos_ == dstart) throw ParseError("expected digits after '/'", pos_);
            lit += "/" + text_.substr(dstart, pos_ - dstart);
        }
        try {
            return parse_scalar(lit, ctx_->field());
        } catch (const ParseError& e) {
            throw ParseError(e.what(), start);
        }
    }

    void parse_factors(Monomial& mono) {
        while (true) {
            if (at_end() || !std::isalpha(static_cast<unsigned char>(peek()))) {
                throw ParseError("expected a variable name", pos_);
            }
            const std::size_t start = pos_;
            while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
            const std::string name = text_.substr(start, pos_ - start);
            const int idx = ctx_->index_of(name);
            if (idx < 0) throw ParseError("unknown variable '" + name + "'", start);
            unsigned long expn = 1;
            skip_ws();
            if (!at_end() && peek() == '^') {
                ++pos_;
                skip_ws();
                const std::size_t estart = pos_;
                while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
                if (pos_ == estart) throw ParseError("expected digits after '^'", pos_);
                const std::string digits = text_.substr(estart, pos_ - estart);
                if (digits.size() > 6) throw ParseError("exponent too large", estart);
                expn = std::stoul(digits);
            }
            mono.exponents[static_cast<std::size_t>(idx)] += static_cast<unsigned>(expn);
            skip_ws();
            // A '*' continues the factor list only when a variable follows;
            // otherwise it belongs to no production and the caller will fail.
            if (!at_end() && peek() == '*') {
                const std::size_t save = pos_;
                ++pos_;
                skip_ws();
                if (!at_end() && std::isalpha(static_cast<unsigned char>(peek()))) continue;
                pos_ = save;
                break;
            }
            break;
        }
    }
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const ContextPtr& ctx) {
    return PolyParser(text, ctx).run();
}

VariableMap::VariableMap(ContextPtr ctx, std::vector<Polynomial> images)
    : ctx_(std::move(ctx)), images_(std::move(images)) {
    if (images_.size() != ctx_->size()) {
        throw ValidationError("variable map needs exactly one image per variable");
    }
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (!(*images_[i].context() == *ctx_)) {
            throw ValidationError("variable map image context mismatch");
        }
        if (!images_[i].constant_term().is_zero()) {
            throw ValidationError("image of " + ctx_->name(i) +
                                  " has a nonzero constant term (must map into the maximal ideal)");
        }
    }
}

VariableMap VariableMap::identity(ContextPtr ctx) {
    std::vector<Polynomial> images;
    images.reserve(ctx->size());
    for (std::size_t i = 0; i < ctx->size(); ++i) images.push_back(Polynomial::variable(ctx, i));
    return VariableMap(ctx, std::move(images));
}

Polynomial substitute(const Polynomial& p, const VariableMap& m) {
    if (!(*p.context() == *m.context())) throw ValidationError("substitute: context mismatch");
    const ContextPtr& ctx = p.context();
    const std::size_t n = ctx->size();
    // Image powers are cached per variable; exponents stay small at desk scale.
    std::vector<std::vector<Polynomial>> powers(n);
    const auto power = [&](std::size_t v, unsigned e) -> const Polynomial& {
        auto& cache = powers[v];
        if (cache.empty()) cache.push_back(Polynomial::constant(ctx, Scalar::one(ctx->field())));
        while (cache.size() <= e) cache.push_back(cache.back() * m.image(v));
        return cache[e];
    };
    Polynomial out(ctx);
    for (const auto& [mono, coeff] : p.terms()) {
        Polynomial factor = Polynomial::constant(ctx, coeff);
        for (std::size_t v = 0; v < n; ++v) {
            if (mono.exponents[v] > 0) factor = factor * power(v, mono.exponents[v]);
        }
        out = out + factor;
    }
    return out;
}

std::vector<Scalar> linear_row(const Polynomial& p) {
    const std::size_t n = p.context()->size();
    std::vector<Scalar> row(n, Scalar::zero(p.context()->field()));
    for (const auto& [mono, coeff] : p.terms()) {
        if (mono.total_degree() != 1) {
            throw ValidationError("linear_row expects a homogeneous degree-1 form");
        }
        for (std::size_t v = 0; v < n; ++v) {
            if (mono.exponents[v] == 1) row[v] = coeff;
        }
    }
    return row;
}

LinearSpan::LinearSpan(std::size_t n, FieldSpec field) : n_(n), field_(field) {}

std::size_t LinearSpan::reduce(std::vector<Scalar>& row) const {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
        // Copy, not a reference: the loop below overwrites this entry.
        const Scalar c = row[pivots_[r]];
        if (!c.is_zero()) {
            for (std::size_t j = 0; j < n_; ++j) {
                row[j] = row[j] - c * rows_[r][j];
            }
        }
    }
    for (std::size_t j = 0; j < n_; ++j) {
        if (!row[j].is_zero()) return j;
    }
    return n_;
}

bool LinearSpan::insert(std::vector<Scalar> row) {
    if (row.size() != n_) throw InternalError("span row length mismatch");
    const std::size_t pivot = reduce(row);
    if (pivot == n_) return false;
    const Scalar scale = row[pivot].inv();
    for (auto& c : row) c = c * scale;
    // Keep rows ordered by pivot column so reduce stays triangular.
    std::size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < pivot) ++pos;
    rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(pos), std::move(row));
    pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(pos), pivot);
    return true;
}

bool LinearSpan::contains(std::vector<Scalar> row) const {
    return reduce(row) == n_;
}

RankExtension linear_rank_extend(const std::vector<Polynomial>& vectors, const ContextPtr& ctx) {
    LinearSpan span(ctx->size(), ctx->field());
    for (const auto& v : vectors) span.insert(linear_row(v));
    RankExtension out{span.rank(), {}};
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        std::vector<Scalar> unit(ctx->size(), Scalar::zero(ctx->field()));
        unit[i] = Scalar::one(ctx->field());
        if (span.insert(std::move(unit))) {
            out.completion.push_back(Polynomial::variable(ctx, i));
        }
    }
    return out;
}

int linear_rank(const std::vector<Polynomial>& vectors, const ContextPtr& ctx) {
    LinearSpan span(ctx->size(), ctx->field());
    for (const auto& v : vectors) span.insert(linear_row(v));
    return span.rank();
}

ScalarMatrix::ScalarMatrix(FieldSpec field, std::size_t n)
    : field_(field), n_(n), data_(n * n, Scalar::zero(field)) {}

ScalarMatrix ScalarMatrix::identity(FieldSpec field, std::size_t n) {
    ScalarMatrix m(field, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Scalar::one(field);
    return m;
}

ScalarMatrix ScalarMatrix::times(const ScalarMatrix& o) const {
    if (n_ != o.n_ || field_ != o.field_) throw ValidationError("matrix product shape mismatch");
    ScalarMatrix out(field_, n_);
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t k = 0; k < n_; ++k) {
            const Scalar& a = at(i, k);
            if (a.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                out.at(i, j) = out.at(i, j) + a * o.at(k, j);
            }
        }
    }
    return out;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
    ScalarMatrix work = *this;
    ScalarMatrix inv = identity(field_, n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t pivot = col;
        while (pivot < n_ && work.at(pivot, col).is_zero()) ++pivot;
        if (pivot == n_) return std::nullopt;
        if (pivot != col) {
            for (std::size_t j = 0; j < n_; ++j) {
                std::swap(work.at(pivot, j), work.at(col, j));
                std::swap(inv.at(pivot, j), inv.at(col, j));
            }
        }
        const Scalar scale = work.at(col, col).inv();
        for (std::size_t j = 0; j < n_; ++j) {
            work.at(col, j) = work.at(col, j) * scale;
            inv.at(col, j) = inv.at(col, j) * scale;
        }
        for (std::size_t row = 0; row < n_; ++row) {
            if (row == col) continue;
            const Scalar f = work.at(row, col);
            if (f.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j) {
                work.at(row, j) = work.at(row, j) - f * work.at(col, j);
                inv.at(row, j) = inv.at(row, j) - f * inv.at(col, j);
            }
        }
    }
    return inv;
}

bool ScalarMatrix::is_identity() const {
    for (std::size_t i = 0; i < n_; ++i) {
        for (std::size_t j = 0; j < n_; ++j) {
            if (i == j ? !at(i, j).is_one() : !at(i, j).is_zero()) return false;
        }
    }
    return true;
}

bool ScalarMatrix::operator==(const ScalarMatrix& o) const {
    if (n_ != o.n_ || field_ != o.field_) return false;
    for (std::size_t i = 0; i < data_.size(); ++i) {
        if (!(data_[i] == o.data_[i])) return false;
    }
    return true;
}

VariableMap matrix_substitution(const ScalarMatrix& m, const ContextPtr& ctx) {
    if (m.size() != ctx->size()) throw ValidationError("matrix size does not match context");
    std::vector<Polynomial> images;
    images.reserve(ctx->size());
    for (std::size_t i = 0; i < ctx->size(); ++i) {
        Polynomial img(ctx);
        for (std::size_t j = 0; j < ctx->size(); ++j) {
            img = img + Polynomial::term(ctx, Monomial::variable(ctx->size(), j), m.at(i, j));
        }
        images.push_back(std::move(img));
    }
    return VariableMap(ctx, std::move(images));
}

}  // namespace liftlocal
