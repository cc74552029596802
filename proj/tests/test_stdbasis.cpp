#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "liftlocal/stdbasis.hpp"

using namespace liftlocal;

namespace {

ContextPtr ctx1() { return make_context({"X"}, FieldSpec::rationals()); }
ContextPtr ctx2() { return make_context({"X", "Y"}, FieldSpec::rationals()); }

Polynomial p(const std::string& text, const ContextPtr& ctx) {
    return parse_polynomial(text, ctx);
}

IdealData ideal(const ContextPtr& ctx, const std::vector<std::string>& gens) {
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(p(g, ctx));
    return IdealData(ctx, std::move(polys));
}

// Test-side S-polynomial, used to assert the basis postcondition independently.
Polynomial s_poly(const Polynomial& f, const Polynomial& g, OrderKind order) {
    const auto& [fm, fc] = f.leading_term(order);
    const auto& [gm, gc] = g.leading_term(order);
    const Monomial l = Monomial::lcm(fm, gm);
    return f.times_term(l.quotient_by(fm), fc.inv()) -
           g.times_term(l.quotient_by(gm), gc.inv());
}

Polynomial random_homogeneous(std::mt19937_64& rng, const ContextPtr& ctx, unsigned deg) {
    std::vector<Polynomial::Term> terms;
    const int count = 1 + static_cast<int>(rng() % 3);
    for (int t = 0; t < count; ++t) {
        Monomial m = Monomial::one(ctx->size());
        unsigned left = deg;
        for (std::size_t v = 0; v + 1 < ctx->size(); ++v) {
            const unsigned e = static_cast<unsigned>(rng() % (left + 1));
            m.exponents[v] = e;
            left -= e;
        }
        m.exponents[ctx->size() - 1] = left;
        const long long c = static_cast<long long>(rng() % 7) - 3;
        if (c != 0) terms.emplace_back(std::move(m), Scalar::from_int(ctx->field(), c));
    }
    return Polynomial::from_terms(ctx, std::move(terms));
}

}  // namespace

TEST_CASE("zero generators are dropped") {
    const ContextPtr c = ctx2();
    const IdealData zero(c, {Polynomial::zero(c), Polynomial::zero(c)});
    CHECK(zero.is_zero_ideal());
    CHECK(buchberger(zero).elements.empty());
    CHECK(is_member(Polynomial::zero(c), zero, Mode::Graded));
    CHECK_FALSE(is_member(p("X", c), zero, Mode::Graded));
    const IdealData mixed(c, {Polynomial::zero(c), p("X", c)});
    CHECK(mixed.generators.size() == 1);
}

TEST_CASE("buchberger basic examples") {
    const ContextPtr c = ctx2();

    const ComputedBasis axes = buchberger(ideal(c, {"X", "Y"}));
    REQUIRE(axes.elements.size() == 2);
    CHECK(axes.elements[0] == p("Y", c));
    CHECK(axes.elements[1] == p("X", c));

    const ComputedBasis square = buchberger(ideal(c, {"X^2"}));
    REQUIRE(square.elements.size() == 1);
    CHECK(square.elements[0] == p("X^2", c));
}

TEST_CASE("buchberger derives the missing corner generator") {
    const ContextPtr c = ctx2();
    const ComputedBasis b = buchberger(ideal(c, {"X^2 - Y", "X*Y"}));
    REQUIRE(b.elements.size() == 3);
    CHECK(b.elements[0] == p("Y^2", c));
    CHECK(b.elements[1] == p("X*Y", c));
    CHECK(b.elements[2] == p("X^2 - Y", c));
}

TEST_CASE("every S-polynomial of a reduced basis divides to zero") {
    const ContextPtr c = ctx2();
    const std::vector<IdealData> cases = {
        ideal(c, {"X^2 - Y", "X*Y"}),
        ideal(c, {"X^3 - Y^2", "X*Y - X"}),
        ideal(c, {"X^2 + Y^2", "X*Y + Y^2"}),
    };
    for (const IdealData& id : cases) {
        const ComputedBasis b = buchberger(id);
        for (std::size_t i = 0; i < b.elements.size(); ++i) {
            for (std::size_t j = i + 1; j < b.elements.size(); ++j) {
                const Polynomial s = s_poly(b.elements[i], b.elements[j], b.order);
                CHECK(global_divide(s, b.elements, b.order).remainder.is_zero());
            }
        }
        // Reduced: no element's tail term is divisible by another's leading monomial.
        for (std::size_t i = 0; i < b.elements.size(); ++i) {
            for (const auto& [m, coeff] : b.elements[i].terms()) {
                for (std::size_t j = 0; j < b.elements.size(); ++j) {
                    if (j == i) continue;
                    CHECK_FALSE(b.elements[j].leading_term(b.order).first.divides(m));
                }
            }
        }
    }
}

TEST_CASE("global division tracks exact quotients") {
    const ContextPtr c = ctx2();
    std::mt19937_64 rng(5);
    const ComputedBasis b = buchberger(ideal(c, {"X^2 - Y", "X*Y"}));
    for (int trial = 0; trial < 200; ++trial) {
        const Polynomial f = random_homogeneous(rng, c, rng() % 4) +
                             random_homogeneous(rng, c, rng() % 3);
        const DivisionResult div = global_divide(f, b.elements, b.order);
        Polynomial rebuilt = div.remainder;
        for (std::size_t i = 0; i < b.elements.size(); ++i) {
            rebuilt = rebuilt + div.quotients[i] * b.elements[i];
        }
        REQUIRE(rebuilt == f);
        for (const auto& [m, coeff] : div.remainder.terms()) {
            for (const Polynomial& g : b.elements) {
                CHECK_FALSE(g.leading_term(b.order).first.divides(m));
            }
        }
    }
}

TEST_CASE("mora normal form examples") {
    const ContextPtr c = ctx1();
    const OrderKind l = OrderKind::DegRevLexLocal;

    CHECK(mora_normal_form(p("X", c), {p("X - X^2", c)}, l).normal_form.is_zero());
    CHECK(mora_normal_form(p("1", c), {p("X", c)}, l).normal_form == p("1", c));
    CHECK(mora_normal_form(p("X^2", c), {p("X", c)}, l).normal_form.is_zero());
}

TEST_CASE("mora witness identity holds exactly") {
    const ContextPtr c = ctx2();
    const OrderKind l = OrderKind::DegRevLexLocal;
    const std::vector<Polynomial> basis = {p("X - X^2", c), p("X*Y + Y^3", c)};
    const std::vector<std::string> inputs = {"X", "Y", "X*Y", "X + Y", "X^2*Y - Y^2",
                                             "X^3 + X*Y^2"};
    for (const std::string& text : inputs) {
        const Polynomial f = p(text, c);
        const MoraResult r = mora_normal_form(f, basis, l);
        CHECK(r.unit.constant_term().is_one());
        Polynomial rhs = r.normal_form;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            rhs = rhs + r.quotients[i] * basis[i];
        }
        REQUIRE(r.unit * f == rhs);
        if (!r.normal_form.is_zero()) {
            for (const Polynomial& g : basis) {
                CHECK_FALSE(g.leading_term(l).first.divides(r.normal_form.leading_term(l).first));
            }
        }
    }
}

TEST_CASE("standard basis examples") {
    const ContextPtr c1 = ctx1();
    const ComputedBasis unit_like = standard_basis(ideal(c1, {"X - X^2"}));
    REQUIRE(unit_like.elements.size() == 1);
    CHECK(unit_like.elements[0].leading_term(OrderKind::DegRevLexLocal).first ==
          Monomial::variable(1, 0));

    const ContextPtr c = ctx2();
    const ComputedBasis mono_ideal = standard_basis(ideal(c, {"X*Y"}));
    REQUIRE(mono_ideal.elements.size() == 1);
    CHECK(mono_ideal.elements[0] == p("X*Y", c));

    const ComputedBasis cusp = standard_basis(ideal(c, {"X^2 + Y^3"}));
    REQUIRE(cusp.elements.size() == 1);
    CHECK(cusp.elements[0] == p("X^2 + Y^3", c));
    CHECK(cusp.elements[0].leading_term(OrderKind::DegRevLexLocal).first ==
          Monomial{{2, 0}});
}

TEST_CASE("standard basis S-pairs have zero weak normal form") {
    const ContextPtr c = ctx2();
    const std::vector<IdealData> cases = {
        ideal(c, {"X - X^2", "X*Y + Y^3"}),
        ideal(c, {"X^2 - Y^3", "X*Y"}),
        ideal(c, {"X^2 + Y^2 + X^3", "X*Y"}),
    };
    for (const IdealData& id : cases) {
        const ComputedBasis b = standard_basis(id);
        for (std::size_t i = 0; i < b.elements.size(); ++i) {
            for (std::size_t j = i + 1; j < b.elements.size(); ++j) {
                const Polynomial s = s_poly(b.elements[i], b.elements[j], b.order);
                CHECK(mora_normal_form(s, b.elements, b.order).normal_form.is_zero());
            }
        }
    }
}

TEST_CASE("membership examples split by mode") {
    const ContextPtr c = ctx2();
    const IdealData xy = ideal(c, {"X*Y"});
    CHECK(is_member(p("X^2*Y^2", c), xy, Mode::Graded));
    CHECK(is_member(p("X^2*Y^2", c), xy, Mode::Local));
    CHECK_FALSE(is_member(p("X", c), xy, Mode::Graded));
    CHECK_FALSE(is_member(p("X", c), xy, Mode::Local));

    const ContextPtr c1 = ctx1();
    const IdealData shifted = ideal(c1, {"X - X^2"});
    CHECK(is_member(p("X", c1), shifted, Mode::Local));
    CHECK_FALSE(is_member(p("X", c1), shifted, Mode::Graded));
}

TEST_CASE("graded and local membership agree on homogeneous ideals") {
    const ContextPtr c = make_context({"X", "Y", "Z"}, FieldSpec::rationals());
    std::mt19937_64 rng(77);
    int checked = 0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<Polynomial> gens;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < count; ++g) {
            gens.push_back(random_homogeneous(rng, c, 1 + rng() % 3));
        }
        const IdealData id(c, std::move(gens));
        if (id.is_zero_ideal()) continue;
        for (int probe = 0; probe < 5; ++probe) {
            const Polynomial f = random_homogeneous(rng, c, 1 + rng() % 4);
            const bool global = is_member(f, id, Mode::Graded);
            const bool local = is_member(f, id, Mode::Local);
            REQUIRE(global == local);
            ++checked;
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("bases are deterministic and cached") {
    const ContextPtr c = ctx2();
    const IdealData a = ideal(c, {"X^2 - Y", "X*Y"});
    const IdealData b = ideal(c, {"X^2 - Y", "X*Y"});
    const ComputedBasis first = buchberger(a);
    const ComputedBasis second = buchberger(b);
    REQUIRE(first.elements.size() == second.elements.size());
    for (std::size_t i = 0; i < first.elements.size(); ++i) {
        CHECK(first.elements[i] == second.elements[i]);
    }

    BasisCache cache;
    const ComputedBasis& c1 = cache.get(a, Mode::Local);
    const ComputedBasis& c2 = cache.get(b, Mode::Local);
    CHECK(&c1 == &c2);  // same ideal, same mode: one stored basis
}

TEST_CASE("canonical representative never scales the class") {
    const ContextPtr c1 = ctx1();
    const IdealData shifted = ideal(c1, {"X - X^2"});
    // Global reduction of X against {X^2 - X} leaves X untouched; in
    // particular the representative differs from f by an ideal member.
    const Polynomial rep = canonical_representative(p("X^3", c1), shifted);
    CHECK(is_member(p("X^3", c1) - rep, shifted, Mode::Local));
    CHECK(is_member(p("X^3", c1) - rep, shifted, Mode::Graded));

    const ContextPtr c = ctx2();
    const IdealData xy = ideal(c, {"X*Y"});
    CHECK(canonical_representative(p("X*Y + X", c), xy) == p("X", c));
    CHECK(canonical_representative(p("X", c), xy) == p("X", c));
}
