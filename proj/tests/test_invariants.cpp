#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "liftlocal/invariants.hpp"
#include "liftlocal/oracle.hpp"

using namespace liftlocal;

namespace {

ContextPtr vars(std::initializer_list<std::string> names) {
    return make_context(std::vector<std::string>(names), FieldSpec::rationals());
}

Polynomial p(const std::string& text, const ContextPtr& ctx) {
    return parse_polynomial(text, ctx);
}

IdealData ideal(const ContextPtr& ctx, const std::vector<std::string>& gens) {
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(p(g, ctx));
    return IdealData(ctx, std::move(polys));
}

Monomial random_monomial(std::mt19937_64& rng, std::size_t n, unsigned max_deg) {
    Monomial m = Monomial::one(n);
    do {
        for (std::size_t v = 0; v < n; ++v) {
            m.exponents[v] = static_cast<unsigned>(rng() % (max_deg + 1));
        }
    } while (m.total_degree() == 0 || m.total_degree() > max_deg);
    return m;
}

}  // namespace

TEST_CASE("minimal monomial generators drop divisible entries") {
    const ContextPtr c = vars({"X", "Y"});
    const Monomial x{{1, 0}};
    const Monomial x2{{2, 0}};
    const Monomial xy{{1, 1}};
    const MonomialIdeal m = MonomialIdeal::from_monomials(c, {x2, x, xy});
    REQUIRE(m.min_generators.size() == 1);
    CHECK(m.min_generators[0] == x);
    CHECK(m.contains_monomial(x2));
    CHECK(m.contains_monomial(xy));
    CHECK_FALSE(m.contains_monomial(Monomial{{0, 3}}));
    CHECK_FALSE(m.is_unit());
    CHECK(MonomialIdeal::from_monomials(c, {Monomial::one(2)}).is_unit());
    CHECK(MonomialIdeal::from_monomials(c, {}).is_zero());
}

TEST_CASE("leading ideal of computed bases") {
    const ContextPtr c = vars({"X", "Y"});

    const MonomialIdeal axes = leading_ideal(buchberger(ideal(c, {"X", "Y"})));
    REQUIRE(axes.min_generators.size() == 2);
    CHECK(axes.contains_monomial(Monomial{{1, 0}}));
    CHECK(axes.contains_monomial(Monomial{{0, 1}}));

    // The corner ideal needs all three quadratic monomials.
    const MonomialIdeal corner = leading_ideal(buchberger(ideal(c, {"X^2 - Y", "X*Y"})));
    REQUIRE(corner.min_generators.size() == 3);
    CHECK(corner.contains_monomial(Monomial{{2, 0}}));
    CHECK(corner.contains_monomial(Monomial{{1, 1}}));
    CHECK(corner.contains_monomial(Monomial{{0, 2}}));
    CHECK_FALSE(corner.contains_monomial(Monomial{{1, 0}}));

    CHECK(leading_ideal(buchberger(IdealData(c, {}))).is_zero());
}

TEST_CASE("monomial dimension with deterministic witness") {
    const ContextPtr c = vars({"X", "Y"});

    const MonomialIdeal xy = MonomialIdeal::from_monomials(c, {Monomial{{1, 1}}});
    const DimensionReport r = monomial_dimension(xy);
    CHECK(r.dimension == 1);
    REQUIRE(r.witness.size() == 1);
    CHECK(r.witness[0] == 0);  // {X} beats {Y} lexicographically

    const MonomialIdeal both =
        MonomialIdeal::from_monomials(c, {Monomial{{1, 0}}, Monomial{{0, 1}}});
    const DimensionReport r0 = monomial_dimension(both);
    CHECK(r0.dimension == 0);
    CHECK(r0.witness.empty());

    const DimensionReport full = monomial_dimension(MonomialIdeal::from_monomials(c, {}));
    CHECK(full.dimension == 2);
    CHECK(full.witness == std::vector<int>{0, 1});

    const DimensionReport unit =
        monomial_dimension(MonomialIdeal::from_monomials(c, {Monomial::one(2)}));
    CHECK(unit.dimension == -1);
    CHECK(unit.witness.empty());
}

TEST_CASE("krull dimension examples") {
    const ContextPtr c2 = vars({"X", "Y"});
    const IdealData xy = ideal(c2, {"X*Y"});
    CHECK(krull_dimension(xy, Mode::Graded).dimension == 1);
    CHECK(krull_dimension(xy, Mode::Local).dimension == 1);
    CHECK(krull_dimension(xy, Mode::Graded).witness == std::vector<int>{0});

    const ContextPtr c3 = vars({"X", "Y", "Z"});
    const IdealData powers = ideal(c3, {"X^2", "Y^2", "Z^2"});
    CHECK(krull_dimension(powers, Mode::Graded).dimension == 0);
    CHECK(krull_dimension(powers, Mode::Local).dimension == 0);

    CHECK(krull_dimension(IdealData(c3, {}), Mode::Local).dimension == 3);
}

TEST_CASE("local and graded modes diverge on inhomogeneous input") {
    const ContextPtr c = vars({"X"});
    const IdealData shifted = ideal(c, {"X - X^2"});
    CHECK(krull_dimension(shifted, Mode::Local).dimension == 0);
    CHECK_THROWS_AS(krull_dimension(shifted, Mode::Graded), ValidationError);

    const IdealData off_origin = ideal(c, {"X - 1"});
    CHECK_THROWS_AS(krull_dimension(off_origin, Mode::Local), ValidationError);
}

TEST_CASE("m-primary detection") {
    const ContextPtr c2 = vars({"X", "Y"});
    CHECK(is_m_primary(ideal(c2, {"X^2", "Y^2"}), Mode::Graded));
    CHECK(is_m_primary(ideal(c2, {"X^2", "Y^2"}), Mode::Local));
    CHECK_FALSE(is_m_primary(ideal(c2, {"X*Y"}), Mode::Graded));
    CHECK_FALSE(is_m_primary(ideal(c2, {"X*Y"}), Mode::Local));

    const ContextPtr c3 = vars({"X", "Y", "Z"});
    CHECK(is_m_primary(ideal(c3, {"X", "Y", "Z"}), Mode::Graded));
}

TEST_CASE("pure variable powers are always m-primary") {
    const std::vector<std::vector<std::string>> name_sets = {
        {"X"}, {"X", "Y"}, {"X", "Y", "Z"}};
    for (const auto& names : name_sets) {
        const std::size_t n = names.size();
        ContextPtr c = make_context(std::vector<std::string>(names), FieldSpec::rationals());
        std::vector<unsigned> exps(n, 1);
        while (true) {
            std::vector<Polynomial> gens;
            for (std::size_t v = 0; v < n; ++v) {
                gens.push_back(p(names[v] + "^" + std::to_string(exps[v]), c));
            }
            const IdealData id(c, std::move(gens));
            CHECK(is_m_primary(id, Mode::Graded));
            CHECK(is_m_primary(id, Mode::Local));
            std::size_t carry = 0;
            while (carry < n && exps[carry] == 3) exps[carry++] = 1;
            if (carry == n) break;
            ++exps[carry];
        }
    }
}

TEST_CASE("quotient vector space dimension") {
    const ContextPtr c2 = vars({"X", "Y"});
    CHECK(quotient_k_dimension(ideal(c2, {"X^2", "Y^2"}), Mode::Graded) == 4);
    CHECK(quotient_k_dimension(ideal(c2, {"X^2", "Y^2"}), Mode::Local) == 4);
    CHECK_FALSE(quotient_k_dimension(ideal(c2, {"X*Y"}), Mode::Graded).has_value());

    const ContextPtr c1 = vars({"X"});
    CHECK(quotient_k_dimension(ideal(c1, {"X"}), Mode::Graded) == 1);
    // Local leading ideal of X - X^2 is still generated in degree 1.
    CHECK(quotient_k_dimension(ideal(c1, {"X - X^2"}), Mode::Local) == 1);
}

TEST_CASE("embedding dimension from linear parts") {
    const ContextPtr c = vars({"X1", "X2"});
    CHECK(embedding_dimension(ideal(c, {"X1 - X2^2"})) == 1);
    CHECK(embedding_dimension(ideal(c, {"X1*X2"})) == 2);
    CHECK(embedding_dimension(ideal(c, {"X1", "X2"})) == 0);
    CHECK(embedding_dimension(IdealData(c, {})) == 2);
}

TEST_CASE("monomial dimension matches the exhaustive oracle") {
    std::mt19937_64 rng(11);
    const ContextPtr c = vars({"X1", "X2", "X3", "X4"});
    for (int trial = 0; trial < 120; ++trial) {
        std::vector<Monomial> gens;
        const int count = 1 + static_cast<int>(rng() % 5);
        for (int g = 0; g < count; ++g) gens.push_back(random_monomial(rng, 4, 3));
        const MonomialIdeal m = MonomialIdeal::from_monomials(c, std::move(gens));
        REQUIRE(monomial_dimension(m).dimension == monomial_dim_bruteforce(m));

        // The same monomials as an IdealData must report the same dimension.
        std::vector<Polynomial> polys;
        for (const Monomial& g : m.min_generators) {
            polys.push_back(Polynomial::from_terms(
                c, {{g, Scalar::from_int(c->field(), 1)}}));
        }
        const IdealData id(c, std::move(polys));
        CHECK(krull_dimension(id, Mode::Graded).dimension ==
              monomial_dimension(m).dimension);
        CHECK(krull_dimension(id, Mode::Local).dimension ==
              monomial_dimension(m).dimension);
    }
}

TEST_CASE("dimension is monotone under adding generators") {
    std::mt19937_64 rng(23);
    const ContextPtr c = vars({"X", "Y", "Z"});
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Monomial> gens;
        const int count = 1 + static_cast<int>(rng() % 3);
        std::vector<Polynomial> polys;
        for (int g = 0; g < count; ++g) {
            polys.push_back(Polynomial::from_terms(
                c, {{random_monomial(rng, 3, 3), Scalar::from_int(c->field(), 1)}}));
        }
        const IdealData base(c, std::vector<Polynomial>(polys));
        const int dim = krull_dimension(base, Mode::Graded).dimension;

        // One random nonzero linear form: dimension drops by at most one.
        Polynomial linear = Polynomial::zero(c);
        while (linear.is_zero()) {
            std::vector<Polynomial::Term> terms;
            for (std::size_t v = 0; v < 3; ++v) {
                const long long coeff = static_cast<long long>(rng() % 3) - 1;
                if (coeff != 0) {
                    terms.emplace_back(Monomial::variable(3, v),
                                       Scalar::from_int(c->field(), coeff));
                }
            }
            linear = Polynomial::from_terms(c, std::move(terms));
        }
        polys.push_back(linear);
        const IdealData bigger(c, std::move(polys));
        const int cut = krull_dimension(bigger, Mode::Graded).dimension;
        CHECK(cut <= dim);
        CHECK(cut >= dim - 1);
        CHECK(cut >= 0);
    }
}

TEST_CASE("graded and local dimensions agree on homogeneous ideals") {
    std::mt19937_64 rng(31);
    const ContextPtr c = vars({"X", "Y", "Z"});
    for (int trial = 0; trial < 60; ++trial) {
        std::vector<Polynomial> gens;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < count; ++g) {
            const unsigned deg = 1 + rng() % 3;
            std::vector<Polynomial::Term> terms;
            const int span = 1 + static_cast<int>(rng() % 3);
            for (int t = 0; t < span; ++t) {
                Monomial m = Monomial::one(3);
                unsigned left = deg;
                for (std::size_t v = 0; v + 1 < 3; ++v) {
                    const unsigned e = static_cast<unsigned>(rng() % (left + 1));
                    m.exponents[v] = e;
                    left -= e;
                }
                m.exponents[2] = left;
                const long long coeff = static_cast<long long>(rng() % 5) - 2;
                if (coeff != 0) {
                    terms.emplace_back(std::move(m), Scalar::from_int(c->field(), coeff));
                }
            }
            gens.push_back(Polynomial::from_terms(c, std::move(terms)));
        }
        const IdealData id(c, std::move(gens));
        CHECK(krull_dimension(id, Mode::Graded).dimension ==
              krull_dimension(id, Mode::Local).dimension);
    }
}
