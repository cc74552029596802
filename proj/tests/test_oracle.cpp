#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>
#include <vector>

#include "doctest.h"
#include "liftlocal/oracle.hpp"

using namespace liftlocal;

namespace {

ContextPtr vars(std::initializer_list<std::string> names, FieldSpec field = FieldSpec::rationals()) {
    return make_context(std::vector<std::string>(names), field);
}

Polynomial p(const std::string& text, const ContextPtr& ctx) {
    return parse_polynomial(text, ctx);
}

IdealData ideal(const ContextPtr& ctx, const std::vector<std::string>& gens) {
    std::vector<Polynomial> polys;
    for (const auto& g : gens) polys.push_back(p(g, ctx));
    return IdealData(ctx, std::move(polys));
}

}  // namespace

TEST_CASE("brute force dimension on small monomial ideals") {
    const ContextPtr c2 = vars({"X", "Y"});
    CHECK(monomial_dim_bruteforce(MonomialIdeal::from_monomials(c2, {Monomial{{1, 1}}})) == 1);

    const ContextPtr c1 = vars({"X"});
    CHECK(monomial_dim_bruteforce(MonomialIdeal::from_monomials(c1, {Monomial{{1}}})) == 0);

    const ContextPtr c3 = vars({"X", "Y", "Z"});
    CHECK(monomial_dim_bruteforce(MonomialIdeal::from_monomials(c3, {})) == 3);
}

TEST_CASE("brute force dimension respects the variable budget") {
    std::vector<std::string> names;
    for (int i = 0; i < 6; ++i) names.push_back("X" + std::to_string(i + 1));
    const ContextPtr big = make_context(names, FieldSpec::rationals());
    const MonomialIdeal m = MonomialIdeal::from_monomials(big, {Monomial{{1, 1, 0, 0, 0, 0}}});
    CHECK_THROWS_AS(monomial_dim_bruteforce(m), BudgetExceededError);
    OracleBudget loose;
    loose.max_variables = 6;
    CHECK(monomial_dim_bruteforce(m, loose) == 5);
}

TEST_CASE("bounded standard monomials enumerate the quotient basis") {
    const ContextPtr c = vars({"X", "Y"});

    const BoundedStandardMonomials box =
        standard_monomials_bounded(ideal(c, {"X^2", "Y^2"}), Mode::Graded, 4);
    REQUIRE(box.monomials.size() == 4);
    CHECK_FALSE(box.truncated);
    CHECK(box.monomials[0] == Monomial::one(2));
    CHECK(box.monomials[1] == Monomial{{0, 1}});
    CHECK(box.monomials[2] == Monomial{{1, 0}});
    CHECK(box.monomials[3] == Monomial{{1, 1}});

    const ContextPtr c1 = vars({"X"});
    const BoundedStandardMonomials point =
        standard_monomials_bounded(ideal(c1, {"X"}), Mode::Graded, 3);
    REQUIRE(point.monomials.size() == 1);
    CHECK(point.monomials[0] == Monomial::one(1));
    CHECK_FALSE(point.truncated);

    const BoundedStandardMonomials strip =
        standard_monomials_bounded(ideal(c, {"X*Y"}), Mode::Graded, 2);
    REQUIRE(strip.monomials.size() == 5);
    CHECK(strip.truncated);  // X^2 and Y^2 sit at the bound and survive
}

TEST_CASE("bounded standard monomials follow the local leading ideal") {
    const ContextPtr c = vars({"X"});
    // Local leading term of X - X^2 is X, so only 1 survives.
    const BoundedStandardMonomials r =
        standard_monomials_bounded(ideal(c, {"X - X^2"}), Mode::Local, 5);
    REQUIRE(r.monomials.size() == 1);
    CHECK(r.monomials[0] == Monomial::one(1));
    CHECK_FALSE(r.truncated);
}

TEST_CASE("zero locus scan over prime fields and extensions") {
    const ContextPtr c = vars({"X", "Y"}, FieldSpec::prime(3));

    CHECK(zero_locus_scan(ideal(c, {"X", "Y"}), 1));
    CHECK_FALSE(zero_locus_scan(ideal(c, {"X*Y"}), 1));  // (1, 0) vanishes

    // X^2 + Y^2 has only the origin over F_3, but -1 becomes a square in F_9.
    CHECK(zero_locus_scan(ideal(c, {"X^2 + Y^2"}), 1));
    CHECK_FALSE(zero_locus_scan(ideal(c, {"X^2 + Y^2"}), 2));
}

TEST_CASE("zero locus scan validates its input") {
    const ContextPtr rational = vars({"X", "Y"});
    CHECK_THROWS_AS(zero_locus_scan(ideal(rational, {"X"}), 1), ValidationError);

    const ContextPtr c = vars({"X", "Y"}, FieldSpec::prime(3));
    CHECK_THROWS_AS(zero_locus_scan(ideal(c, {"X - X^2"}), 1), ValidationError);
}

TEST_CASE("scan never contradicts m-primary in the sound direction") {
    std::mt19937_64 rng(17);
    const ContextPtr c = vars({"X", "Y"}, FieldSpec::prime(5));
    int primary_seen = 0;
    for (int trial = 0; trial < 80; ++trial) {
        std::vector<Polynomial> gens;
        const int count = 1 + static_cast<int>(rng() % 3);
        for (int g = 0; g < count; ++g) {
            const unsigned deg = 1 + rng() % 2;
            std::vector<Polynomial::Term> terms;
            for (unsigned a = 0; a <= deg; ++a) {
                const long long coeff = static_cast<long long>(rng() % 5);
                if (coeff != 0) {
                    terms.emplace_back(Monomial{{deg - a, a}},
                                       Scalar::from_int(c->field(), coeff));
                }
            }
            gens.push_back(Polynomial::from_terms(c, std::move(terms)));
        }
        const IdealData id(c, std::move(gens));
        if (id.is_zero_ideal()) continue;
        if (is_m_primary(id, Mode::Graded)) {
            ++primary_seen;
            CHECK(zero_locus_scan(id, 2));
        }
    }
    CHECK(primary_seen > 10);
}
