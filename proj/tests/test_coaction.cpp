#include "doctest.h"

#include "generators.hpp"
#include "superq/coaction.hpp"
#include "superq/parse.hpp"

using namespace superq;
using superq::testing::random_polynomial;

namespace {

SuperVariable even(std::string name) { return {std::move(name), Parity::Even, 1, {}, -1}; }
SuperVariable odd(std::string name) { return {std::move(name), Parity::Odd, 1, {}, -1}; }

Tensor T(const Polynomial& a, const Polynomial& b) { return Tensor::pure({a, b}); }

std::shared_ptr<const HopfSuperAlgebra> group(const SupergroupSpec& spec, Field f)
{
    return std::make_shared<const HopfSuperAlgebra>(build(spec, f));
}

// Substitution oracle: every monomial is the ordered product of its factors.
Polynomial substitute(const Polynomial& f, const std::vector<Polynomial>& images)
{
    const auto& pres = f.presentation();
    Polynomial out(pres);
    for (const auto& [m, c] : f.terms()) {
        auto term = Polynomial::constant(pres, c);
        for (std::size_t i = 0; i < pres->size(); ++i)
            term = term * images[i].pow(m.exponent(i));
        out += term;
    }
    return out;
}

}  // namespace

TEST_CASE("odd derivation on monomials")
{
    auto q = Field::rationals();
    auto pres = Presentation::create(q, {even("v1"), odd("v2")});
    auto P = [&](std::string_view s) { return parse_polynomial(pres, s); };
    OddDerivation phi(pres, {P("v2"), P("0")});
    for (unsigned r = 1; r <= 5; ++r)
        CHECK(phi.apply(P("v1").pow(r)) == (P("v1").pow(r - 1) * P("v2")).scaled(Scalar(r)));
    CHECK(phi.apply(P("1")).is_zero());
    CHECK(phi.apply(P("v1*v2")).is_zero());
    CHECK_FALSE(phi.square_violation());

    auto xt = Presentation::create(q, {even("x"), odd("theta")});
    OddDerivation d(xt, {Polynomial(xt), Polynomial::one(xt)});
    CHECK(d.apply(parse_polynomial(xt, "x*theta")) == parse_polynomial(xt, "x"));
    CHECK(d.apply(parse_polynomial(xt, "theta")) == Polynomial::one(xt));

    // Images must flip parity and not raise the degree.
    CHECK_THROWS_AS(OddDerivation(xt, {parse_polynomial(xt, "x"), Polynomial(xt)}), Error);
    CHECK_THROWS_AS(OddDerivation(xt, {parse_polynomial(xt, "x*theta"), Polynomial(xt)}), Error);
}

TEST_CASE("odd derivation coaction of the worked example")
{
    auto q = Field::rationals();
    auto ga = group(SupergroupSpec::odd_additive(), q);
    auto pres = Presentation::create(q, {even("v1"), odd("v2")});
    auto P = [&](std::string_view s) { return parse_polynomial(pres, s); };
    auto c = from_odd_derivation(ga, OddDerivation(pres, {P("v2"), P("0")}));
    auto one = Polynomial::one(ga->presentation());
    auto t = Polynomial::variable(ga->presentation(), "t");
    CHECK(c.kind() == ActionKind::OddDerivation);
    CHECK(c.coact(P("v1")) == T(P("v1"), one) + T(P("v2"), t));
    CHECK(c.coact(P("v2")) == T(P("v2"), one));
    CHECK(c.coact(P("v1^2")) == T(P("v1^2"), one) + T(P("2*v1*v2"), t));
    auto v = validate_to_degree(c);
    CHECK(v.ok());
    CHECK(v.monomials_checked == 13);  // 1 + 2 per degree 1..6
}

TEST_CASE("derivations with nonzero square are rejected")
{
    auto q = Field::rationals();
    auto ga = group(SupergroupSpec::odd_additive(), q);
    auto pres = Presentation::create(q, {even("x"), odd("theta")});
    OddDerivation phi(pres, {parse_polynomial(pres, "theta"), Polynomial::one(pres)});
    CHECK(phi.square_violation() == std::optional<std::string>("x"));
    try {
        from_odd_derivation(ga, phi);
        FAIL("expected rejection");
    } catch (const CoactionError& e) {
        CHECK(e.failure().law == "phi^2 = 0");
        CHECK(e.failure().witness == "x");
    }
    auto fr = group(SupergroupSpec::frobenius_kernel(), Field::prime(3));
    auto p3 = Presentation::create(Field::prime(3), {even("x"), odd("theta")});
    CHECK_THROWS_AS(from_odd_derivation(fr, OddDerivation(p3, {Polynomial(p3), Polynomial(p3)})),
                    Error);
}

TEST_CASE("constant group actions")
{
    auto q = Field::rationals();
    auto z2 = group(SupergroupSpec::constant(FiniteGroup::cyclic(2)), q);
    auto pres = Presentation::create(q, {even("x"), odd("theta")});
    auto P = [&](std::string_view s) { return parse_polynomial(pres, s); };
    auto e0 = z2->idempotent(0);
    auto e1 = z2->idempotent(1);

    SUBCASE("sign action")
    {
        auto c = from_group_action(z2, pres, {{P("x"), P("theta")}, {P("-x"), P("-theta")}});
        CHECK(c.coact(P("x")) == T(P("x"), e0) - T(P("x"), e1));
        CHECK(c.coact(P("x*theta")) == T(P("x*theta"), e0) + T(P("x*theta"), e1));
        CHECK(c.act(1, P("x^3 + x*theta")) == P("-x^3 + x*theta"));
        CHECK(validate_to_degree(c).ok());
    }
    SUBCASE("x -> 1 - x is an involution over QQ")
    {
        auto c = from_group_action(z2, pres, {{P("x"), P("theta")}, {P("1 - x"), P("theta")}});
        CHECK(validate_to_degree(c, 5).ok());
    }
    SUBCASE("x -> x + 1 is not an involution over QQ")
    {
        try {
            from_group_action(z2, pres, {{P("x"), P("theta")}, {P("x + 1"), P("theta")}});
            FAIL("expected rejection");
        } catch (const CoactionError& e) {
            CHECK(e.failure().law == "multiplicative over the table");
            CHECK(e.failure().detail.find("x + 2") != std::string::npos);
        }
    }
    SUBCASE("x -> x + 1 is an involution over GF(2)")
    {
        auto f2 = Field::prime(2);
        auto g2 = group(SupergroupSpec::constant(FiniteGroup::cyclic(2)), f2);
        auto p2 = Presentation::create(f2, {even("x")});
        auto c = from_group_action(g2, p2, {{parse_polynomial(p2, "x")}, {parse_polynomial(p2, "x + 1")}});
        CHECK(validate_to_degree(c).ok());
    }
    SUBCASE("trivial group")
    {
        auto z1 = group(SupergroupSpec::constant(FiniteGroup::cyclic(1)), q);
        auto c = from_group_action(z1, pres, {{P("x"), P("theta")}});
        auto one = Polynomial::one(z1->presentation());
        CHECK(c.coact(P("x")) == T(P("x"), one));
        CHECK(c.coact(P("x^2*theta")) == c.trivial(P("x^2*theta")));
    }
    SUBCASE("parity and identity violations")
    {
        CHECK_THROWS_AS(from_group_action(z2, pres, {{P("x"), P("theta")}, {P("theta"), P("x")}}),
                        CoactionError);
        CHECK_THROWS_AS(from_group_action(z2, pres, {{P("-x"), P("theta")}, {P("x"), P("theta")}}),
                        CoactionError);
    }
}

TEST_CASE("explicit coactions and their failure modes")
{
    auto f3 = Field::prime(3);
    auto fr = group(SupergroupSpec::frobenius_kernel(), f3);
    auto gp = fr->presentation();
    auto pres = Presentation::create(f3, {even("x")});
    auto x = Polynomial::variable(pres, "x");
    auto one = Polynomial::one(pres);
    auto u = Polynomial::variable(gp, "u");
    auto gone = Polynomial::one(gp);

    auto c = from_explicit(fr, pres, {T(x, gone) + T(one, u)});
    CHECK(c.coact(x.pow(3)) == T(x.pow(3), gone));
    CHECK(validate_to_degree(c).ok());

    auto law = [&](std::vector<Tensor> tau) {
        auto f = check_coaction_laws(*fr, pres, tau);
        return f ? f->law : std::string();
    };
    CHECK(law({T(x, gone) + T(x, u)}) == "coassociativity");
    CHECK(law({T(x, gone).scaled(2)}) == "counit");
    CHECK(law({T(x * x, gone)}) == "filtration");

    auto ga = group(SupergroupSpec::odd_additive(), Field::rationals());
    auto px = Presentation::create(Field::rationals(), {even("x")});
    auto bad = T(Polynomial::variable(px, "x"), Polynomial::one(ga->presentation()))
               + T(Polynomial::one(px), Polynomial::variable(ga->presentation(), "t"));
    try {
        from_explicit(ga, px, {bad});
        FAIL("expected rejection");
    } catch (const CoactionError& e) {
        CHECK(e.failure().law == "parity");
        CHECK(e.failure().witness == "x");
    }
}

TEST_CASE("properties of coactions on random inputs")
{
    superq::testing::Rng rng(31);
    auto q = Field::rationals();
    auto ga = group(SupergroupSpec::odd_additive(), q);
    auto pres = Presentation::create(q, {even("x"), even("y"), odd("a"), odd("b")});
    auto P = [&](std::string_view s) { return parse_polynomial(pres, s); };
    // phi(x) = a, phi(y) = b, phi(a) = phi(b) = 0.
    OddDerivation phi(pres, {P("a"), P("b"), P("0"), P("0")});
    auto c = from_odd_derivation(ga, phi);
    CHECK(validate_to_degree(c, 4).ok());
    auto t = ga->presentation()->generator(0);
    auto gunit = ga->presentation()->unit();

    auto z3 = group(SupergroupSpec::constant(FiniteGroup::cyclic(3)), q);
    // Z/3 cycling (x, y, -x - y) and fixing the odd part.
    std::vector<std::vector<Polynomial>> imgs{{P("x"), P("y"), P("a"), P("b")},
                                              {P("y"), P("-x - y"), P("a"), P("b")},
                                              {P("-x - y"), P("x"), P("a"), P("b")}};
    auto g = from_group_action(z3, pres, imgs);
    CHECK(validate_to_degree(g, 4).ok());

    for (int i = 0; i < 60; ++i) {
        auto f = random_polynomial(rng, pres, 4, 4);
        auto h = random_polynomial(rng, pres, 3, 3);
        // The t-component recovers phi and the 1-component is f itself.
        CHECK(c.coact(f).left_factor_of(t) == phi.apply(f));
        CHECK(c.coact(f).left_factor_of(gunit) == f);
        // Computing on a product or on the factors agrees.
        CHECK(c.coact(f * h) == c.coact(f) * c.coact(h));
        CHECK(g.coact(f * h) == g.coact(f) * g.coact(h));
        // Group coaction agrees with substitution, element by element.
        Tensor expect(q, {pres, z3->presentation()});
        for (std::size_t e = 0; e < 3; ++e) {
            CHECK(g.act(e, f) == substitute(f, imgs[e]));
            expect += T(substitute(f, imgs[e]), z3->idempotent(e));
        }
        CHECK(g.coact(f) == expect);
        // Leibniz rule on homogeneous pieces.
        for (auto pf : {Parity::Even, Parity::Odd})
            for (auto ph : {Parity::Even, Parity::Odd}) {
                auto a = f.parity_component(pf);
                auto b = h.parity_component(ph);
                auto rhs = a * phi.apply(b) + (phi.apply(a) * b).scaled(ph == Parity::Odd ? -1 : 1);
                CHECK(phi.apply(a * b) == rhs);
            }
        CHECK(phi.apply(phi.apply(f)).is_zero());
    }
}
