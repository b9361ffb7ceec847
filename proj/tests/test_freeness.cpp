#include "doctest.h"

#include "generators.hpp"
#include "superq/freeness.hpp"
#include "superq/parse.hpp"

using namespace superq;
using superq::testing::random_polynomial;

namespace {

SuperVariable even(std::string name, std::optional<unsigned> q = {}) { return {std::move(name), Parity::Even, 1, q, -1}; }
SuperVariable odd(std::string name) { return {std::move(name), Parity::Odd, 1, {}, -1}; }

std::shared_ptr<const HopfSuperAlgebra> odd_additive(Field f)
{
    return std::make_shared<const HopfSuperAlgebra>(build(SupergroupSpec::odd_additive(), f));
}

struct Fixture {
    PresentationPtr pres;
    Coaction c;
};

// K[v1|v2] with phi(v1) = v2.
Fixture worked_example()
{
    auto q = Field::rationals();
    auto pres = Presentation::create(q, {even("v1"), odd("v2")});
    return {pres, from_odd_derivation(odd_additive(q),
                                      OddDerivation(pres, {Polynomial::from_monomial(pres, pres->generator(1)),
                                                           Polynomial(pres)}))};
}

// K[x|theta] with phi(theta) = 1.
Fixture free_example()
{
    auto q = Field::rationals();
    auto pres = Presentation::create(q, {even("x"), odd("theta")});
    return {pres, from_odd_derivation(odd_additive(q), OddDerivation(pres, {Polynomial(pres), Polynomial::one(pres)}))};
}

Fixture translation_p5()
{
    auto f5 = Field::prime(5);
    auto fr = std::make_shared<const HopfSuperAlgebra>(build(SupergroupSpec::frobenius_kernel(), f5));
    auto pres = Presentation::create(f5, {even("x")});
    auto x = Polynomial::variable(pres, "x");
    auto gp = fr->presentation();
    return {pres, from_explicit(fr, pres,
                                {Tensor::pure({x, Polynomial::one(gp)})
                                 + Tensor::pure({Polynomial::one(pres), Polynomial::variable(gp, "u")})})};
}

StabilizerWitness shipped_witness(const Fixture& fx, bool alpha_v2_odd = false)
{
    auto a = Presentation::create(fx.pres->field(), {even("w"), odd("xi")});
    auto w = Polynomial::variable(a, "w");
    auto xi = Polynomial::variable(a, "xi");
    return {a, {w, alpha_v2_odd ? xi : Polynomial(a)}, {xi}};
}

// (alpha (x)bar g) evaluated term by term: alpha(l) g(r).
Polynomial evaluate(const StabilizerWitness& w, const Coaction& c, const Tensor& t)
{
    auto alpha = polynomial_morphism(c.space(), w.algebra, w.point);
    auto g = polynomial_morphism(c.group().presentation(), w.algebra, w.element);
    Polynomial out(w.algebra);
    for (const auto& [k, coeff] : t.terms())
        out += (alpha.apply(k[0]).to_polynomial() * g.apply(k[1]).to_polynomial()).scaled(coeff);
    return out;
}

}  // namespace

TEST_CASE("free odd additive action: degree-zero certificate")
{
    auto fx = free_example();
    FreenessProblem problem(fx.c);
    REQUIRE(problem.m_basis.size() == 1);
    auto v = check_free(problem, 6);
    CHECK(v.status == FreenessStatus::Free);
    REQUIRE(v.certificates.size() == 1);
    const auto& cert = v.certificates[0];
    CHECK(cert.degree == 0);
    REQUIRE(cert.terms.size() == 1);
    CHECK(cert.terms[0].generator == fx.pres->require_index("theta"));
    CHECK(cert.terms[0].group_monomial.is_unit());
    CHECK(cert.terms[0].coefficient == Polynomial::one(fx.pres));
    CHECK(verify_certificate(problem, cert));
    // tau(theta) - theta (x) 1 is exactly 1 (x) t.
    auto gp = fx.c.group().presentation();
    CHECK(problem.j_generators[cert.terms[0].generator]
          == Tensor::pure({Polynomial::one(fx.pres), Polynomial::variable(gp, "t")}));
    CHECK_FALSE(search_stabilizer_witness(problem));
}

TEST_CASE("Frobenius translation is free")
{
    auto fx = translation_p5();
    FreenessProblem problem(fx.c);
    auto v = check_free(problem, 6);
    CHECK(v.status == FreenessStatus::Free);
    REQUIRE(v.certificates.size() == 4);
    auto gp = fx.c.group().presentation();
    auto u = Polynomial::variable(gp, "u");
    for (std::size_t k = 0; k < 4; ++k) {
        CHECK(v.certificates[k].target == u.pow(k + 1));
        CHECK(verify_certificate(problem, v.certificates[k]));
    }
    // (1 (x) u)^k lies in J because 1 (x) u = tau(x) - x (x) 1.
    auto s = problem.j_generators[0];
    auto one = Polynomial::one(fx.pres);
    CHECK(s == Tensor::pure({one, u}));
    for (unsigned k = 1; k <= 4; ++k) {
        Tensor p = Tensor::unit(fx.pres->field(), {fx.pres, gp});
        for (unsigned i = 0; i < k; ++i)
            p = p * s;
        CHECK(p == Tensor::pure({one, u.pow(k)}));
    }
}

TEST_CASE("worked example stays unknown at every bound; witness refutes freeness")
{
    auto fx = worked_example();
    FreenessProblem problem(fx.c);
    auto w = shipped_witness(fx);
    auto gp = fx.c.group().presentation();
    auto target = Tensor::pure({Polynomial::one(fx.pres), Polynomial::variable(gp, "t")});
    for (int b = 2; b <= 6; ++b) {
        auto v = check_free(problem, b);
        CHECK(v.status == FreenessStatus::UnknownAtBound);
        CHECK(v.bound == b);
        CHECK(v.certificates.empty());
    }
    // Oracle: alpha (x)bar g is an algebra map killing every generator of J
    // but not 1 (x) t, so no bounded combination can reach the target.
    for (int d = 0; d <= 6; ++d)
        for (const auto& a : fx.pres->monomial_basis(d))
            for (const auto& h : gp->full_basis())
                for (const auto& s : problem.j_generators) {
                    auto col = Tensor::pure({Polynomial::from_monomial(fx.pres, a), Polynomial::from_monomial(gp, h)}) * s;
                    CHECK(evaluate(w, fx.c, col).is_zero());
                }
    CHECK(evaluate(w, fx.c, target) == Polynomial::variable(w.algebra, "xi"));

    auto check = verify_stabilizer_witness(problem, w);
    CHECK(check.confirmed);
    auto verdict = decide_freeness(problem, 6, w);
    CHECK(verdict.status == FreenessStatus::NotFree);
    CHECK(to_string(verdict.status) == "not_free");

    auto found = search_stabilizer_witness(problem);
    REQUIRE(found);
    CHECK(verify_stabilizer_witness(problem, *found).confirmed);
    CHECK(decide_freeness(problem, 4, std::nullopt, true).status == FreenessStatus::NotFree);
    CHECK(decide_freeness(problem, 4, std::nullopt, false).status == FreenessStatus::UnknownAtBound);
}

TEST_CASE("stabilizer witness rejections")
{
    auto fx = worked_example();
    FreenessProblem problem(fx.c);

    auto identity = shipped_witness(fx);
    identity.element = {Polynomial(identity.algebra)};
    auto r = verify_stabilizer_witness(problem, identity);
    CHECK_FALSE(r.confirmed);
    CHECK(r.reason == "g is the identity element of G(A)");
    auto v = decide_freeness(problem, 3, identity);
    CHECK(v.status == FreenessStatus::UnknownAtBound);
    CHECK(v.witness_rejection);

    // alpha(v2) = xi = g(t): the correction term is xi*xi = 0, so it still holds.
    CHECK(verify_stabilizer_witness(problem, shipped_witness(fx, true)).confirmed);

    // alpha(v2) = eta, g(t) = xi: the correction eta*xi survives.
    auto a = Presentation::create(fx.pres->field(), {even("w"), odd("xi"), odd("eta")});
    StabilizerWitness bad{a, {Polynomial::variable(a, "w"), Polynomial::variable(a, "eta")},
                          {Polynomial::variable(a, "xi")}};
    r = verify_stabilizer_witness(problem, bad);
    CHECK_FALSE(r.confirmed);
    CHECK(r.reason.rfind("stabilizer equation fails on v1", 0) == 0);

    // Parity mistakes are caught before anything else.
    StabilizerWitness parity{a, {Polynomial::variable(a, "xi"), Polynomial(a)}, {Polynomial::variable(a, "xi")}};
    r = verify_stabilizer_witness(problem, parity);
    CHECK_FALSE(r.confirmed);
    CHECK(r.reason.find("not even") != std::string::npos);
}

TEST_CASE("splitting elements")
{
    SUBCASE("phi(theta) = 1")
    {
        auto fx = free_example();
        auto s = find_gana_splitting(fx.c, 3);
        REQUIRE(s);
        CHECK(s->z == Polynomial::variable(fx.pres, "theta"));
    }
    SUBCASE("worked example has none")
    {
        auto fx = worked_example();
        CHECK_FALSE(find_gana_splitting(fx.c, 6));
        // phi kills every odd monomial v1^a v2.
        const auto& phi = *fx.c.derivation();
        for (int d = 1; d <= 6; ++d)
            for (const auto& m : fx.pres->monomial_basis(d))
                if (fx.pres->parity(m) == Parity::Odd)
                    CHECK(phi.apply(Polynomial::from_monomial(fx.pres, m)).is_zero());
    }
    SUBCASE("phi(theta) = 1 + x with x^2 = 0")
    {
        auto q = Field::rationals();
        auto pres = Presentation::create(q, {even("x", 2), odd("theta")});
        auto P = [&](std::string_view s) { return parse_polynomial(pres, s); };
        auto c = from_odd_derivation(odd_additive(q), OddDerivation(pres, {P("0"), P("1 + x")}));
        auto s = find_gana_splitting(c, 2);
        REQUIRE(s);
        CHECK(s->g_unit * s->g_inverse == P("1"));
        CHECK(c.derivation()->apply(s->z) == P("1"));
        CHECK(s->z == s->f * s->g_inverse);
        CHECK(s->f == P("theta"));
        CHECK(s->z == P("theta - x*theta"));
    }
}

TEST_CASE("decompose")
{
    auto fx = free_example();
    auto s = *find_gana_splitting(fx.c, 2);
    auto P = [&](std::string_view t) { return parse_polynomial(fx.pres, t); };
    CHECK(decompose(fx.c, s, P("x")) == std::make_pair(P("x"), P("0")));
    CHECK(decompose(fx.c, s, P("x*theta")) == std::make_pair(P("0"), P("x")));
    CHECK(decompose(fx.c, s, P("theta")) == std::make_pair(P("0"), P("1")));

    superq::testing::Rng rng(2026);
    for (int i = 0; i < 100; ++i) {
        auto h = random_polynomial(rng, fx.pres, 8, 6);
        auto [r0, r1] = decompose(fx.c, s, h);
        CHECK(h == r0 + r1 * s.z);
        CHECK(fx.c.coact(r0) == fx.c.trivial(r0));
        CHECK(fx.c.coact(r1) == fx.c.trivial(r1));
    }
}

TEST_CASE("psi_apply and functoriality")
{
    auto fx = free_example();
    auto gp = fx.c.group().presentation();
    auto P = [&](std::string_view t) { return parse_polynomial(fx.pres, t); };
    auto one = Polynomial::one(gp);
    auto t = Polynomial::variable(gp, "t");
    CHECK(psi_apply(fx.c, P("1"), P("1")) == Tensor::pure({P("1"), one}));
    CHECK(psi_apply(fx.c, P("1"), P("theta")) == Tensor::pure({P("theta"), one}) + Tensor::pure({P("1"), t}));
    auto ex = worked_example();
    CHECK(psi_apply(ex.c, parse_polynomial(ex.pres, "1"), parse_polynomial(ex.pres, "v1"))
          == Tensor::pure({parse_polynomial(ex.pres, "v1"), one}) + Tensor::pure({parse_polynomial(ex.pres, "v2"), t}));

    superq::testing::Rng rng(99);
    auto pres = Presentation::create(Field::rationals(), {even("x"), even("y"), odd("a"), odd("b")});
    auto Q = [&](std::string_view s) { return parse_polynomial(pres, s); };
    auto c = from_odd_derivation(odd_additive(Field::rationals()), OddDerivation(pres, {Q("a"), Q("b"), Q("0"), Q("0")}));
    for (int i = 0; i < 200; ++i) {
        auto f = random_polynomial(rng, pres, 3, 4);
        auto h = random_polynomial(rng, pres, 3, 4);
        auto lhs = psi_apply(c, f, h);
        CHECK(lhs == Tensor::pure({f, one}) * psi_apply(c, Q("1"), h));
        // Term-by-term oracle: sum f h1 (x) h2.
        Tensor oracle(pres->field(), {pres, gp});
        auto coacted = c.coact(h);
        for (const auto& [k, coeff] : coacted.terms())
            oracle += Tensor::pure({f * Polynomial::from_monomial(pres, k[0]), Polynomial::from_monomial(gp, k[1])})
                          .scaled(coeff);
        CHECK(lhs == oracle);
    }
}

TEST_CASE("psi certification")
{
    SUBCASE("free example is bijective")
    {
        auto fx = free_example();
        InvariantRing r(fx.c, 6);
        for (int d : {4, 6}) {
            auto rep = psi_certify(fx.c, r, d);
            CHECK(rep.surjective);
            CHECK(rep.bijective);
            CHECK(rep.image_dimension == static_cast<std::size_t>(4 * d));
            CHECK(rep.balanced_upper_bound == rep.image_dimension);
            CHECK(rep.surjective_through == d - 1);
        }
    }
    SUBCASE("worked example is not surjective")
    {
        auto fx = worked_example();
        InvariantRing r(fx.c, 3);
        auto rep = psi_certify(fx.c, r, 3);
        CHECK_FALSE(rep.surjective);
        REQUIRE(rep.unreached.size() == 1);
        CHECK(rep.unreached[0] == Polynomial::variable(fx.c.group().presentation(), "t"));
        CHECK(rep.surjective_through == -1);
    }
    SUBCASE("trivial group gives the multiplication map")
    {
        auto q = Field::rationals();
        auto z1 = std::make_shared<const HopfSuperAlgebra>(build(SupergroupSpec::constant(FiniteGroup::cyclic(1)), q));
        auto pres = Presentation::create(q, {even("x"), odd("a")});
        auto c = from_group_action(z1, pres, {{Polynomial::variable(pres, "x"), Polynomial::variable(pres, "a")}});
        InvariantRing r(c, 5);
        auto rep = psi_certify(c, r, 5);
        CHECK(rep.surjective);
        CHECK(rep.bijective);
        // 1 + 2 + 2 + 2 + 2 + 2 monomials of degree <= 5.
        CHECK(rep.image_dimension == 11);
    }
    SUBCASE("Frobenius translation")
    {
        auto fx = translation_p5();
        InvariantRing r(fx.c, 6);
        auto rep = psi_certify(fx.c, r, 6);
        CHECK(rep.surjective);
        CHECK(rep.bijective);
    }
}

TEST_CASE("free bases over the invariants")
{
    auto fx = free_example();
    InvariantRing r(fx.c, 6);
    auto rep = verify_free_basis(fx.c, r, {Polynomial::one(fx.pres), Polynomial::variable(fx.pres, "theta")}, 6);
    CHECK(rep.verified);
    CHECK(rep.degrees.size() == 7);

    auto tr = translation_p5();
    InvariantRing r5(tr.c, 12);
    auto x = Polynomial::variable(tr.pres, "x");
    std::vector<Polynomial> powers;
    for (unsigned k = 0; k < 5; ++k)
        powers.push_back(x.pow(k));
    CHECK(verify_free_basis(tr.c, r5, powers, 12).verified);
    powers.pop_back();
    auto short_basis = verify_free_basis(tr.c, r5, powers, 12);
    CHECK_FALSE(short_basis.verified);
    CHECK(short_basis.failing_degree == 4);

    auto ex = worked_example();
    InvariantRing r3(ex.c, 3);
    auto bad = verify_free_basis(ex.c, r3, {Polynomial::one(ex.pres)}, 3);
    CHECK_FALSE(bad.verified);
    CHECK(bad.failing_degree == 1);
}
