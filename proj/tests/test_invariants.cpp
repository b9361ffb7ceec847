#include "doctest.h"

#include "generators.hpp"
#include "superq/invariants.hpp"
#include "superq/parse.hpp"

using namespace superq;
using superq::testing::random_polynomial;

namespace {

SuperVariable even(std::string name, std::optional<unsigned> q = {}) { return {std::move(name), Parity::Even, 1, q, -1}; }
SuperVariable odd(std::string name) { return {std::move(name), Parity::Odd, 1, {}, -1}; }

std::shared_ptr<const HopfSuperAlgebra> group(const SupergroupSpec& spec, Field f)
{
    return std::make_shared<const HopfSuperAlgebra>(build(spec, f));
}

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

// Averaging oracle: span of (1/|G|) sum_g g.m over degree-d monomials.
IncrementalSpan averaged_span(const PresentationPtr& pres,
                              const std::vector<std::vector<Polynomial>>& images, int d)
{
    auto basis = pres->monomial_basis(d);
    IncrementalSpan span(pres->field(), basis.size());
    Scalar inv = Scalar(1, images.size());
    for (const auto& m : basis) {
        auto f = Polynomial::from_monomial(pres, m);
        Polynomial avg(pres);
        for (const auto& img : images)
            avg += substitute(f, img);
        span.add(monomial_coordinates(avg.scaled(inv), basis));
    }
    return span;
}

bool same_span(const std::vector<Polynomial>& slice, const IncrementalSpan& oracle,
               const std::vector<Monomial>& basis)
{
    if (slice.size() != oracle.rank())
        return false;
    for (const auto& s : slice)
        if (!oracle.contains(monomial_coordinates(s, basis)))
            return false;
    return true;
}

}  // namespace

TEST_CASE("worked example: one invariant per degree, never finitely generated")
{
    auto q = Field::rationals();
    auto pres = Presentation::create(q, {even("v1"), odd("v2")});
    auto P = [&](std::string_view s) { return parse_polynomial(pres, s); };
    auto c = from_odd_derivation(group(SupergroupSpec::odd_additive(), q),
                                 OddDerivation(pres, {P("v2"), P("0")}));
    auto s3 = invariant_slice(c, 3);
    REQUIRE(s3.size() == 1);
    CHECK(s3[0] == P("v1^2*v2"));

    InvariantRing r(c, 10);
    CHECK(r.slice_dimensions() == std::vector<std::size_t>(11, 1));
    const auto& ledger = r.generator_ledger();
    CHECK(ledger.size() == 10);
    for (int e = 1; e <= 10; ++e) {
        REQUIRE(ledger.count(e) == 1);
        REQUIRE(ledger.at(e).size() == 1);
        CHECK(ledger.at(e)[0] == P("v1").pow(e - 1) * P("v2"));
    }
}

TEST_CASE("free odd additive action has invariants K[x]")
{
    auto q = Field::rationals();
    auto pres = Presentation::create(q, {even("x"), odd("theta")});
    auto c = from_odd_derivation(group(SupergroupSpec::odd_additive(), q),
                                 OddDerivation(pres, {Polynomial(pres), Polynomial::one(pres)}));
    InvariantRing r(c, 8);
    auto x = Polynomial::variable(pres, "x");
    for (int d = 0; d <= 8; ++d) {
        REQUIRE(r.slice(d).size() == 1);
        CHECK(r.slice(d)[0] == x.pow(d));
    }
    auto ledger = minimal_generators(c, 4);
    REQUIRE(ledger.size() == 1);
    CHECK(ledger.at(1) == std::vector<Polynomial>{x});
}

TEST_CASE("trivial group: every monomial is invariant")
{
    auto q = Field::rationals();
    auto pres = Presentation::create(q, {even("x"), even("y"), odd("a")});
    auto z1 = group(SupergroupSpec::constant(FiniteGroup::cyclic(1)), q);
    std::vector<Polynomial> id{Polynomial::variable(pres, "x"), Polynomial::variable(pres, "y"),
                               Polynomial::variable(pres, "a")};
    auto c = from_group_action(z1, pres, {id});
    for (int d = 0; d <= 4; ++d)
        CHECK(invariant_slice(c, d).size() == pres->monomial_basis(d).size());
    auto ledger = minimal_generators(c, 3);
    REQUIRE(ledger.size() == 1);
    CHECK(ledger.at(1).size() == 3);

    auto kx = Presentation::create(q, {even("x")});
    auto cx = from_group_action(z1, kx, {{Polynomial::variable(kx, "x")}});
    auto lx = minimal_generators(cx, 3);
    REQUIRE(lx.size() == 1);
    CHECK(lx.at(1) == std::vector<Polynomial>{Polynomial::variable(kx, "x")});
}

TEST_CASE("constant groups agree with the averaging projector")
{
    auto q = Field::rationals();
    auto pres = Presentation::create(q, {even("x"), odd("theta")});
    auto P = [&](std::string_view s) { return parse_polynomial(pres, s); };

    SUBCASE("Z/2 sign action")
    {
        std::vector<std::vector<Polynomial>> imgs{{P("x"), P("theta")}, {P("-x"), P("-theta")}};
        auto c = from_group_action(group(SupergroupSpec::constant(FiniteGroup::cyclic(2)), q), pres, imgs);
        auto s2 = invariant_slice(c, 2);
        REQUIRE(s2.size() == 2);
        CHECK(s2[0] == P("x^2"));
        CHECK(s2[1] == P("x*theta"));
        for (int d = 0; d <= 8; ++d)
            CHECK(same_span(invariant_slice(c, d), averaged_span(pres, imgs, d), pres->monomial_basis(d)));
    }
    SUBCASE("Z/2 x Z/2 with independent signs")
    {
        auto z2 = FiniteGroup::cyclic(2);
        auto v4 = FiniteGroup::direct_product(z2, z2);
        std::vector<std::vector<Polynomial>> imgs;
        for (std::size_t g = 0; g < v4.size(); ++g) {
            // element names are "a_b"
            bool flip_x = v4.name(g)[0] == '1';
            bool flip_t = v4.name(g)[2] == '1';
            imgs.push_back({flip_x ? P("-x") : P("x"), flip_t ? P("-theta") : P("theta")});
        }
        auto c = from_group_action(group(SupergroupSpec::constant(v4), q), pres, imgs);
        for (int d = 0; d <= 8; ++d) {
            auto slice = invariant_slice(c, d);
            CHECK(same_span(slice, averaged_span(pres, imgs, d), pres->monomial_basis(d)));
            CHECK(slice.size() == (d % 2 == 0 ? 1u : 0u));  // only x^d survives, for even d
        }
        // N = first factor, {0_0, 1_0}.
        std::vector<std::size_t> n{*v4.index_of("0_0"), *v4.index_of("1_0")};
        auto rep = iterated_invariants_check(c, n, 6);
        CHECK(rep.ok());
        REQUIRE(rep.degrees.size() == 7);
        for (const auto& row : rep.degrees) {
            CHECK(row.equal);
            CHECK(row.normal_invariants == 1);  // x^d or x^{d-1} theta, whichever has even x-degree
        }
        auto whole = iterated_invariants_check(c, {0, 1, 2, 3}, 4);
        CHECK(whole.ok());
        auto none = iterated_invariants_check(c, {v4.identity()}, 4);
        CHECK(none.ok());
        for (const auto& row : none.degrees)
            CHECK(row.normal_invariants == pres->monomial_basis(row.degree).size());
    }
}

TEST_CASE("iterated invariants reject non-normal subgroups")
{
    std::vector<std::vector<int>> perms{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    std::vector<std::vector<std::size_t>> table(6, std::vector<std::size_t>(6));
    for (std::size_t a = 0; a < 6; ++a)
        for (std::size_t b = 0; b < 6; ++b) {
            std::vector<int> comp(3);
            for (int i = 0; i < 3; ++i)
                comp[i] = perms[a][perms[b][i]];
            table[a][b] = std::find(perms.begin(), perms.end(), comp) - perms.begin();
        }
    auto s3 = FiniteGroup::from_table({"id", "r", "r2", "s0", "s1", "s2"}, table);
    auto q = Field::rationals();
    auto pres = Presentation::create(q, {even("y0"), even("y1"), even("y2")});
    std::vector<std::vector<Polynomial>> imgs;
    for (const auto& p : perms) {
        std::vector<Polynomial> img(3, Polynomial(pres));
        for (int i = 0; i < 3; ++i)
            img[i] = Polynomial::from_monomial(pres, pres->generator(p[i]));
        imgs.push_back(img);
    }
    auto c = from_group_action(group(SupergroupSpec::constant(s3), q), pres, imgs);
    CHECK_THROWS_AS(iterated_invariants_check(c, {0, 3}, 2), Error);
    auto rep = iterated_invariants_check(c, {0, 1, 2}, 4);
    CHECK(rep.ok());
    // Symmetric polynomials in three variables: 1, 1, 2, 3, 4.
    std::vector<std::size_t> dims;
    for (const auto& row : rep.degrees)
        dims.push_back(row.full_invariants);
    CHECK(dims == std::vector<std::size_t>{1, 1, 2, 3, 4});
}

TEST_CASE("invariant properties on random inputs")
{
    superq::testing::Rng rng(5);
    auto q = Field::rationals();
    auto pres = Presentation::create(q, {even("x"), even("y"), odd("a"), odd("b")});
    auto P = [&](std::string_view s) { return parse_polynomial(pres, s); };
    auto c = from_odd_derivation(group(SupergroupSpec::odd_additive(), q),
                                 OddDerivation(pres, {P("a"), P("b"), P("0"), P("0")}));
    InvariantRing r(c, 6);
    for (int d = 0; d <= 6; ++d)
        for (const auto& f : r.slice(d))
            CHECK(c.coact(f) == c.trivial(f));
    std::uniform_int_distribution<int> deg(0, 3);
    for (int i = 0; i < 40; ++i) {
        int a = deg(rng), b = deg(rng);
        if (r.slice(a).empty() || r.slice(b).empty())
            continue;
        std::uniform_int_distribution<std::size_t> pa(0, r.slice(a).size() - 1), pb(0, r.slice(b).size() - 1);
        CHECK(r.contains(r.slice(a)[pa(rng)] * r.slice(b)[pb(rng)]));
    }
    // Slices are independent.
    for (int d = 0; d <= 6; ++d) {
        auto basis = pres->monomial_basis(d);
        IncrementalSpan span(q, basis.size());
        for (const auto& f : r.slice(d))
            CHECK(span.add(monomial_coordinates(f, basis)));
    }
    // Non-invariant inputs are not contained.
    CHECK_FALSE(r.contains(P("x")));
}

TEST_CASE("p-th powers are invariant under a height-one kernel")
{
    superq::testing::Rng rng(11);
    auto f5 = Field::prime(5);
    auto fr = group(SupergroupSpec::frobenius_kernel(), f5);
    auto pres = Presentation::create(f5, {even("x")});
    auto x = Polynomial::variable(pres, "x");
    auto c = from_explicit(fr, pres,
                           {Tensor::pure({x, Polynomial::one(fr->presentation())})
                            + Tensor::pure({Polynomial::one(pres), Polynomial::variable(fr->presentation(), "u")})});
    InvariantRing r(c, 12);
    for (int d = 0; d <= 12; ++d) {
        if (d % 5 == 0) {
            REQUIRE(r.slice(d).size() == 1);
            CHECK(r.slice(d)[0] == x.pow(d));
        } else {
            CHECK(r.slice(d).empty());
        }
    }
    for (int i = 0; i < 20; ++i) {
        auto f = random_polynomial(rng, pres, 2, 3);
        auto fp = f.pow(5);
        CHECK(c.coact(fp) == c.trivial(fp));
        CHECK(r.contains(fp));
    }
}
