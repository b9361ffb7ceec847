#include "superq/hopf.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace superq {

// ---------------------------------------------------------------------------
// FiniteGroup

FiniteGroup FiniteGroup::from_table(std::vector<std::string> names,
                                    std::vector<std::vector<std::size_t>> table)
{
    const std::size_t n = names.size();
    if (n == 0)
        throw Error("group table is empty");
    if (std::set<std::string>(names.begin(), names.end()).size() != n)
        throw Error("group element names are not unique");
    if (table.size() != n)
        throw Error("group table is not square");
    for (const auto& row : table) {
        if (row.size() != n)
            throw Error("group table is not square");
        for (auto v : row)
            if (v >= n)
                throw Error("group table entry out of range");
    }
    std::optional<std::size_t> identity;
    for (std::size_t e = 0; e < n && !identity; ++e) {
        bool ok = true;
        for (std::size_t a = 0; a < n && ok; ++a)
            ok = table[e][a] == a && table[a][e] == a;
        if (ok)
            identity = e;
    }
    if (!identity)
        throw Error("group table has no identity element");
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (table[table[a][b]][c] != table[a][table[b][c]])
                    throw Error("group table is not associative: (" + names[a] + "*" + names[b]
                                + ")*" + names[c] + " != " + names[a] + "*(" + names[b] + "*"
                                + names[c] + ")");
    std::vector<std::size_t> inverse(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (table[a][b] == *identity && table[b][a] == *identity)
                inverse[a] = b;
        if (inverse[a] == n)
            throw Error("element " + names[a] + " has no inverse");
    }
    FiniteGroup g;
    g.names_ = std::move(names);
    g.table_ = std::move(table);
    g.inverse_ = std::move(inverse);
    g.identity_ = *identity;
    return g;
}

FiniteGroup FiniteGroup::cyclic(std::size_t n)
{
    if (n == 0)
        throw Error("cyclic group of order 0");
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        names.push_back(std::to_string(a));
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = (a + b) % n;
    }
    return from_table(std::move(names), std::move(table));
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    const std::size_t na = a.size(), nb = b.size();
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(na * nb, std::vector<std::size_t>(na * nb));
    for (std::size_t i = 0; i < na; ++i)
        for (std::size_t j = 0; j < nb; ++j)
            names.push_back(a.name(i) + "_" + b.name(j));
    for (std::size_t x = 0; x < na * nb; ++x)
        for (std::size_t y = 0; y < na * nb; ++y)
            table[x][y] = a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
    return from_table(std::move(names), std::move(table));
}

std::optional<std::size_t> FiniteGroup::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name)
            return i;
    return std::nullopt;
}

bool FiniteGroup::is_subgroup(const std::vector<std::size_t>& elements) const
{
    std::set<std::size_t> s(elements.begin(), elements.end());
    if (s.size() != elements.size() || !s.count(identity_))
        return false;
    for (auto a : s) {
        if (a >= size() || !s.count(inverse_[a]))
            return false;
        for (auto b : s)
            if (!s.count(table_[a][b]))
                return false;
    }
    return true;
}

bool FiniteGroup::is_normal_subgroup(const std::vector<std::size_t>& elements) const
{
    if (!is_subgroup(elements))
        return false;
    std::set<std::size_t> s(elements.begin(), elements.end());
    for (std::size_t g = 0; g < size(); ++g)
        for (auto n : s)
            if (!s.count(table_[table_[g][n]][inverse_[g]]))
                return false;
    return true;
}

FiniteGroup FiniteGroup::subgroup(const std::vector<std::size_t>& elements) const
{
    if (!is_subgroup(elements))
        throw Error("elements do not form a subgroup");
    std::map<std::size_t, std::size_t> pos;
    for (std::size_t i = 0; i < elements.size(); ++i)
        pos[elements[i]] = i;
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(elements.size(),
                                                std::vector<std::size_t>(elements.size()));
    for (std::size_t i = 0; i < elements.size(); ++i) {
        names.push_back(names_[elements[i]]);
        for (std::size_t j = 0; j < elements.size(); ++j)
            table[i][j] = pos.at(table_[elements[i]][elements[j]]);
    }
    return from_table(std::move(names), std::move(table));
}

FiniteGroup::Quotient FiniteGroup::quotient(const std::vector<std::size_t>& normal) const
{
    if (!is_normal_subgroup(normal))
        throw Error("subgroup is not normal");
    const std::size_t none = size();
    std::vector<std::size_t> coset_of(size(), none);
    std::vector<std::size_t> reps;
    for (std::size_t g = 0; g < size(); ++g) {
        if (coset_of[g] != none)
            continue;
        for (auto n : normal)
            coset_of[table_[g][n]] = reps.size();
        reps.push_back(g);
    }
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table(reps.size(), std::vector<std::size_t>(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i) {
        names.push_back(names_[reps[i]] + "N");
        for (std::size_t j = 0; j < reps.size(); ++j)
            table[i][j] = coset_of[table_[reps[i]][reps[j]]];
    }
    return Quotient{from_table(std::move(names), std::move(table)), std::move(coset_of),
                    std::move(reps)};
}

std::string catalog_id(SupergroupKind kind)
{
    switch (kind) {
    case SupergroupKind::OddAdditive:
        return "odd-additive";
    case SupergroupKind::FrobeniusKernelHeight1:
        return "frobenius-1";
    case SupergroupKind::ConstantGroup:
        return "constant";
    case SupergroupKind::Product:
        return "product";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// HopfSuperAlgebra

namespace {

Morphism make_comult(const PresentationPtr& pres, std::vector<Tensor> images)
{
    return Morphism(pres, {pres, pres}, std::move(images));
}

Morphism make_counit(const PresentationPtr& pres, const std::vector<Scalar>& values)
{
    std::vector<Tensor> images;
    for (const auto& v : values)
        images.push_back(Tensor::scalar(pres->field(), v));
    return Morphism(pres, {}, std::move(images));
}

std::string sanitize(const std::string& s)
{
    std::string out;
    for (char c : s)
        out += std::isalnum(static_cast<unsigned char>(c)) ? c : '_';
    return out;
}

}  // namespace

HopfSuperAlgebra::HopfSuperAlgebra(std::string label, PresentationPtr pres,
                                   std::vector<Tensor> comultiplication,
                                   std::vector<Scalar> counit, std::vector<Polynomial> antipode)
    : label_(std::move(label)),
      pres_(pres),
      comult_(make_comult(pres, std::move(comultiplication))),
      counit_(make_counit(pres, counit)),
      antipode_(polynomial_morphism(pres, pres, antipode))
{
}

HopfSuperAlgebra HopfSuperAlgebra::with_antipode(std::vector<Polynomial> antipode) const
{
    HopfSuperAlgebra h = *this;
    h.antipode_ = polynomial_morphism(pres_, pres_, antipode);
    return h;
}

Polynomial HopfSuperAlgebra::idempotent(std::size_t element) const
{
    if (!group_)
        throw Error(label_ + " is not a constant group");
    return idempotents_.at(element);
}

void HopfSuperAlgebra::attach_group(FiniteGroup g, std::vector<Polynomial> idempotents)
{
    group_ = std::move(g);
    idempotents_ = std::move(idempotents);
}

namespace {

HopfSuperAlgebra build_odd_additive(Field field)
{
    auto pres = Presentation::create(field, {{"t", Parity::Odd, 1, {}, -1}});
    auto t = Polynomial::variable(pres, "t");
    auto one = Polynomial::one(pres);
    Tensor d = Tensor::pure({t, one}) + Tensor::pure({one, t});
    HopfSuperAlgebra h("odd-additive", pres, {d}, {Scalar(0)}, {-t});
    h.set_kind(SupergroupKind::OddAdditive);
    return h;
}

HopfSuperAlgebra build_frobenius(Field field)
{
    if (!field.is_prime_field())
        throw Error("Frobenius kernel needs positive characteristic");
    auto p = static_cast<unsigned>(field.characteristic());
    auto pres = Presentation::create(field, {{"u", Parity::Even, 1, p, -1}});
    auto u = Polynomial::variable(pres, "u");
    auto one = Polynomial::one(pres);
    Tensor d = Tensor::pure({u, one}) + Tensor::pure({one, u});
    HopfSuperAlgebra h("frobenius-1", pres, {d}, {Scalar(0)}, {-u});
    h.set_kind(SupergroupKind::FrobeniusKernelHeight1);
    return h;
}

HopfSuperAlgebra build_constant(const FiniteGroup& g, Field field)
{
    std::vector<SuperVariable> vars;
    std::vector<std::size_t> var_element;
    for (std::size_t a = 0; a < g.size(); ++a) {
        if (a == g.identity())
            continue;
        vars.push_back({"e_" + sanitize(g.name(a)), Parity::Even, 1, {}, 0});
        var_element.push_back(a);
    }
    auto pres = Presentation::create(field, vars);
    std::vector<Polynomial> idem(g.size(), Polynomial(pres));
    Polynomial rest = Polynomial::one(pres);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        idem[var_element[i]] = Polynomial::variable(pres, vars[i].name);
        rest -= idem[var_element[i]];
    }
    idem[g.identity()] = rest;

    std::vector<Tensor> comult;
    std::vector<Scalar> counit;
    std::vector<Polynomial> antipode;
    for (std::size_t i = 0; i < pres->size(); ++i) {
        std::size_t a = var_element[i];
        Tensor d(field, {pres, pres});
        for (std::size_t b = 0; b < g.size(); ++b)
            d += Tensor::pure({idem[b], idem[g.mul(g.inverse(b), a)]});
        comult.push_back(std::move(d));
        counit.push_back(a == g.identity() ? 1 : 0);
        antipode.push_back(idem[g.inverse(a)]);
    }
    HopfSuperAlgebra h("constant", pres, std::move(comult), std::move(counit), std::move(antipode));
    h.attach_group(g, std::move(idem));
    h.set_kind(SupergroupKind::ConstantGroup);
    return h;
}

Polynomial embed(const Polynomial& p, const PresentationPtr& target,
                 const std::vector<std::size_t>& index_map)
{
    Polynomial r(target);
    for (const auto& [m, c] : p.terms()) {
        std::vector<std::uint32_t> e(target->size(), 0);
        for (std::size_t i = 0; i < index_map.size(); ++i)
            e[index_map[i]] = m.exponent(i);
        auto nm = target->make_monomial(std::move(e));
        if (nm)
            r.add_term(*nm, c);
    }
    return r;
}

Tensor embed(const Tensor& t, const PresentationPtr& target,
             const std::vector<std::size_t>& index_map)
{
    std::vector<PresentationPtr> legs(t.rank(), target);
    Tensor r(t.field(), legs);
    for (const auto& [k, c] : t.terms()) {
        Tensor::Key nk;
        bool zero = false;
        for (const auto& m : k) {
            std::vector<std::uint32_t> e(target->size(), 0);
            for (std::size_t i = 0; i < index_map.size(); ++i)
                e[index_map[i]] = m.exponent(i);
            auto nm = target->make_monomial(std::move(e));
            if (!nm) {
                zero = true;
                break;
            }
            nk.push_back(*nm);
        }
        if (!zero)
            r.add_term(nk, c);
    }
    return r;
}

}  // namespace

HopfSuperAlgebra tensor_product(const std::vector<HopfSuperAlgebra>& factors)
{
    if (factors.empty())
        throw Error("empty product");
    Field field = factors.front().field();
    std::map<std::string, int> name_count;
    for (const auto& f : factors) {
        if (!(f.field() == field))
            throw Error("product factors over different fields");
        for (const auto& v : f.presentation()->variables())
            ++name_count[v.name];
    }
    bool clash = std::any_of(name_count.begin(), name_count.end(),
                             [](const auto& kv) { return kv.second > 1; });
    std::vector<SuperVariable> vars;
    int family_offset = 0;
    std::vector<std::string> label_parts;
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
        int max_family = -1;
        for (auto v : factors[fi].presentation()->variables()) {
            if (clash)
                v.name += "_" + std::to_string(fi + 1);
            if (v.idempotent_family >= 0) {
                max_family = std::max(max_family, v.idempotent_family);
                v.idempotent_family += family_offset;
            }
            vars.push_back(v);
        }
        family_offset += max_family + 1;
        label_parts.push_back(factors[fi].label());
    }
    auto pres = Presentation::create(field, vars);

    std::vector<Tensor> comult(pres->size(), Tensor(field, {pres, pres}));
    std::vector<Scalar> counit(pres->size(), Scalar(0));
    std::vector<Polynomial> antipode(pres->size(), Polynomial(pres));
    for (std::size_t fi = 0; fi < factors.size(); ++fi) {
        const auto& f = factors[fi];
        const auto& fp = f.presentation();
        std::vector<std::size_t> index_map;
        for (const auto& v : fp->variables())
            index_map.push_back(pres->require_index(clash ? v.name + "_" + std::to_string(fi + 1)
                                                          : v.name));
        for (std::size_t i = 0; i < fp->size(); ++i) {
            comult[index_map[i]] = embed(f.comultiplication().image(i), pres, index_map);
            counit[index_map[i]] = f.counit_map().image(i).to_scalar();
            antipode[index_map[i]] =
                embed(f.antipode_map().image(i).to_polynomial(), pres, index_map);
        }
    }
    std::string label = "product(";
    for (std::size_t i = 0; i < label_parts.size(); ++i)
        label += (i ? "," : "") + label_parts[i];
    label += ")";
    HopfSuperAlgebra h(label, pres, std::move(comult), std::move(counit), std::move(antipode));
    h.set_kind(SupergroupKind::Product);
    return h;
}

HopfSuperAlgebra build(const SupergroupSpec& spec, Field field)
{
    switch (spec.kind) {
    case SupergroupKind::OddAdditive:
        return build_odd_additive(field);
    case SupergroupKind::FrobeniusKernelHeight1:
        return build_frobenius(field);
    case SupergroupKind::ConstantGroup:
        if (!spec.group)
            throw Error("constant group spec without a group table");
        return build_constant(*spec.group, field);
    case SupergroupKind::Product: {
        if (spec.factors.empty())
            throw Error("product spec without factors");
        std::vector<HopfSuperAlgebra> parts;
        for (const auto& f : spec.factors)
            parts.push_back(build(f, field));
        return tensor_product(parts);
    }
    }
    throw Error("unknown supergroup kind");
}

HopfSuperAlgebra even_additive(Field field)
{
    auto pres = Presentation::create(field, {{"x", Parity::Even, 1, {}, -1}});
    auto x = Polynomial::variable(pres, "x");
    auto one = Polynomial::one(pres);
    Tensor d = Tensor::pure({x, one}) + Tensor::pure({one, x});
    return HopfSuperAlgebra("even-additive", pres, {d}, {Scalar(0)}, {-x});
}

std::size_t order(const HopfSuperAlgebra& h)
{
    if (!h.presentation()->is_finite_dimensional())
        throw Error(h.label() + " is not finite-dimensional");
    return h.presentation()->full_basis().size();
}

HopfAxiomReport check_hopf_axioms(const HopfSuperAlgebra& h, std::optional<int> max_degree)
{
    HopfAxiomReport report;
    const auto& pres = h.presentation();
    auto fail = [&](std::string identity, std::string witness, std::string detail) {
        report.failures.push_back({std::move(identity), std::move(witness), std::move(detail)});
    };

    if (auto bad = h.comultiplication().check_parity())
        fail("comultiplication is even", *bad, "image has the wrong parity");
    if (auto bad = h.counit_map().check_parity())
        fail("counit is even", *bad, "counit does not vanish on an odd generator");
    if (auto bad = h.antipode_map().check_parity())
        fail("antipode is even", *bad, "image has the wrong parity");
    if (auto bad = h.comultiplication().check_relations())
        fail("comultiplication is multiplicative", *bad, "relation not preserved");
    if (auto bad = h.counit_map().check_relations())
        fail("counit is multiplicative", *bad, "relation not preserved");
    if (auto bad = h.antipode_map().check_relations())
        fail("antipode is multiplicative", *bad, "relation not preserved");

    std::vector<Monomial> basis;
    if (pres->is_finite_dimensional() && !max_degree) {
        basis = pres->full_basis();
    } else {
        if (!max_degree)
            throw Error(h.label() + " is infinite-dimensional; a degree bound is required");
        for (int d = 0; d <= *max_degree; ++d) {
            auto slice = pres->monomial_basis(d);
            basis.insert(basis.end(), slice.begin(), slice.end());
        }
    }

    for (const auto& m : basis) {
        auto b = Polynomial::from_monomial(pres, m);
        std::string w = pres->format(m);
        Tensor d = h.comult(b);
        ++report.basis_elements_checked;

        if (!(apply_on_leg(d, 0, h.comultiplication()) == apply_on_leg(d, 1, h.comultiplication())))
            fail("coassociativity", w, "(Δ⊗id)Δ ≠ (id⊗Δ)Δ");

        Tensor bt = Tensor::from_polynomial(b);
        if (!(apply_on_leg(d, 0, h.counit_map()) == bt))
            fail("left counit", w, "(ε⊗id)Δ ≠ id");
        if (!(apply_on_leg(d, 1, h.counit_map()) == bt))
            fail("right counit", w, "(id⊗ε)Δ ≠ id");

        Tensor unit_eps = Tensor::from_polynomial(Polynomial::constant(pres, h.counit(b)));
        Tensor left = multiply_legs(apply_on_leg(d, 0, h.antipode_map()), 0);
        if (!(left == unit_eps))
            fail("left antipode", w, "m(S⊗id)Δ = " + left.to_string() + " ≠ uε");
        Tensor right = multiply_legs(apply_on_leg(d, 1, h.antipode_map()), 0);
        if (!(right == unit_eps))
            fail("right antipode", w, "m(id⊗S)Δ = " + right.to_string() + " ≠ uε");
    }
    return report;
}

std::vector<Polynomial> augmentation_ideal_basis(const HopfSuperAlgebra& h)
{
    const auto& pres = h.presentation();
    std::vector<Polynomial> out;
    for (const auto& m : pres->full_basis()) {
        if (m.is_unit())
            continue;
        auto b = Polynomial::from_monomial(pres, m);
        out.push_back(b - Polynomial::constant(pres, h.counit(b)));
    }
    return out;
}

}  // namespace superq
