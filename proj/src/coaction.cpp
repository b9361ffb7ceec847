#include "superq/coaction.hpp"

namespace superq {

// ---------------------------------------------------------------------------
// OddDerivation

OddDerivation::OddDerivation(PresentationPtr space, std::vector<Polynomial> images)
    : space_(std::move(space)), images_(std::move(images))
{
    if (images_.size() != space_->size())
        throw Error("derivation needs one image per generator");
    for (std::size_t i = 0; i < images_.size(); ++i) {
        const auto& v = space_->variable(i);
        const auto& im = images_[i];
        if (!same_presentation(im.presentation(), space_))
            throw Error("derivation image of " + v.name + " lives in another algebra");
        if (im.is_zero())
            continue;
        auto p = im.parity();
        if (!p || *p == v.parity)
            throw Error("derivation image of " + v.name + " must have parity opposite to it");
        if (im.degree() > v.degree)
            throw Error("derivation image of " + v.name + " raises the degree");
    }
}

Polynomial OddDerivation::apply(const Monomial& m) const
{
    // Left-to-right over the canonical factor sequence:
    // phi(P g) = P phi(g) + (-1)^{|g|} phi(P) g.
    Polynomial prefix = Polynomial::one(space_);
    Polynomial d(space_);
    for (std::size_t i = 0; i < space_->size(); ++i) {
        auto g = Polynomial::from_monomial(space_, space_->generator(i));
        bool odd = space_->variable(i).parity == Parity::Odd;
        for (std::uint32_t e = 0; e < m.exponent(i); ++e) {
            Polynomial next = prefix * images_[i];
            next += odd ? -(d * g) : d * g;
            d = std::move(next);
            prefix = prefix * g;
        }
    }
    return d;
}

Polynomial OddDerivation::apply(const Polynomial& p) const
{
    Polynomial r(space_);
    for (const auto& [m, c] : p.terms())
        r += apply(m).scaled(c);
    return r;
}

std::optional<std::string> OddDerivation::square_violation() const
{
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (!apply(images_[i]).is_zero())
            return space_->variable(i).name;
    return std::nullopt;
}

Polynomial apply_derivation(const OddDerivation& phi, const Polynomial& p) { return phi.apply(p); }

std::string to_string(ActionKind k)
{
    switch (k) {
    case ActionKind::OddDerivation:
        return "odd-derivation";
    case ActionKind::GroupAction:
        return "group-action";
    case ActionKind::Explicit:
        return "explicit";
    }
    return "unknown";
}

// ---------------------------------------------------------------------------
// Law checks

std::optional<LawFailure> check_coaction_laws(const HopfSuperAlgebra& group,
                                              const PresentationPtr& space,
                                              const std::vector<Tensor>& tau)
{
    const auto& gp = group.presentation();
    if (!(space->field() == gp->field()))
        return LawFailure{"same ground field", space->field().name(), gp->field().name()};
    if (tau.size() != space->size())
        return LawFailure{"shape", "tau", "one image per generator is required"};
    for (const auto& t : tau)
        if (t.rank() != 2 || !same_presentation(t.legs()[0], space)
            || !same_presentation(t.legs()[1], gp))
            return LawFailure{"shape", "tau", "images must lie in K[X] (x) K[G]"};

    Morphism m(space, {space, gp}, tau);
    for (std::size_t i = 0; i < space->size(); ++i) {
        const auto& v = space->variable(i);
        auto p = tau[i].parity();
        if (!p || *p != v.parity)
            return LawFailure{"parity", v.name,
                              "tau(" + v.name + ") = " + tau[i].to_string() + " is not "
                                  + to_string(v.parity)};
    }
    if (auto bad = m.check_relations())
        return LawFailure{"relations", *bad, "tau does not respect the relation"};
    for (std::size_t i = 0; i < space->size(); ++i) {
        const auto& v = space->variable(i);
        for (const auto& [k, c] : tau[i].terms())
            if (k[0].degree() > v.degree)
                return LawFailure{"filtration", v.name,
                                  "left factor " + space->format(k[0]) + " has degree above "
                                      + std::to_string(v.degree)};
    }
    for (std::size_t i = 0; i < space->size(); ++i) {
        const auto& v = space->variable(i);
        auto g = Tensor::from_polynomial(Polynomial::from_monomial(space, space->generator(i)));
        if (!(apply_on_leg(tau[i], 1, group.counit_map()) == g))
            return LawFailure{"counit", v.name, "(id⊗ε)τ ≠ id"};
        if (!(apply_on_leg(tau[i], 0, m) == apply_on_leg(tau[i], 1, group.comultiplication())))
            return LawFailure{"coassociativity", v.name, "(τ⊗id)τ ≠ (id⊗Δ)τ"};
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Coaction

Coaction::Coaction(PresentationPtr space, std::shared_ptr<const HopfSuperAlgebra> group,
                   std::vector<Tensor> tau, ActionKind kind)
    : space_(space),
      group_(group),
      tau_(space, {space, group->presentation()}, std::move(tau)),
      kind_(kind)
{
}

Tensor Coaction::trivial(const Polynomial& p) const
{
    return Tensor::pure({p, Polynomial::one(group_->presentation())});
}

Polynomial Coaction::act(std::size_t element, const Polynomial& p) const
{
    if (kind_ != ActionKind::GroupAction)
        throw Error("act() needs a group-action coaction");
    return polynomial_morphism(space_, space_, element_images_.at(element)).apply(p).to_polynomial();
}

Coaction from_odd_derivation(std::shared_ptr<const HopfSuperAlgebra> group, OddDerivation phi)
{
    if (group->kind() != SupergroupKind::OddAdditive)
        throw Error("odd derivations coact only through the odd additive group");
    if (auto bad = phi.square_violation())
        throw CoactionError({"phi^2 = 0", *bad,
                             "phi(phi(" + *bad + ")) = "
                                 + phi.apply(phi.image(phi.space()->require_index(*bad))).to_string()});
    const auto& space = phi.space();
    const auto& gp = group->presentation();
    auto one = Polynomial::one(gp);
    auto t = Polynomial::variable(gp, "t");
    std::vector<Tensor> tau;
    for (std::size_t i = 0; i < space->size(); ++i) {
        auto g = Polynomial::from_monomial(space, space->generator(i));
        tau.push_back(Tensor::pure({g, one}) + Tensor::pure({phi.image(i), t}));
    }
    if (auto bad = check_coaction_laws(*group, space, tau))
        throw CoactionError(*bad);
    Coaction c(space, std::move(group), std::move(tau), ActionKind::OddDerivation);
    c.derivation_ = std::move(phi);
    return c;
}

Coaction from_group_action(std::shared_ptr<const HopfSuperAlgebra> group, PresentationPtr space,
                           std::vector<std::vector<Polynomial>> images)
{
    if (!group->group())
        throw Error("group actions need a constant group");
    const auto& g = *group->group();
    if (images.size() != g.size())
        throw Error("group action needs images for every group element");
    std::vector<Morphism> maps;
    for (std::size_t a = 0; a < g.size(); ++a) {
        if (images[a].size() != space->size())
            throw Error("group element " + g.name(a) + " needs one image per generator");
        for (std::size_t i = 0; i < space->size(); ++i) {
            const auto& v = space->variable(i);
            const auto& im = images[a][i];
            auto p = im.parity();
            if (!im.is_zero() && (!p || *p != v.parity))
                throw CoactionError({"parity", g.name(a) + "." + v.name,
                                     "image " + im.to_string() + " is not " + to_string(v.parity)});
        }
        maps.push_back(polynomial_morphism(space, space, images[a]));
        if (auto bad = maps.back().check_relations())
            throw CoactionError({"relations", g.name(a), *bad + " is not preserved"});
    }
    for (std::size_t i = 0; i < space->size(); ++i) {
        auto gen = Polynomial::from_monomial(space, space->generator(i));
        if (!(images[g.identity()][i] == gen))
            throw CoactionError({"identity acts trivially", space->variable(i).name, ""});
        for (std::size_t a = 0; a < g.size(); ++a)
            for (std::size_t b = 0; b < g.size(); ++b) {
                auto composed = maps[a].apply(images[b][i]).to_polynomial();
                if (!(composed == images[g.mul(a, b)][i]))
                    throw CoactionError(
                        {"multiplicative over the table",
                         g.name(a) + "*" + g.name(b) + " on " + space->variable(i).name,
                         g.name(a) + "(" + g.name(b) + "(" + space->variable(i).name
                             + ")) = " + composed.to_string() + " but " + g.name(g.mul(a, b))
                             + "(" + space->variable(i).name
                             + ") = " + images[g.mul(a, b)][i].to_string()});
            }
    }
    std::vector<Tensor> tau;
    for (std::size_t i = 0; i < space->size(); ++i) {
        Tensor t(space->field(), {space, group->presentation()});
        for (std::size_t a = 0; a < g.size(); ++a)
            t += Tensor::pure({images[a][i], group->idempotent(a)});
        tau.push_back(std::move(t));
    }
    if (auto bad = check_coaction_laws(*group, space, tau))
        throw CoactionError(*bad);
    Coaction c(space, std::move(group), std::move(tau), ActionKind::GroupAction);
    c.element_images_ = std::move(images);
    return c;
}

Coaction from_explicit(std::shared_ptr<const HopfSuperAlgebra> group, PresentationPtr space,
                       std::vector<Tensor> tau)
{
    if (auto bad = check_coaction_laws(*group, space, tau))
        throw CoactionError(*bad);
    return Coaction(space, std::move(group), std::move(tau), ActionKind::Explicit);
}

CoactionValidation validate_to_degree(const Coaction& c, int max_degree)
{
    CoactionValidation out;
    const auto& space = c.space();
    const auto& group = c.group();
    for (int d = 0; d <= max_degree; ++d)
        for (const auto& m : space->monomial_basis(d)) {
            ++out.monomials_checked;
            auto f = Polynomial::from_monomial(space, m);
            Tensor t = c.coact(m);
            if (!(apply_on_leg(t, 1, group.counit_map()) == Tensor::from_polynomial(f)))
                out.failures.push_back({"counit", space->format(m), "(id⊗ε)τ ≠ id"});
            if (!(apply_on_leg(t, 0, c.tau()) == apply_on_leg(t, 1, group.comultiplication())))
                out.failures.push_back({"coassociativity", space->format(m), "(τ⊗id)τ ≠ (id⊗Δ)τ"});
        }
    return out;
}

}  // namespace superq
