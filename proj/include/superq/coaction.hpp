#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "superq/hopf.hpp"
#include "superq/superalgebra.hpp"
#include "superq/tensor.hpp"

namespace superq {

/// Odd right superderivation phi of K[X], given on generators and extended by
///     phi(f1 f2) = f1 phi(f2) + (-1)^{|f2|} phi(f1) f2.
class OddDerivation {
public:
    /// Images must have parity opposite to their generator and degree at most
    /// the generator's degree.
    OddDerivation(PresentationPtr space, std::vector<Polynomial> images);

    const PresentationPtr& space() const { return space_; }
    const Polynomial& image(std::size_t var) const { return images_[var]; }
    const std::vector<Polynomial>& images() const { return images_; }

    Polynomial apply(const Monomial& m) const;
    Polynomial apply(const Polynomial& p) const;

    /// First generator g with phi(phi(g)) != 0.
    std::optional<std::string> square_violation() const;

private:
    PresentationPtr space_;
    std::vector<Polynomial> images_;
};

Polynomial apply_derivation(const OddDerivation& phi, const Polynomial& p);

struct LawFailure {
    std::string law;
    std::string witness;
    std::string detail;
};

/// Raised when a coaction fails one of its laws; carries the witness.
class CoactionError : public Error {
public:
    explicit CoactionError(LawFailure f)
        : Error(f.law + " fails on " + f.witness + (f.detail.empty() ? "" : ": " + f.detail)),
          failure_(std::move(f))
    {
    }
    const LawFailure& failure() const { return failure_; }

private:
    LawFailure failure_;
};

enum class ActionKind { OddDerivation, GroupAction, Explicit };
std::string to_string(ActionKind k);

/// Right coaction tau: K[X] -> K[X] (x) K[G], validated at construction.
/// Only the factory functions below produce instances.
class Coaction {
public:
    const PresentationPtr& space() const { return space_; }
    const HopfSuperAlgebra& group() const { return *group_; }
    std::shared_ptr<const HopfSuperAlgebra> group_ptr() const { return group_; }
    const Morphism& tau() const { return tau_; }
    ActionKind kind() const { return kind_; }

    Tensor coact(const Polynomial& p) const { return tau_.apply(p); }
    Tensor coact(const Monomial& m) const { return tau_.apply(m); }
    /// f (x) 1.
    Tensor trivial(const Polynomial& p) const;

    const std::optional<OddDerivation>& derivation() const { return derivation_; }
    /// Per-element substitution for group-action coactions.
    Polynomial act(std::size_t element, const Polynomial& p) const;
    const std::vector<std::vector<Polynomial>>& element_images() const { return element_images_; }

private:
    Coaction(PresentationPtr space, std::shared_ptr<const HopfSuperAlgebra> group,
             std::vector<Tensor> tau, ActionKind kind);

    friend Coaction from_odd_derivation(std::shared_ptr<const HopfSuperAlgebra>, OddDerivation);
    friend Coaction from_group_action(std::shared_ptr<const HopfSuperAlgebra>, PresentationPtr,
                                      std::vector<std::vector<Polynomial>>);
    friend Coaction from_explicit(std::shared_ptr<const HopfSuperAlgebra>, PresentationPtr,
                                  std::vector<Tensor>);

    PresentationPtr space_;
    std::shared_ptr<const HopfSuperAlgebra> group_;
    Morphism tau_;
    ActionKind kind_;
    std::optional<OddDerivation> derivation_;
    std::vector<std::vector<Polynomial>> element_images_;
};

/// tau(f) = f (x) 1 + phi(f) (x) t over the odd additive group.
Coaction from_odd_derivation(std::shared_ptr<const HopfSuperAlgebra> group, OddDerivation phi);

/// tau(f) = sum_g (g . f) (x) e_g for a constant group; images[g][var] is g
/// applied to a generator, in the group's element order.
Coaction from_group_action(std::shared_ptr<const HopfSuperAlgebra> group, PresentationPtr space,
                           std::vector<std::vector<Polynomial>> images);

/// Coaction from generator images tau(x) in K[X] (x) K[G].
Coaction from_explicit(std::shared_ptr<const HopfSuperAlgebra> group, PresentationPtr space,
                       std::vector<Tensor> tau);

/// Generator-level law check; nullopt when every law holds.
std::optional<LawFailure> check_coaction_laws(const HopfSuperAlgebra& group,
                                              const PresentationPtr& space,
                                              const std::vector<Tensor>& tau);

struct CoactionValidation {
    std::size_t monomials_checked = 0;
    std::vector<LawFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Counit and coassociativity on every monomial of degree <= max_degree.
CoactionValidation validate_to_degree(const Coaction& c, int max_degree = 6);

}  // namespace superq
