#pragma once

#include <optional>
#include <string>
#include <vector>

#include "superq/superalgebra.hpp"
#include "superq/tensor.hpp"

namespace superq {

/// Finite group given by a validated multiplication table.
class FiniteGroup {
public:
    static FiniteGroup from_table(std::vector<std::string> names,
                                  std::vector<std::vector<std::size_t>> table);
    static FiniteGroup cyclic(std::size_t n);
    static FiniteGroup direct_product(const FiniteGroup& a, const FiniteGroup& b);

    std::size_t size() const { return names_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::string& name(std::size_t a) const { return names_[a]; }
    const std::vector<std::string>& names() const { return names_; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }
    std::optional<std::size_t> index_of(std::string_view name) const;

    bool is_subgroup(const std::vector<std::size_t>& elements) const;
    bool is_normal_subgroup(const std::vector<std::size_t>& elements) const;
    /// Restriction of the table to a subgroup, elements in the given order.
    FiniteGroup subgroup(const std::vector<std::size_t>& elements) const;

    struct Quotient;
    /// Quotient by a normal subgroup; cosets ordered by smallest representative.
    Quotient quotient(const std::vector<std::size_t>& normal) const;

private:
    std::vector<std::string> names_;
    std::vector<std::vector<std::size_t>> table_;
    std::vector<std::size_t> inverse_;
    std::size_t identity_ = 0;
};

struct FiniteGroup::Quotient {
    FiniteGroup group;
    std::vector<std::size_t> coset_of;        // element -> coset index
    std::vector<std::size_t> representative;  // coset index -> smallest element
};

enum class SupergroupKind { OddAdditive, FrobeniusKernelHeight1, ConstantGroup, Product };

struct SupergroupSpec {
    SupergroupKind kind = SupergroupKind::OddAdditive;
    std::optional<FiniteGroup> group;
    std::vector<SupergroupSpec> factors;

    static SupergroupSpec odd_additive() { return {SupergroupKind::OddAdditive, {}, {}}; }
    static SupergroupSpec frobenius_kernel() { return {SupergroupKind::FrobeniusKernelHeight1, {}, {}}; }
    static SupergroupSpec constant(FiniteGroup g) { return {SupergroupKind::ConstantGroup, std::move(g), {}}; }
    static SupergroupSpec product(std::vector<SupergroupSpec> f) { return {SupergroupKind::Product, {}, std::move(f)}; }
};

std::string catalog_id(SupergroupKind kind);

/// Coordinate Hopf superalgebra K[G] with structure maps given on generators.
/// Constant groups additionally remember the group and the idempotent basis.
class HopfSuperAlgebra {
public:
    HopfSuperAlgebra(std::string label, PresentationPtr pres, std::vector<Tensor> comultiplication,
                     std::vector<Scalar> counit, std::vector<Polynomial> antipode);

    const std::string& label() const { return label_; }
    const PresentationPtr& presentation() const { return pres_; }
    const Field& field() const { return pres_->field(); }

    const Morphism& comultiplication() const { return comult_; }
    const Morphism& counit_map() const { return counit_; }
    const Morphism& antipode_map() const { return antipode_; }

    Tensor comult(const Polynomial& p) const { return comult_.apply(p); }
    Scalar counit(const Polynomial& p) const { return counit_.apply(p).to_scalar(); }
    Polynomial antipode(const Polynomial& p) const { return antipode_.apply(p).to_polynomial(); }

    /// Same comultiplication and counit, different antipode.
    HopfSuperAlgebra with_antipode(std::vector<Polynomial> antipode) const;

    const std::optional<FiniteGroup>& group() const { return group_; }
    /// Idempotent e_g of a constant group (the identity one is 1 - sum of the others).
    Polynomial idempotent(std::size_t element) const;
    void attach_group(FiniteGroup g, std::vector<Polynomial> idempotents);

    std::optional<SupergroupKind> kind() const { return kind_; }
    void set_kind(SupergroupKind k) { kind_ = k; }

private:
    std::string label_;
    PresentationPtr pres_;
    Morphism comult_;
    Morphism counit_;
    Morphism antipode_;
    std::optional<FiniteGroup> group_;
    std::vector<Polynomial> idempotents_;
    std::optional<SupergroupKind> kind_;
};

HopfSuperAlgebra build(const SupergroupSpec& spec, Field field);
/// Even additive group G_a (K[x], x primitive); infinite-dimensional.
HopfSuperAlgebra even_additive(Field field);
/// Tensor product Hopf superalgebra; generator names get a factor suffix on clashes.
HopfSuperAlgebra tensor_product(const std::vector<HopfSuperAlgebra>& factors);

/// dim K[G]; throws for infinite-dimensional algebras.
std::size_t order(const HopfSuperAlgebra& h);

struct AxiomFailure {
    std::string identity;
    std::string witness;
    std::string detail;
};

struct HopfAxiomReport {
    std::size_t basis_elements_checked = 0;
    std::vector<AxiomFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Verifies the Hopf superalgebra axioms on every basis monomial (through
/// `max_degree` when the algebra is infinite-dimensional).
HopfAxiomReport check_hopf_axioms(const HopfSuperAlgebra& h, std::optional<int> max_degree = {});

/// Basis of ker(counit): b - counit(b) for every non-unit basis monomial b.
std::vector<Polynomial> augmentation_ideal_basis(const HopfSuperAlgebra& h);

}  // namespace superq
