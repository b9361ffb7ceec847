#pragma once

#include <map>
#include <vector>

#include "superq/superalgebra.hpp"

namespace superq {

/// Element of A_1 (x) ... (x) A_n with the Koszul product
/// (a_1 (x) .. (x) a_n)(b_1 (x) .. (x) b_n) = (-1)^{sum_{i>j}|a_i||b_j|} a_1b_1 (x) .. (x) a_nb_n.
/// A tensor with no legs is a scalar.
class Tensor {
public:
    using Key = std::vector<Monomial>;
    using Terms = std::map<Key, Scalar>;

    Tensor(Field field, std::vector<PresentationPtr> legs);

    static Tensor unit(Field field, std::vector<PresentationPtr> legs);
    static Tensor pure(const std::vector<Polynomial>& factors);
    static Tensor from_polynomial(const Polynomial& p) { return pure({p}); }
    static Tensor scalar(Field field, const Scalar& c);

    const Field& field() const { return field_; }
    const std::vector<PresentationPtr>& legs() const { return legs_; }
    std::size_t rank() const { return legs_.size(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Scalar coefficient(const Key& k) const;

    Parity parity(const Key& k) const;
    /// Parity when homogeneous (zero counts as even).
    std::optional<Parity> parity() const;

    void add_term(const Key& k, const Scalar& c);
    Tensor scaled(const Scalar& c) const;

    Tensor& operator+=(const Tensor& other);
    Tensor& operator-=(const Tensor& other);
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
    friend Tensor operator*(const Tensor& a, const Tensor& b);
    friend bool operator==(const Tensor& a, const Tensor& b);

    /// Collapses a one-leg tensor to a polynomial (a zero-leg one to a scalar).
    Polynomial to_polynomial() const;
    Scalar to_scalar() const;
    /// Gathers the terms with a fixed right-hand monomial on the last leg.
    Polynomial left_factor_of(const Monomial& right) const;

    std::string to_string() const;

private:
    void check_same(const Tensor& other) const;

    Field field_;
    std::vector<PresentationPtr> legs_;
    Terms terms_;
};

/// Juxtaposition a (x) b, concatenating the leg lists.
Tensor juxtapose(const Tensor& a, const Tensor& b);

/// Even superalgebra morphism given by its values on generators, valued in a
/// tensor product of target legs.  It respects the source relations only if
/// the images do; `check_relations` reports the first violated relation.
class Morphism {
public:
    Morphism(PresentationPtr source, std::vector<PresentationPtr> target_legs,
             std::vector<Tensor> images);

    const PresentationPtr& source() const { return source_; }
    const std::vector<PresentationPtr>& target_legs() const { return target_legs_; }
    const Tensor& image(std::size_t var) const { return images_[var]; }
    const std::vector<Tensor>& images() const { return images_; }

    Tensor apply(const Monomial& m) const;
    Tensor apply(const Polynomial& p) const;

    /// Name of the first generator whose image has the wrong parity, if any.
    std::optional<std::string> check_parity() const;
    /// Description of the first source relation not preserved, if any.
    std::optional<std::string> check_relations() const;

private:
    PresentationPtr source_;
    std::vector<PresentationPtr> target_legs_;
    std::vector<Tensor> images_;
};

/// Morphism valued in a single algebra from polynomial images.
Morphism polynomial_morphism(PresentationPtr source, PresentationPtr target,
                             const std::vector<Polynomial>& images);

/// Applies an even morphism to one leg, splicing its target legs in place.
Tensor apply_on_leg(const Tensor& t, std::size_t leg, const Morphism& f);
/// Multiplies legs `leg` and `leg + 1` (same algebra): a (x) b -> ab.
Tensor multiply_legs(const Tensor& t, std::size_t leg);

}  // namespace superq
