#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "superq/field.hpp"

namespace superq {

enum class Parity : std::uint8_t { Even = 0, Odd = 1 };

inline Parity operator+(Parity a, Parity b)
{
    return static_cast<Parity>(static_cast<int>(a) ^ static_cast<int>(b));
}
inline int parity_sign(Parity a, Parity b) { return (a == Parity::Odd && b == Parity::Odd) ? -1 : 1; }
std::string to_string(Parity p);

/// Generator of a supercommutative polynomial superalgebra.
struct SuperVariable {
    std::string name;
    Parity parity = Parity::Even;
    int degree = 1;
    /// x^q = 0 (even variables only).
    std::optional<unsigned> nilpotency;
    /// Members of one family are orthogonal idempotents: e_i e_j = delta_ij e_i.
    int idempotent_family = -1;
};

/// Sign of merging two strictly ordered odd supports: 0 when they intersect,
/// otherwise (-1)^(number of inversions of the concatenation a.b).
int koszul_sign(std::span<const std::size_t> a, std::span<const std::size_t> b);

/// Exponent vector in canonical variable order.  Graded lexicographic
/// comparison: total weighted degree first, then exponents.
class Monomial {
public:
    Monomial() = default;
    Monomial(std::vector<std::uint32_t> exponents, int degree)
        : degree_(degree), exponents_(std::move(exponents))
    {
    }

    int degree() const { return degree_; }
    const std::vector<std::uint32_t>& exponents() const { return exponents_; }
    std::uint32_t exponent(std::size_t var) const { return exponents_[var]; }
    bool is_unit() const { return degree_ == 0; }

    friend auto operator<=>(const Monomial&, const Monomial&) = default;
    friend bool operator==(const Monomial&, const Monomial&) = default;

private:
    int degree_ = 0;
    std::vector<std::uint32_t> exponents_;
};

class Presentation;
using PresentationPtr = std::shared_ptr<const Presentation>;

/// Generators, parities, weights and monomial relations of a superalgebra.
/// Variables are stored even block first, then odd block, each in
/// declaration order; that is the canonical factor order of a monomial.
class Presentation {
public:
    static PresentationPtr create(Field field, std::vector<SuperVariable> variables);

    const Field& field() const { return field_; }
    const std::vector<SuperVariable>& variables() const { return variables_; }
    std::size_t size() const { return variables_.size(); }
    const SuperVariable& variable(std::size_t i) const { return variables_[i]; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    std::size_t require_index(std::string_view name) const;

    Monomial unit() const;
    Monomial generator(std::size_t var) const;
    /// Builds a monomial from raw exponents; nullopt when it is zero in normal form.
    std::optional<Monomial> make_monomial(std::vector<std::uint32_t> exponents) const;

    Parity parity(const Monomial& m) const;
    std::vector<std::size_t> odd_support(const Monomial& m) const;
    /// Product in normal form with its Koszul sign; nullopt when it vanishes.
    std::optional<std::pair<Monomial, int>> multiply(const Monomial& a, const Monomial& b) const;

    /// Every normal-form monomial of weighted degree d, graded lex descending.
    std::vector<Monomial> monomial_basis(int degree) const;
    bool is_finite_dimensional() const;
    /// Entire monomial basis, ascending degree; throws for infinite dimension.
    std::vector<Monomial> full_basis() const;
    int max_degree() const;

    /// Every monomial with an odd factor or a truncated variable is nilpotent.
    bool is_nilpotent(const Monomial& m) const;

    std::string format(const Monomial& m) const;

    friend bool operator==(const Presentation& a, const Presentation& b);

private:
    Presentation(Field field, std::vector<SuperVariable> variables);

    Field field_;
    std::vector<SuperVariable> variables_;
};

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b);

/// Exact element of a supercommutative polynomial superalgebra.
class Polynomial {
public:
    using Terms = std::map<Monomial, Scalar>;

    explicit Polynomial(PresentationPtr pres) : pres_(std::move(pres)) {}

    static Polynomial constant(PresentationPtr pres, const Scalar& c);
    static Polynomial one(PresentationPtr pres) { return constant(std::move(pres), 1); }
    static Polynomial from_monomial(PresentationPtr pres, const Monomial& m, const Scalar& c = 1);
    static Polynomial variable(PresentationPtr pres, std::string_view name);

    const PresentationPtr& presentation() const { return pres_; }
    const Field& field() const { return pres_->field(); }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Highest degree of a term, -1 for zero.
    int degree() const;
    int min_degree() const;
    /// Parity when homogeneous (zero counts as even).
    std::optional<Parity> parity() const;
    Scalar coefficient(const Monomial& m) const;
    Scalar constant_term() const { return coefficient(pres_->unit()); }

    Polynomial homogeneous_component(int degree) const;
    Polynomial parity_component(Parity p) const;

    void add_term(const Monomial& m, const Scalar& c);
    Polynomial scaled(const Scalar& c) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator-(const Polynomial& a);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b);

    Polynomial pow(unsigned e) const;
    std::string to_string() const;

private:
    void check_same(const Polynomial& other) const;

    PresentationPtr pres_;
    Terms terms_;
};

Polynomial multiply(const Polynomial& p, const Polynomial& q);
/// Drops every term of degree > d.
Polynomial truncate(const Polynomial& p, int d);

}  // namespace superq
