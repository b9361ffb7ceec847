#include "superq/tensor.hpp"

#include <sstream>

namespace superq {

Tensor::Tensor(Field field, std::vector<PresentationPtr> legs)
    : field_(field), legs_(std::move(legs))
{
    for (const auto& l : legs_)
        if (!(l->field() == field_))
            throw Error("tensor legs over different fields");
}

Tensor Tensor::unit(Field field, std::vector<PresentationPtr> legs)
{
    Tensor t(field, legs);
    Key k;
    k.reserve(legs.size());
    for (const auto& l : legs)
        k.push_back(l->unit());
    t.add_term(k, 1);
    return t;
}

Tensor Tensor::pure(const std::vector<Polynomial>& factors)
{
    if (factors.empty())
        throw Error("pure tensor needs at least one factor");
    std::vector<PresentationPtr> legs;
    for (const auto& f : factors)
        legs.push_back(f.presentation());
    Field field = factors.front().field();
    Tensor t(field, legs);
    // Coefficients multiply; keys concatenate.  No reordering, so no signs.
    std::vector<std::pair<Key, Scalar>> acc{{Key{}, Scalar(1)}};
    for (const auto& f : factors) {
        std::vector<std::pair<Key, Scalar>> next;
        for (const auto& [k, c] : acc)
            for (const auto& [m, v] : f.terms()) {
                Key nk = k;
                nk.push_back(m);
                next.emplace_back(std::move(nk), field.mul(c, v));
            }
        acc = std::move(next);
    }
    for (const auto& [k, c] : acc)
        t.add_term(k, c);
    return t;
}

Tensor Tensor::scalar(Field field, const Scalar& c)
{
    Tensor t(field, {});
    t.add_term(Key{}, c);
    return t;
}

Scalar Tensor::coefficient(const Key& k) const
{
    auto it = terms_.find(k);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Parity Tensor::parity(const Key& k) const
{
    Parity p = Parity::Even;
    for (std::size_t i = 0; i < k.size(); ++i)
        p = p + legs_[i]->parity(k[i]);
    return p;
}

std::optional<Parity> Tensor::parity() const
{
    std::optional<Parity> p;
    for (const auto& [k, c] : terms_) {
        auto q = parity(k);
        if (p && *p != q)
            return std::nullopt;
        p = q;
    }
    return p.value_or(Parity::Even);
}

void Tensor::add_term(const Key& k, const Scalar& c)
{
    if (k.size() != legs_.size())
        throw Error("tensor key has wrong number of legs");
    Scalar v = field_.normalize(c);
    if (v == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(k, v);
    if (!inserted) {
        it->second = field_.add(it->second, v);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Tensor Tensor::scaled(const Scalar& c) const
{
    Tensor r(field_, legs_);
    Scalar k = field_.normalize(c);
    if (k == 0)
        return r;
    for (const auto& [key, v] : terms_)
        r.terms_.emplace(key, field_.mul(v, k));
    return r;
}

void Tensor::check_same(const Tensor& other) const
{
    if (legs_.size() != other.legs_.size())
        throw Error("tensor rank mismatch");
    for (std::size_t i = 0; i < legs_.size(); ++i)
        if (!same_presentation(legs_[i], other.legs_[i]))
            throw Error("tensor leg presentation mismatch");
}

Tensor& Tensor::operator+=(const Tensor& other)
{
    check_same(other);
    for (const auto& [k, c] : other.terms_)
        add_term(k, c);
    return *this;
}

Tensor& Tensor::operator-=(const Tensor& other)
{
    check_same(other);
    for (const auto& [k, c] : other.terms_)
        add_term(k, field_.neg(c));
    return *this;
}

Tensor operator*(const Tensor& a, const Tensor& b)
{
    a.check_same(b);
    const auto& f = a.field_;
    const std::size_t n = a.legs_.size();
    Tensor r(f, a.legs_);
    std::vector<Parity> pa(n), pb(n);
    for (const auto& [ka, ca] : a.terms_) {
        for (std::size_t i = 0; i < n; ++i)
            pa[i] = a.legs_[i]->parity(ka[i]);
        for (const auto& [kb, cb] : b.terms_) {
            int sign = 1;
            Tensor::Key k(n);
            bool zero = false;
            // Moving b_j to the left past a_{j+1}, ..., a_n.
            Parity tail = Parity::Even;
            for (std::size_t j = n; j-- > 0;) {
                pb[j] = a.legs_[j]->parity(kb[j]);
                sign *= parity_sign(pb[j], tail);
                tail = tail + pa[j];
                auto prod = a.legs_[j]->multiply(ka[j], kb[j]);
                if (!prod) {
                    zero = true;
                    break;
                }
                sign *= prod->second;
                k[j] = std::move(prod->first);
            }
            if (zero)
                continue;
            Scalar c = f.mul(ca, cb);
            r.add_term(k, sign > 0 ? c : f.neg(c));
        }
    }
    return r;
}

bool operator==(const Tensor& a, const Tensor& b)
{
    if (a.legs_.size() != b.legs_.size())
        return false;
    for (std::size_t i = 0; i < a.legs_.size(); ++i)
        if (!same_presentation(a.legs_[i], b.legs_[i]))
            return false;
    return a.terms_ == b.terms_;
}

Polynomial Tensor::to_polynomial() const
{
    if (legs_.size() != 1)
        throw Error("tensor does not have exactly one leg");
    Polynomial p(legs_[0]);
    for (const auto& [k, c] : terms_)
        p.add_term(k[0], c);
    return p;
}

Scalar Tensor::to_scalar() const
{
    if (!legs_.empty())
        throw Error("tensor is not a scalar");
    return terms_.empty() ? Scalar(0) : terms_.begin()->second;
}

Polynomial Tensor::left_factor_of(const Monomial& right) const
{
    if (legs_.size() != 2)
        throw Error("left_factor_of needs a two-leg tensor");
    Polynomial p(legs_[0]);
    for (const auto& [k, c] : terms_)
        if (k[1] == right)
            p.add_term(k[0], c);
    return p;
}

std::string Tensor::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [k, c] = *it;
        bool negative = c < 0;
        Scalar mag = negative ? Scalar(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (mag != 1 || k.empty())
            out << mag.get_str() << (k.empty() ? "" : "*");
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i > 0)
                out << "⊗";
            out << legs_[i]->format(k[i]);
        }
    }
    return out.str();
}

Tensor juxtapose(const Tensor& a, const Tensor& b)
{
    auto legs = a.legs();
    legs.insert(legs.end(), b.legs().begin(), b.legs().end());
    Tensor r(a.field(), legs);
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            Tensor::Key k = ka;
            k.insert(k.end(), kb.begin(), kb.end());
            r.add_term(k, a.field().mul(ca, cb));
        }
    return r;
}

// ---------------------------------------------------------------------------
// Morphism

Morphism::Morphism(PresentationPtr source, std::vector<PresentationPtr> target_legs,
                   std::vector<Tensor> images)
    : source_(std::move(source)), target_legs_(std::move(target_legs)), images_(std::move(images))
{
    if (images_.size() != source_->size())
        throw Error("morphism needs one image per generator");
    for (const auto& im : images_) {
        if (im.rank() != target_legs_.size())
            throw Error("morphism image has wrong number of legs");
        for (std::size_t i = 0; i < target_legs_.size(); ++i)
            if (!same_presentation(im.legs()[i], target_legs_[i]))
                throw Error("morphism image lives in the wrong algebra");
    }
}

Tensor Morphism::apply(const Monomial& m) const
{
    Tensor r = Tensor::unit(source_->field(), target_legs_);
    for (std::size_t i = 0; i < source_->size(); ++i)
        for (std::uint32_t e = 0; e < m.exponent(i); ++e)
            r = r * images_[i];
    return r;
}

Tensor Morphism::apply(const Polynomial& p) const
{
    if (!same_presentation(p.presentation(), source_))
        throw Error("morphism applied outside its source algebra");
    Tensor r(source_->field(), target_legs_);
    for (const auto& [m, c] : p.terms())
        r += apply(m).scaled(c);
    return r;
}

std::optional<std::string> Morphism::check_parity() const
{
    for (std::size_t i = 0; i < source_->size(); ++i) {
        auto p = images_[i].parity();
        if (!images_[i].is_zero() && (!p || *p != source_->variable(i).parity))
            return source_->variable(i).name;
    }
    return std::nullopt;
}

std::optional<std::string> Morphism::check_relations() const
{
    const auto& vars = source_->variables();
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const auto& v = vars[i];
        if (v.nilpotency) {
            Tensor pw = Tensor::unit(source_->field(), target_legs_);
            for (unsigned e = 0; e < *v.nilpotency; ++e)
                pw = pw * images_[i];
            if (!pw.is_zero())
                return v.name + "^" + std::to_string(*v.nilpotency) + " = 0";
        }
        if (v.idempotent_family >= 0) {
            if (!(images_[i] * images_[i] == images_[i]))
                return v.name + "^2 = " + v.name;
            for (std::size_t j = i + 1; j < vars.size(); ++j)
                if (vars[j].idempotent_family == v.idempotent_family
                    && !(images_[i] * images_[j]).is_zero())
                    return v.name + "*" + vars[j].name + " = 0";
        }
    }
    return std::nullopt;
}

Morphism polynomial_morphism(PresentationPtr source, PresentationPtr target,
                             const std::vector<Polynomial>& images)
{
    std::vector<Tensor> t;
    t.reserve(images.size());
    for (const auto& p : images) {
        if (!same_presentation(p.presentation(), target))
            throw Error("morphism image lives in the wrong algebra");
        t.push_back(Tensor::from_polynomial(p));
    }
    return Morphism(std::move(source), {std::move(target)}, std::move(t));
}

Tensor apply_on_leg(const Tensor& t, std::size_t leg, const Morphism& f)
{
    if (leg >= t.rank() || !same_presentation(t.legs()[leg], f.source()))
        throw Error("morphism applied to the wrong tensor leg");
    std::vector<PresentationPtr> legs(t.legs().begin(), t.legs().begin() + leg);
    legs.insert(legs.end(), f.target_legs().begin(), f.target_legs().end());
    legs.insert(legs.end(), t.legs().begin() + leg + 1, t.legs().end());
    Tensor r(t.field(), legs);
    std::map<Monomial, Tensor> cache;
    for (const auto& [k, c] : t.terms()) {
        auto it = cache.find(k[leg]);
        if (it == cache.end())
            it = cache.emplace(k[leg], f.apply(k[leg])).first;
        for (const auto& [ik, ic] : it->second.terms()) {
            Tensor::Key nk(k.begin(), k.begin() + leg);
            nk.insert(nk.end(), ik.begin(), ik.end());
            nk.insert(nk.end(), k.begin() + leg + 1, k.end());
            r.add_term(nk, t.field().mul(c, ic));
        }
    }
    return r;
}

Tensor multiply_legs(const Tensor& t, std::size_t leg)
{
    if (leg + 1 >= t.rank() || !same_presentation(t.legs()[leg], t.legs()[leg + 1]))
        throw Error("cannot multiply these tensor legs");
    std::vector<PresentationPtr> legs = t.legs();
    legs.erase(legs.begin() + leg + 1);
    Tensor r(t.field(), legs);
    const auto& pres = *t.legs()[leg];
    for (const auto& [k, c] : t.terms()) {
        auto prod = pres.multiply(k[leg], k[leg + 1]);
        if (!prod)
            continue;
        Tensor::Key nk = k;
        nk[leg] = prod->first;
        nk.erase(nk.begin() + leg + 1);
        r.add_term(nk, prod->second > 0 ? c : t.field().neg(c));
    }
    return r;
}

}  // namespace superq
