#include "superq/superalgebra.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace superq {

std::string to_string(Parity p) { return p == Parity::Even ? "even" : "odd"; }

int koszul_sign(std::span<const std::size_t> a, std::span<const std::size_t> b)
{
    std::size_t inversions = 0;
    std::size_t i = 0;
    for (std::size_t j = 0; j < b.size(); ++j) {
        while (i < a.size() && a[i] < b[j])
            ++i;
        if (i < a.size() && a[i] == b[j])
            return 0;
        inversions += a.size() - i;
    }
    return inversions % 2 == 0 ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Presentation

Presentation::Presentation(Field field, std::vector<SuperVariable> variables)
    : field_(field), variables_(std::move(variables))
{
}

PresentationPtr Presentation::create(Field field, std::vector<SuperVariable> variables)
{
    std::set<std::string> names;
    for (const auto& v : variables) {
        if (v.name.empty())
            throw Error("generator with empty name");
        if (!names.insert(v.name).second)
            throw Error("generator '" + v.name + "' declared twice");
        if (v.degree < 1)
            throw Error("generator '" + v.name + "' must have positive degree");
        if (v.parity == Parity::Odd && v.nilpotency)
            throw Error("odd generator '" + v.name + "' cannot carry a power relation");
        if (v.parity == Parity::Odd && v.idempotent_family >= 0)
            throw Error("odd generator '" + v.name + "' cannot be idempotent");
        if (v.nilpotency && *v.nilpotency < 2)
            throw Error("power relation on '" + v.name + "' must have exponent >= 2");
        if (v.nilpotency && v.idempotent_family >= 0)
            throw Error("generator '" + v.name + "' cannot be both nilpotent and idempotent");
    }
    std::stable_partition(variables.begin(), variables.end(),
                          [](const SuperVariable& v) { return v.parity == Parity::Even; });
    return PresentationPtr(new Presentation(field, std::move(variables)));
}

std::optional<std::size_t> Presentation::index_of(std::string_view name) const
{
    for (std::size_t i = 0; i < variables_.size(); ++i)
        if (variables_[i].name == name)
            return i;
    return std::nullopt;
}

std::size_t Presentation::require_index(std::string_view name) const
{
    auto i = index_of(name);
    if (!i)
        throw Error("unknown generator '" + std::string(name) + "'");
    return *i;
}

Monomial Presentation::unit() const { return Monomial(std::vector<std::uint32_t>(size(), 0), 0); }

Monomial Presentation::generator(std::size_t var) const
{
    std::vector<std::uint32_t> e(size(), 0);
    e[var] = 1;
    return Monomial(std::move(e), variables_[var].degree);
}

std::optional<Monomial> Presentation::make_monomial(std::vector<std::uint32_t> exponents) const
{
    if (exponents.size() != size())
        throw Error("exponent vector has wrong length");
    int degree = 0;
    std::vector<int> family_used;
    for (std::size_t i = 0; i < size(); ++i) {
        const auto& v = variables_[i];
        auto& e = exponents[i];
        if (e == 0)
            continue;
        if (v.parity == Parity::Odd && e > 1)
            return std::nullopt;
        if (v.nilpotency && e >= *v.nilpotency)
            return std::nullopt;
        if (v.idempotent_family >= 0) {
            e = 1;
            if (std::find(family_used.begin(), family_used.end(), v.idempotent_family)
                != family_used.end())
                return std::nullopt;
            family_used.push_back(v.idempotent_family);
        }
        degree += static_cast<int>(e) * v.degree;
    }
    return Monomial(std::move(exponents), degree);
}

Parity Presentation::parity(const Monomial& m) const
{
    std::uint32_t odd = 0;
    for (std::size_t i = 0; i < size(); ++i)
        if (variables_[i].parity == Parity::Odd)
            odd += m.exponent(i);
    return odd % 2 == 0 ? Parity::Even : Parity::Odd;
}

std::vector<std::size_t> Presentation::odd_support(const Monomial& m) const
{
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < size(); ++i)
        if (variables_[i].parity == Parity::Odd && m.exponent(i) != 0)
            s.push_back(i);
    return s;
}

std::optional<std::pair<Monomial, int>> Presentation::multiply(const Monomial& a,
                                                               const Monomial& b) const
{
    if (a.is_unit())
        return std::make_pair(b, 1);
    if (b.is_unit())
        return std::make_pair(a, 1);
    auto sa = odd_support(a);
    auto sb = odd_support(b);
    int sign = koszul_sign(sa, sb);
    if (sign == 0)
        return std::nullopt;
    std::vector<std::uint32_t> e(size());
    for (std::size_t i = 0; i < size(); ++i)
        e[i] = a.exponent(i) + b.exponent(i);
    auto m = make_monomial(std::move(e));
    if (!m)
        return std::nullopt;
    return std::make_pair(std::move(*m), sign);
}

namespace {

std::uint32_t max_exponent(const SuperVariable& v, int degree_left)
{
    std::uint32_t cap = static_cast<std::uint32_t>(degree_left / v.degree);
    if (v.parity == Parity::Odd || v.idempotent_family >= 0)
        cap = std::min<std::uint32_t>(cap, 1);
    if (v.nilpotency)
        cap = std::min<std::uint32_t>(cap, *v.nilpotency - 1);
    return cap;
}

void enumerate(const Presentation& pres, std::size_t var, int degree_left,
               std::vector<std::uint32_t>& current, std::vector<int>& families,
               std::vector<Monomial>& out, int total)
{
    if (var == pres.size()) {
        if (degree_left == 0)
            out.emplace_back(current, total);
        return;
    }
    const auto& v = pres.variable(var);
    std::uint32_t cap = max_exponent(v, degree_left);
    bool family_taken = v.idempotent_family >= 0
        && std::find(families.begin(), families.end(), v.idempotent_family) != families.end();
    if (family_taken)
        cap = 0;
    for (std::uint32_t e = cap + 1; e-- > 0;) {
        current[var] = e;
        if (e > 0 && v.idempotent_family >= 0)
            families.push_back(v.idempotent_family);
        enumerate(pres, var + 1, degree_left - static_cast<int>(e) * v.degree, current, families,
                  out, total);
        if (e > 0 && v.idempotent_family >= 0)
            families.pop_back();
    }
    current[var] = 0;
}

}  // namespace

std::vector<Monomial> Presentation::monomial_basis(int degree) const
{
    std::vector<Monomial> out;
    if (degree < 0)
        return out;
    std::vector<std::uint32_t> current(size(), 0);
    std::vector<int> families;
    enumerate(*this, 0, degree, current, families, out, degree);
    return out;
}

bool Presentation::is_finite_dimensional() const
{
    return std::all_of(variables_.begin(), variables_.end(), [](const SuperVariable& v) {
        return v.parity == Parity::Odd || v.nilpotency || v.idempotent_family >= 0;
    });
}

int Presentation::max_degree() const
{
    if (!is_finite_dimensional())
        throw Error("presentation is infinite-dimensional");
    int total = 0;
    std::map<int, int> family_max;
    for (const auto& v : variables_) {
        if (v.idempotent_family >= 0)
            family_max[v.idempotent_family] = std::max(family_max[v.idempotent_family], v.degree);
        else if (v.parity == Parity::Odd)
            total += v.degree;
        else
            total += static_cast<int>(*v.nilpotency - 1) * v.degree;
    }
    for (const auto& [f, d] : family_max)
        total += d;
    return total;
}

std::vector<Monomial> Presentation::full_basis() const
{
    std::vector<Monomial> out;
    for (int d = 0, top = max_degree(); d <= top; ++d) {
        auto slice = monomial_basis(d);
        out.insert(out.end(), slice.begin(), slice.end());
    }
    return out;
}

bool Presentation::is_nilpotent(const Monomial& m) const
{
    for (std::size_t i = 0; i < size(); ++i) {
        if (m.exponent(i) == 0)
            continue;
        const auto& v = variables_[i];
        if (v.parity == Parity::Odd || v.nilpotency)
            return true;
    }
    return false;
}

std::string Presentation::format(const Monomial& m) const
{
    if (m.is_unit())
        return "1";
    std::string out;
    for (std::size_t i = 0; i < size(); ++i) {
        auto e = m.exponent(i);
        if (e == 0)
            continue;
        if (!out.empty())
            out += '*';
        out += variables_[i].name;
        if (e > 1)
            out += '^' + std::to_string(e);
    }
    return out;
}

bool operator==(const Presentation& a, const Presentation& b)
{
    if (!(a.field_ == b.field_) || a.size() != b.size())
        return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        const auto& x = a.variables_[i];
        const auto& y = b.variables_[i];
        if (x.name != y.name || x.parity != y.parity || x.degree != y.degree
            || x.nilpotency != y.nilpotency || x.idempotent_family != y.idempotent_family)
            return false;
    }
    return true;
}

bool same_presentation(const PresentationPtr& a, const PresentationPtr& b)
{
    return a == b || (a && b && *a == *b);
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial Polynomial::constant(PresentationPtr pres, const Scalar& c)
{
    Polynomial p(pres);
    p.add_term(pres->unit(), c);
    return p;
}

Polynomial Polynomial::from_monomial(PresentationPtr pres, const Monomial& m, const Scalar& c)
{
    Polynomial p(std::move(pres));
    p.add_term(m, c);
    return p;
}

Polynomial Polynomial::variable(PresentationPtr pres, std::string_view name)
{
    auto i = pres->require_index(name);
    auto m = pres->generator(i);
    return from_monomial(std::move(pres), m);
}

int Polynomial::degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first.degree(); }

int Polynomial::min_degree() const { return terms_.empty() ? -1 : terms_.begin()->first.degree(); }

std::optional<Parity> Polynomial::parity() const
{
    std::optional<Parity> p;
    for (const auto& [m, c] : terms_) {
        auto q = pres_->parity(m);
        if (p && *p != q)
            return std::nullopt;
        p = q;
    }
    return p.value_or(Parity::Even);
}

Scalar Polynomial::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

Polynomial Polynomial::homogeneous_component(int degree) const
{
    Polynomial r(pres_);
    for (const auto& [m, c] : terms_)
        if (m.degree() == degree)
            r.terms_.emplace(m, c);
    return r;
}

Polynomial Polynomial::parity_component(Parity p) const
{
    Polynomial r(pres_);
    for (const auto& [m, c] : terms_)
        if (pres_->parity(m) == p)
            r.terms_.emplace(m, c);
    return r;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c)
{
    const auto& f = field();
    Scalar v = f.normalize(c);
    if (v == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, v);
    if (!inserted) {
        it->second = f.add(it->second, v);
        if (it->second == 0)
            terms_.erase(it);
    }
}

Polynomial Polynomial::scaled(const Scalar& c) const
{
    Polynomial r(pres_);
    const auto& f = field();
    Scalar k = f.normalize(c);
    if (k == 0)
        return r;
    for (const auto& [m, v] : terms_)
        r.terms_.emplace(m, f.mul(v, k));
    return r;
}

void Polynomial::check_same(const Polynomial& other) const
{
    if (!same_presentation(pres_, other.pres_))
        throw Error("presentation mismatch");
}

Polynomial& Polynomial::operator+=(const Polynomial& other)
{
    check_same(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other)
{
    check_same(other);
    for (const auto& [m, c] : other.terms_)
        add_term(m, field().neg(c));
    return *this;
}

Polynomial operator-(const Polynomial& a) { return a.scaled(-1); }

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    a.check_same(b);
    const auto& pres = *a.pres_;
    const auto& f = a.field();
    Polynomial r(a.pres_);
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            auto prod = pres.multiply(ma, mb);
            if (!prod)
                continue;
            Scalar c = f.mul(ca, cb);
            r.add_term(prod->first, prod->second > 0 ? c : f.neg(c));
        }
    return r;
}

bool operator==(const Polynomial& a, const Polynomial& b)
{
    return same_presentation(a.pres_, b.pres_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::pow(unsigned e) const
{
    Polynomial r = one(pres_);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1U)
            r = r * base;
        e >>= 1U;
        if (e > 0)
            base = base * base;
    }
    return r;
}

std::string Polynomial::to_string() const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = c < 0;
        Scalar mag = negative ? Scalar(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (m.is_unit())
            out << mag.get_str();
        else if (mag == 1)
            out << pres_->format(m);
        else
            out << mag.get_str() << '*' << pres_->format(m);
    }
    return out.str();
}

Polynomial multiply(const Polynomial& p, const Polynomial& q) { return p * q; }

Polynomial truncate(const Polynomial& p, int d)
{
    Polynomial r(p.presentation());
    for (const auto& [m, c] : p.terms())
        if (m.degree() <= d)
            r.add_term(m, c);
    return r;
}

}  // namespace superq
