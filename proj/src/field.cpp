#include "superq/field.hpp"

namespace superq {

bool is_prime(std::uint64_t n)
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0)
            return false;
    return true;
}

Field Field::prime(std::uint64_t p)
{
    if (!is_prime(p))
        throw Error("field characteristic " + std::to_string(p) + " is not prime");
    return Field(p);
}

Scalar Field::normalize(const Scalar& v) const
{
    if (p_ == 0) {
        Scalar r = v;
        r.canonicalize();
        return r;
    }
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_class num = v.get_num() % p;
    if (num < 0)
        num += p;
    mpz_class den = v.get_den() % p;
    if (den == 0)
        throw Error("denominator vanishes in " + name());
    mpz_class den_inv;
    mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (num * den_inv) % p;
    return Scalar(r);
}

Scalar Field::add(const Scalar& a, const Scalar& b) const
{
    Scalar r = a + b;
    if (p_ != 0 && r >= static_cast<unsigned long>(p_))
        r -= static_cast<unsigned long>(p_);
    return r;
}

Scalar Field::sub(const Scalar& a, const Scalar& b) const
{
    Scalar r = a - b;
    if (p_ != 0 && r < 0)
        r += static_cast<unsigned long>(p_);
    return r;
}

Scalar Field::mul(const Scalar& a, const Scalar& b) const
{
    if (p_ == 0)
        return a * b;
    mpz_class r = (a.get_num() * b.get_num()) % static_cast<unsigned long>(p_);
    return Scalar(r);
}

Scalar Field::neg(const Scalar& a) const
{
    if (p_ == 0)
        return -a;
    return a == 0 ? a : Scalar(static_cast<unsigned long>(p_)) - a;
}

Scalar Field::inv(const Scalar& a) const
{
    if (a == 0)
        throw Error("division by zero in " + name());
    if (p_ == 0)
        return 1 / a;
    mpz_class r;
    mpz_class p(static_cast<unsigned long>(p_));
    mpz_invert(r.get_mpz_t(), a.get_num().get_mpz_t(), p.get_mpz_t());
    return Scalar(r);
}

std::string Field::to_string(const Scalar& v) const { return v.get_str(); }

std::string Field::name() const { return p_ == 0 ? "QQ" : "GF(" + std::to_string(p_) + ")"; }

}  // namespace superq
