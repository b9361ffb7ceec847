#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace superq {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using Scalar = mpq_class;

/// Ground field: the rationals or a prime field F_p.
///
/// Scalars are plain `mpq_class` values; the field decides how they are
/// normalized.  Over F_p every scalar is an integer residue in [0, p).
class Field {
public:
    static Field rationals() { return Field(0); }
    static Field prime(std::uint64_t p);

    std::uint64_t characteristic() const { return p_; }
    bool is_prime_field() const { return p_ != 0; }

    Scalar normalize(const Scalar& v) const;
    Scalar from_int(long v) const { return normalize(Scalar(v)); }

    Scalar add(const Scalar& a, const Scalar& b) const;
    Scalar sub(const Scalar& a, const Scalar& b) const;
    Scalar mul(const Scalar& a, const Scalar& b) const;
    Scalar neg(const Scalar& a) const;
    Scalar inv(const Scalar& a) const;
    Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

    std::string to_string(const Scalar& v) const;
    std::string name() const;

    friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

private:
    explicit Field(std::uint64_t p) : p_(p) {}

    std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

}  // namespace superq
