#pragma once

// Random inputs for sampled checks.  Every generator takes the engine by
// reference so a fixed seed reproduces the whole run.

#include <optional>
#include <random>
#include <vector>

#include "superq/superalgebra.hpp"

namespace superq {

using Rng = std::mt19937_64;

inline Scalar random_scalar(Rng& rng, const Field& field)
{
    std::uniform_int_distribution<long> num(-6, 6);
    std::uniform_int_distribution<long> den(1, 4);
    if (field.is_prime_field())
        return field.from_int(num(rng));
    return field.normalize(Scalar(num(rng), den(rng)));
}

/// Random polynomial with monomials of degree <= max_degree, optionally
/// restricted to one parity or one degree.
inline Polynomial random_polynomial(Rng& rng, const PresentationPtr& pres, int max_degree,
                                    int max_terms, std::optional<Parity> parity = {},
                                    std::optional<int> exact_degree = {})
{
    std::vector<Monomial> pool;
    for (int d = exact_degree.value_or(0); d <= exact_degree.value_or(max_degree); ++d)
        for (auto& m : pres->monomial_basis(d))
            if (!parity || pres->parity(m) == *parity)
                pool.push_back(m);
    Polynomial p(pres);
    if (pool.empty())
        return p;
    std::uniform_int_distribution<int> count(1, max_terms);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int i = count(rng); i > 0; --i)
        p.add_term(pool[pick(rng)], random_scalar(rng, pres->field()));
    return p;
}

}  // namespace superq
