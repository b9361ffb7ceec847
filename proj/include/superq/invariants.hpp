#pragma once

#include <map>
#include <optional>
#include <vector>

#include "superq/coaction.hpp"
#include "superq/linalg.hpp"

namespace superq {

/// Basis of {f in K[X]_d : tau(f) = f (x) 1}, the kernel of tau - i on the
/// degree-d monomials.  Elements are parity-homogeneous.
std::vector<Polynomial> invariant_slice(const Coaction& c, int d);

/// Degree -> new subalgebra generators at that degree.
using GeneratorLedger = std::map<int, std::vector<Polynomial>>;

/// Invariant slices of degree 0..max_degree together with the greedy
/// generator ledger.
class InvariantRing {
public:
    InvariantRing(const Coaction& c, int max_degree);

    const Coaction& coaction() const { return coaction_; }
    int max_degree() const { return static_cast<int>(slices_.size()) - 1; }
    const std::vector<Polynomial>& slice(int d) const { return slices_.at(d); }
    std::vector<std::size_t> slice_dimensions() const;
    const GeneratorLedger& generator_ledger() const { return ledger_; }

    /// True when every homogeneous component of p lies in its slice
    /// (p must have degree <= max_degree).
    bool contains(const Polynomial& p) const;

private:
    Coaction coaction_;
    std::vector<std::vector<Polynomial>> slices_;
    GeneratorLedger ledger_;
};

/// Greedy ledger: at each degree e, the slice elements not in the span of
/// degree-e products of earlier ledger entries.
GeneratorLedger minimal_generators(const Coaction& c, int max_degree);
GeneratorLedger minimal_generators(const std::vector<std::vector<Polynomial>>& slices);

struct IteratedDegree {
    int degree = 0;
    std::size_t normal_invariants = 0;    // dim K[X]^N_d
    std::size_t iterated_invariants = 0;  // dim (K[X]^N_d)^{Gamma/N}
    std::size_t full_invariants = 0;      // dim K[X]^Gamma_d
    bool equal = false;                   // same dimension and same span
};

struct IteratedReport {
    std::vector<IteratedDegree> degrees;
    std::optional<int> witness_degree;
    bool ok() const { return !witness_degree; }
};

/// Compares (K[X]^N)^{Gamma/N} with K[X]^Gamma degreewise for a constant group
/// action; `normal` lists element indices of N.
IteratedReport iterated_invariants_check(const Coaction& c, const std::vector<std::size_t>& normal,
                                         int max_degree);

/// Coordinates of homogeneous polynomials against a fixed monomial list.
Vector monomial_coordinates(const Polynomial& p, const std::vector<Monomial>& basis);

}  // namespace superq
