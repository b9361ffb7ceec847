#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superq/hopf.hpp"

namespace superq {

/// Sizes m|n and a shuffle sigma of {1..m+n} (1-based values), increasing on
/// the first m and on the last n positions.
struct ShuffleData {
    int m = 0;
    int n = 0;
    std::vector<int> sigma;

    static ShuffleData identity(int m, int n);
    int size() const { return m + n; }
    /// Throws Error unless sigma is a shuffle permutation.
    void validate() const;
};

/// K[U_sigma] = K[x_ij | sigma(i) < sigma(j)] with the unitriangular matrix
/// coproduct  Delta x_ij = x_ij (x) 1 + 1 (x) x_ij + sum_k x_kj (x) x_ik.
struct USigmaAlgebra {
    ShuffleData shuffle;
    HopfSuperAlgebra hopf;
    std::vector<std::pair<int, int>> entries;  // variable index -> (i, j)

    int gap(std::size_t var) const;
};

USigmaAlgebra build_u_sigma(const ShuffleData& s, Field field = Field::rationals());

/// sum over factors (with multiplicity) of sigma(j) - sigma(i).
int weight(const USigmaAlgebra& u, const Monomial& m);

struct FiltrationFailure {
    std::string monomial;
    std::string left_factor;
};

struct FiltrationReport {
    int max_degree = 0;
    std::size_t monomials_checked = 0;
    std::vector<FiltrationFailure> failures;
    bool ok() const { return failures.empty(); }
};

/// Every left factor of Delta(m) - m (x) 1 has lower degree, or the same
/// degree and lower weight, for all monomials m of degree <= max_degree.
FiltrationReport filtration_check(const USigmaAlgebra& u, int max_degree);

struct SubbialgebraReport {
    int level = 0;
    std::vector<std::string> generators;  // generators of B_k
    std::vector<std::string> failures;
    bool ok() const { return failures.empty(); }
};

/// B_k = K[x_ij | sigma(j) - sigma(i) <= k] is closed under Delta and S.
SubbialgebraReport bk_subbialgebra_check(const USigmaAlgebra& u, int k);

/// Whether p involves only generators of B_k.
bool in_bk(const USigmaAlgebra& u, int k, const Polynomial& p);

/// Compares structure maps after renaming generator i of `a` to generator i
/// of `b`; returns a description of the first mismatch.
std::optional<std::string> structure_mismatch(const HopfSuperAlgebra& a, const HopfSuperAlgebra& b);

}  // namespace superq
