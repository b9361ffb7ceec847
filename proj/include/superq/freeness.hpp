#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "superq/coaction.hpp"
#include "superq/invariants.hpp"

namespace superq {

/// The ideal J generated by tau(f) - f (x) 1 and the augmentation ideal M of K[G].
struct FreenessProblem {
    explicit FreenessProblem(const Coaction& c);

    Coaction coaction;
    std::vector<Tensor> j_generators;  // one per generator of K[X]
    std::vector<Polynomial> m_basis;
};

enum class FreenessStatus { Free, NotFree, UnknownAtBound };
std::string to_string(FreenessStatus s);

struct CertificateTerm {
    std::size_t generator = 0;  // index into j_generators
    Monomial group_monomial;    // h
    Polynomial coefficient;     // a, contributing (a (x) h) * s_generator
};

/// 1 (x) target = sum over terms of (a (x) h) s_i.
struct MembershipCertificate {
    Polynomial target;
    std::vector<CertificateTerm> terms;
    int degree = 0;  // smallest coefficient degree bound that worked
};

/// Superalgebra A with a point alpha in X(A) and g in G(A), both given on generators.
struct StabilizerWitness {
    PresentationPtr algebra;
    std::vector<Polynomial> point;
    std::vector<Polynomial> element;
};

struct WitnessCheck {
    bool confirmed = false;
    std::string reason;  // failed condition when rejected
};

struct FreenessVerdict {
    FreenessStatus status = FreenessStatus::UnknownAtBound;
    int bound = 0;
    std::vector<MembershipCertificate> certificates;
    std::vector<Polynomial> unreached;  // targets without a certificate
    std::optional<StabilizerWitness> witness;
    std::optional<std::string> witness_rejection;
};

/// Bounded search for 1 (x) M inside J.  Returns Free (every target
/// certified and re-verified) or UnknownAtBound, never NotFree.
FreenessVerdict check_free(const FreenessProblem& problem, int bound);

Tensor expand_certificate(const FreenessProblem& problem, const MembershipCertificate& cert);
bool verify_certificate(const FreenessProblem& problem, const MembershipCertificate& cert);

WitnessCheck verify_stabilizer_witness(const FreenessProblem& problem, const StabilizerWitness& w);

/// Tries A = K[X]/(some odd generators)[xi] with g(t) = xi for the odd additive group.
std::optional<StabilizerWitness> search_stabilizer_witness(const FreenessProblem& problem);

/// check_free, upgraded to NotFree when the witness (given, or found by the
/// search when `search` is set) is confirmed.
FreenessVerdict decide_freeness(const FreenessProblem& problem, int bound,
                                const std::optional<StabilizerWitness>& witness, bool search = false);

struct SplittingElement {
    Polynomial z;
    Polynomial f;
    Polynomial g_unit;     // phi(f)
    Polynomial g_inverse;
};

/// Odd f of degree <= bound with phi(f) a unit, and z = f phi(f)^{-1}.
std::optional<SplittingElement> find_gana_splitting(const Coaction& c, int bound);

/// (r0, r1) = (phi(hz), phi(h)), so that h = r0 + r1 z.
std::pair<Polynomial, Polynomial> decompose(const Coaction& c, const SplittingElement& s,
                                            const Polynomial& h);

/// psi(f (x) h) = sum f h1 (x) h2 where tau(h) = sum h1 (x) h2.
Tensor psi_apply(const Coaction& c, const Polynomial& f, const Polynomial& h);

struct PsiReport {
    int max_degree = 0;
    std::size_t source_dimension = 0;  // pairs f (x) h with deg f + deg h <= d
    std::size_t image_dimension = 0;
    std::size_t balanced_upper_bound = 0;
    bool surjective = false;        // every 1 (x) h' is reached
    int surjective_through = -1;    // largest e with K[X]_{<=e} (x) K[G] reached
    bool bijective = false;         // upper bound attained
    std::vector<Polynomial> unreached;
    std::string caveat;
};

PsiReport psi_certify(const Coaction& c, const InvariantRing& invariants, int max_degree);

struct FreeBasisDegree {
    int degree = 0;
    std::size_t dimension = 0;  // dim K[X]_e
    std::size_t expected = 0;   // sum_i dim R_{e - deg b_i}
    std::size_t rank = 0;       // rank of the products r b_i
};

struct FreeBasisReport {
    bool verified = false;
    std::optional<int> failing_degree;
    std::string reason;
    std::vector<FreeBasisDegree> degrees;
};

FreeBasisReport verify_free_basis(const Coaction& c, const InvariantRing& invariants,
                                  const std::vector<Polynomial>& candidates, int max_degree);

}  // namespace superq
