#include "superq/freeness.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "superq/linalg.hpp"

namespace superq {

namespace {

std::vector<Monomial> monomials_up_to(const PresentationPtr& pres, int d)
{
    std::vector<Monomial> out;
    for (int e = 0; e <= d; ++e)
        for (auto& m : pres->monomial_basis(e))
            out.push_back(std::move(m));
    return out;
}

// Dense vectors for a batch of tensors over the union of their keys.
struct TensorColumns {
    Coordinates<Tensor::Key> keys;
    std::vector<const Tensor*> columns;

    void add(const Tensor& t)
    {
        for (const auto& [k, c] : t.terms())
            keys.index(k);
        columns.push_back(&t);
    }
    Vector vector(const Tensor& t) const
    {
        Vector v(keys.size(), Scalar(0));
        for (const auto& [k, c] : t.terms())
            v[*keys.find(k)] = c;
        return v;
    }
};

}  // namespace

FreenessProblem::FreenessProblem(const Coaction& c) : coaction(c)
{
    const auto& space = c.space();
    for (std::size_t i = 0; i < space->size(); ++i) {
        auto g = Polynomial::from_monomial(space, space->generator(i));
        j_generators.push_back(c.coact(g) - c.trivial(g));
    }
    m_basis = augmentation_ideal_basis(c.group());
}

std::string to_string(FreenessStatus s)
{
    switch (s) {
    case FreenessStatus::Free:
        return "free";
    case FreenessStatus::NotFree:
        return "not_free";
    case FreenessStatus::UnknownAtBound:
        return "unknown_at_bound";
    }
    return "unknown";
}

Tensor expand_certificate(const FreenessProblem& problem, const MembershipCertificate& cert)
{
    const auto& space = problem.coaction.space();
    const auto& gp = problem.coaction.group().presentation();
    Tensor sum(space->field(), {space, gp});
    for (const auto& t : cert.terms)
        sum += Tensor::pure({t.coefficient, Polynomial::from_monomial(gp, t.group_monomial)})
               * problem.j_generators.at(t.generator);
    return sum;
}

bool verify_certificate(const FreenessProblem& problem, const MembershipCertificate& cert)
{
    const auto& space = problem.coaction.space();
    return expand_certificate(problem, cert) == Tensor::pure({Polynomial::one(space), cert.target});
}

FreenessVerdict check_free(const FreenessProblem& problem, int bound)
{
    const auto& space = problem.coaction.space();
    const auto& gp = problem.coaction.group().presentation();
    const auto& field = space->field();
    auto group_basis = gp->full_basis();
    auto coeffs = monomials_up_to(space, bound);

    // Columns (a (x) h) s_i, ordered by deg a so each bound is a prefix.
    struct Column {
        int degree;
        std::size_t generator;
        Monomial a;
        Monomial h;
        Tensor value;
    };
    std::vector<Column> columns;
    for (const auto& a : coeffs)
        for (std::size_t i = 0; i < problem.j_generators.size(); ++i)
            for (const auto& h : group_basis) {
                auto v = Tensor::pure({Polynomial::from_monomial(space, a), Polynomial::from_monomial(gp, h)})
                         * problem.j_generators[i];
                if (!v.is_zero())
                    columns.push_back({a.degree(), i, a, h, std::move(v)});
            }

    FreenessVerdict verdict;
    verdict.bound = bound;
    for (const auto& m : problem.m_basis) {
        auto target = Tensor::pure({Polynomial::one(space), m});
        std::optional<MembershipCertificate> found;
        std::size_t used = 0;
        for (int b = 0; b <= bound && !found; ++b) {
            while (used < columns.size() && columns[used].degree <= b)
                ++used;
            TensorColumns tc;
            for (std::size_t j = 0; j < used; ++j)
                tc.add(columns[j].value);
            tc.add(target);
            Matrix mat(field, tc.keys.size(), used);
            for (std::size_t j = 0; j < used; ++j) {
                auto v = tc.vector(columns[j].value);
                for (std::size_t r = 0; r < v.size(); ++r)
                    mat.at(r, j) = v[r];
            }
            auto x = solve(mat, tc.vector(target));
            if (!x)
                continue;
            std::map<std::pair<std::size_t, Monomial>, Polynomial> grouped;
            for (std::size_t j = 0; j < used; ++j) {
                if ((*x)[j] == 0)
                    continue;
                auto key = std::make_pair(columns[j].generator, columns[j].h);
                auto it = grouped.try_emplace(key, Polynomial(space)).first;
                it->second.add_term(columns[j].a, (*x)[j]);
            }
            MembershipCertificate cert{m, {}, b};
            for (auto& [key, coeff] : grouped)
                cert.terms.push_back({key.first, key.second, std::move(coeff)});
            if (!verify_certificate(problem, cert))
                throw Error("internal: membership certificate failed to re-expand");
            found = std::move(cert);
        }
        if (found)
            verdict.certificates.push_back(std::move(*found));
        else
            verdict.unreached.push_back(m);
    }
    verdict.status = verdict.unreached.empty() ? FreenessStatus::Free : FreenessStatus::UnknownAtBound;
    return verdict;
}

WitnessCheck verify_stabilizer_witness(const FreenessProblem& problem, const StabilizerWitness& w)
{
    const auto& c = problem.coaction;
    const auto& space = c.space();
    const auto& gp = c.group().presentation();
    const auto& a = w.algebra;
    if (!a)
        return {false, "witness algebra missing"};
    if (!(a->field() == space->field()))
        return {false, "witness algebra is over " + a->field().name()};
    if (w.point.size() != space->size())
        return {false, "point needs one image per generator of K[X]"};
    if (w.element.size() != gp->size())
        return {false, "group element needs one image per generator of K[G]"};
    for (const auto& p : w.point)
        if (!same_presentation(p.presentation(), a))
            return {false, "point image outside the witness algebra"};
    for (const auto& p : w.element)
        if (!same_presentation(p.presentation(), a))
            return {false, "group element image outside the witness algebra"};

    auto alpha = polynomial_morphism(space, a, w.point);
    auto g = polynomial_morphism(gp, a, w.element);
    if (auto bad = alpha.check_parity())
        return {false, "point is not even on " + *bad};
    if (auto bad = alpha.check_relations())
        return {false, "point does not respect " + *bad};
    if (auto bad = g.check_parity())
        return {false, "group element is not even on " + *bad};
    if (auto bad = g.check_relations())
        return {false, "group element does not respect " + *bad};

    bool identity = true;
    for (std::size_t i = 0; i < gp->size(); ++i) {
        auto y = Polynomial::from_monomial(gp, gp->generator(i));
        if (!(w.element[i] == Polynomial::constant(a, c.group().counit(y))))
            identity = false;
    }
    if (identity)
        return {false, "g is the identity element of G(A)"};

    for (std::size_t i = 0; i < space->size(); ++i) {
        auto f = Polynomial::from_monomial(space, space->generator(i));
        auto moved = multiply_legs(apply_on_leg(apply_on_leg(c.coact(f), 1, g), 0, alpha), 0).to_polynomial();
        if (!(moved == w.point[i]))
            return {false, "stabilizer equation fails on " + space->variable(i).name + ": "
                               + moved.to_string() + " != " + w.point[i].to_string()};
    }
    return {true, ""};
}

std::optional<StabilizerWitness> search_stabilizer_witness(const FreenessProblem& problem)
{
    const auto& c = problem.coaction;
    if (c.group().kind() != SupergroupKind::OddAdditive)
        return std::nullopt;
    const auto& space = c.space();
    std::vector<std::size_t> odd;
    for (std::size_t i = 0; i < space->size(); ++i)
        if (space->variable(i).parity == Parity::Odd)
            odd.push_back(i);
    if (odd.size() > 16)
        return std::nullopt;

    std::string fresh = "xi";
    while (space->index_of(fresh))
        fresh += "_";

    std::vector<unsigned> masks;
    for (unsigned mask = 0; mask < (1u << odd.size()); ++mask)
        masks.push_back(mask);
    std::stable_sort(masks.begin(), masks.end(),
                     [](unsigned x, unsigned y) { return std::popcount(x) < std::popcount(y); });

    for (unsigned mask : masks) {
        std::vector<bool> killed(space->size(), false);
        for (std::size_t k = 0; k < odd.size(); ++k)
            if (mask & (1u << k))
                killed[odd[k]] = true;
        std::vector<SuperVariable> vars;
        for (std::size_t i = 0; i < space->size(); ++i)
            if (!killed[i])
                vars.push_back(space->variable(i));
        vars.push_back({fresh, Parity::Odd, 1, {}, -1});
        auto a = Presentation::create(space->field(), vars);
        StabilizerWitness w{a, {}, {Polynomial::variable(a, fresh)}};
        for (std::size_t i = 0; i < space->size(); ++i)
            w.point.push_back(killed[i] ? Polynomial(a) : Polynomial::variable(a, space->variable(i).name));
        if (verify_stabilizer_witness(problem, w).confirmed)
            return w;
    }
    return std::nullopt;
}

FreenessVerdict decide_freeness(const FreenessProblem& problem, int bound,
                                const std::optional<StabilizerWitness>& witness, bool search)
{
    auto verdict = check_free(problem, bound);
    std::optional<StabilizerWitness> w = witness;
    if (!w && search && verdict.status != FreenessStatus::Free)
        w = search_stabilizer_witness(problem);
    if (!w)
        return verdict;
    auto check = verify_stabilizer_witness(problem, *w);
    if (!check.confirmed) {
        verdict.witness_rejection = check.reason;
        return verdict;
    }
    if (verdict.status == FreenessStatus::Free)
        throw Error("internal: confirmed stabilizer witness contradicts a freeness certificate");
    verdict.status = FreenessStatus::NotFree;
    verdict.witness = std::move(w);
    return verdict;
}

// ---------------------------------------------------------------------------
// Odd additive splitting

std::optional<SplittingElement> find_gana_splitting(const Coaction& c, int bound)
{
    if (!c.derivation())
        throw Error("splitting elements need an odd-derivation coaction");
    const auto& phi = *c.derivation();
    const auto& space = c.space();
    const auto& field = space->field();

    std::vector<Monomial> odd;
    for (const auto& m : monomials_up_to(space, bound))
        if (space->parity(m) == Parity::Odd)
            odd.push_back(m);
    std::vector<Polynomial> images;
    Coordinates<Monomial> rows;
    rows.index(space->unit());
    for (const auto& m : odd) {
        images.push_back(phi.apply(Polynomial::from_monomial(space, m)));
        for (const auto& [k, v] : images.back().terms())
            if (k.is_unit() || !space->is_nilpotent(k))
                rows.index(k);
    }
    Matrix mat(field, rows.size(), odd.size());
    for (std::size_t j = 0; j < odd.size(); ++j)
        for (const auto& [k, v] : images[j].terms())
            if (auto r = rows.find(k))
                mat.at(*r, j) = v;
    Vector rhs(rows.size(), Scalar(0));
    rhs[0] = 1;
    auto x = solve(mat, rhs);
    if (!x)
        return std::nullopt;

    Polynomial f(space);
    for (std::size_t j = 0; j < odd.size(); ++j)
        if ((*x)[j] != 0)
            f.add_term(odd[j], (*x)[j]);
    auto g = phi.apply(f);
    auto one = Polynomial::one(space);
    auto n = g - one;  // nilpotent
    Polynomial inv = one;
    Polynomial power = one;
    for (int k = 1;; ++k) {
        power = -(power * n);
        if (power.is_zero())
            break;
        if (k > 4096)
            throw Error("internal: unit inversion did not terminate");
        inv += power;
    }
    SplittingElement s{f * inv, f, g, inv};
    if (!(g * inv == one) || !(phi.apply(s.z) == one))
        throw Error("internal: splitting element failed verification");
    return s;
}

std::pair<Polynomial, Polynomial> decompose(const Coaction& c, const SplittingElement& s,
                                            const Polynomial& h)
{
    if (!c.derivation())
        throw Error("decompose needs an odd-derivation coaction");
    const auto& phi = *c.derivation();
    if (!(phi.apply(s.z) == Polynomial::one(c.space())))
        throw Error("splitting element does not satisfy phi(z) = 1");
    return {phi.apply(h * s.z), phi.apply(h)};
}

// ---------------------------------------------------------------------------
// Quotient map

Tensor psi_apply(const Coaction& c, const Polynomial& f, const Polynomial& h)
{
    return Tensor::pure({f, Polynomial::one(c.group().presentation())}) * c.coact(h);
}

PsiReport psi_certify(const Coaction& c, const InvariantRing& invariants, int max_degree)
{
    if (invariants.max_degree() < max_degree)
        throw Error("invariants are not computed through the requested degree");
    const auto& space = c.space();
    const auto& gp = c.group().presentation();
    const auto& field = space->field();
    int d = max_degree;

    PsiReport report;
    report.max_degree = d;
    report.caveat = "balancing relations use invariants of degree <= " + std::to_string(d)
                    + " only, so the quotient dimension is an upper bound";

    std::vector<std::vector<Monomial>> by_degree;
    for (int e = 0; e <= d; ++e)
        by_degree.push_back(space->monomial_basis(e));

    Coordinates<std::pair<Monomial, Monomial>> pairs;
    std::vector<Tensor> images;
    for (int a = 0; a <= d; ++a)
        for (int b = 0; a + b <= d; ++b)
            for (const auto& f : by_degree[a])
                for (const auto& h : by_degree[b]) {
                    pairs.index({f, h});
                    images.push_back(psi_apply(c, Polynomial::from_monomial(space, f),
                                               Polynomial::from_monomial(space, h)));
                }
    report.source_dimension = pairs.size();

    TensorColumns tc;
    for (const auto& t : images)
        tc.add(t);
    std::vector<std::pair<int, Tensor>> targets;  // (deg m, m (x) h')
    for (int e = 0; e <= d; ++e)
        for (const auto& m : by_degree[e])
            for (const auto& h : gp->full_basis()) {
                auto t = Tensor::pure({Polynomial::from_monomial(space, m), Polynomial::from_monomial(gp, h)});
                tc.keys.index(t.terms().begin()->first);
                targets.emplace_back(e, std::move(t));
            }
    IncrementalSpan image(field, tc.keys.size());
    for (const auto& t : images)
        image.add(tc.vector(t));
    report.image_dimension = image.rank();

    report.surjective = true;
    int first_gap = d + 1;
    for (const auto& [e, t] : targets) {
        if (image.contains(tc.vector(t)))
            continue;
        first_gap = std::min(first_gap, e);
        if (e == 0) {
            report.surjective = false;
            report.unreached.push_back(Polynomial::from_monomial(gp, t.terms().begin()->first[1]));
        }
    }
    report.surjective_through = first_gap - 1;

    // Balancing relations f r (x) h - f (x) r h.
    IncrementalSpan relations(field, pairs.size());
    auto pair_vector = [&](const Polynomial& left, const Polynomial& right, Vector& v, const Scalar& sign) {
        for (const auto& [lm, lc] : left.terms())
            for (const auto& [rm, rc] : right.terms())
                v[*pairs.find({lm, rm})] += sign * lc * rc;
    };
    for (int e = 1; e <= d; ++e)
        for (const auto& r : invariants.slice(e))
            for (int a = 0; a + e <= d; ++a)
                for (int b = 0; a + e + b <= d; ++b)
                    for (const auto& f : by_degree[a])
                        for (const auto& h : by_degree[b]) {
                            auto fp = Polynomial::from_monomial(space, f);
                            auto hp = Polynomial::from_monomial(space, h);
                            Vector v(pairs.size(), Scalar(0));
                            pair_vector(fp * r, hp, v, Scalar(1));
                            pair_vector(fp, r * hp, v, Scalar(-1));
                            for (auto& x : v)
                                x = field.normalize(x);
                            relations.add(v);
                        }
    report.balanced_upper_bound = pairs.size() - relations.rank();
    report.bijective = report.balanced_upper_bound == report.image_dimension;
    return report;
}

FreeBasisReport verify_free_basis(const Coaction& c, const InvariantRing& invariants,
                                  const std::vector<Polynomial>& candidates, int max_degree)
{
    if (invariants.max_degree() < max_degree)
        throw Error("invariants are not computed through the requested degree");
    const auto& space = c.space();
    std::vector<int> degs;
    for (const auto& b : candidates) {
        if (b.is_zero() || b.min_degree() != b.degree() || !b.parity())
            throw Error("basis candidate " + b.to_string() + " is not homogeneous");
        degs.push_back(b.degree());
    }
    FreeBasisReport report;
    for (int e = 0; e <= max_degree; ++e) {
        auto basis = space->monomial_basis(e);
        FreeBasisDegree row;
        row.degree = e;
        row.dimension = basis.size();
        IncrementalSpan span(space->field(), basis.size());
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (degs[i] > e)
                continue;
            const auto& slice = invariants.slice(e - degs[i]);
            row.expected += slice.size();
            for (const auto& r : slice)
                span.add(monomial_coordinates(r * candidates[i], basis));
        }
        row.rank = span.rank();
        report.degrees.push_back(row);
        if (!report.failing_degree && (row.expected != row.dimension || row.rank != row.dimension)) {
            report.failing_degree = e;
            report.reason = row.expected != row.dimension
                                ? "dimension count " + std::to_string(row.expected) + " != "
                                      + std::to_string(row.dimension)
                                : "R-span has rank " + std::to_string(row.rank) + " < "
                                      + std::to_string(row.dimension);
        }
    }
    report.verified = !report.failing_degree;
    return report;
}

}  // namespace superq
