#include "superq/invariants.hpp"

#include <algorithm>
#include <functional>

namespace superq {

Vector monomial_coordinates(const Polynomial& p, const std::vector<Monomial>& basis)
{
    Vector v(basis.size(), Scalar(0));
    for (const auto& [m, c] : p.terms()) {
        auto it = std::lower_bound(basis.begin(), basis.end(), m, std::greater<>());
        if (it == basis.end() || !(*it == m))
            throw Error("monomial " + p.presentation()->format(m) + " outside the coordinate basis");
        v[it - basis.begin()] = c;
    }
    return v;
}

namespace {

Polynomial combine(const PresentationPtr& pres, const std::vector<Monomial>& basis, const Vector& v)
{
    Polynomial p(pres);
    for (std::size_t i = 0; i < basis.size(); ++i)
        if (v[i] != 0)
            p.add_term(basis[i], v[i]);
    return p;
}

// Kernel of the linear map given by column images, written back in `basis`.
template <class Key>
std::vector<Vector> column_kernel(const Field& field, const std::vector<std::map<Key, Scalar>>& columns)
{
    Coordinates<Key> rows;
    for (const auto& col : columns)
        for (const auto& [k, c] : col)
            rows.index(k);
    Matrix m(field, rows.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j)
        for (const auto& [k, c] : columns[j])
            m.at(*rows.find(k), j) = c;
    return kernel(std::move(m));
}

}  // namespace

std::vector<Polynomial> invariant_slice(const Coaction& c, int d)
{
    const auto& space = c.space();
    auto basis = space->monomial_basis(d);
    std::vector<Tensor::Terms> columns;
    for (const auto& m : basis) {
        auto f = Polynomial::from_monomial(space, m);
        columns.push_back((c.coact(m) - c.trivial(f)).terms());
    }
    std::vector<Polynomial> out;
    for (const auto& v : column_kernel(space->field(), columns))
        out.push_back(combine(space, basis, v));
    return out;
}

GeneratorLedger minimal_generators(const std::vector<std::vector<Polynomial>>& slices)
{
    GeneratorLedger ledger;
    for (int e = 1; e < static_cast<int>(slices.size()); ++e) {
        if (slices[e].empty())
            continue;
        const auto& pres = slices[e].front().presentation();
        auto basis = pres->monomial_basis(e);
        IncrementalSpan span(pres->field(), basis.size());
        for (const auto& [a, gens] : ledger)
            for (const auto& g : gens)
                for (const auto& s : slices[e - a])
                    span.add(monomial_coordinates(g * s, basis));
        for (const auto& s : slices[e])
            if (span.add(monomial_coordinates(s, basis)))
                ledger[e].push_back(s);
    }
    return ledger;
}

GeneratorLedger minimal_generators(const Coaction& c, int max_degree)
{
    return InvariantRing(c, max_degree).generator_ledger();
}

InvariantRing::InvariantRing(const Coaction& c, int max_degree) : coaction_(c)
{
    for (int d = 0; d <= max_degree; ++d)
        slices_.push_back(invariant_slice(c, d));
    ledger_ = minimal_generators(slices_);
}

std::vector<std::size_t> InvariantRing::slice_dimensions() const
{
    std::vector<std::size_t> out;
    for (const auto& s : slices_)
        out.push_back(s.size());
    return out;
}

bool InvariantRing::contains(const Polynomial& p) const
{
    if (p.is_zero())
        return true;
    if (p.degree() > max_degree())
        throw Error("polynomial degree exceeds the computed invariant slices");
    const auto& pres = coaction_.space();
    for (int d = p.min_degree(); d <= p.degree(); ++d) {
        auto part = p.homogeneous_component(d);
        if (part.is_zero())
            continue;
        auto basis = pres->monomial_basis(d);
        IncrementalSpan span(pres->field(), basis.size());
        for (const auto& s : slices_[d])
            span.add(monomial_coordinates(s, basis));
        if (!span.contains(monomial_coordinates(part, basis)))
            return false;
    }
    return true;
}

IteratedReport iterated_invariants_check(const Coaction& c, const std::vector<std::size_t>& normal,
                                         int max_degree)
{
    if (c.kind() != ActionKind::GroupAction || !c.group().group())
        throw Error("iterated invariants need a constant group action");
    const auto& gamma = *c.group().group();
    if (!gamma.is_normal_subgroup(normal))
        throw Error("subgroup is not normal");
    auto quot = gamma.quotient(normal);
    const auto& space = c.space();
    const auto& field = space->field();

    IteratedReport report;
    for (int d = 0; d <= max_degree; ++d) {
        auto basis = space->monomial_basis(d);
        IteratedDegree row;
        row.degree = d;

        // K[X]^N_d: common kernel of n - 1 for n in N.
        std::vector<std::map<std::pair<std::size_t, Monomial>, Scalar>> cols;
        for (const auto& m : basis) {
            auto f = Polynomial::from_monomial(space, m);
            std::map<std::pair<std::size_t, Monomial>, Scalar> col;
            for (auto n : normal) {
                auto diff = c.act(n, f) - f;
                for (const auto& [k, v] : diff.terms())
                    col[{n, k}] = v;
            }
            cols.push_back(std::move(col));
        }
        std::vector<Polynomial> inner;
        for (const auto& v : column_kernel(field, cols))
            inner.push_back(combine(space, basis, v));
        row.normal_invariants = inner.size();

        // Gamma/N on K[X]^N_d through coset representatives.
        std::vector<std::map<std::pair<std::size_t, Monomial>, Scalar>> qcols;
        bool well_defined = true;
        for (const auto& b : inner) {
            std::map<std::pair<std::size_t, Monomial>, Scalar> col;
            for (std::size_t q = 0; q < quot.group.size(); ++q) {
                auto rep = quot.representative[q];
                auto moved = c.act(rep, b);
                for (auto n : normal)
                    if (!(c.act(gamma.mul(rep, n), b) == moved))
                        well_defined = false;
                auto diff = moved - b;
                for (const auto& [k, v] : diff.terms())
                    col[{q, k}] = v;
            }
            qcols.push_back(std::move(col));
        }
        std::vector<Polynomial> outer;
        for (const auto& v : column_kernel(field, qcols)) {
            Polynomial p(space);
            for (std::size_t i = 0; i < inner.size(); ++i)
                p += inner[i].scaled(v[i]);
            outer.push_back(p);
        }
        row.iterated_invariants = outer.size();

        auto full = invariant_slice(c, d);
        row.full_invariants = full.size();
        IncrementalSpan span(field, basis.size());
        for (const auto& f : full)
            span.add(monomial_coordinates(f, basis));
        bool same = outer.size() == full.size();
        for (const auto& o : outer)
            same = same && span.contains(monomial_coordinates(o, basis));
        row.equal = same && well_defined;
        if (!row.equal && !report.witness_degree)
            report.witness_degree = d;
        report.degrees.push_back(row);
    }
    return report;
}

}  // namespace superq
