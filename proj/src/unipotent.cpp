#include "superq/unipotent.hpp"

#include <algorithm>
#include <map>

namespace superq {

ShuffleData ShuffleData::identity(int m, int n)
{
    ShuffleData s{m, n, {}};
    for (int i = 1; i <= m + n; ++i)
        s.sigma.push_back(i);
    return s;
}

void ShuffleData::validate() const
{
    if (m < 0 || n < 0 || m + n < 1)
        throw Error("shuffle sizes must be nonnegative with m + n >= 1");
    if (static_cast<int>(sigma.size()) != m + n)
        throw Error("shuffle needs m + n values");
    auto sorted = sigma;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < m + n; ++i)
        if (sorted[i] != i + 1)
            throw Error("sigma is not a permutation of 1..m+n");
    for (int i = 1; i < m; ++i)
        if (sigma[i - 1] > sigma[i])
            throw Error("sigma must increase on the even positions");
    for (int i = m + 1; i < m + n; ++i)
        if (sigma[i - 1] > sigma[i])
            throw Error("sigma must increase on the odd positions");
}

int USigmaAlgebra::gap(std::size_t var) const
{
    auto [i, j] = entries.at(var);
    return shuffle.sigma[j - 1] - shuffle.sigma[i - 1];
}

namespace {

std::string entry_name(int i, int j, int r)
{
    if (r <= 9)
        return "x" + std::to_string(i) + std::to_string(j);
    return "x" + std::to_string(i) + "_" + std::to_string(j);
}

}  // namespace

USigmaAlgebra build_u_sigma(const ShuffleData& s, Field field)
{
    s.validate();
    const int r = s.size();
    auto sig = [&](int i) { return s.sigma[i - 1]; };
    auto even_side = [&](int i) { return i <= s.m; };

    std::vector<SuperVariable> vars;
    std::map<std::string, std::pair<int, int>> by_name;
    for (int i = 1; i <= r; ++i)
        for (int j = 1; j <= r; ++j)
            if (sig(i) < sig(j)) {
                auto name = entry_name(i, j, r);
                Parity p = even_side(i) == even_side(j) ? Parity::Even : Parity::Odd;
                vars.push_back({name, p, 1, {}, -1});
                by_name[name] = {i, j};
            }
    if (vars.empty())
        throw Error("U_sigma with r = 1 has no coordinates");
    auto pres = Presentation::create(field, vars);

    std::vector<std::pair<int, int>> entries;
    for (const auto& v : pres->variables())
        entries.push_back(by_name.at(v.name));
    auto x = [&](int i, int j) { return Polynomial::variable(pres, entry_name(i, j, r)); };
    auto one = Polynomial::one(pres);

    // Antipode by recursion on the gap: S(x_ij) = -x_ij - sum_k S(x_kj) x_ik.
    std::map<std::pair<int, int>, Polynomial> antipode;
    std::vector<std::pair<int, int>> by_gap = entries;
    std::sort(by_gap.begin(), by_gap.end(), [&](auto a, auto b) {
        return sig(a.second) - sig(a.first) < sig(b.second) - sig(b.first);
    });
    for (auto [i, j] : by_gap) {
        Polynomial sij = -x(i, j);
        for (int k = 1; k <= r; ++k)
            if (sig(i) < sig(k) && sig(k) < sig(j))
                sij -= antipode.at({k, j}) * x(i, k);
        antipode.emplace(std::make_pair(i, j), std::move(sij));
    }

    std::vector<Tensor> comult;
    std::vector<Scalar> counit;
    std::vector<Polynomial> anti;
    for (auto [i, j] : entries) {
        Tensor d = Tensor::pure({x(i, j), one}) + Tensor::pure({one, x(i, j)});
        for (int k = 1; k <= r; ++k)
            if (sig(i) < sig(k) && sig(k) < sig(j))
                d += Tensor::pure({x(k, j), x(i, k)});
        comult.push_back(std::move(d));
        counit.push_back(0);
        anti.push_back(antipode.at({i, j}));
    }
    std::string label = "U_sigma(" + std::to_string(s.m) + "|" + std::to_string(s.n) + ")";
    USigmaAlgebra u{s, HopfSuperAlgebra(label, pres, std::move(comult), std::move(counit), std::move(anti)),
                    std::move(entries)};
    auto report = check_hopf_axioms(u.hopf, 1);
    if (!report.ok())
        throw Error(label + " fails " + report.failures.front().identity + " on "
                    + report.failures.front().witness);
    return u;
}

int weight(const USigmaAlgebra& u, const Monomial& m)
{
    int w = 0;
    for (std::size_t v = 0; v < u.entries.size(); ++v)
        w += static_cast<int>(m.exponent(v)) * u.gap(v);
    return w;
}

FiltrationReport filtration_check(const USigmaAlgebra& u, int max_degree)
{
    FiltrationReport report;
    report.max_degree = max_degree;
    const auto& pres = u.hopf.presentation();
    for (int k = 1; k <= max_degree; ++k)
        for (const auto& m : pres->monomial_basis(k)) {
            ++report.monomials_checked;
            auto f = Polynomial::from_monomial(pres, m);
            auto rest = u.hopf.comult(f) - Tensor::pure({f, Polynomial::one(pres)});
            int wm = weight(u, m);
            for (const auto& [key, c] : rest.terms()) {
                const auto& left = key[0];
                if (left.degree() < k || (left.degree() == k && weight(u, left) < wm))
                    continue;
                report.failures.push_back({pres->format(m), pres->format(left)});
            }
        }
    return report;
}

bool in_bk(const USigmaAlgebra& u, int k, const Polynomial& p)
{
    for (const auto& [m, c] : p.terms())
        for (std::size_t v = 0; v < u.entries.size(); ++v)
            if (m.exponent(v) > 0 && u.gap(v) > k)
                return false;
    return true;
}

SubbialgebraReport bk_subbialgebra_check(const USigmaAlgebra& u, int k)
{
    if (k < 1)
        throw Error("B_k needs k >= 1");
    SubbialgebraReport report;
    report.level = k;
    const auto& pres = u.hopf.presentation();
    auto inside = [&](const Monomial& m) {
        for (std::size_t v = 0; v < u.entries.size(); ++v)
            if (m.exponent(v) > 0 && u.gap(v) > k)
                return false;
        return true;
    };
    for (std::size_t v = 0; v < u.entries.size(); ++v) {
        if (u.gap(v) > k)
            continue;
        const auto& name = pres->variable(v).name;
        report.generators.push_back(name);
        auto x = Polynomial::from_monomial(pres, pres->generator(v));
        auto dx = u.hopf.comult(x);
        for (const auto& [key, c] : dx.terms())
            if (!inside(key[0]) || !inside(key[1])) {
                report.failures.push_back("Delta(" + name + ") leaves B_k (x) B_k");
                break;
            }
        if (!in_bk(u, k, u.hopf.antipode(x)))
            report.failures.push_back("S(" + name + ") leaves B_k");
    }
    return report;
}

std::optional<std::string> structure_mismatch(const HopfSuperAlgebra& a, const HopfSuperAlgebra& b)
{
    const auto& pa = a.presentation();
    const auto& pb = b.presentation();
    if (pa->size() != pb->size())
        return "different numbers of generators";
    std::vector<Polynomial> images;
    for (std::size_t i = 0; i < pa->size(); ++i) {
        if (pa->variable(i).parity != pb->variable(i).parity)
            return "parity of " + pa->variable(i).name + " differs";
        images.push_back(Polynomial::from_monomial(pb, pb->generator(i)));
    }
    auto rename = polynomial_morphism(pa, pb, images);
    for (std::size_t i = 0; i < pa->size(); ++i) {
        auto x = Polynomial::from_monomial(pa, pa->generator(i));
        auto renamed = apply_on_leg(apply_on_leg(a.comult(x), 0, rename), 1, rename);
        if (!(renamed == b.comult(images[i])))
            return "comultiplication differs on " + pa->variable(i).name;
        if (a.counit(x) != b.counit(images[i]))
            return "counit differs on " + pa->variable(i).name;
        if (!(rename.apply(a.antipode(x)).to_polynomial() == b.antipode(images[i])))
            return "antipode differs on " + pa->variable(i).name;
    }
    return std::nullopt;
}

}  // namespace superq
