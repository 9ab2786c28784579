#include "ciq/model.hpp"

#include "ciq/errors.hpp"

#include <algorithm>
#include <cassert>

namespace ciq {

CohomologyModel::CohomologyModel(ModelParams params) : params_(std::move(params))
{
    if (params_.n % 2 != 0)
        throw OddDimension("model requires even n");
    if (params_.n < 4 || params_.p < 1)
        throw BadRange("model requires n >= 4 and p >= 1");
    if (params_.gram.rows() != (std::size_t)params_.p ||
        params_.gram.cols() != (std::size_t)params_.p)
        throw BadRange("gram matrix must be p x p");
    if (!params_.gram.is_symmetric())
        throw DegenerateForm("gram matrix must be symmetric");
    if (params_.gram.det() == 0)
        throw DegenerateForm("gram matrix is degenerate");
    gram_inv_ = params_.gram.inverse();
}

int CohomologyModel::degree(int x) const
{
    assert(x >= 0 && x < num_labels());
    return is_lefschetz(x) ? 2 * x : params_.n - 2;
}

std::optional<std::pair<int, Rational>> CohomologyModel::cup_basis(int x, int y) const
{
    const int top = params_.n - 2;
    if (is_lefschetz(x) && is_lefschetz(y)) {
        if (x + y > top)
            return std::nullopt;
        return std::pair{x + y, Rational(1)};
    }
    if (is_lefschetz(x) || is_lefschetz(y)) {
        int a = is_lefschetz(x) ? x : y;
        int e = is_lefschetz(x) ? y : x;
        if (a == 0)
            return std::pair{e, Rational(1)};
        return std::nullopt;  // primitive classes are killed by h
    }
    Rational g = params_.gram.at(prim_index(x), prim_index(y));
    if (g == 0)
        return std::nullopt;
    return std::pair{top, g / 6};
}

Rational CohomologyModel::integrate_basis(int x) const
{
    return x == top_label() ? Rational(6) : Rational(0);
}

int CohomologyModel::graded_dim(int deg) const
{
    if (deg < 0 || deg > top_degree() || deg % 2 != 0)
        return 0;
    return deg == params_.n - 2 ? params_.p + 1 : 1;
}

Element Element::unit(int arity)
{
    return monomial(std::vector<int>(arity, 0));
}

Element Element::monomial(std::vector<int> labels, Rational coeff)
{
    Element e((int)labels.size());
    e.add_term(labels, coeff);
    return e;
}

void Element::add_term(const std::vector<int>& labels, const Rational& c)
{
    assert((int)labels.size() == arity_);
    if (c == 0)
        return;
    auto it = terms_.find(labels);
    if (it == terms_.end()) {
        terms_.emplace(labels, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

Element& Element::operator+=(const Element& rhs)
{
    if (rhs.arity_ != arity_)
        throw ArityMismatch("element addition across arities");
    for (const auto& [labels, c] : rhs.terms_)
        add_term(labels, c);
    return *this;
}

Element& Element::operator-=(const Element& rhs)
{
    if (rhs.arity_ != arity_)
        throw ArityMismatch("element subtraction across arities");
    for (const auto& [labels, c] : rhs.terms_)
        add_term(labels, -c);
    return *this;
}

Element& Element::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [labels, coeff] : terms_)
        coeff *= c;
    return *this;
}

int grade(const CohomologyModel& model, const Element& x)
{
    int g = -1;
    for (const auto& [labels, c] : x.terms()) {
        int d = 0;
        for (int l : labels)
            d += model.degree(l);
        if (g == -1)
            g = d;
        else if (g != d)
            throw BadRange("inhomogeneous element");
    }
    return g;
}

Element cup(const CohomologyModel& model, const Element& x, const Element& y)
{
    if (x.arity() != y.arity())
        throw ArityMismatch("cup across arities");
    const int m = x.arity();
    Element out(m);
    std::vector<int> labels(m);
    for (const auto& [lx, cx] : x.terms()) {
        for (const auto& [ly, cy] : y.terms()) {
            Rational coeff = cx * cy;
            bool dead = false;
            for (int s = 0; s < m; ++s) {
                auto prod = model.cup_basis(lx[s], ly[s]);
                if (!prod) {
                    dead = true;
                    break;
                }
                labels[s] = prod->first;
                coeff *= prod->second;
            }
            if (!dead)
                out.add_term(labels, coeff);
        }
    }
    return out;
}

Rational integrate(const CohomologyModel& model, const Element& x)
{
    if (x.is_zero())
        return 0;
    if (grade(model, x) != x.arity() * model.top_degree())
        throw NotTopDegree("integrate requires top-degree element");
    Rational total = 0;
    for (const auto& [labels, c] : x.terms()) {
        Rational f = c;
        for (int l : labels)
            f *= model.integrate_basis(l);
        total += f;
    }
    return total;
}

Element tensor(const Element& x, const Element& y)
{
    Element out(x.arity() + y.arity());
    for (const auto& [lx, cx] : x.terms()) {
        for (const auto& [ly, cy] : y.terms()) {
            std::vector<int> labels = lx;
            labels.insert(labels.end(), ly.begin(), ly.end());
            out.add_term(labels, cx * cy);
        }
    }
    return out;
}

Element pullback(const Element& x, int m, const std::vector<int>& slots)
{
    if ((int)slots.size() != x.arity())
        throw ArityMismatch("pullback slot count");
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i] < 0 || slots[i] >= m || (i > 0 && slots[i] <= slots[i - 1]))
            throw BadIndex("pullback slots must be strictly increasing in [0,m)");
    Element out(m);
    for (const auto& [lx, c] : x.terms()) {
        std::vector<int> labels(m, 0);
        for (std::size_t i = 0; i < slots.size(); ++i)
            labels[slots[i]] = lx[i];
        out.add_term(labels, c);
    }
    return out;
}

Element pushforward(const CohomologyModel& model, const Element& x,
                    const std::vector<int>& slots)
{
    for (std::size_t i = 0; i < slots.size(); ++i)
        if (slots[i] < 0 || slots[i] >= x.arity() || (i > 0 && slots[i] <= slots[i - 1]))
            throw BadIndex("pushforward slots must be strictly increasing");
    std::vector<bool> keep(x.arity(), false);
    for (int s : slots)
        keep[s] = true;
    Element out((int)slots.size());
    for (const auto& [lx, c] : x.terms()) {
        Rational coeff = c;
        std::vector<int> labels;
        labels.reserve(slots.size());
        for (int s = 0; s < x.arity(); ++s) {
            if (keep[s])
                labels.push_back(lx[s]);
            else
                coeff *= model.integrate_basis(lx[s]);
        }
        out.add_term(labels, coeff);
    }
    return out;
}

Element basis_element(int label)
{
    return Element::monomial({label});
}

Element h_power(const CohomologyModel& model, int k)
{
    if (k < 0 || k > model.n() - 2)
        throw BadIndex("h_power exponent out of range");
    return basis_element(k);
}

Element point_class(const CohomologyModel& model)
{
    return basis_element(model.top_label()) * Rational(1, 6);
}

std::vector<Element> dual_basis(const CohomologyModel& model)
{
    const int nl = model.num_labels();
    Mat pairing(nl, nl);
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nl; ++j) {
            auto prod = model.cup_basis(i, j);
            if (prod)
                pairing.at(i, j) = prod->second * model.integrate_basis(prod->first);
        }
    Mat inv = pairing.inverse();
    std::vector<Element> duals;
    duals.reserve(nl);
    for (int j = 0; j < nl; ++j) {
        Element d(1);
        for (int x = 0; x < nl; ++x)
            d.add_term({x}, inv.at(x, j));
        duals.push_back(std::move(d));
    }
    return duals;
}

}  // namespace ciq
