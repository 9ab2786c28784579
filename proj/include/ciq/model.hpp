#pragma once

#include "ciq/matrix.hpp"
#include "ciq/rational.hpp"

#include <map>
#include <optional>
#include <utility>
#include <vector>

namespace ciq {

struct ModelParams {
    int n = 4;   // ambient projective dimension, even >= 4
    int p = 1;   // dim of primitive middle cohomology (= b - 1)
    Mat gram;    // p x p symmetric nondegenerate intersection form
};

// Explicit graded-ring model of H*(Y,Q) for Y a smooth (2,3) complete
// intersection in P^n. Basis labels are ints:
//   0 .. n-2      : A_j  (the class h^j, degree 2j)
//   n-1 .. n-2+p  : E_a  (primitive middle classes, degree n-2)
// Cup structure: A_i A_j = A_{i+j} (0 above top), E_a A_j = 0 for j >= 1,
// E_a E_b = (G_ab / 6) A_{n-2}, normalized so that the integral of
// h^{n-2} is 6 (the degree of Y) and the E-pairing is G.
class CohomologyModel {
public:
    explicit CohomologyModel(ModelParams params);

    int n() const { return params_.n; }
    int p() const { return params_.p; }
    int num_labels() const { return params_.n - 1 + params_.p; }
    int top_label() const { return params_.n - 2; }
    int top_degree() const { return 2 * (params_.n - 2); }  // per factor

    bool is_lefschetz(int x) const { return x <= params_.n - 2; }
    bool is_primitive(int x) const { return x > params_.n - 2; }
    int prim_index(int x) const { return x - (params_.n - 1); }
    int degree(int x) const;

    // Cup product of two basis classes: at most one basis term.
    std::optional<std::pair<int, Rational>> cup_basis(int x, int y) const;

    // Integral over Y of a single basis class: 6 for A_{n-2}, else 0.
    Rational integrate_basis(int x) const;

    const Mat& gram() const { return params_.gram; }
    const Mat& gram_inv() const { return gram_inv_; }
    const ModelParams& params() const { return params_; }

    // dim H^deg: 1 in even degrees 2j != n-2, p+1 in the middle, else 0.
    int graded_dim(int deg) const;

private:
    ModelParams params_;
    Mat gram_inv_;
};

// Finitely supported rational combination of m-fold tensor monomials of
// basis labels; canonical sparse form (no zero coefficients).
class Element {
public:
    explicit Element(int arity) : arity_(arity) {}

    static Element unit(int arity);
    static Element monomial(std::vector<int> labels, Rational coeff = 1);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    void add_term(const std::vector<int>& labels, const Rational& c);

    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    Element& operator+=(const Element& rhs);
    Element& operator-=(const Element& rhs);
    Element& operator*=(const Rational& c);
    friend Element operator+(Element a, const Element& b) { return a += b; }
    friend Element operator-(Element a, const Element& b) { return a -= b; }
    friend Element operator*(Element a, const Rational& c) { return a *= c; }

    bool operator==(const Element&) const = default;

private:
    int arity_;
    std::map<std::vector<int>, Rational> terms_;
};

// Total degree of x (all monomials must agree); -1 for the zero element.
int grade(const CohomologyModel& model, const Element& x);

// Factorwise cup product; throws ArityMismatch.
Element cup(const CohomologyModel& model, const Element& x, const Element& y);

// Integral over Y^m; requires x homogeneous of top degree m(2n-4).
Rational integrate(const CohomologyModel& model, const Element& x);

Element tensor(const Element& x, const Element& y);

// Pullback along the projection Y^m -> Y^k selecting `slots` (0-based,
// strictly increasing): places x's factors into those slots, 1 elsewhere.
Element pullback(const Element& x, int m, const std::vector<int>& slots);

// Pushforward along the projection keeping `slots`: integrates out the
// other factors.
Element pushforward(const CohomologyModel& model, const Element& x,
                    const std::vector<int>& slots);

// Single-factor basis elements and convenience classes on Y.
Element basis_element(int label);
Element h_power(const CohomologyModel& model, int k);  // h^k, 0 <= k <= n-2
Element point_class(const CohomologyModel& model);     // o = (1/6) h^{n-2}

// {b_i^dual} with integral(b_i cup b_j^dual) = delta_ij, in basis order.
std::vector<Element> dual_basis(const CohomologyModel& model);

}  // namespace ciq
