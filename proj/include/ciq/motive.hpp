#pragma once

#include "ciq/rational.hpp"

#include <compare>
#include <string>
#include <vector>

namespace ciq {

// Integer-coefficient polynomial in t recording Betti numbers.
class PoincarePoly {
public:
    PoincarePoly() = default;
    explicit PoincarePoly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static PoincarePoly monomial(int degree, Int coeff = 1);

    int degree() const { return (int)coeffs_.size() - 1; }
    Int coeff(int d) const { return d >= 0 && d < (int)coeffs_.size() ? coeffs_[d] : 0; }
    Int eval_at_one() const;
    bool palindromic() const;

    PoincarePoly& operator+=(const PoincarePoly& rhs);
    friend PoincarePoly operator+(PoincarePoly a, const PoincarePoly& b) { return a += b; }
    PoincarePoly shifted(int degree_shift) const;  // multiply by t^shift

    bool operator==(const PoincarePoly&) const = default;

    std::string str() const;

private:
    void trim();
    std::vector<Int> coeffs_;
};

// Grothendieck-group shadow: a formal direct sum of h^j(Y)(-k) and 1(-k).
struct MotiveSummand {
    bool is_unit;  // 1(-k) vs h^j(Y)(-k)
    int j;         // cohomological degree (ignored for units)
    int twist;     // k >= 0

    auto operator<=>(const MotiveSummand&) const = default;
};

class MotiveExpr {
public:
    void add(MotiveSummand s);
    const std::vector<MotiveSummand>& summands() const { return summands_; }

    // Realization; h^{n-2}(Y) contributes b in degree n-2, twists shift by 2.
    PoincarePoly poincare(int n, const Int& b) const;

    bool operator==(const MotiveExpr&) const = default;

private:
    std::vector<MotiveSummand> summands_;  // kept sorted
};

// 1(-j) for j != (n-2)/2 plus the middle symbol h^{n-2}(Y).
MotiveExpr motive_of_Y(int n, const Int& b);

// h(Y)(-1) + sum_{k=0}^n 1(-k): the resolved nodal cubic n-fold.
MotiveExpr blowup_motive_Z(int n, const Int& b);

struct ConsistencyReport {
    int n;
    Int chi_y;
    Int chi_blowup_route;  // chi(P^n) + chi(Y) = (n+1) + chi(Y)
    Int chi_node_route;    // via the nodal cubic and its exceptional quadric
    bool chi_agree;
    bool poincare_identity;  // P_Z == P(P^n) + t^2 P_Y
    bool palindromic;
    bool ok() const { return chi_agree && poincare_identity && palindromic; }
};

// chi(Z) computed two ways plus the polynomial identities; throws
// InconsistentGeometry when the two Euler routes disagree.
ConsistencyReport consistency_check(int n);

}  // namespace ciq
