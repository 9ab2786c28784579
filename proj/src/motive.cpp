#include "ciq/motive.hpp"

#include "ciq/errors.hpp"
#include "ciq/euler.hpp"

#include <algorithm>
#include <sstream>

namespace ciq {

PoincarePoly PoincarePoly::monomial(int degree, Int coeff)
{
    std::vector<Int> c(degree + 1);
    c[degree] = std::move(coeff);
    return PoincarePoly(std::move(c));
}

Int PoincarePoly::eval_at_one() const
{
    Int s = 0;
    for (const Int& c : coeffs_)
        s += c;
    return s;
}

bool PoincarePoly::palindromic() const
{
    for (int d = 0; d <= degree(); ++d)
        if (coeff(d) != coeff(degree() - d))
            return false;
    return true;
}

PoincarePoly& PoincarePoly::operator+=(const PoincarePoly& rhs)
{
    if (coeffs_.size() < rhs.coeffs_.size())
        coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t d = 0; d < rhs.coeffs_.size(); ++d)
        coeffs_[d] += rhs.coeffs_[d];
    trim();
    return *this;
}

PoincarePoly PoincarePoly::shifted(int degree_shift) const
{
    std::vector<Int> c(coeffs_.size() + degree_shift);
    for (std::size_t d = 0; d < coeffs_.size(); ++d)
        c[d + degree_shift] = coeffs_[d];
    return PoincarePoly(std::move(c));
}

std::string PoincarePoly::str() const
{
    std::ostringstream os;
    bool first = true;
    for (int d = 0; d <= degree(); ++d) {
        if (coeff(d) == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << coeff(d);
        if (d > 0)
            os << "*t^" << d;
    }
    return first ? "0" : os.str();
}

void PoincarePoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

void MotiveExpr::add(MotiveSummand s)
{
    summands_.insert(std::upper_bound(summands_.begin(), summands_.end(), s), s);
}

PoincarePoly MotiveExpr::poincare(int n, const Int& b) const
{
    PoincarePoly p;
    for (const auto& s : summands_) {
        int base_deg = s.is_unit ? 0 : s.j;
        Int dim = (!s.is_unit && s.j == n - 2) ? b : Int(1);
        p += PoincarePoly::monomial(base_deg + 2 * s.twist, dim);
    }
    return p;
}

MotiveExpr motive_of_Y(int n, const Int& b)
{
    if (n % 2 != 0)
        throw OddDimension("motive_of_Y: n must be even");
    if (n < 4 || b < 1)
        throw BadRange("motive_of_Y: n >= 4 and b >= 1 required");
    MotiveExpr m;
    for (int j = 0; j <= n - 2; ++j) {
        if (2 * j == n - 2)
            continue;
        m.add({true, 0, j});  // h^{2j}(Y) = 1(-j)
    }
    m.add({false, n - 2, 0});
    return m;
}

MotiveExpr blowup_motive_Z(int n, const Int& b)
{
    MotiveExpr m;
    MotiveExpr y = motive_of_Y(n, b);
    for (const auto& s : y.summands())
        m.add({s.is_unit, s.j, s.twist + 1});
    for (int k = 0; k <= n; ++k)
        m.add({true, 0, k});
    return m;
}

ConsistencyReport consistency_check(int n)
{
    if (n % 2 != 0)
        throw OddDimension("consistency_check: n must be even");
    if (n < 4)
        throw BadRange("consistency_check: n >= 4 required");

    ConsistencyReport rep;
    rep.n = n;
    rep.chi_y = euler_char_ci(n, {2, 3});

    // (a) Z as the blow-up of P^n along the codimension-2 center Y
    rep.chi_blowup_route = Int(n + 1) + rep.chi_y;

    // (b) Z as the blow-up of the nodal cubic at its node: the smooth-cubic
    // Euler number corrected by the ordinary double point (mu = 1), minus
    // the node, plus the exceptional quadric Q^{n-1}
    Int chi_smooth_cubic = euler_char_ci(n + 1, {3});
    Int chi_nodal = chi_smooth_cubic + ((n + 1) % 2 == 0 ? 1 : -1);
    Int chi_quadric = euler_char_ci(n, {2});
    rep.chi_node_route = chi_nodal - 1 + chi_quadric;

    rep.chi_agree = rep.chi_blowup_route == rep.chi_node_route;
    if (!rep.chi_agree)
        throw InconsistentGeometry(
            "chi(Z) routes disagree: " + rep.chi_blowup_route.str() + " vs " +
            rep.chi_node_route.str());

    Int b = middle_betti(n);
    PoincarePoly pz = blowup_motive_Z(n, b).poincare(n, b);
    PoincarePoly pn;  // P(P^n) = sum t^{2k}
    for (int k = 0; k <= n; ++k)
        pn += PoincarePoly::monomial(2 * k);
    PoincarePoly py = motive_of_Y(n, b).poincare(n, b);
    rep.poincare_identity = (pz == pn + py.shifted(2));
    rep.palindromic = pz.palindromic() && pz.degree() == 2 * n;
    return rep;
}

}  // namespace ciq
