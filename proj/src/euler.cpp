#include "ciq/euler.hpp"

#include "ciq/errors.hpp"

namespace ciq {

namespace {

// Truncated product of series, degree <= trunc.
std::vector<Rational> series_mul(const std::vector<Rational>& a,
                                 const std::vector<Rational>& b, int trunc)
{
    std::vector<Rational> out(trunc + 1);
    for (int i = 0; i <= trunc && i < (int)a.size(); ++i) {
        if (a[i] == 0)
            continue;
        for (int j = 0; j + i <= trunc && j < (int)b.size(); ++j)
            out[i + j] += a[i] * b[j];
    }
    return out;
}

}  // namespace

Int euler_char_ci(int n, const std::vector<int>& degrees)
{
    int r = (int)degrees.size();
    if (n < 1 || r == 0 || r > n)
        throw BadRange("euler_char_ci: need 1 <= #degrees <= n");
    for (int d : degrees)
        if (d < 1)
            throw BadRange("euler_char_ci: degrees must be >= 1");

    const int trunc = n - r;
    // (1+t)^{n+1}
    std::vector<Rational> s(trunc + 1);
    s[0] = 1;
    std::vector<Rational> lin = {1, 1};
    for (int k = 0; k < n + 1; ++k)
        s = series_mul(s, lin, trunc);
    // 1/(1+d t) = sum (-d)^k t^k
    for (int d : degrees) {
        std::vector<Rational> inv(trunc + 1);
        Rational c = 1;
        for (int k = 0; k <= trunc; ++k) {
            inv[k] = c;
            c *= -d;
        }
        s = series_mul(s, inv, trunc);
    }
    Rational chi = s[trunc];
    for (int d : degrees)
        chi *= d;
    if (denominator(chi) != 1)
        throw BadRange("euler_char_ci: non-integral result");
    return numerator(chi);
}

Int middle_betti(int n)
{
    if (n % 2 != 0)
        throw OddDimension("middle_betti: n must be even");
    if (n < 4)
        throw BadRange("middle_betti: n must be >= 4");
    return euler_char_ci(n, {2, 3}) - (n - 2);
}

}  // namespace ciq
