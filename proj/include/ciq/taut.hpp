#pragma once

#include "ciq/model.hpp"

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace ciq {

// Monomial in the formal generators o_i, h_i, tau_ij on Y^m (indices are
// 0-based internally, 1-based in the text syntax). tau_ji is normalized
// to tau_ij at construction; tau_ii is rejected.
struct TautMonomial {
    int arity = 1;
    std::vector<int> o_exp;  // size arity
    std::vector<int> h_exp;  // size arity
    std::map<std::pair<int, int>, int> tau;  // (i < j) -> multiplicity

    explicit TautMonomial(int m)
        : arity(m), o_exp(m, 0), h_exp(m, 0) {}
    TautMonomial() = default;

    static TautMonomial one(int m) { return TautMonomial(m); }
    static TautMonomial o(int m, int i);
    static TautMonomial h(int m, int i, int power = 1);
    static TautMonomial t(int m, int i, int j);

    int codim(int n) const;
    int tau_count() const;
    int h_total() const;

    TautMonomial operator*(const TautMonomial& rhs) const;

    bool operator==(const TautMonomial& rhs) const
    {
        return std::tie(arity, o_exp, h_exp, tau) ==
               std::tie(rhs.arity, rhs.o_exp, rhs.h_exp, rhs.tau);
    }
    bool operator<(const TautMonomial& rhs) const
    {
        return std::tie(arity, o_exp, h_exp, tau) <
               std::tie(rhs.arity, rhs.o_exp, rhs.h_exp, rhs.tau);
    }

    std::string str() const;  // e.g. "o1*h2^3*t12"
};

class TautElement {
public:
    explicit TautElement(int arity) : arity_(arity) {}

    static TautElement monomial(TautMonomial m, Rational coeff = 1);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<TautMonomial, Rational>& terms() const { return terms_; }

    void add_term(const TautMonomial& m, const Rational& c);

    TautElement& operator+=(const TautElement& rhs);
    TautElement& operator-=(const TautElement& rhs);
    TautElement& operator*=(const Rational& c);
    TautElement operator*(const TautElement& rhs) const;  // ring product
    friend TautElement operator+(TautElement a, const TautElement& b) { return a += b; }
    friend TautElement operator-(TautElement a, const TautElement& b) { return a -= b; }

    bool operator==(const TautElement&) const = default;

private:
    int arity_;
    std::map<TautMonomial, Rational> terms_;
};

// "t12*t13*h3^2" with 1-based single-digit indices; an optional leading
// rational coefficient ("3/2*o1") is accepted.
std::pair<TautMonomial, Rational> parse_taut_monomial(const std::string& text, int arity);

// Presentation parameters: the rewrite rules depend on n and b only.
struct TautRing {
    int n;  // h_i^{n-2} = 6 o_i
    int b;  // tau_ij^2 = (b-1) o_i o_j

    enum class Strategy { First, Last };

    // Exhaustive left-to-right application of the seven monomial rules;
    // the result is strategy-independent (tested, not assumed).
    TautElement normal_form(const TautElement& x,
                            Strategy strategy = Strategy::First) const;

    // Single rewrite step on a monomial: nullopt when already normal.
    // Used by normal_form and by the termination-measure tests.
    std::optional<std::pair<TautMonomial, Rational>>
    reduce_once(const TautMonomial& m, Strategy strategy) const;

    bool is_normal(const TautMonomial& m) const;
};

// Termination measure (#tau factors, total h degree); every rule either
// strictly decreases it lexicographically or kills the monomial.
std::pair<int, int> rewrite_measure(const TautMonomial& m);

// Ring homomorphism into the cohomological model: o_i -> o, h_i -> h,
// tau_ij -> sum (G^{-1})_{ab} e_a x e_b. Throws ParamMismatch when the
// ring parameters disagree with the model.
Element evaluate(const TautRing& ring, const CohomologyModel& model,
                 const TautElement& x);

// All normal-form monomials of the given arity and codimension.
std::vector<TautMonomial> enumerate_normal_monomials(int m, int codim, int n);

// All monomials (no rewriting) of the given arity and codimension; throws
// Overflow past max_count.
std::vector<TautMonomial> enumerate_raw_monomials(int m, int codim, int n,
                                                  std::size_t max_count);

struct GradedRankResult {
    std::size_t count = 0;  // normal-form monomials
    std::size_t rank = 0;   // rank of their evaluation matrix
    bool injective() const { return count == rank; }
};

GradedRankResult graded_rank(int m, int codim, const CohomologyModel& model,
                             std::size_t max_monomials = 20000);

struct KernelCheckResult {
    std::size_t raw_count = 0;
    std::size_t kernel_dim = 0;
    std::size_t relation_rank = 0;
    bool contained() const { return kernel_dim == relation_rank; }
};

// Certifies that the kernel of the evaluation on raw monomials is spanned
// by multiples of the presentation relations (S_b antisymmetrizers
// included only when with_x4). Throws KernelEscape with a witness monomial
// combination when a cohomological relation escapes the presentation.
KernelCheckResult kernel_check(int m, int codim, const CohomologyModel& model,
                               bool with_x4, std::size_t max_monomials = 20000);

// The alternating S_b sum of tau_{i, b+sigma(i)} on Y^{2b} evaluates to
// exactly zero (the primitive space has dimension b-1).
bool kimura_check(const CohomologyModel& model);

// S_b antisymmetrizer relation instances of the given arity (m >= 2b).
std::vector<TautElement> x4_relations(int m, int b);

}  // namespace ciq
