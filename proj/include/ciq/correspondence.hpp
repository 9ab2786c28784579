#pragma once

#include "ciq/model.hpp"

#include <array>
#include <map>
#include <vector>

namespace ciq {

// A class on Y^{src+tgt} regarded as a morphism Y^src -> Y^tgt.
struct Correspondence {
    int src = 1, tgt = 1;
    Element body{2};

    bool operator==(const Correspondence&) const = default;
};

// Class of the diagonal Delta_{ij} in Y^m (i, j are 1-based, i < j).
Element diagonal(const CohomologyModel& model, int m, int i, int j);

// Small diagonal {(x,x,x)} in Y^3, expanded through structure constants.
Element small_diagonal(const CohomologyModel& model);

Correspondence transpose(const Correspondence& f);

// (f x g): Y^{a+c} -> Y^{b+d}.
Correspondence product(const Correspondence& f, const Correspondence& g);

// g after f: pull both bodies to Y^{a+b+c}, cup, integrate out the middle.
Correspondence compose(const CohomologyModel& model, const Correspondence& f,
                       const Correspondence& g);

// Pushforward action f_*(x) for x on Y^src.
Element act(const CohomologyModel& model, const Correspondence& f, const Element& x);

// Matrix of f_* on H*(Y) for f : Y -> Y; column x = image of basis x.
Mat action_matrix(const CohomologyModel& model, const Correspondence& f);

// Applies one linear map per tensor slot. Together with action_matrix
// this gives the fast route for composites of the form
// g o Gamma o (f1 x f2): transform Gamma's body slotwise by the transpose
// actions of the f's and the action of g. The equivalence with the
// generic compose() is covered by tests.
Element transform_slots(const CohomologyModel& model, const Element& x,
                        const std::vector<const Mat*>& maps);

// pi^0, ..., pi^{2(n-2)} as correspondences Y -> Y; odd entries are zero.
struct ProjectorSet {
    std::vector<Correspondence> pi;

    const Correspondence& operator[](int k) const { return pi[k]; }
    int count() const { return (int)pi.size(); }
};

// Builds the explicit Chow--Kuenneth projectors and eagerly verifies
// idempotence, orthogonality, completeness and the graded action; throws
// VerificationFailed on the first broken axiom.
ProjectorSet ck_projectors(const CohomologyModel& model);

// As above without verification (for fault-injection tests).
ProjectorSet ck_projectors_unverified(const CohomologyModel& model);

void verify_projectors(const CohomologyModel& model, const ProjectorSet& ps);

struct MckTriple {
    int i, j, k;
    bool zero;  // composite vanished (only asserted when i + j != k)
};

struct MckReport {
    bool all_zero = true;          // every i+j != k composite is 0
    bool factorization_ok = true;  // pi^{i+j} o T == T for every (i,j)
    std::vector<MckTriple> triples;
};

// Scans pi^k o Delta^sm o (pi^i x pi^j) over all even triples, computing
// each composite slotwise (see transform_slots).
MckReport check_mck(const CohomologyModel& model, const ProjectorSet& ps);

// The same composite through the generic compose(); the reference the
// slotwise route is equivalence-tested against.
Correspondence mck_composite_reference(const CohomologyModel& model,
                                       const ProjectorSet& ps, int i, int j, int k);

// Delta_Y . (p_1)^*(h) == sum_k (coeff) h^k x h^{n-1-k}; the identity
// holds with coeff = 1/6 (deg Y = 6) and must fail for any other value.
bool verify_lemma_ok(const CohomologyModel& model, const Rational& coeff = Rational(1, 6));

struct Gamma3Solution {
    // a_{ijk} on sorted triples i <= j <= k, i+j+k = 2n-4, 0 <= i,j,k <= n-2.
    std::map<std::array<int, 3>, Rational> a;
    int kernel_dim = 0;
};

// Modified small diagonal: finds a_{ijk} with
//   Delta^sm - (1/6) sum_{pairs} Delta_{ij} h_k^{n-2}
//            + sum a_{ijk} h^i x h^j x h^k  =  0,
// exactly; throws NoSolution if the system is inconsistent.
Gamma3Solution solve_gamma3(const CohomologyModel& model);

// The correspondence whose action realizes cup products once Gamma_3 = 0:
// (1/6) sum Delta_{ij} h_k^{n-2}  -  sum a_{ijk} h^i x h^j x h^k, as Y^2 -> Y.
Correspondence gamma3_multiplier(const CohomologyModel& model, const Gamma3Solution& sol);

// For every basis pair of codimensions (i, j), checks that the multiplier
// reproduces the cup product and that the image lies in Q . h^{i+j}.
bool product_image_check(const CohomologyModel& model, const Gamma3Solution& sol,
                         int i, int j);

}  // namespace ciq
