#include "ciq/errors.hpp"
#include "ciq/taut.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <algorithm>
#include <random>

using namespace ciq;
using ciq::testing::make_model;

namespace {

TautElement mono(const std::string& text, int arity)
{
    auto [m, c] = parse_taut_monomial(text, arity);
    return TautElement::monomial(m, c);
}

TautRing ring_for(const CohomologyModel& m) { return TautRing{m.n(), m.p() + 1}; }

}  // namespace

TEST_CASE("monomial constructors and printing")
{
    TautMonomial m = TautMonomial::o(3, 0) * TautMonomial::h(3, 1, 3) *
                     TautMonomial::t(3, 0, 1);
    CHECK(m.str() == "o1*h2^3*t12");
    CHECK(m.codim(6) == 1 * 4 + 3 + 4);  // o has codim n-2, tau has codim n-2
    CHECK(m.tau_count() == 1);
    CHECK(m.h_total() == 3);

    CHECK(TautMonomial::t(3, 2, 1) == TautMonomial::t(3, 1, 2));
    CHECK_THROWS_AS(TautMonomial::t(3, 1, 1), BadIndex);
    CHECK(TautMonomial::one(2).str() == "1");
}

TEST_CASE("parser round trips and rejects garbage")
{
    for (const char* text : {"o1", "h2^3", "t12", "o1*h2^3*t12", "t13*t12"}) {
        auto [m, c] = parse_taut_monomial(text, 3);
        CHECK(c == 1);
        auto [m2, c2] = parse_taut_monomial(m.str(), 3);
        CHECK(m2 == m);
    }

    auto [m, c] = parse_taut_monomial("3/2*o1", 2);
    CHECK(c == Rational(3, 2));
    CHECK(m == TautMonomial::o(2, 0));

    CHECK_THROWS_AS(parse_taut_monomial("o5", 3), ParseError);  // index > arity
    CHECK_THROWS_AS(parse_taut_monomial("t11", 3), BadIndex);
    CHECK_THROWS_AS(parse_taut_monomial("x1", 3), ParseError);
    CHECK_THROWS_AS(parse_taut_monomial("o1**o2", 3), ParseError);
    CHECK_THROWS_AS(parse_taut_monomial("o", 3), ParseError);
    CHECK(parse_taut_monomial("1", 2).first == TautMonomial::one(2));
}

TEST_CASE("normal form: the seven rules on concrete monomials")
{
    TautRing ring{6, 3};  // n = 6, b = 3

    // o_i^2 = 0, h_i o_i = 0, tau o_i = 0, tau h_i = 0 on a shared index.
    CHECK(ring.normal_form(mono("o1*o1", 2)).is_zero());
    CHECK(ring.normal_form(mono("o1*h1", 2)).is_zero());
    CHECK(ring.normal_form(mono("t12*o1", 2)).is_zero());
    CHECK(ring.normal_form(mono("t12*h1", 2)).is_zero());

    // h_i^{n-2} = 6 o_i.
    CHECK(ring.normal_form(mono("h1^4", 1)) == mono("6*o1", 1));
    CHECK(ring.normal_form(mono("h1^5", 1)).is_zero());  // 6 o1 h1 = 0

    // tau_ij^2 = (b-1) o_i o_j.
    CHECK(ring.normal_form(mono("t12*t12", 2)) ==
          mono("2*o1*o2", 2));

    // tau_ij tau_ik = tau_jk o_i.
    CHECK(ring.normal_form(mono("t12*t13", 3)) == mono("t23*o1", 3));

    // Chains resolve: tau_12 tau_13 tau_23 -> (b-1) o1 o2 o3.
    CHECK(ring.normal_form(mono("t12*t13*t23", 3)) ==
          mono("2*o1*o2*o3", 3));

    // Untouched monomials stay put.
    TautElement stable = mono("t12*h3^2", 3);
    CHECK(ring.normal_form(stable) == stable);
    CHECK(ring.is_normal(stable.terms().begin()->first));
}

TEST_CASE("rewrite health: measure decrease, strategy agreement, soundness")
{
    CohomologyModel model = make_model(6, 2, /*seed=*/83);
    TautRing ring = ring_for(model);
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> idx(0, 3);
    std::uniform_int_distribution<int> pw(0, 3);
    std::uniform_int_distribution<int> coin(0, 2);

    int applied = 0;
    for (int trial = 0; trial < 700; ++trial) {
        // Random monomial on Y^4.
        TautMonomial m = TautMonomial::one(4);
        for (int f = 0; f < 4; ++f) {
            int kind = coin(rng);
            int i = idx(rng), j = idx(rng);
            if (kind == 0)
                m = m * TautMonomial::o(4, i);
            else if (kind == 1)
                m = m * TautMonomial::h(4, i, 1 + pw(rng));
            else if (i != j)
                m = m * TautMonomial::t(4, i, j);
        }

        // Every applied rule strictly decreases the lexicographic measure
        // (or kills the monomial outright).
        for (auto strat : {TautRing::Strategy::First, TautRing::Strategy::Last}) {
            TautMonomial cur = m;
            while (auto step = ring.reduce_once(cur, strat)) {
                ++applied;
                if (step->second == 0)
                    break;
                CHECK(rewrite_measure(step->first) < rewrite_measure(cur));
                cur = step->first;
            }
        }

        // Confluence in practice: both strategies, same normal form.
        TautElement e = TautElement::monomial(m);
        TautElement nf_first = ring.normal_form(e, TautRing::Strategy::First);
        TautElement nf_last = ring.normal_form(e, TautRing::Strategy::Last);
        CHECK(nf_first == nf_last);

        // Soundness: evaluation is invariant under rewriting.
        CHECK(evaluate(ring, model, e) == evaluate(ring, model, nf_first));
    }
    CHECK(applied >= 500);
}

TEST_CASE("evaluate is a ring homomorphism")
{
    CohomologyModel model = make_model(4, 3, /*seed=*/89);
    TautRing ring = ring_for(model);
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> pick(0, 4);

    auto rand_elt = [&] {
        TautElement x(2);
        for (int t = 0; t < 2; ++t) {
            TautMonomial m = TautMonomial::one(2);
            if (pick(rng) < 2)
                m = m * TautMonomial::t(2, 0, 1);
            if (pick(rng) < 2)
                m = m * TautMonomial::h(2, pick(rng) % 2, 1);
            if (pick(rng) == 0)
                m = m * TautMonomial::o(2, pick(rng) % 2);
            x.add_term(m, Rational(pick(rng) - 2, 1 + pick(rng)));
        }
        return x;
    };

    for (int trial = 0; trial < 100; ++trial) {
        TautElement a = rand_elt(), b = rand_elt();
        CHECK(evaluate(ring, model, a * b) ==
              cup(model, evaluate(ring, model, a), evaluate(ring, model, b)));
        CHECK(evaluate(ring, model, a + b) ==
              evaluate(ring, model, a) + evaluate(ring, model, b));
    }
}

TEST_CASE("evaluate: generators and parameter guards")
{
    CohomologyModel model = make_model(6, 2, /*seed=*/97);
    TautRing ring = ring_for(model);

    CHECK(evaluate(ring, model, mono("h1", 1)) == h_power(model, 1));
    CHECK(evaluate(ring, model, mono("o1", 1)) == point_class(model));

    // tau evaluates to the primitive Kuenneth block sum G^{-1}_{ab} e_a x e_b.
    Element tau = evaluate(ring, model, mono("t12", 2));
    Element expect(2);
    for (int a = 0; a < model.p(); ++a)
        for (int b = 0; b < model.p(); ++b)
            expect.add_term({model.n() - 1 + a, model.n() - 1 + b},
                            model.gram_inv().at(a, b));
    CHECK(tau == expect);

    TautRing wrong{model.n(), model.p() + 2};
    CHECK_THROWS_AS(evaluate(wrong, model, mono("o1", 1)), ParamMismatch);
}

TEST_CASE("presentation relations all evaluate to zero")
{
    for (int b : {2, 3, 4}) {
        CohomologyModel model = make_model(6, b - 1, /*seed=*/(std::uint64_t)b);
        TautRing ring = ring_for(model);
        int n = model.n();

        std::vector<TautElement> rels = {
            mono("o1*o1", 2),
            mono("o1*h1", 2),
            mono("h1", 1) * mono("h1^" + std::to_string(n - 3), 1) -
                mono("6*o1", 1),
            mono("t12*o1", 2),
            mono("t12*h1", 2),
            mono("t12", 2) * mono("t12", 2) -
                mono(std::to_string(b - 1) + "*o1*o2", 2),
            mono("t12", 3) * mono("t13", 3) - mono("t23*o1", 3),
        };
        for (const auto& r : rels)
            CHECK(evaluate(ring, model, r).is_zero());

        // The S_b antisymmetrizer relations too (b = 4 instances are the
        // expensive Y^8 sums; kimura_check covers that size).
        if (b <= 3)
            for (const auto& r : x4_relations(2 * b, b))
                CHECK(evaluate(ring, model, r).is_zero());
    }
}

TEST_CASE("graded pieces inject below the bound")
{
    // Small instances only; the full m <= min(2b-1, 4) sweep runs in the
    // acceptance suite.
    for (int b : {2, 3, 4}) {
        CohomologyModel model = make_model(6, b - 1, /*seed=*/0);
        int bound = std::min(2 * b - 1, 3);
        for (int m = 1; m <= bound; ++m)
            for (int codim = 0; codim <= m * (model.n() - 2); ++codim) {
                auto gr = graded_rank(m, codim, model);
                CAPTURE(b);
                CAPTURE(m);
                CAPTURE(codim);
                CHECK(gr.injective());
            }
    }
}

TEST_CASE("kernel is generated by the presentation relations")
{
    CohomologyModel model = make_model(6, 1, /*seed=*/0);  // b = 2
    for (int m = 1; m <= 3; ++m)
        for (int codim = 0; codim <= m * (model.n() - 2); ++codim) {
            auto kc = kernel_check(m, codim, model, /*with_x4=*/false);
            CHECK(kc.contained());
        }
}

TEST_CASE("at m = 2b the antisymmetrizer is needed and sufficient (b = 2)")
{
    CohomologyModel model = make_model(6, 1, /*seed=*/0);
    const int m = 4, b = 2;
    // The escape shows up in the codim where the alternating sum lives:
    // 2 tau factors, codim 2(n-2) = 8.
    int codim = 2 * (model.n() - 2);
    CHECK_THROWS_AS(kernel_check(m, codim, model, /*with_x4=*/false),
                    KernelEscape);
    auto kc = kernel_check(m, codim, model, /*with_x4=*/true);
    CHECK(kc.contained());
    CHECK(!x4_relations(m, b).empty());
}

TEST_CASE("kimura relation vanishes exactly")
{
    for (int b : {2, 3, 4}) {
        CAPTURE(b);
        CohomologyModel model = make_model(6, b - 1, /*seed=*/(std::uint64_t)(100 + b));
        CHECK(kimura_check(model));
    }
}

TEST_CASE("enumeration bounds and overflow")
{
    CohomologyModel model = make_model(6, 1, /*seed=*/0);
    CHECK_THROWS_AS(enumerate_raw_monomials(4, 8, model.n(), /*max_count=*/3),
                    Overflow);
    auto normal = enumerate_normal_monomials(2, model.n() - 2, model.n());
    TautRing ring = ring_for(model);
    for (const auto& m : normal) {
        CHECK(m.codim(model.n()) == model.n() - 2);
        CHECK(ring.is_normal(m));
    }
}
