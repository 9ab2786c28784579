#include "ciq/taut.hpp"

#include "ciq/errors.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <numeric>
#include <sstream>

namespace ciq {

TautMonomial TautMonomial::o(int m, int i)
{
    if (i < 0 || i >= m)
        throw BadIndex("o index out of range");
    TautMonomial t(m);
    t.o_exp[i] = 1;
    return t;
}

TautMonomial TautMonomial::h(int m, int i, int power)
{
    if (i < 0 || i >= m)
        throw BadIndex("h index out of range");
    if (power < 0)
        throw BadIndex("negative h power");
    TautMonomial t(m);
    t.h_exp[i] = power;
    return t;
}

TautMonomial TautMonomial::t(int m, int i, int j)
{
    if (i == j)
        throw BadIndex("tau requires distinct indices");
    if (i > j)
        std::swap(i, j);
    if (i < 0 || j >= m)
        throw BadIndex("tau index out of range");
    TautMonomial t(m);
    t.tau[{i, j}] = 1;
    return t;
}

int TautMonomial::codim(int n) const
{
    int middle = tau_count();
    for (int e : o_exp)
        middle += e;
    return h_total() + middle * (n - 2);
}

int TautMonomial::tau_count() const
{
    int c = 0;
    for (const auto& [edge, mult] : tau)
        c += mult;
    return c;
}

int TautMonomial::h_total() const
{
    return std::accumulate(h_exp.begin(), h_exp.end(), 0);
}

TautMonomial TautMonomial::operator*(const TautMonomial& rhs) const
{
    if (arity != rhs.arity)
        throw ArityMismatch("taut monomial product across arities");
    TautMonomial out = *this;
    for (int i = 0; i < arity; ++i) {
        out.o_exp[i] += rhs.o_exp[i];
        out.h_exp[i] += rhs.h_exp[i];
    }
    for (const auto& [edge, mult] : rhs.tau)
        out.tau[edge] += mult;
    return out;
}

std::string TautMonomial::str() const
{
    std::ostringstream os;
    bool first = true;
    auto sep = [&] {
        if (!first)
            os << "*";
        first = false;
    };
    for (int i = 0; i < arity; ++i)
        for (int k = 0; k < o_exp[i]; ++k) {
            sep();
            os << "o" << i + 1;
        }
    for (int i = 0; i < arity; ++i)
        if (h_exp[i] > 0) {
            sep();
            os << "h" << i + 1;
            if (h_exp[i] > 1)
                os << "^" << h_exp[i];
        }
    for (const auto& [edge, mult] : tau)
        for (int k = 0; k < mult; ++k) {
            sep();
            os << "t" << edge.first + 1 << edge.second + 1;
        }
    if (first)
        os << "1";
    return os.str();
}

TautElement TautElement::monomial(TautMonomial m, Rational coeff)
{
    TautElement e(m.arity);
    e.add_term(m, coeff);
    return e;
}

void TautElement::add_term(const TautMonomial& m, const Rational& c)
{
    assert(m.arity == arity_);
    if (c == 0)
        return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
        return;
    }
    it->second += c;
    if (it->second == 0)
        terms_.erase(it);
}

TautElement& TautElement::operator+=(const TautElement& rhs)
{
    if (rhs.arity_ != arity_)
        throw ArityMismatch("taut addition across arities");
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, c);
    return *this;
}

TautElement& TautElement::operator-=(const TautElement& rhs)
{
    if (rhs.arity_ != arity_)
        throw ArityMismatch("taut subtraction across arities");
    for (const auto& [m, c] : rhs.terms_)
        add_term(m, -c);
    return *this;
}

TautElement& TautElement::operator*=(const Rational& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, coeff] : terms_)
        coeff *= c;
    return *this;
}

TautElement TautElement::operator*(const TautElement& rhs) const
{
    TautElement out(arity_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : rhs.terms_)
            out.add_term(ma * mb, ca * cb);
    return out;
}

std::pair<TautMonomial, Rational> parse_taut_monomial(const std::string& text, int arity)
{
    TautMonomial mono(arity);
    Rational coeff = 1;
    std::size_t pos = 0;
    auto index = [&](char c) {
        if (!std::isdigit((unsigned char)c))
            throw ParseError("expected index digit in taut monomial");
        int i = c - '1';
        if (i < 0 || i >= arity)
            throw ParseError("taut index out of range [1," + std::to_string(arity) + "]");
        return i;
    };
    while (pos < text.size()) {
        std::size_t end = text.find('*', pos);
        std::string tok = text.substr(pos, end == std::string::npos ? end : end - pos);
        pos = end == std::string::npos ? text.size() : end + 1;
        if (tok.empty())
            throw ParseError("empty factor in taut monomial");
        if (tok == "1")
            continue;
        if (std::isdigit((unsigned char)tok[0]) || tok[0] == '-') {
            coeff *= parse_rational(tok);
        }
        else if (tok[0] == 'o' && tok.size() == 2) {
            mono = mono * TautMonomial::o(arity, index(tok[1]));
        }
        else if (tok[0] == 'h' && tok.size() >= 2) {
            int power = 1;
            if (tok.size() > 2) {
                if (tok[2] != '^')
                    throw ParseError("bad h factor '" + tok + "'");
                power = std::stoi(tok.substr(3));
                if (power < 1)
                    throw ParseError("bad h power in '" + tok + "'");
            }
            mono = mono * TautMonomial::h(arity, index(tok[1]), power);
        }
        else if (tok[0] == 't' && tok.size() == 3) {
            mono = mono * TautMonomial::t(arity, index(tok[1]), index(tok[2]));
        }
        else {
            throw ParseError("bad factor '" + tok + "'");
        }
    }
    return {mono, coeff};
}

std::pair<int, int> rewrite_measure(const TautMonomial& m)
{
    return {m.tau_count(), m.h_total()};
}

namespace {

struct Redex {
    int rule;       // 1..7 in the printed order
    int i, j;       // factor indices (rule-dependent)
    int k = -1, l = -1;
};

std::vector<Redex> find_redexes(const TautMonomial& m, int n)
{
    std::vector<Redex> out;
    for (int i = 0; i < m.arity; ++i)
        if (m.o_exp[i] >= 2)
            out.push_back({1, i, i});
    for (int i = 0; i < m.arity; ++i)
        if (m.o_exp[i] >= 1 && m.h_exp[i] >= 1)
            out.push_back({2, i, i});
    for (int i = 0; i < m.arity; ++i)
        if (m.h_exp[i] >= n - 2)
            out.push_back({3, i, i});
    for (const auto& [edge, mult] : m.tau) {
        auto [i, j] = edge;
        if (m.o_exp[i] >= 1 || m.o_exp[j] >= 1)
            out.push_back({4, i, j});
        if (m.h_exp[i] >= 1 || m.h_exp[j] >= 1)
            out.push_back({5, i, j});
        if (mult >= 2)
            out.push_back({6, i, j});
    }
    // pairs of tau factors sharing exactly one index
    for (auto it = m.tau.begin(); it != m.tau.end(); ++it)
        for (auto jt = std::next(it); jt != m.tau.end(); ++jt) {
            auto [a, b] = it->first;
            auto [c, d] = jt->first;
            int shared = -1;
            if (a == c || a == d)
                shared = a;
            else if (b == c || b == d)
                shared = b;
            if (shared >= 0)
                out.push_back({7, a, b, c, d});
        }
    return out;
}

std::optional<std::pair<TautMonomial, Rational>>
apply_redex(const TautMonomial& m, const Redex& r, int n, int b)
{
    TautMonomial out = m;
    auto drop_tau = [&](int i, int j) {
        auto it = out.tau.find({i, j});
        if (--it->second == 0)
            out.tau.erase(it);
    };
    switch (r.rule) {
    case 1:  // o_i o_i = 0
    case 2:  // h_i o_i = 0
        return std::pair{out, Rational(0)};
    case 3:  // h_i^{n-2} = 6 o_i
        out.h_exp[r.i] -= n - 2;
        out.o_exp[r.i] += 1;
        return std::pair{out, Rational(6)};
    case 4:  // tau_ij o_i = 0
    case 5:  // tau_ij h_i = 0
        return std::pair{out, Rational(0)};
    case 6:  // tau_ij^2 = (b-1) o_i o_j
        drop_tau(r.i, r.j);
        drop_tau(r.i, r.j);
        out.o_exp[r.i] += 1;
        out.o_exp[r.j] += 1;
        return std::pair{out, Rational(b - 1)};
    case 7: {  // tau_ij tau_ik = tau_jk o_i
        int shared = (r.i == r.k || r.i == r.l) ? r.i : r.j;
        int u = r.i == shared ? r.j : r.i;
        int v = r.k == shared ? r.l : r.k;
        drop_tau(r.i, r.j);
        drop_tau(r.k, r.l);
        if (u > v)
            std::swap(u, v);
        out.tau[{u, v}] += 1;
        out.o_exp[shared] += 1;
        return std::pair{out, Rational(1)};
    }
    default:
        return std::nullopt;
    }
}

}  // namespace

std::optional<std::pair<TautMonomial, Rational>>
TautRing::reduce_once(const TautMonomial& m, Strategy strategy) const
{
    auto redexes = find_redexes(m, n);
    if (redexes.empty())
        return std::nullopt;
    const Redex& r = strategy == Strategy::First ? redexes.front() : redexes.back();
    return apply_redex(m, r, n, b);
}

bool TautRing::is_normal(const TautMonomial& m) const
{
    return find_redexes(m, n).empty();
}

TautElement TautRing::normal_form(const TautElement& x, Strategy strategy) const
{
    TautElement out(x.arity());
    std::vector<std::pair<TautMonomial, Rational>> work(x.terms().begin(), x.terms().end());
    while (!work.empty()) {
        auto [m, c] = work.back();
        work.pop_back();
        auto step = reduce_once(m, strategy);
        if (!step) {
            out.add_term(m, c);
            continue;
        }
        if (step->second != 0)
            work.emplace_back(step->first, c * step->second);
    }
    return out;
}

Element evaluate(const TautRing& ring, const CohomologyModel& model,
                 const TautElement& x)
{
    if (ring.n != model.n() || ring.b != model.p() + 1)
        throw ParamMismatch("taut ring parameters disagree with the model");
    const int m = x.arity();

    Element tau_class(2);
    for (int a = 0; a < model.p(); ++a)
        for (int b = 0; b < model.p(); ++b)
            tau_class.add_term({model.n() - 1 + a, model.n() - 1 + b},
                               model.gram_inv().at(a, b));
    Element o_class = point_class(model);
    Element h_class = h_power(model, 1);

    Element out(m);
    for (const auto& [mono, c] : x.terms()) {
        Element val = Element::unit(m) * c;
        for (int i = 0; i < m && !val.is_zero(); ++i) {
            for (int k = 0; k < mono.o_exp[i]; ++k)
                val = cup(model, val, pullback(o_class, m, {i}));
            for (int k = 0; k < mono.h_exp[i]; ++k)
                val = cup(model, val, pullback(h_class, m, {i}));
        }
        for (const auto& [edge, mult] : mono.tau)
            for (int k = 0; k < mult && !val.is_zero(); ++k)
                val = cup(model, val, pullback(tau_class, m, {edge.first, edge.second}));
        out += val;
    }
    return out;
}

namespace {

// h exponent assignments (0..hmax each) over `slots` indices summing to rem.
void enum_h(const std::vector<int>& slots, std::size_t at, int rem, int hmax,
            TautMonomial& acc, std::vector<TautMonomial>& out)
{
    if (at == slots.size()) {
        if (rem == 0)
            out.push_back(acc);
        return;
    }
    int avail = (int)(slots.size() - at - 1) * hmax;
    for (int e = std::max(0, rem - avail); e <= std::min(hmax, rem); ++e) {
        acc.h_exp[slots[at]] = e;
        enum_h(slots, at + 1, rem - e, hmax, acc, out);
        acc.h_exp[slots[at]] = 0;
    }
}

void enum_normal(int m, int codim, int n, int next, std::vector<bool>& used,
                 TautMonomial& acc, int middle_used, std::vector<TautMonomial>& out)
{
    // advance past used indices
    while (next < m && used[next])
        ++next;
    if (next == m) {
        // remaining budget goes to h powers on untouched indices (none left
        // here) -- handled below via the o/h phase; nothing to do
        int rem = codim - middle_used * (n - 2);
        if (rem == 0)
            out.push_back(acc);
        return;
    }
    // index `next` is free: leave it (h power decided later via o/h choice)
    // Choice 1: plain h power 0..n-3 on `next`
    int rem_budget = codim - middle_used * (n - 2);
    if (rem_budget < 0)
        return;
    used[next] = true;
    for (int e = 0; e <= std::min(n - 3, rem_budget); ++e) {
        acc.h_exp[next] = e;
        // note: remaining codim tracked through middle_used and h already set
        enum_normal(m, codim - e, n, next + 1, used, acc, middle_used, out);
        acc.h_exp[next] = 0;
    }
    // Choice 2: o_next
    if (middle_used * (n - 2) + (n - 2) <= codim) {
        acc.o_exp[next] = 1;
        enum_normal(m, codim, n, next + 1, used, acc, middle_used + 1, out);
        acc.o_exp[next] = 0;
    }
    // Choice 3: match `next` with a later free index by tau
    for (int j = next + 1; j < m; ++j) {
        if (used[j])
            continue;
        if (middle_used * (n - 2) + (n - 2) > codim)
            break;
        used[j] = true;
        acc.tau[{next, j}] = 1;
        enum_normal(m, codim, n, next + 1, used, acc, middle_used + 1, out);
        acc.tau.erase({next, j});
        used[j] = false;
    }
    used[next] = false;
}

}  // namespace

std::vector<TautMonomial> enumerate_normal_monomials(int m, int codim, int n)
{
    // A normal monomial: tau edges form a matching; matched indices carry
    // nothing else; each free index carries o_i or h_i^e with e <= n-3.
    std::vector<TautMonomial> out;
    std::vector<bool> used(m, false);
    TautMonomial acc(m);
    enum_normal(m, codim, n, 0, used, acc, 0, out);
    return out;
}

namespace {

void enum_raw(int m, int codim, int n, int gen, TautMonomial& acc,
              std::vector<TautMonomial>& out, std::size_t max_count)
{
    // generator order: o_0..o_{m-1}, tau edges, then h exponents
    const int num_o = m;
    const int num_tau = m * (m - 1) / 2;
    if (gen == num_o + num_tau) {
        std::vector<int> slots(m);
        for (int i = 0; i < m; ++i)
            slots[i] = i;
        enum_h(slots, 0, codim, codim, acc, out);
        if (out.size() > max_count)
            throw Overflow("raw monomial enumeration exceeds bound");
        return;
    }
    int weight = n - 2;
    for (int e = 0; e * weight <= codim; ++e) {
        if (gen < num_o) {
            acc.o_exp[gen] = e;
        }
        else {
            int idx = gen - num_o, i = 0;
            while (idx >= m - 1 - i) {
                idx -= m - 1 - i;
                ++i;
            }
            int j = i + 1 + idx;
            if (e > 0)
                acc.tau[{i, j}] = e;
            else
                acc.tau.erase({i, j});
        }
        enum_raw(m, codim - e * weight, n, gen + 1, acc, out, max_count);
    }
    if (gen < num_o)
        acc.o_exp[gen] = 0;
    else {
        int idx = gen - num_o, i = 0;
        while (idx >= m - 1 - i) {
            idx -= m - 1 - i;
            ++i;
        }
        acc.tau.erase({i, i + 1 + idx});
    }
}

}  // namespace

std::vector<TautMonomial> enumerate_raw_monomials(int m, int codim, int n,
                                                  std::size_t max_count)
{
    std::vector<TautMonomial> out;
    TautMonomial acc(m);
    enum_raw(m, codim, n, 0, acc, out, max_count);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Evaluation vectors of the given monomials, as rows over a shared
// cohomology-monomial column index.
Mat evaluation_matrix(const TautRing& ring, const CohomologyModel& model,
                      const std::vector<TautMonomial>& monomials)
{
    std::map<std::vector<int>, std::size_t> columns;
    std::vector<Element> values;
    values.reserve(monomials.size());
    for (const auto& mono : monomials) {
        Element v = evaluate(ring, model, TautElement::monomial(mono));
        for (const auto& [labels, c] : v.terms())
            columns.emplace(labels, columns.size());
        values.push_back(std::move(v));
    }
    Mat a(monomials.size(), std::max<std::size_t>(columns.size(), 1));
    for (std::size_t r = 0; r < values.size(); ++r)
        for (const auto& [labels, c] : values[r].terms())
            a.at(r, columns.at(labels)) = c;
    return a;
}

}  // namespace

GradedRankResult graded_rank(int m, int codim, const CohomologyModel& model,
                             std::size_t max_monomials)
{
    if (m < 1 || codim < 0 || codim > m * (model.n() - 2))
        throw BadRange("graded_rank: bad arity or codimension");
    TautRing ring{model.n(), model.p() + 1};
    auto monomials = enumerate_normal_monomials(m, codim, model.n());
    if (monomials.size() > max_monomials)
        throw Overflow("graded_rank: monomial count exceeds bound");
    GradedRankResult res;
    res.count = monomials.size();
    if (!monomials.empty())
        res.rank = evaluation_matrix(ring, model, monomials).rank();
    return res;
}

std::vector<TautElement> x4_relations(int m, int b)
{
    std::vector<TautElement> out;
    if (m < 2 * b)
        return out;
    // choose 2b indices, then split with the smallest one in the X block
    std::vector<int> chosen;
    auto emit = [&](const std::vector<int>& idx) {
        int k = 2 * b;
        // subsets of idx[1..] of size b-1 joining idx[0] as block X
        std::vector<int> sel(b - 1);
        auto rec = [&](auto&& self, int start, int depth) -> void {
            if (depth == b - 1) {
                std::vector<int> xs{idx[0]}, ys;
                std::vector<bool> in_x(k, false);
                for (int s : sel)
                    in_x[s] = true;
                for (int t = 1; t < k; ++t)
                    (in_x[t] ? xs : ys).push_back(idx[t]);
                // alternating sum over assignments X[i] -> Y[sigma(i)]
                TautElement rel(m);
                std::vector<int> perm(b);
                for (int i = 0; i < b; ++i)
                    perm[i] = i;
                do {
                    int sign = 1;
                    for (int i = 0; i < b; ++i)
                        for (int j = i + 1; j < b; ++j)
                            if (perm[i] > perm[j])
                                sign = -sign;
                    TautMonomial mono(m);
                    for (int i = 0; i < b; ++i)
                        mono = mono * TautMonomial::t(m, xs[i], ys[perm[i]]);
                    rel.add_term(mono, sign);
                } while (std::next_permutation(perm.begin(), perm.end()));
                out.push_back(std::move(rel));
                return;
            }
            for (int s = start; s < k; ++s) {
                sel[depth] = s;
                self(self, s + 1, depth + 1);
            }
        };
        rec(rec, 1, 0);
    };
    // all 2b-subsets of {0..m-1}
    std::vector<int> idx(2 * b);
    auto pick = [&](auto&& self, int start, int depth) -> void {
        if (depth == 2 * b) {
            emit(idx);
            return;
        }
        for (int s = start; s < m; ++s) {
            idx[depth] = s;
            self(self, s + 1, depth + 1);
        }
    };
    pick(pick, 0, 0);
    return out;
}

namespace {

// Incremental sparse row echelon over exact rationals; keys order the
// columns. Rank stays bounded by the number of pivots, never by the
// ambient dimension, which keeps the big tautological pieces desk-scale.
template <class Key>
struct SparseEchelon {
    std::map<Key, std::map<Key, Rational>> pivots;  // leading key -> row

    // Fully reduces the leading term; empty result means "in the span".
    std::map<Key, Rational> reduce(std::map<Key, Rational> row) const
    {
        while (!row.empty()) {
            auto p = pivots.find(row.begin()->first);
            if (p == pivots.end())
                break;
            Rational f = row.begin()->second;
            for (const auto& [k, c] : p->second) {
                auto [pos, fresh] = row.try_emplace(k, 0);
                pos->second -= f * c;
                if (pos->second == 0)
                    row.erase(pos);
            }
        }
        return row;
    }

    bool insert(std::map<Key, Rational> row)
    {
        row = reduce(std::move(row));
        if (row.empty())
            return false;
        Rational lead = row.begin()->second;
        for (auto& [k, c] : row)
            c /= lead;
        Key key = row.begin()->first;
        pivots.emplace(std::move(key), std::move(row));
        return true;
    }

    std::size_t rank() const { return pivots.size(); }
};

// The seven monomial rewrite rules on Y^m, written as lhs - rhs.
std::vector<TautElement> presentation_relations(int m, int n, int b)
{
    std::vector<TautElement> base;
    for (int i = 0; i < m; ++i) {
        base.push_back(TautElement::monomial(TautMonomial::o(m, i) * TautMonomial::o(m, i)));
        base.push_back(TautElement::monomial(TautMonomial::h(m, i) * TautMonomial::o(m, i)));
        TautElement r3 = TautElement::monomial(TautMonomial::h(m, i, n - 2));
        r3.add_term(TautMonomial::o(m, i), -6);
        base.push_back(r3);
    }
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto tij = TautMonomial::t(m, i, j);
            base.push_back(TautElement::monomial(tij * TautMonomial::o(m, i)));
            base.push_back(TautElement::monomial(tij * TautMonomial::o(m, j)));
            base.push_back(TautElement::monomial(tij * TautMonomial::h(m, i)));
            base.push_back(TautElement::monomial(tij * TautMonomial::h(m, j)));
            TautElement r6 = TautElement::monomial(tij * tij);
            r6.add_term(TautMonomial::o(m, i) * TautMonomial::o(m, j), -(Rational(b) - 1));
            base.push_back(r6);
        }
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j)
            for (int k = j + 1; k < m; ++k) {
                if (i == j || i == k)
                    continue;
                TautElement r7 =
                    TautElement::monomial(TautMonomial::t(m, i, j) * TautMonomial::t(m, i, k));
                r7.add_term(TautMonomial::t(m, j, k) * TautMonomial::o(m, i), -1);
                base.push_back(r7);
            }
    return base;
}

}  // namespace

KernelCheckResult kernel_check(int m, int codim, const CohomologyModel& model,
                               bool with_x4, std::size_t max_monomials)
{
    const int n = model.n();
    const int b = model.p() + 1;
    TautRing ring{n, b};
    auto raw = enumerate_raw_monomials(m, codim, n, max_monomials);
    auto normal = enumerate_normal_monomials(m, codim, n);
    std::map<TautMonomial, std::size_t> normal_index;
    for (const auto& mono : normal)
        normal_index.emplace(mono, normal_index.size());

    // Rank of the evaluation on the raw piece; bounded by the cohomology
    // dimension of the graded slice, so the echelon stays small even when
    // the raw count runs into the thousands.
    SparseEchelon<std::vector<int>> eval_rows;
    for (const auto& mono : raw) {
        Element v = evaluate(ring, model, TautElement::monomial(mono));
        eval_rows.insert({v.terms().begin(), v.terms().end()});
    }

    KernelCheckResult res;
    res.raw_count = raw.size();
    res.kernel_dim = raw.size() - eval_rows.rank();

    // Every rewrite step subtracts a relation multiple, so the relation
    // span contains raw - normal_form(raw) for each non-normal monomial:
    // an upper-triangular block of rank (#raw - #normal). Modulo that
    // block, any relation multiple collapses to its normal form, a row
    // supported on the normal monomials alone. Hence
    //   relation_rank = (#raw - #normal) + rank{NF(rel . q)}.
    auto as_normal_row = [&](const TautElement& x) {
        std::map<std::size_t, Rational> row;
        for (const auto& [mono, c] : x.terms()) {
            auto it = normal_index.find(mono);
            if (it == normal_index.end())
                throw KernelEscape("normal form escaped the enumeration: " + mono.str());
            row.emplace(it->second, c);
        }
        return row;
    };

    std::vector<TautElement> base = presentation_relations(m, n, b);
    if (with_x4)
        for (auto& rel : x4_relations(m, b))
            base.push_back(std::move(rel));

    SparseEchelon<std::size_t> nf_rows;
    for (const auto& rel : base) {
        int rel_codim = rel.terms().begin()->first.codim(n);
        if (rel_codim > codim)
            continue;
        for (const auto& q :
             enumerate_raw_monomials(m, codim - rel_codim, n, max_monomials)) {
            TautElement nf = ring.normal_form(rel * TautElement::monomial(q));
            if (!nf.is_zero())
                nf_rows.insert(as_normal_row(nf));
        }
    }
    res.relation_rank = (raw.size() - normal.size()) + nf_rows.rank();

    if (res.kernel_dim != res.relation_rank) {
        // The deficit lives among the normal monomials: hunt for a nonzero
        // combination that evaluates to zero but reduces to something
        // outside the relation span, and surface it as the witness.
        Mat evalN = evaluation_matrix(ring, model, normal);
        Mat evalT(evalN.cols(), evalN.rows());
        for (std::size_t r = 0; r < evalN.rows(); ++r)
            for (std::size_t c = 0; c < evalN.cols(); ++c)
                evalT.at(c, r) = evalN.at(r, c);
        for (const auto& v : evalT.nullspace()) {
            std::map<std::size_t, Rational> row;
            for (std::size_t c = 0; c < v.size(); ++c)
                if (v[c] != 0)
                    row.emplace(c, v[c]);
            if (!nf_rows.reduce(row).empty()) {
                std::string witness;
                for (const auto& [c, coeff] : row)
                    witness += (witness.empty() ? "" : " + ") + rational_str(coeff) +
                               "*" + normal[c].str();
                throw KernelEscape("unexplained cohomological relation: " + witness);
            }
        }
        throw KernelEscape("kernel/relation rank mismatch without witness");
    }
    return res;
}

bool kimura_check(const CohomologyModel& model)
{
    const int b = model.p() + 1;
    if (b > 5)
        throw BadRange("kimura_check: b > 5 exceeds desk scale");
    const int m = 2 * b;
    TautRing ring{model.n(), b};
    TautElement rel(m);
    std::vector<int> perm(b);
    for (int i = 0; i < b; ++i)
        perm[i] = i;
    do {
        int sign = 1;
        for (int i = 0; i < b; ++i)
            for (int j = i + 1; j < b; ++j)
                if (perm[i] > perm[j])
                    sign = -sign;
        TautMonomial mono(m);
        for (int i = 0; i < b; ++i)
            mono = mono * TautMonomial::t(m, i, b + perm[i]);
        rel.add_term(mono, sign);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return evaluate(ring, model, rel).is_zero();
}

}  // namespace ciq
