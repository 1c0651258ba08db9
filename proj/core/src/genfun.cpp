#include "qordkit/genfun.hpp"

#include <algorithm>
#include <deque>

#include "qordkit/error.hpp"

namespace qordkit {

// ------------------------------------------------------- FactoredRational

FactoredRational::FactoredRational(int nvars, int order) : nvars_(nvars), order_(order), numerator_(nvars) {}

FactoredRational FactoredRational::zero(int nvars)
{
    return FactoredRational(nvars);
}

FactoredRational FactoredRational::one(int nvars)
{
    return from_polynomial(Polynomial::constant(nvars, Cyclotomic(1)));
}

FactoredRational FactoredRational::from_polynomial(const Polynomial& p)
{
    int order = 1;
    for (const auto& [e, c] : p.terms()) {
        order = common_order(order, c.order());
    }
    return make(order, p, {});
}

FactoredRational FactoredRational::geometric(const LinearForm& form)
{
    int order = 1;
    for (const auto& c : form.coeffs) {
        order = common_order(order, c.order());
    }
    return make(order, Polynomial::constant(form.nvars(), Cyclotomic(1)), {form});
}

FactoredRational FactoredRational::make(int order, Polynomial numerator, std::vector<LinearForm> factors)
{
    FactoredRational f(numerator.nvars(), order);
    f.numerator_ = numerator.lifted(order);
    if (f.numerator_.is_zero()) {
        return f;
    }
    for (auto& l : factors) {
        if (l.nvars() != f.nvars_) {
            throw ValidationError("linear form has the wrong number of variables");
        }
        if (!l.is_zero()) {
            f.factors_.push_back(l.lifted(order));
        }
    }
    std::sort(f.factors_.begin(), f.factors_.end());
    return f;
}

FactoredRational FactoredRational::lifted(int m) const
{
    if (m == order_) {
        return *this;
    }
    if (m % order_ != 0) {
        throw PreconditionError("cannot lift a rational function to a non-multiple order");
    }
    return make(m, numerator_, factors_);
}

namespace {

Polynomial product_of_one_minus(int nvars, const std::vector<LinearForm>& forms)
{
    Polynomial p = Polynomial::constant(nvars, Cyclotomic(1));
    for (const auto& l : forms) {
        p = p * l.one_minus();
    }
    return p;
}

} // namespace

FactoredRational& FactoredRational::operator+=(const FactoredRational& rhs)
{
    if (rhs.nvars_ != nvars_) {
        throw ValidationError("rational functions have different variable counts");
    }
    if (rhs.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = rhs;
    }
    const int m = common_order(order_, rhs.order_);
    const FactoredRational a = lifted(m);
    const FactoredRational b = rhs.lifted(m);

    // Multiset lcm of the sorted factor lists.
    std::vector<LinearForm> common, only_a, only_b;
    std::size_t i = 0, j = 0;
    while (i < a.factors_.size() || j < b.factors_.size()) {
        if (j == b.factors_.size() || (i < a.factors_.size() && a.factors_[i] < b.factors_[j])) {
            only_a.push_back(a.factors_[i++]);
        } else if (i == a.factors_.size() || b.factors_[j] < a.factors_[i]) {
            only_b.push_back(b.factors_[j++]);
        } else {
            common.push_back(a.factors_[i]);
            ++i;
            ++j;
        }
    }
    Polynomial num = a.numerator_ * product_of_one_minus(nvars_, only_b) +
                     b.numerator_ * product_of_one_minus(nvars_, only_a);
    std::vector<LinearForm> all = std::move(common);
    all.insert(all.end(), only_a.begin(), only_a.end());
    all.insert(all.end(), only_b.begin(), only_b.end());
    return *this = make(m, std::move(num), std::move(all));
}

FactoredRational& FactoredRational::operator-=(const FactoredRational& rhs)
{
    return *this += rhs.scaled(Cyclotomic(-1));
}

FactoredRational operator*(const FactoredRational& a, const FactoredRational& b)
{
    if (a.nvars_ != b.nvars_) {
        throw ValidationError("rational functions have different variable counts");
    }
    const int m = common_order(a.order_, b.order_);
    std::vector<LinearForm> all = a.factors_;
    all.insert(all.end(), b.factors_.begin(), b.factors_.end());
    return FactoredRational::make(m, a.numerator_.lifted(m) * b.numerator_.lifted(m), std::move(all));
}

FactoredRational FactoredRational::scaled(const Cyclotomic& c) const
{
    const Cyclotomic k = c.is_rational() ? Cyclotomic(c.rational_part()) : c;
    const int m = common_order(order_, k.order());
    return make(m, numerator_.lifted(m).scaled(k.lift(m)), factors_);
}

bool is_class_kn(const FactoredRational& f)
{
    for (const auto& l : f.factors()) {
        for (const auto& c : l.coeffs) {
            if (f.order() % c.order() != 0 || !c.is_integral()) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- series

namespace {

struct Box {
    Exponent bound;
    std::vector<std::size_t> stride;
    std::size_t size = 1;

    explicit Box(const Exponent& b) : bound(b), stride(b.size())
    {
        for (std::size_t i = b.size(); i-- > 0;) {
            if (b[i] < 0) {
                throw ValidationError("degree bounds must be non-negative");
            }
            stride[i] = size;
            size *= static_cast<std::size_t>(b[i]) + 1;
        }
    }

    // Advances e to the next exponent in lexicographic order.
    void advance(Exponent& e) const
    {
        for (std::size_t i = e.size(); i-- > 0;) {
            if (e[i] < bound[i]) {
                ++e[i];
                return;
            }
            e[i] = 0;
        }
    }

    std::size_t index(const Exponent& e) const
    {
        std::size_t idx = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            idx += stride[i] * static_cast<std::size_t>(e[i]);
        }
        return idx;
    }
};

} // namespace

SeriesTruncation series_from_dfa(const Dfa& d, const Norm& norm, const Exponent& bound)
{
    if (norm.coordinate.size() != static_cast<std::size_t>(d.num_symbols())) {
        throw ValidationError("norm does not cover the DFA alphabet");
    }
    if (bound.size() != static_cast<std::size_t>(norm.dimension)) {
        throw ValidationError("degree bound dimension does not match the norm");
    }
    const Box box(bound);
    const auto states = static_cast<std::size_t>(d.num_states());
    std::vector<Integer> count(states * box.size, 0);
    count[static_cast<std::size_t>(d.start()) * box.size] = 1;

    SeriesTruncation out;
    out.bound = bound;
    Exponent e(bound.size(), 0);
    for (std::size_t idx = 0; idx < box.size; ++idx, box.advance(e)) {
        Integer accepted = 0;
        for (std::size_t q = 0; q < states; ++q) {
            const Integer& c = count[q * box.size + idx];
            if (c == 0) {
                continue;
            }
            if (d.accepting(static_cast<int>(q))) {
                accepted += c;
            }
            for (int a = 0; a < d.num_symbols(); ++a) {
                const auto coord = static_cast<std::size_t>(norm.coordinate[static_cast<std::size_t>(a)]);
                if (e[coord] >= bound[coord]) {
                    continue;
                }
                const auto t = static_cast<std::size_t>(d.next(static_cast<int>(q), a));
                count[t * box.size + idx + box.stride[coord]] += c;
            }
        }
        if (accepted != 0) {
            out.coeffs.emplace(e, Cyclotomic(Rational(accepted)));
        }
    }
    return out;
}

SeriesTruncation expand_rational(const FactoredRational& f, const Exponent& bound, int total_bound)
{
    if (bound.size() != static_cast<std::size_t>(f.nvars())) {
        throw ValidationError("degree bound dimension does not match the rational function");
    }
    const Box box(bound);
    std::vector<Cyclotomic> t(box.size, Cyclotomic(Rational(0), f.order()));

    SeriesTruncation out;
    out.bound = bound;
    out.total_bound = total_bound;
    for (const auto& [e, c] : f.numerator().terms()) {
        if (out.in_range(e)) {
            t[box.index(e)] = c;
        }
    }
    // 1/(1-L) applied in place: T[n] += sum_i L_i T[n - e_i], in increasing order.
    for (const auto& form : f.factors()) {
        Exponent e(bound.size(), 0);
        for (std::size_t idx = 0; idx < box.size; ++idx, box.advance(e)) {
            if (total_bound >= 0 && total_degree(e) > total_bound) {
                continue;
            }
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0 || form.coeffs[i].is_zero()) {
                    continue;
                }
                const Cyclotomic& prev = t[idx - box.stride[i]];
                if (!prev.is_zero()) {
                    t[idx] += form.coeffs[i] * prev;
                }
            }
        }
    }
    Exponent e(bound.size(), 0);
    for (std::size_t idx = 0; idx < box.size; ++idx, box.advance(e)) {
        if (!t[idx].is_zero() && out.in_range(e)) {
            out.coeffs.emplace(e, t[idx]);
        }
    }
    return out;
}

// ------------------------------------------------------- ordered closed form

namespace {

// Can some word of L(a) L(b) be split in two ways? With u1 z in L(a), u1 in
// L(a), z nonempty, and z v, v both in L(b), the pair walk from
// (accepting p, start of b) along z ends at an accepting state of a and at a
// state of b that shares an accepted suffix with the start of b.
bool concat_ambiguous(const Dfa& a, const Dfa& b)
{
    const int na = a.num_states();
    const int nb = b.num_states();
    const int k = a.num_symbols();

    // shared[q] : L_b(q) meets L_b(start)
    std::vector<char> pair_live(static_cast<std::size_t>(nb) * static_cast<std::size_t>(nb), 0);
    {
        std::vector<std::vector<int>> inverse(static_cast<std::size_t>(nb) * static_cast<std::size_t>(k));
        for (int q = 0; q < nb; ++q) {
            for (int s = 0; s < k; ++s) {
                inverse[static_cast<std::size_t>(b.next(q, s) * k + s)].push_back(q);
            }
        }
        std::deque<std::pair<int, int>> queue;
        for (int q = 0; q < nb; ++q) {
            for (int r = 0; r < nb; ++r) {
                if (b.accepting(q) && b.accepting(r)) {
                    pair_live[static_cast<std::size_t>(q * nb + r)] = 1;
                    queue.emplace_back(q, r);
                }
            }
        }
        while (!queue.empty()) {
            const auto [q, r] = queue.front();
            queue.pop_front();
            for (int s = 0; s < k; ++s) {
                for (int p : inverse[static_cast<std::size_t>(q * k + s)]) {
                    for (int o : inverse[static_cast<std::size_t>(r * k + s)]) {
                        auto& flag = pair_live[static_cast<std::size_t>(p * nb + o)];
                        if (!flag) {
                            flag = 1;
                            queue.emplace_back(p, o);
                        }
                    }
                }
            }
        }
    }
    auto shared = [&](int q) { return pair_live[static_cast<std::size_t>(q * nb + b.start())] != 0; };

    std::vector<char> seen(static_cast<std::size_t>(na) * static_cast<std::size_t>(nb), 0);
    std::deque<std::pair<int, int>> queue;
    auto push_successors = [&](int p, int q) {
        for (int s = 0; s < k; ++s) {
            const int p2 = a.next(p, s);
            const int q2 = b.next(q, s);
            auto& flag = seen[static_cast<std::size_t>(p2 * nb + q2)];
            if (!flag) {
                flag = 1;
                queue.emplace_back(p2, q2);
            }
        }
    };
    for (int p = 0; p < na; ++p) {
        if (a.accepting(p)) {
            push_successors(p, b.start());
        }
    }
    while (!queue.empty()) {
        const auto [p, q] = queue.front();
        queue.pop_front();
        if (a.accepting(p) && shared(q)) {
            return true;
        }
        push_successors(p, q);
    }
    return false;
}

void certify(const Alphabet& alphabet, const LanguageExpr& expr)
{
    using Kind = LanguageExpr::Kind;
    if (expr.kind == Kind::Union) {
        std::vector<Dfa> parts;
        for (const auto& c : expr.children) {
            certify(alphabet, c);
            parts.push_back(compile_ordered(alphabet, c));
        }
        for (std::size_t i = 0; i < parts.size(); ++i) {
            for (std::size_t j = i + 1; j < parts.size(); ++j) {
                if (!intersect_dfa(parts[i], parts[j]).empty_language()) {
                    throw AmbiguousExpression("union branches " + std::to_string(i) + " and " + std::to_string(j) +
                                              " share a word");
                }
            }
        }
    } else if (expr.kind == Kind::Concat) {
        for (const auto& c : expr.children) {
            certify(alphabet, c);
        }
        if (expr.children.size() < 2) {
            return;
        }
        std::vector<LanguageExpr> prefix{expr.children[0]};
        for (std::size_t i = 1; i < expr.children.size(); ++i) {
            const Dfa left = compile_ordered(alphabet, LanguageExpr::concat(prefix));
            const Dfa right = compile_ordered(alphabet, expr.children[i]);
            if (concat_ambiguous(left, right)) {
                throw AmbiguousExpression("concatenation factor " + std::to_string(i) +
                                          " admits two factorizations of some word");
            }
            prefix.push_back(expr.children[i]);
        }
    }
}

FactoredRational structural(const LanguageExpr& expr, const Norm& norm)
{
    using Kind = LanguageExpr::Kind;
    const int n = norm.dimension;
    auto unit = [&](int symbol) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(norm.coordinate[static_cast<std::size_t>(symbol)])] = 1;
        return e;
    };
    switch (expr.kind) {
    case Kind::Empty:
        return FactoredRational::zero(n);
    case Kind::Epsilon:
        return FactoredRational::one(n);
    case Kind::Singleton:
        return FactoredRational::from_polynomial(Polynomial::monomial(n, unit(expr.symbol), Cyclotomic(1)));
    case Kind::Star: {
        LinearForm l;
        l.coeffs.assign(static_cast<std::size_t>(n), Cyclotomic(0));
        for (int s : expr.subset) {
            l.coeffs[static_cast<std::size_t>(norm.coordinate[static_cast<std::size_t>(s)])] += Cyclotomic(1);
        }
        return FactoredRational::geometric(l);
    }
    case Kind::Union: {
        FactoredRational sum = FactoredRational::zero(n);
        for (const auto& c : expr.children) {
            sum += structural(c, norm);
        }
        return sum;
    }
    case Kind::Concat: {
        FactoredRational prod = FactoredRational::one(n);
        for (const auto& c : expr.children) {
            prod = prod * structural(c, norm);
        }
        return prod;
    }
    }
    throw Error("internal: unknown expression kind");
}

void require_universal(const Alphabet& alphabet, const Norm& norm)
{
    if (norm.coordinate.size() != static_cast<std::size_t>(alphabet.size())) {
        throw ValidationError("norm does not cover the alphabet");
    }
    if (!norm.universal()) {
        throw PreconditionError("closed forms require a universal norm");
    }
}

} // namespace

void certify_unambiguous(const Alphabet& alphabet, const LanguageExpr& expr)
{
    validate(alphabet, expr);
    certify(alphabet, expr);
}

bool is_unambiguous(const Alphabet& alphabet, const LanguageExpr& expr)
{
    try {
        certify_unambiguous(alphabet, expr);
    } catch (const AmbiguousExpression&) {
        return false;
    }
    return true;
}

FactoredRational ordered_genfun(const Alphabet& alphabet, const LanguageExpr& expr, const Norm& norm)
{
    require_universal(alphabet, norm);
    certify_unambiguous(alphabet, expr);
    return structural(expr, norm);
}

// ---------------------------------------------------- translates and filters

FactoredRational cyclotomic_translate(const FactoredRational& f, int order, const std::vector<long long>& exponents)
{
    if (order < 1) {
        throw ValidationError("root of unity order must be positive");
    }
    if (exponents.size() != static_cast<std::size_t>(f.nvars())) {
        throw ValidationError("one root of unity is needed per variable");
    }
    const bool trivial =
        std::all_of(exponents.begin(), exponents.end(), [&](long long k) { return k % order == 0; });
    if (trivial) {
        return f;
    }
    const int m = common_order(f.order(), order);
    Polynomial num(f.nvars());
    for (const auto& [e, c] : f.numerator().terms()) {
        long long k = 0;
        for (std::size_t i = 0; i < e.size(); ++i) {
            k += exponents[i] * e[i];
        }
        num.add_term(e, c * Cyclotomic::root(order, k));
    }
    std::vector<LinearForm> factors;
    for (const auto& l : f.factors()) {
        LinearForm t;
        for (std::size_t i = 0; i < l.coeffs.size(); ++i) {
            t.coeffs.push_back(l.coeffs[i].is_zero() ? Cyclotomic(Rational(0), m)
                                                     : l.coeffs[i] * Cyclotomic::root(order, exponents[i]));
        }
        factors.push_back(std::move(t));
    }
    return FactoredRational::make(m, std::move(num), std::move(factors));
}

FactoredRational congruence_filter(const FactoredRational& f, const AbelianGroup& group, const std::vector<int>& psi,
                                   const std::vector<int>& target)
{
    if (psi.size() != static_cast<std::size_t>(f.nvars())) {
        throw ValidationError("psi must assign a group element to every variable");
    }
    for (int g : psi) {
        if (g < 0 || g >= group.size()) {
            throw ValidationError("psi value outside the group");
        }
    }
    for (int s : target) {
        if (s < 0 || s >= group.size()) {
            throw ValidationError("target element outside the group");
        }
    }
    std::vector<int> distinct = target;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());

    const int e = group.exponent();
    const Cyclotomic inv_size = Cyclotomic(make_rational(1, group.size()), 1);
    FactoredRational sum = FactoredRational::zero(f.nvars());
    for (int chi = 0; chi < group.size(); ++chi) {
        Cyclotomic c(Rational(0), e);
        for (int s : distinct) {
            c += Cyclotomic::root(e, -group.character_exponent(chi, s));
        }
        if (c.is_zero()) {
            continue;
        }
        std::vector<long long> exps(psi.size());
        for (std::size_t i = 0; i < psi.size(); ++i) {
            exps[i] = group.character_exponent(chi, psi[i]);
        }
        sum += cyclotomic_translate(f, e, exps).scaled(c * inv_size);
    }
    return sum;
}

FactoredRational quasi_ordered_genfun(const QuasiOrderedExpr& q, const Norm& norm)
{
    require_universal(q.alphabet, norm);
    validate(q.alphabet, q.congruence);
    // phi factors through the universal norm: psi(e_{nu(a)}) = phi(a).
    std::vector<int> psi(static_cast<std::size_t>(norm.dimension), q.congruence.group.identity());
    for (int a = 0; a < q.alphabet.size(); ++a) {
        psi[static_cast<std::size_t>(norm.coordinate[static_cast<std::size_t>(a)])] =
            q.congruence.phi[static_cast<std::size_t>(a)];
    }
    const FactoredRational f = ordered_genfun(q.alphabet, q.ordered, norm);
    return congruence_filter(f, q.congruence.group, psi, q.congruence.target);
}

} // namespace qordkit
