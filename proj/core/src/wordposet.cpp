#include "qordkit/wordposet.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "qordkit/error.hpp"

namespace qordkit {

PosetContext::PosetContext(int num_letters_, AbelianGroup group_, std::vector<std::string> names) :
    num_letters(num_letters_), group(std::move(group_)), letter_names(std::move(names))
{
    if (num_letters < 0) {
        throw ValidationError("letter count must be non-negative");
    }
    if (letter_names.empty()) {
        for (int i = 0; i < num_letters; ++i) {
            letter_names.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "l" + std::to_string(i));
        }
    }
    if (letter_names.size() != static_cast<std::size_t>(num_letters)) {
        throw ValidationError("one name is needed per letter");
    }
    if (std::set<std::string>(letter_names.begin(), letter_names.end()).size() != letter_names.size()) {
        throw ValidationError("letter names must be distinct");
    }
}

void validate(const PosetContext& ctx, const WeightedWord& x)
{
    if (x.letters.size() != x.weights.size()) {
        throw ValidationError("letters and weights must have equal length");
    }
    for (int a : x.letters) {
        if (a < 0 || a >= ctx.num_letters) {
            throw ValidationError("letter outside L");
        }
    }
    for (int g : x.weights) {
        if (g < 0 || g >= ctx.group.size()) {
            throw ValidationError("weight outside the group");
        }
    }
}

std::string to_string(const PosetContext& ctx, const WeightedWord& x)
{
    std::string top, bottom;
    for (int i = 0; i < x.size(); ++i) {
        top += ctx.letter_name(x.letters[static_cast<std::size_t>(i)]);
        bottom += (i ? "," : "") + ctx.group.element_name(x.weights[static_cast<std::size_t>(i)]);
    }
    if (x.size() == 1) {
        return top + "/" + bottom;
    }
    return top + "/(" + bottom + ")";
}

bool OrderedSurjection::valid() const
{
    if (source < 0 || target < 0 || map.size() != static_cast<std::size_t>(source)) {
        return false;
    }
    int next = 0; // fibers must be first hit in order 0, 1, 2, ...
    for (int v : map) {
        if (v < 0 || v >= target || v > next) {
            return false;
        }
        if (v == next) {
            ++next;
        }
    }
    return next == target;
}

std::vector<std::vector<int>> OrderedSurjection::fibers() const
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(std::max(target, 0)));
    for (int j = 0; j < source; ++j) {
        out.at(static_cast<std::size_t>(map[static_cast<std::size_t>(j)])).push_back(j);
    }
    return out;
}

std::vector<int> weight_invariant(const PosetContext& ctx, const WeightedWord& x)
{
    validate(ctx, x);
    std::vector<int> w(static_cast<std::size_t>(ctx.num_letters), ctx.group.identity());
    for (int i = 0; i < x.size(); ++i) {
        auto& slot = w[static_cast<std::size_t>(x.letters[static_cast<std::size_t>(i)])];
        slot = ctx.group.add(slot, x.weights[static_cast<std::size_t>(i)]);
    }
    return w;
}

bool validate_witness(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y,
                      const OrderedSurjection& f)
{
    if (f.source != y.size() || f.target != x.size() || !f.valid()) {
        return false;
    }
    std::vector<int> sums(static_cast<std::size_t>(x.size()), ctx.group.identity());
    for (int j = 0; j < y.size(); ++j) {
        const auto i = static_cast<std::size_t>(f.map[static_cast<std::size_t>(j)]);
        if (y.letters[static_cast<std::size_t>(j)] != x.letters[i]) {
            return false;
        }
        sums[i] = ctx.group.add(sums[i], y.weights[static_cast<std::size_t>(j)]);
    }
    return sums == x.weights;
}

std::optional<OrderedSurjection> leq(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y)
{
    validate(ctx, x);
    validate(ctx, y);
    const int n = x.size();
    const int m = y.size();
    if (m < n || weight_invariant(ctx, x) != weight_invariant(ctx, y)) {
        return std::nullopt;
    }
    std::vector<int> map(static_cast<std::size_t>(m));
    std::vector<int> sums(static_cast<std::size_t>(n), ctx.group.identity());
    std::set<std::vector<int>> failed;

    std::function<bool(int, int)> search = [&](int j, int k) {
        if (m - j < n - k) {
            return false;
        }
        if (j == m) {
            return sums == x.weights;
        }
        std::vector<int> key;
        key.reserve(sums.size() + 2);
        key.push_back(j);
        key.push_back(k);
        key.insert(key.end(), sums.begin(), sums.end());
        if (failed.count(key)) {
            return false;
        }
        const int letter = y.letters[static_cast<std::size_t>(j)];
        const int weight = y.weights[static_cast<std::size_t>(j)];
        for (int i = 0; i <= k && i < n; ++i) {
            if (x.letters[static_cast<std::size_t>(i)] != letter) {
                continue;
            }
            const int saved = sums[static_cast<std::size_t>(i)];
            sums[static_cast<std::size_t>(i)] = ctx.group.add(saved, weight);
            map[static_cast<std::size_t>(j)] = i;
            const bool ok = search(j + 1, i == k ? k + 1 : k);
            sums[static_cast<std::size_t>(i)] = saved;
            if (ok) {
                return true;
            }
        }
        failed.insert(std::move(key));
        return false;
    };
    if (!search(0, 0)) {
        return std::nullopt;
    }
    return OrderedSurjection{m, n, map};
}

std::vector<int> special_indices(const WeightedWord& x)
{
    std::vector<int> out;
    std::set<int> seen;
    for (int i = 0; i < x.size(); ++i) {
        if (seen.insert(x.letters[static_cast<std::size_t>(i)]).second) {
            out.push_back(i);
        }
    }
    return out;
}

namespace {

std::vector<bool> special_flags(const WeightedWord& x)
{
    std::vector<bool> flags(static_cast<std::size_t>(x.size()), false);
    for (int i : special_indices(x)) {
        flags[static_cast<std::size_t>(i)] = true;
    }
    return flags;
}

WeightedWord drop_last(const WeightedWord& x)
{
    WeightedWord out = x;
    out.letters.pop_back();
    out.weights.pop_back();
    return out;
}

// One step of the pinning procedure: a witness with g^-1(n-1) = {m-1}.
OrderedSurjection pin_last(const WeightedWord& x, const WeightedWord& y, OrderedSurjection g)
{
    const int n = x.size();
    const int m = y.size();
    const int last = n - 1;
    auto& f = g.map;
    if (f[static_cast<std::size_t>(m - 1)] == last) {
        std::vector<int> rest;
        for (int j = 0; j < m - 1; ++j) {
            if (f[static_cast<std::size_t>(j)] == last) {
                rest.push_back(j);
            }
        }
        if (rest.empty()) {
            return g;
        }
        const int a = x.letters[static_cast<std::size_t>(last)];
        int k = -1;
        for (int i = 0; i < last; ++i) {
            if (x.letters[static_cast<std::size_t>(i)] == a) {
                k = i;
                break;
            }
        }
        if (k < 0) {
            throw PreconditionError("final letter occurs once in x but several times in y");
        }
        for (int j : rest) {
            f[static_cast<std::size_t>(j)] = k;
        }
    } else {
        const int k = f[static_cast<std::size_t>(m - 1)];
        for (int j = 0; j < m; ++j) {
            if (f[static_cast<std::size_t>(j)] == last) {
                f[static_cast<std::size_t>(j)] = k;
            }
        }
        f[static_cast<std::size_t>(m - 1)] = last;
    }
    return g;
}

OrderedSurjection refine_rec(const WeightedWord& x, const WeightedWord& y, int r, const OrderedSurjection& g)
{
    if (r == 0) {
        return g;
    }
    OrderedSurjection h = pin_last(x, y, g);
    OrderedSurjection restricted{y.size() - 1, x.size() - 1,
                                 std::vector<int>(h.map.begin(), h.map.end() - 1)};
    OrderedSurjection f = refine_rec(drop_last(x), drop_last(y), r - 1, restricted);
    f.map.push_back(x.size() - 1);
    ++f.source;
    ++f.target;
    return f;
}

void require_valid(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y, const OrderedSurjection& f)
{
    if (!validate_witness(ctx, x, y, f)) {
        throw Error("internal: constructed map is not a witness");
    }
}

} // namespace

bool suffix_conditions_hold(const WeightedWord& x, const WeightedWord& y, int r)
{
    const int n = x.size();
    const int m = y.size();
    if (r < 0 || r > n || r > m) {
        return false;
    }
    const auto sx = special_flags(x);
    const auto sy = special_flags(y);
    for (int i = 0; i < r; ++i) {
        const auto px = static_cast<std::size_t>(n - 1 - i);
        const auto py = static_cast<std::size_t>(m - 1 - i);
        if (x.letters[px] != y.letters[py] || x.weights[px] != y.weights[py] || sx[px] != sy[py]) {
            return false;
        }
    }
    return true;
}

OrderedSurjection refine_witness(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y, int r,
                                 const OrderedSurjection& start)
{
    validate(ctx, x);
    validate(ctx, y);
    if (!suffix_conditions_hold(x, y, r)) {
        throw PreconditionError("final " + std::to_string(r) + " letters of x and y differ in letters or specialness");
    }
    if (!validate_witness(ctx, x, y, start)) {
        throw ValidationError("starting map is not a witness");
    }
    OrderedSurjection f = refine_rec(x, y, r, start);
    require_valid(ctx, x, y, f);
    return f;
}

OrderedSurjection refine_witness(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y, int r)
{
    validate(ctx, x);
    validate(ctx, y);
    if (!suffix_conditions_hold(x, y, r)) {
        throw PreconditionError("final " + std::to_string(r) + " letters of x and y differ in letters or specialness");
    }
    const auto g = leq(ctx, x, y);
    if (!g) {
        throw NoWitness("x is not below y");
    }
    return refine_witness(ctx, x, y, r, *g);
}

WeightedWord delete_from_right(const WeightedWord& x, const std::vector<int>& betas)
{
    std::set<int> drop;
    for (int b : betas) {
        if (b < 1 || b > x.size()) {
            throw ValidationError("deletion offset out of range");
        }
        drop.insert(x.size() - b);
    }
    WeightedWord out;
    for (int i = 0; i < x.size(); ++i) {
        if (!drop.count(i)) {
            out.letters.push_back(x.letters[static_cast<std::size_t>(i)]);
            out.weights.push_back(x.weights[static_cast<std::size_t>(i)]);
        }
    }
    return out;
}

OrderedSurjection deletion_lift(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y, int r,
                                const std::vector<int>& betas, const OrderedSurjection& witness_sub)
{
    validate(ctx, x);
    validate(ctx, y);
    for (std::size_t i = 0; i < betas.size(); ++i) {
        if (betas[i] < 1 || betas[i] > r || (i > 0 && betas[i] <= betas[i - 1])) {
            throw PreconditionError("deletion offsets must increase within 1..r");
        }
    }
    if (!suffix_conditions_hold(x, y, r)) {
        throw PreconditionError("final " + std::to_string(r) + " letters of x and y differ in letters or specialness");
    }
    if (!validate_witness(ctx, delete_from_right(x, betas), delete_from_right(y, betas), witness_sub)) {
        throw ValidationError("sub-witness does not witness the deleted words");
    }
    if (betas.empty()) {
        return refine_witness(ctx, x, y, r, witness_sub);
    }

    // Reinsert the deleted letters from the leftmost (largest offset) inward.
    OrderedSurjection cur = witness_sub;
    for (std::size_t j = betas.size(); j-- > 0;) {
        const std::vector<int> kept(betas.begin(), betas.begin() + static_cast<std::ptrdiff_t>(j));
        std::vector<int> with_this = kept;
        with_this.push_back(betas[j]);
        const WeightedWord zx = delete_from_right(x, kept);
        const WeightedWord zy = delete_from_right(y, kept);
        const WeightedWord sx = delete_from_right(x, with_this);
        const WeightedWord sy = delete_from_right(y, with_this);
        const int offset = betas[j] - static_cast<int>(j); // position -offset inside zx and zy

        const OrderedSurjection pinned = refine_rec(sx, sy, offset - 1, cur);
        const int px = zx.size() - offset;
        const int py = zy.size() - offset;
        OrderedSurjection next{zy.size(), zx.size(), std::vector<int>(static_cast<std::size_t>(zy.size()))};
        for (int q = 0; q < zy.size(); ++q) {
            if (q == py) {
                next.map[static_cast<std::size_t>(q)] = px;
                continue;
            }
            const int t = pinned.map[static_cast<std::size_t>(q < py ? q : q - 1)];
            next.map[static_cast<std::size_t>(q)] = t < px ? t : t + 1;
        }
        require_valid(ctx, zx, zy, next);
        cur = std::move(next);
    }
    return cur;
}

std::optional<Block> zero_sum_block(const AbelianGroup& group, const std::vector<int>& sigma)
{
    std::map<int, int> first_seen; // partial sum -> 1-based k
    int partial = group.identity();
    std::optional<Block> zero_prefix;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        if (sigma[k] < 0 || sigma[k] >= group.size()) {
            throw ValidationError("weight outside the group");
        }
        partial = group.add(partial, sigma[k]);
        auto [it, fresh] = first_seen.emplace(partial, static_cast<int>(k) + 1);
        if (!fresh) {
            return Block{it->second, static_cast<int>(k)};
        }
        if (partial == group.identity() && !zero_prefix) {
            zero_prefix = Block{0, static_cast<int>(k)};
        }
    }
    return zero_prefix;
}

DeletableBlock find_deletable_block(const PosetContext& ctx, const WeightedWord& x)
{
    validate(ctx, x);
    const int r = ctx.num_letters * (ctx.group.size() + 2);
    if (x.size() < r || r == 0) {
        throw PreconditionError("word shorter than #L * (#Lambda + 2) = " + std::to_string(r));
    }
    const int n = x.size();
    auto letter_at = [&](int offset) { return x.letters[static_cast<std::size_t>(n - offset)]; };
    auto weight_at = [&](int offset) { return x.weights[static_cast<std::size_t>(n - offset)]; };
    for (int gamma = 2; gamma <= r; ++gamma) {
        std::vector<int> candidates;
        for (int beta = 1; beta < gamma; ++beta) {
            if (letter_at(beta) == letter_at(gamma)) {
                candidates.push_back(beta);
            }
        }
        const int c = static_cast<int>(candidates.size());
        for (int size = 1; size <= c; ++size) {
            // Subsets of the given size in lexicographic order.
            std::vector<int> pick(static_cast<std::size_t>(size));
            for (int i = 0; i < size; ++i) {
                pick[static_cast<std::size_t>(i)] = i;
            }
            for (;;) {
                int sum = ctx.group.identity();
                for (int i : pick) {
                    sum = ctx.group.add(sum, weight_at(candidates[static_cast<std::size_t>(i)]));
                }
                if (sum == ctx.group.identity()) {
                    DeletableBlock out;
                    out.gamma = gamma;
                    for (int i : pick) {
                        out.betas.push_back(candidates[static_cast<std::size_t>(i)]);
                    }
                    return out;
                }
                int i = size - 1;
                while (i >= 0 && pick[static_cast<std::size_t>(i)] == c - size + i) {
                    --i;
                }
                if (i < 0) {
                    break;
                }
                ++pick[static_cast<std::size_t>(i)];
                for (int l = i + 1; l < size; ++l) {
                    pick[static_cast<std::size_t>(l)] = pick[static_cast<std::size_t>(l - 1)] + 1;
                }
            }
        }
    }
    throw Error("internal: no deletable block found in a long enough word");
}

bool is_minimal_weight_word(const AbelianGroup& group, const std::vector<int>& tau)
{
    std::set<int> sums; // nonempty subsequence sums of tau[1..]
    for (std::size_t i = 1; i < tau.size(); ++i) {
        std::set<int> next = sums;
        next.insert(tau[i]);
        for (int s : sums) {
            next.insert(group.add(s, tau[i]));
        }
        if (next.count(group.identity())) {
            return false;
        }
        sums = std::move(next);
    }
    return true;
}

namespace {

// Minimal weight words summing to target.
std::vector<std::vector<int>> minimal_fiber_words(const AbelianGroup& group, int target)
{
    std::vector<std::vector<int>> out;
    std::vector<int> tau;
    std::function<void(const std::set<int>&, int)> grow = [&](const std::set<int>& sums, int total) {
        if (total == target) {
            out.push_back(tau);
        }
        if (static_cast<int>(tau.size()) > group.size()) {
            return;
        }
        for (int g = 1; g < group.size(); ++g) {
            if (sums.count(group.negate(g))) {
                continue;
            }
            std::set<int> next = sums;
            next.insert(g);
            for (int s : sums) {
                next.insert(group.add(s, g));
            }
            if (next.count(group.identity())) {
                continue;
            }
            tau.push_back(g);
            grow(next, group.add(total, g));
            tau.pop_back();
        }
    };
    for (int first = 0; first < group.size(); ++first) {
        tau.assign(1, first);
        grow({}, first);
    }
    return out;
}

} // namespace

std::vector<WeightedWord> minimal_words_over(const PosetContext& ctx, const WeightedWord& x)
{
    validate(ctx, x);
    const int n = x.size();
    std::vector<std::vector<std::vector<int>>> options(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        options[static_cast<std::size_t>(i)] = minimal_fiber_words(ctx.group, x.weights[static_cast<std::size_t>(i)]);
    }
    std::set<WeightedWord> found;
    std::vector<const std::vector<int>*> chosen(static_cast<std::size_t>(n));
    std::vector<int> used(static_cast<std::size_t>(n), 0);
    WeightedWord word;
    int total = 0;

    std::function<void(int)> interleave = [&](int opened) {
        if (static_cast<int>(word.letters.size()) == total) {
            found.insert(word);
            return;
        }
        for (int i = 0; i <= opened && i < n; ++i) {
            const auto& w = *chosen[static_cast<std::size_t>(i)];
            auto& u = used[static_cast<std::size_t>(i)];
            if (u == static_cast<int>(w.size())) {
                continue;
            }
            word.letters.push_back(x.letters[static_cast<std::size_t>(i)]);
            word.weights.push_back(w[static_cast<std::size_t>(u)]);
            ++u;
            interleave(i == opened ? opened + 1 : opened);
            --u;
            word.letters.pop_back();
            word.weights.pop_back();
        }
    };
    std::function<void(int)> choose = [&](int i) {
        if (i == n) {
            interleave(0);
            return;
        }
        for (const auto& w : options[static_cast<std::size_t>(i)]) {
            chosen[static_cast<std::size_t>(i)] = &w;
            total += static_cast<int>(w.size());
            choose(i + 1);
            total -= static_cast<int>(w.size());
        }
    };
    choose(0);
    return {found.begin(), found.end()};
}

Alphabet sigma_alphabet(const PosetContext& ctx)
{
    std::vector<std::string> symbols;
    for (int a = 0; a < ctx.num_letters; ++a) {
        for (int g = 0; g < ctx.group.size(); ++g) {
            symbols.push_back(ctx.letter_name(a) + "/" + ctx.group.element_name(g));
        }
    }
    return Alphabet(std::move(symbols));
}

Word encode(const PosetContext& ctx, const WeightedWord& x)
{
    validate(ctx, x);
    Word w(static_cast<std::size_t>(x.size()));
    for (int i = 0; i < x.size(); ++i) {
        w[static_cast<std::size_t>(i)] =
            x.letters[static_cast<std::size_t>(i)] * ctx.group.size() + x.weights[static_cast<std::size_t>(i)];
    }
    return w;
}

WeightedWord decode(const PosetContext& ctx, const Word& w)
{
    WeightedWord x;
    const int k = ctx.group.size();
    for (int s : w) {
        if (s < 0 || s >= ctx.num_letters * k) {
            throw ValidationError("symbol outside L x Lambda");
        }
        x.letters.push_back(s / k);
        x.weights.push_back(s % k);
    }
    return x;
}

LanguageExpr word_language(const PosetContext& ctx, const WeightedWord& t)
{
    validate(ctx, t);
    if (t.empty()) {
        return LanguageExpr::epsilon();
    }
    const Word symbols = encode(ctx, t);
    std::set<int> letters;
    std::vector<LanguageExpr> parts;
    for (int i = 0; i < t.size(); ++i) {
        parts.push_back(LanguageExpr::singleton(symbols[static_cast<std::size_t>(i)]));
        letters.insert(t.letters[static_cast<std::size_t>(i)]);
        std::vector<int> pi;
        for (int a : letters) {
            for (int g = 0; g < ctx.group.size(); ++g) {
                pi.push_back(a * ctx.group.size() + g);
            }
        }
        parts.push_back(LanguageExpr::star(std::move(pi)));
    }
    return LanguageExpr::concat(std::move(parts));
}

bool in_word_language(const WeightedWord& t, const WeightedWord& r)
{
    if (t.letters.size() > r.letters.size()) {
        return false;
    }
    int top = 0;
    for (int l : r.letters) {
        top = std::max(top, l);
    }
    std::vector<char> allowed(static_cast<std::size_t>(top) + 1, 0);
    auto ok = [&](int l) { return l <= top && allowed[static_cast<std::size_t>(l)]; };
    std::size_t q = 0;
    for (std::size_t i = 0; i < t.letters.size(); ++i) {
        while (q < r.letters.size() && !(r.letters[q] == t.letters[i] && r.weights[q] == t.weights[i])) {
            if (!ok(r.letters[q])) {
                return false;
            }
            ++q;
        }
        if (q == r.letters.size()) {
            return false;
        }
        ++q;
        if (t.letters[i] <= top) {
            allowed[static_cast<std::size_t>(t.letters[i])] = 1;
        }
    }
    for (; q < r.letters.size(); ++q) {
        if (!ok(r.letters[q])) {
            return false;
        }
    }
    return true;
}

std::vector<WeightedWord> ideal_generators(const PosetContext& ctx, const WeightedWord& x)
{
    // Sorted by length, so a covered word is covered by an earlier generator.
    const auto words = minimal_words_over(ctx, x);
    std::vector<WeightedWord> out;
    for (const auto& w : words) {
        const bool covered =
            std::any_of(out.begin(), out.end(), [&](const WeightedWord& t) { return in_word_language(t, w); });
        if (!covered) {
            out.push_back(w);
        }
    }
    return out;
}

QuasiOrderedExpr principal_ideal_language(const PosetContext& ctx, const WeightedWord& x, bool prune)
{
    validate(ctx, x);
    const auto generators = prune ? ideal_generators(ctx, x) : minimal_words_over(ctx, x);
    std::vector<LanguageExpr> branches;
    for (const auto& t : generators) {
        branches.push_back(word_language(ctx, t));
    }
    QuasiOrderedExpr q;
    q.alphabet = sigma_alphabet(ctx);
    q.ordered = branches.size() == 1 ? branches.front() : LanguageExpr::union_of(std::move(branches));

    // K_theta: w(r) = theta in Lambda^L, one block of components per letter.
    std::vector<int> orders;
    for (int a = 0; a < ctx.num_letters; ++a) {
        orders.insert(orders.end(), ctx.group.cyclic_orders().begin(), ctx.group.cyclic_orders().end());
    }
    AbelianGroup big(orders);
    const std::size_t width = ctx.group.cyclic_orders().size();
    auto place = [&](int letter, int g, std::vector<int>& comps) {
        const auto c = ctx.group.components(g);
        std::copy(c.begin(), c.end(), comps.begin() + static_cast<std::ptrdiff_t>(width * static_cast<std::size_t>(letter)));
    };
    q.congruence.group = big;
    for (int a = 0; a < ctx.num_letters; ++a) {
        for (int g = 0; g < ctx.group.size(); ++g) {
            std::vector<int> comps(orders.size(), 0);
            place(a, g, comps);
            q.congruence.phi.push_back(big.element(comps));
        }
    }
    const auto theta = weight_invariant(ctx, x);
    std::vector<int> comps(orders.size(), 0);
    for (int a = 0; a < ctx.num_letters; ++a) {
        place(a, theta[static_cast<std::size_t>(a)], comps);
    }
    q.congruence.target = {big.element(comps)};
    return q;
}

// ------------------------------------------------------------ FWS series

Integer count_weighted_surjections(const AbelianGroup& group, const std::vector<int>& x, const std::vector<int>& n)
{
    if (n.size() != static_cast<std::size_t>(group.size())) {
        throw ValidationError("one count is needed per group element");
    }
    std::vector<int> elements;
    for (int g = 0; g < group.size(); ++g) {
        if (n[static_cast<std::size_t>(g)] < 0) {
            throw ValidationError("counts must be non-negative");
        }
        elements.insert(elements.end(), static_cast<std::size_t>(n[static_cast<std::size_t>(g)]), g);
    }
    for (int w : x) {
        if (w < 0 || w >= group.size()) {
            throw ValidationError("weight outside the group");
        }
    }
    const auto points = x.size();
    std::vector<int> sums(points, group.identity());
    std::vector<int> hits(points, 0);
    std::size_t empty = points;
    Integer count = 0;
    std::function<void(std::size_t)> assign = [&](std::size_t e) {
        if (elements.size() - e < empty) {
            return;
        }
        if (e == elements.size()) {
            if (sums == x) {
                ++count;
            }
            return;
        }
        for (std::size_t p = 0; p < points; ++p) {
            const int saved = sums[p];
            sums[p] = group.add(saved, elements[e]);
            if (hits[p]++ == 0) {
                --empty;
            }
            assign(e + 1);
            if (--hits[p] == 0) {
                ++empty;
            }
            sums[p] = saved;
        }
    };
    assign(0);
    return count;
}

SeriesTruncation fws_principal_series(const AbelianGroup& group, const std::vector<int>& x, int degree)
{
    if (degree < 0) {
        throw ValidationError("degree must be non-negative");
    }
    SeriesTruncation out;
    out.bound.assign(static_cast<std::size_t>(group.size()), degree);
    out.total_bound = degree;
    for (const auto& n : out.exponents()) {
        const Integer hom = count_weighted_surjections(group, x, n);
        if (hom == 0) {
            continue;
        }
        Integer multinomial;
        mpz_fac_ui(multinomial.get_mpz_t(), static_cast<unsigned long>(total_degree(n)));
        for (int k : n) {
            Integer f;
            mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(k));
            multinomial /= f;
        }
        out.set(n, Cyclotomic(Rational(multinomial * hom)));
    }
    return out;
}

FactoredRational fws_principal_closed_form(const AbelianGroup& group, const std::vector<int>& x)
{
    // Exponential generating function of surjections onto x is a product of
    // E_w = (1/#Lambda) sum_chi chi(w)^-1 exp(L_chi) - [w = 0]; the
    // multinomial weighting sends exp(L) to 1/(1 - L).
    const int k = group.size();
    const int e = group.exponent();
    for (int w : x) {
        if (w < 0 || w >= k) {
            throw ValidationError("weight outside the group");
        }
    }
    using Key = std::vector<int>; // multiplicity of each character in the exponent
    std::map<Key, Cyclotomic> terms{{Key(static_cast<std::size_t>(k), 0), Cyclotomic(1)}};
    const Cyclotomic inv = Cyclotomic(make_rational(1, k));
    for (int w : x) {
        std::map<Key, Cyclotomic> next;
        for (const auto& [key, c] : terms) {
            for (int chi = 0; chi < k; ++chi) {
                Key grown = key;
                ++grown[static_cast<std::size_t>(chi)];
                next[grown] += c * inv * Cyclotomic::root(e, -group.character_exponent(chi, w));
            }
            if (w == group.identity()) {
                next[key] -= c;
            }
        }
        terms.clear();
        for (auto& [key, c] : next) {
            if (!c.is_zero()) {
                terms.emplace(key, c);
            }
        }
    }
    FactoredRational sum = FactoredRational::zero(k);
    for (const auto& [key, c] : terms) {
        LinearForm l;
        l.coeffs.assign(static_cast<std::size_t>(k), Cyclotomic(0));
        for (int chi = 0; chi < k; ++chi) {
            if (key[static_cast<std::size_t>(chi)] == 0) {
                continue;
            }
            for (int g = 0; g < k; ++g) {
                l.coeffs[static_cast<std::size_t>(g)] +=
                    Cyclotomic(key[static_cast<std::size_t>(chi)]) * Cyclotomic::root(e, group.character_exponent(chi, g));
            }
        }
        sum += FactoredRational::geometric(l).scaled(c);
    }
    return sum;
}

} // namespace qordkit
