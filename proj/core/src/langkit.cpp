#include "qordkit/langkit.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <set>

#include "qordkit/error.hpp"

namespace qordkit {

// ---------------------------------------------------------------- alphabet

Norm Norm::identity(int num_symbols)
{
    Norm n;
    n.dimension = num_symbols;
    n.coordinate.resize(static_cast<std::size_t>(num_symbols));
    for (int i = 0; i < num_symbols; ++i) {
        n.coordinate[static_cast<std::size_t>(i)] = i;
    }
    return n;
}

bool Norm::universal() const
{
    std::vector<char> seen(static_cast<std::size_t>(std::max(dimension, 0)), 0);
    for (int c : coordinate) {
        if (c < 0 || c >= dimension || seen[static_cast<std::size_t>(c)]) {
            return false;
        }
        seen[static_cast<std::size_t>(c)] = 1;
    }
    return true;
}

std::vector<int> Norm::apply(const Word& w) const
{
    std::vector<int> out(static_cast<std::size_t>(dimension), 0);
    for (int s : w) {
        ++out[static_cast<std::size_t>(coordinate.at(static_cast<std::size_t>(s)))];
    }
    return out;
}

Alphabet::Alphabet(std::vector<std::string> symbols_, std::optional<Norm> norm) :
    symbols(std::move(symbols_)), norm_map(std::move(norm))
{
    std::set<std::string> seen;
    for (const auto& s : symbols) {
        if (!seen.insert(s).second) {
            throw ValidationError("duplicate alphabet symbol '" + s + "'");
        }
    }
    if (norm_map) {
        if (norm_map->coordinate.size() != symbols.size()) {
            throw ValidationError("norm map must assign a coordinate to every symbol");
        }
        for (int c : norm_map->coordinate) {
            if (c < 0 || c >= norm_map->dimension) {
                throw ValidationError("norm coordinate out of range");
            }
        }
    }
}

int Alphabet::find(const std::string& token) const
{
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i] == token) {
            return static_cast<int>(i);
        }
    }
    return -1;
}

int Alphabet::index_of(const std::string& token) const
{
    const int i = find(token);
    if (i < 0) {
        throw ValidationError("symbol '" + token + "' is not in the alphabet");
    }
    return i;
}

Norm Alphabet::norm() const
{
    return norm_map ? *norm_map : Norm::identity(size());
}

Word parse_word(const Alphabet& alphabet, const std::string& text)
{
    Word w;
    w.reserve(text.size());
    for (char c : text) {
        w.push_back(alphabet.index_of(std::string(1, c)));
    }
    return w;
}

Word parse_word(const Alphabet& alphabet, const std::vector<std::string>& tokens)
{
    Word w;
    w.reserve(tokens.size());
    for (const auto& t : tokens) {
        w.push_back(alphabet.index_of(t));
    }
    return w;
}

std::string format_word(const Alphabet& alphabet, const Word& w)
{
    std::string out;
    for (int s : w) {
        out += alphabet.symbols.at(static_cast<std::size_t>(s));
    }
    return out;
}

// -------------------------------------------------------------- expressions

LanguageExpr LanguageExpr::empty()
{
    return {};
}

LanguageExpr LanguageExpr::epsilon()
{
    LanguageExpr e;
    e.kind = Kind::Epsilon;
    return e;
}

LanguageExpr LanguageExpr::singleton(int symbol)
{
    LanguageExpr e;
    e.kind = Kind::Singleton;
    e.symbol = symbol;
    return e;
}

LanguageExpr LanguageExpr::star(std::vector<int> subset)
{
    LanguageExpr e;
    e.kind = Kind::Star;
    std::sort(subset.begin(), subset.end());
    subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
    e.subset = std::move(subset);
    return e;
}

LanguageExpr LanguageExpr::union_of(std::vector<LanguageExpr> children)
{
    LanguageExpr e;
    e.kind = Kind::Union;
    e.children = std::move(children);
    return e;
}

LanguageExpr LanguageExpr::concat(std::vector<LanguageExpr> children)
{
    LanguageExpr e;
    e.kind = Kind::Concat;
    e.children = std::move(children);
    return e;
}

bool operator==(const LanguageExpr& a, const LanguageExpr& b)
{
    return a.kind == b.kind && a.symbol == b.symbol && a.subset == b.subset && a.children == b.children;
}

void validate(const Alphabet& alphabet, const LanguageExpr& expr)
{
    using Kind = LanguageExpr::Kind;
    switch (expr.kind) {
    case Kind::Empty:
    case Kind::Epsilon:
        return;
    case Kind::Singleton:
        if (expr.symbol < 0 || expr.symbol >= alphabet.size()) {
            throw ValidationError("singleton symbol index out of range");
        }
        return;
    case Kind::Star:
        for (int s : expr.subset) {
            if (s < 0 || s >= alphabet.size()) {
                throw ValidationError("star subset is not contained in the alphabet");
            }
        }
        return;
    case Kind::Union:
    case Kind::Concat:
        for (const auto& c : expr.children) {
            validate(alphabet, c);
        }
        return;
    }
}

std::string to_string(const Alphabet& alphabet, const LanguageExpr& expr)
{
    using Kind = LanguageExpr::Kind;
    auto sym = [&](int s) { return alphabet.symbols.at(static_cast<std::size_t>(s)); };
    switch (expr.kind) {
    case Kind::Empty:
        return "{}";
    case Kind::Epsilon:
        return "()";
    case Kind::Singleton:
        return sym(expr.symbol);
    case Kind::Star: {
        std::string out = "{";
        for (std::size_t i = 0; i < expr.subset.size(); ++i) {
            out += (i ? "," : "") + sym(expr.subset[i]);
        }
        return out + "}*";
    }
    case Kind::Union:
    case Kind::Concat: {
        const char* sep = expr.kind == Kind::Union ? " | " : " ";
        std::string out = "(";
        for (std::size_t i = 0; i < expr.children.size(); ++i) {
            out += (i ? sep : "") + to_string(alphabet, expr.children[i]);
        }
        return out + ")";
    }
    }
    return {};
}

// ---------------------------------------------------------------------- DFA

Dfa::Dfa(Alphabet alphabet, int num_states, std::vector<int> delta, int start, std::vector<bool> accepting) :
    alphabet_(std::move(alphabet)),
    num_states_(num_states),
    delta_(std::move(delta)),
    start_(start),
    accepting_(std::move(accepting))
{
    if (num_states_ < 1) {
        throw ValidationError("a DFA needs at least one state");
    }
    if (delta_.size() != static_cast<std::size_t>(num_states_) * static_cast<std::size_t>(alphabet_.size())) {
        throw ValidationError("DFA transition table is not total");
    }
    for (int t : delta_) {
        if (t < 0 || t >= num_states_) {
            throw ValidationError("DFA transition target out of range");
        }
    }
    if (start_ < 0 || start_ >= num_states_) {
        throw ValidationError("DFA start state out of range");
    }
    if (accepting_.size() != static_cast<std::size_t>(num_states_)) {
        throw ValidationError("DFA accepting flags must cover every state");
    }
}

int Dfa::run(const Word& w) const
{
    int q = start_;
    for (int s : w) {
        if (s < 0 || s >= num_symbols()) {
            throw ValidationError("word contains a symbol outside the DFA alphabet");
        }
        q = next(q, s);
    }
    return q;
}

std::vector<bool> Dfa::live_states() const
{
    const auto n = static_cast<std::size_t>(num_states_);
    std::vector<std::vector<int>> inverse(n);
    for (int q = 0; q < num_states_; ++q) {
        for (int a = 0; a < num_symbols(); ++a) {
            inverse[static_cast<std::size_t>(next(q, a))].push_back(q);
        }
    }
    std::vector<bool> live(n, false);
    std::deque<int> queue;
    for (int q = 0; q < num_states_; ++q) {
        if (accepting_[static_cast<std::size_t>(q)]) {
            live[static_cast<std::size_t>(q)] = true;
            queue.push_back(q);
        }
    }
    while (!queue.empty()) {
        const int q = queue.front();
        queue.pop_front();
        for (int p : inverse[static_cast<std::size_t>(q)]) {
            if (!live[static_cast<std::size_t>(p)]) {
                live[static_cast<std::size_t>(p)] = true;
                queue.push_back(p);
            }
        }
    }
    return live;
}

bool Dfa::empty_language() const
{
    return !live_states()[static_cast<std::size_t>(start_)];
}

bool operator==(const Dfa& a, const Dfa& b)
{
    return a.alphabet_ == b.alphabet_ && a.num_states_ == b.num_states_ && a.delta_ == b.delta_ &&
           a.start_ == b.start_ && a.accepting_ == b.accepting_;
}

namespace {

// Renumber the states reachable from the start in BFS order (symbols ascending).
Dfa canonical_reachable(const Alphabet& alphabet, int num_states, const std::vector<int>& delta, int start,
                        const std::vector<bool>& accepting)
{
    const int k = alphabet.size();
    std::vector<int> number(static_cast<std::size_t>(num_states), -1);
    std::vector<int> order;
    number[static_cast<std::size_t>(start)] = 0;
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int q = order[head];
        for (int a = 0; a < k; ++a) {
            const int t = delta[static_cast<std::size_t>(q * k + a)];
            if (number[static_cast<std::size_t>(t)] < 0) {
                number[static_cast<std::size_t>(t)] = static_cast<int>(order.size());
                order.push_back(t);
            }
        }
    }
    const int n = static_cast<int>(order.size());
    std::vector<int> new_delta(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    std::vector<bool> new_accepting(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        const int q = order[static_cast<std::size_t>(i)];
        new_accepting[static_cast<std::size_t>(i)] = accepting[static_cast<std::size_t>(q)];
        for (int a = 0; a < k; ++a) {
            new_delta[static_cast<std::size_t>(i * k + a)] =
                number[static_cast<std::size_t>(delta[static_cast<std::size_t>(q * k + a)])];
        }
    }
    return Dfa(alphabet, n, std::move(new_delta), 0, std::move(new_accepting));
}

// Thompson-style NFA with epsilon moves. Star(Pi) is a single state carrying
// self-loops, which is sound because fragments are only entered through
// their start state.
struct Nfa {
    struct State {
        std::vector<std::pair<int, int>> moves; // (symbol, target)
        std::vector<int> eps;
    };
    std::vector<State> states;

    int add()
    {
        states.emplace_back();
        return static_cast<int>(states.size()) - 1;
    }
};

std::pair<int, int> build_fragment(Nfa& nfa, const LanguageExpr& expr)
{
    using Kind = LanguageExpr::Kind;
    switch (expr.kind) {
    case Kind::Empty: {
        return {nfa.add(), nfa.add()};
    }
    case Kind::Epsilon: {
        const int s = nfa.add();
        return {s, s};
    }
    case Kind::Singleton: {
        const int s = nfa.add();
        const int f = nfa.add();
        nfa.states[static_cast<std::size_t>(s)].moves.emplace_back(expr.symbol, f);
        return {s, f};
    }
    case Kind::Star: {
        const int s = nfa.add();
        for (int a : expr.subset) {
            nfa.states[static_cast<std::size_t>(s)].moves.emplace_back(a, s);
        }
        // Fresh exit so that nothing entering later can reach the loops.
        const int f = nfa.add();
        nfa.states[static_cast<std::size_t>(s)].eps.push_back(f);
        return {s, f};
    }
    case Kind::Union: {
        const int s = nfa.add();
        const int f = nfa.add();
        for (const auto& c : expr.children) {
            auto [cs, cf] = build_fragment(nfa, c);
            nfa.states[static_cast<std::size_t>(s)].eps.push_back(cs);
            nfa.states[static_cast<std::size_t>(cf)].eps.push_back(f);
        }
        return {s, f};
    }
    case Kind::Concat: {
        const int s = nfa.add();
        int cur = s;
        for (const auto& c : expr.children) {
            auto [cs, cf] = build_fragment(nfa, c);
            nfa.states[static_cast<std::size_t>(cur)].eps.push_back(cs);
            cur = cf;
        }
        return {s, cur};
    }
    }
    throw Error("internal: unknown expression kind");
}

void eps_closure(const Nfa& nfa, std::vector<int>& set, std::vector<char>& mark)
{
    std::vector<int> stack(set.begin(), set.end());
    for (int q : set) {
        mark[static_cast<std::size_t>(q)] = 1;
    }
    while (!stack.empty()) {
        const int q = stack.back();
        stack.pop_back();
        for (int t : nfa.states[static_cast<std::size_t>(q)].eps) {
            if (!mark[static_cast<std::size_t>(t)]) {
                mark[static_cast<std::size_t>(t)] = 1;
                set.push_back(t);
                stack.push_back(t);
            }
        }
    }
    for (int q : set) {
        mark[static_cast<std::size_t>(q)] = 0;
    }
    std::sort(set.begin(), set.end());
}

} // namespace

namespace {

// x_1 A_1* x_2 A_2* ... with A_0 <= A_1 <= ... (a leading star is A_0)
// is matched greedily: taking x_{i+1} at its first chance never loses a
// parse, so one state per matched singleton suffices.
std::optional<Dfa> chain_dfa(const Alphabet& alphabet, const LanguageExpr& expr)
{
    using Kind = LanguageExpr::Kind;
    if (expr.kind != Kind::Concat) {
        return std::nullopt;
    }
    std::vector<int> singles;
    std::vector<std::vector<int>> allowed(1);
    for (const auto& c : expr.children) {
        if (c.kind == Kind::Singleton) {
            singles.push_back(c.symbol);
            allowed.emplace_back();
        } else if (c.kind == Kind::Star && allowed.back().empty()) {
            allowed.back() = c.subset;
        } else {
            return std::nullopt;
        }
    }
    for (std::size_t i = 1; i < allowed.size(); ++i) {
        if (!std::includes(allowed[i].begin(), allowed[i].end(), allowed[i - 1].begin(), allowed[i - 1].end())) {
            return std::nullopt;
        }
    }
    const int n = static_cast<int>(singles.size());
    const int k = alphabet.size();
    const int dead = n + 1;
    std::vector<int> delta;
    std::vector<bool> accepting;
    for (int i = 0; i <= dead; ++i) {
        accepting.push_back(i == n);
        for (int a = 0; a < k; ++a) {
            int t = dead;
            if (i < n && a == singles[static_cast<std::size_t>(i)]) {
                t = i + 1;
            } else if (i <= n && std::binary_search(allowed[static_cast<std::size_t>(i)].begin(),
                                                    allowed[static_cast<std::size_t>(i)].end(), a)) {
                t = i;
            }
            delta.push_back(t);
        }
    }
    return minimize(Dfa(alphabet, n + 2, std::move(delta), 0, std::move(accepting)));
}

} // namespace

Dfa compile_ordered(const Alphabet& alphabet, const LanguageExpr& expr)
{
    validate(alphabet, expr);
    // Large unions determinize badly as one automaton.
    if (expr.kind == LanguageExpr::Kind::Union && expr.children.size() > 1) {
        std::vector<Dfa> branches;
        for (const auto& c : expr.children) {
            branches.push_back(compile_ordered(alphabet, c));
        }
        // Balanced pairwise merging keeps the intermediate automata small.
        while (branches.size() > 1) {
            std::vector<Dfa> merged;
            for (std::size_t i = 0; i + 1 < branches.size(); i += 2) {
                merged.push_back(minimize(union_dfa(branches[i], branches[i + 1])));
            }
            if (branches.size() % 2) {
                merged.push_back(std::move(branches.back()));
            }
            branches = std::move(merged);
        }
        return branches.front();
    }
    if (auto chain = chain_dfa(alphabet, expr)) {
        return *chain;
    }
    Nfa nfa;
    const auto [start, final_state] = build_fragment(nfa, expr);
    const int k = alphabet.size();

    std::vector<char> mark(nfa.states.size(), 0);
    std::map<std::vector<int>, int> ids;
    std::vector<std::vector<int>> sets;
    std::vector<int> delta;
    std::vector<bool> accepting;

    auto intern = [&](std::vector<int> set) {
        auto it = ids.find(set);
        if (it != ids.end()) {
            return it->second;
        }
        const int id = static_cast<int>(sets.size());
        ids.emplace(set, id);
        accepting.push_back(std::binary_search(set.begin(), set.end(), final_state));
        sets.push_back(std::move(set));
        return id;
    };

    std::vector<int> init{start};
    eps_closure(nfa, init, mark);
    intern(std::move(init));
    std::vector<std::vector<int>> buckets(static_cast<std::size_t>(k));
    for (std::size_t cur = 0; cur < sets.size(); ++cur) {
        for (auto& b : buckets) {
            b.clear();
        }
        for (int q : sets[cur]) {
            for (const auto& [a, t] : nfa.states[static_cast<std::size_t>(q)].moves) {
                buckets[static_cast<std::size_t>(a)].push_back(t);
            }
        }
        for (int a = 0; a < k; ++a) {
            auto& b = buckets[static_cast<std::size_t>(a)];
            std::sort(b.begin(), b.end());
            b.erase(std::unique(b.begin(), b.end()), b.end());
            std::vector<int> next = b;
            eps_closure(nfa, next, mark);
            delta.push_back(intern(std::move(next)));
        }
    }
    const int n = static_cast<int>(sets.size());
    return minimize(Dfa(alphabet, n, std::move(delta), 0, std::move(accepting)));
}

Dfa minimize(const Dfa& input)
{
    // Only reachable states take part.
    const Dfa d = canonical_reachable(input.alphabet(), input.num_states(), input.delta(), input.start(),
                                      input.accepting_states());
    const int n = d.num_states();
    const int k = d.num_symbols();
    const auto un = static_cast<std::size_t>(n);

    // Predecessors in CSR form: inv_list[inv_start[a * (n + 1) + q] ...] are the p with p -a-> q.
    std::vector<int> inv_start(static_cast<std::size_t>(k) * (un + 1), 0);
    std::vector<int> inv_list(un * static_cast<std::size_t>(k));
    for (int a = 0; a < k; ++a) {
        int* start = &inv_start[static_cast<std::size_t>(a) * (un + 1)];
        for (int q = 0; q < n; ++q) {
            ++start[d.next(q, a) + 1];
        }
        for (int q = 0; q < n; ++q) {
            start[q + 1] += start[q];
        }
        std::vector<int> fill(start, start + n);
        for (int q = 0; q < n; ++q) {
            const int t = d.next(q, a);
            inv_list[static_cast<std::size_t>(a) * un + static_cast<std::size_t>(fill[static_cast<std::size_t>(t)]++)] = q;
        }
    }

    std::vector<int> block_of(un);
    std::vector<std::vector<int>> blocks;
    {
        std::vector<int> acc, rej;
        for (int q = 0; q < n; ++q) {
            (d.accepting(q) ? acc : rej).push_back(q);
        }
        for (auto* part : {&acc, &rej}) {
            if (!part->empty()) {
                for (int q : *part) {
                    block_of[static_cast<std::size_t>(q)] = static_cast<int>(blocks.size());
                }
                blocks.push_back(std::move(*part));
            }
        }
    }
    std::vector<char> in_work(blocks.size(), 1);
    std::deque<int> work;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
        work.push_back(static_cast<int>(b));
    }

    std::vector<char> marked(un, 0);
    std::vector<int> hit_count(blocks.size(), 0);
    std::vector<int> touched_states, touched_blocks, splitter_states;
    while (!work.empty()) {
        const int splitter = work.front();
        work.pop_front();
        in_work[static_cast<std::size_t>(splitter)] = 0;
        splitter_states = blocks[static_cast<std::size_t>(splitter)];
        for (int a = 0; a < k; ++a) {
            const int* start = &inv_start[static_cast<std::size_t>(a) * (un + 1)];
            const int* list = &inv_list[static_cast<std::size_t>(a) * un];
            touched_states.clear();
            touched_blocks.clear();
            for (int q : splitter_states) {
                for (int i = start[q]; i < start[q + 1]; ++i) {
                    const int p = list[i];
                    if (!marked[static_cast<std::size_t>(p)]) {
                        marked[static_cast<std::size_t>(p)] = 1;
                        touched_states.push_back(p);
                        const int b = block_of[static_cast<std::size_t>(p)];
                        if (hit_count[static_cast<std::size_t>(b)]++ == 0) {
                            touched_blocks.push_back(b);
                        }
                    }
                }
            }
            for (int b : touched_blocks) {
                auto& members = blocks[static_cast<std::size_t>(b)];
                const auto hits = static_cast<std::size_t>(hit_count[static_cast<std::size_t>(b)]);
                hit_count[static_cast<std::size_t>(b)] = 0;
                if (hits == members.size()) {
                    continue;
                }
                std::vector<int> inside, outside;
                inside.reserve(hits);
                outside.reserve(members.size() - hits);
                for (int q : members) {
                    (marked[static_cast<std::size_t>(q)] ? inside : outside).push_back(q);
                }
                const int fresh = static_cast<int>(blocks.size());
                members = std::move(outside);
                for (int q : inside) {
                    block_of[static_cast<std::size_t>(q)] = fresh;
                }
                blocks.push_back(std::move(inside));
                in_work.push_back(0);
                hit_count.push_back(0);
                if (in_work[static_cast<std::size_t>(b)]) {
                    work.push_back(fresh);
                    in_work[static_cast<std::size_t>(fresh)] = 1;
                } else {
                    const int smaller = blocks[static_cast<std::size_t>(b)].size() <=
                                                blocks[static_cast<std::size_t>(fresh)].size()
                                            ? b
                                            : fresh;
                    work.push_back(smaller);
                    in_work[static_cast<std::size_t>(smaller)] = 1;
                }
            }
            for (int p : touched_states) {
                marked[static_cast<std::size_t>(p)] = 0;
            }
        }
    }

    const int m = static_cast<int>(blocks.size());
    std::vector<int> delta(static_cast<std::size_t>(m) * static_cast<std::size_t>(k));
    std::vector<bool> accepting(static_cast<std::size_t>(m));
    for (int b = 0; b < m; ++b) {
        const int rep = blocks[static_cast<std::size_t>(b)].front();
        accepting[static_cast<std::size_t>(b)] = d.accepting(rep);
        for (int a = 0; a < k; ++a) {
            delta[static_cast<std::size_t>(b * k + a)] = block_of[static_cast<std::size_t>(d.next(rep, a))];
        }
    }
    return canonical_reachable(d.alphabet(), m, delta, block_of[static_cast<std::size_t>(d.start())], accepting);
}

// ----------------------------------------------------------- congruences

bool CongruenceSpec::contains(int element) const
{
    return std::binary_search(target.begin(), target.end(), element);
}

int CongruenceSpec::evaluate(const Word& w) const
{
    int g = group.identity();
    for (int s : w) {
        g = group.add(g, phi.at(static_cast<std::size_t>(s)));
    }
    return g;
}

void validate(const Alphabet& alphabet, const CongruenceSpec& spec)
{
    if (spec.phi.size() != static_cast<std::size_t>(alphabet.size())) {
        throw ValidationError("congruence map must be total on the alphabet");
    }
    for (int g : spec.phi) {
        if (g < 0 || g >= spec.group.size()) {
            throw ValidationError("congruence map value outside the group");
        }
    }
    for (std::size_t i = 0; i < spec.target.size(); ++i) {
        if (spec.target[i] < 0 || spec.target[i] >= spec.group.size()) {
            throw ValidationError("congruence target outside the group");
        }
        if (i > 0 && spec.target[i] <= spec.target[i - 1]) {
            throw ValidationError("congruence target set must be sorted and distinct");
        }
    }
}

Dfa compile_congruence(const Alphabet& alphabet, const CongruenceSpec& spec)
{
    validate(alphabet, spec);
    const int n = spec.group.size();
    const int k = alphabet.size();
    std::vector<int> delta(static_cast<std::size_t>(n) * static_cast<std::size_t>(k));
    std::vector<bool> accepting(static_cast<std::size_t>(n));
    for (int g = 0; g < n; ++g) {
        accepting[static_cast<std::size_t>(g)] = spec.contains(g);
        for (int a = 0; a < k; ++a) {
            delta[static_cast<std::size_t>(g * k + a)] = spec.group.add(g, spec.phi[static_cast<std::size_t>(a)]);
        }
    }
    return Dfa(alphabet, n, std::move(delta), spec.group.identity(), std::move(accepting));
}

Dfa compile_quasi_ordered(const QuasiOrderedExpr& q)
{
    return intersect_dfa(compile_ordered(q.alphabet, q.ordered), compile_congruence(q.alphabet, q.congruence));
}

namespace {

Dfa product_dfa(const Dfa& a, const Dfa& b, bool want_both)
{
    if (!(a.alphabet() == b.alphabet())) {
        throw ValidationError("cannot combine automata over different alphabets");
    }
    const int k = a.num_symbols();
    // Dense pair numbering when it fits, a map otherwise.
    const auto cells = static_cast<std::size_t>(a.num_states()) * static_cast<std::size_t>(b.num_states());
    const bool dense = cells <= (std::size_t{1} << 24);
    std::vector<int> dense_ids(dense ? cells : 0, -1);
    std::map<std::pair<int, int>, int> ids;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> delta;
    std::vector<bool> accepting;
    auto intern = [&](std::pair<int, int> p) {
        int* slot = nullptr;
        if (dense) {
            slot = &dense_ids[static_cast<std::size_t>(p.first) * static_cast<std::size_t>(b.num_states()) +
                              static_cast<std::size_t>(p.second)];
            if (*slot >= 0) {
                return *slot;
            }
        } else if (auto it = ids.find(p); it != ids.end()) {
            return it->second;
        }
        const int id = static_cast<int>(pairs.size());
        if (dense) {
            *slot = id;
        } else {
            ids.emplace(p, id);
        }
        pairs.push_back(p);
        accepting.push_back(want_both ? a.accepting(p.first) && b.accepting(p.second)
                                      : a.accepting(p.first) || b.accepting(p.second));
        return id;
    };
    intern({a.start(), b.start()});
    for (std::size_t cur = 0; cur < pairs.size(); ++cur) {
        const auto [p, q] = pairs[cur];
        for (int s = 0; s < k; ++s) {
            delta.push_back(intern({a.next(p, s), b.next(q, s)}));
        }
    }
    const int n = static_cast<int>(pairs.size());
    return Dfa(a.alphabet(), n, std::move(delta), 0, std::move(accepting));
}

} // namespace

Dfa intersect_dfa(const Dfa& a, const Dfa& b)
{
    return product_dfa(a, b, true);
}

Dfa union_dfa(const Dfa& a, const Dfa& b)
{
    return product_dfa(a, b, false);
}

Dfa all_words_dfa(const Alphabet& alphabet)
{
    return Dfa(alphabet, 1, std::vector<int>(static_cast<std::size_t>(alphabet.size()), 0), 0, {true});
}

Dfa empty_dfa(const Alphabet& alphabet)
{
    return Dfa(alphabet, 1, std::vector<int>(static_cast<std::size_t>(alphabet.size()), 0), 0, {false});
}

bool membership(const Dfa& d, const Word& w)
{
    return d.accepting(d.run(w));
}

std::vector<Word> enumerate_by_norm(const Dfa& d, const Norm& norm, const std::vector<int>& bound)
{
    if (norm.coordinate.size() != static_cast<std::size_t>(d.num_symbols())) {
        throw ValidationError("norm does not match the DFA alphabet");
    }
    if (bound.size() != static_cast<std::size_t>(norm.dimension)) {
        throw ValidationError("bound dimension does not match the norm");
    }
    std::vector<Word> out;
    const auto live = d.live_states();
    std::vector<int> used(bound.size(), 0);
    Word w;
    std::function<void(int)> visit = [&](int q) {
        if (!live[static_cast<std::size_t>(q)]) {
            return;
        }
        if (d.accepting(q)) {
            out.push_back(w);
        }
        for (int a = 0; a < d.num_symbols(); ++a) {
            const auto c = static_cast<std::size_t>(norm.coordinate[static_cast<std::size_t>(a)]);
            if (used[c] >= bound[c]) {
                continue;
            }
            ++used[c];
            w.push_back(a);
            visit(d.next(q, a));
            w.pop_back();
            --used[c];
        }
    };
    visit(d.start());
    return out;
}

} // namespace qordkit
