#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qordkit/abelian_group.hpp"

namespace qordkit {

// A word is a sequence of symbol indices into its alphabet.
using Word = std::vector<int>;

/// A norm Sigma* -> N^I induced by a map from symbols to coordinates.
struct Norm {
    std::vector<int> coordinate; // symbol index -> index in I
    int dimension = 0;           // #I

    static Norm identity(int num_symbols);
    // Injective symbol -> coordinate map.
    bool universal() const;
    std::vector<int> apply(const Word& w) const;
};

struct Alphabet {
    std::vector<std::string> symbols;
    std::optional<Norm> norm_map;

    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> symbols_, std::optional<Norm> norm = std::nullopt);

    int size() const { return static_cast<int>(symbols.size()); }
    // -1 when absent.
    int find(const std::string& token) const;
    int index_of(const std::string& token) const; // throws ValidationError
    // The attached norm, or the universal identity norm when none is attached.
    Norm norm() const;

    friend bool operator==(const Alphabet& a, const Alphabet& b) { return a.symbols == b.symbols; }
};

// Tokens are looked up one character at a time; use the vector overload for
// multi-character tokens.
Word parse_word(const Alphabet& alphabet, const std::string& text);
Word parse_word(const Alphabet& alphabet, const std::vector<std::string>& tokens);
std::string format_word(const Alphabet& alphabet, const Word& w);

/// Ordered-language expression: singletons and Pi* combined by finite union
/// and concatenation, plus the empty language and epsilon.
struct LanguageExpr {
    enum class Kind { Empty, Epsilon, Singleton, Star, Union, Concat };

    Kind kind = Kind::Empty;
    int symbol = -1;                    // Singleton
    std::vector<int> subset;            // Star; sorted, distinct
    std::vector<LanguageExpr> children; // Union, Concat

    static LanguageExpr empty();
    static LanguageExpr epsilon();
    static LanguageExpr singleton(int symbol);
    static LanguageExpr star(std::vector<int> subset);
    static LanguageExpr union_of(std::vector<LanguageExpr> children);
    static LanguageExpr concat(std::vector<LanguageExpr> children);

    friend bool operator==(const LanguageExpr& a, const LanguageExpr& b);
};

void validate(const Alphabet& alphabet, const LanguageExpr& expr);
std::string to_string(const Alphabet& alphabet, const LanguageExpr& expr);

/// Complete deterministic automaton over an explicit alphabet.
class Dfa {
public:
    Dfa() = default;
    // delta is row-major: delta[state * #symbols + symbol].
    Dfa(Alphabet alphabet, int num_states, std::vector<int> delta, int start, std::vector<bool> accepting);

    const Alphabet& alphabet() const { return alphabet_; }
    int num_states() const { return num_states_; }
    int num_symbols() const { return alphabet_.size(); }
    int start() const { return start_; }
    bool accepting(int state) const { return accepting_[static_cast<std::size_t>(state)]; }
    const std::vector<bool>& accepting_states() const { return accepting_; }
    int next(int state, int symbol) const
    {
        return delta_[static_cast<std::size_t>(state) * static_cast<std::size_t>(num_symbols()) +
                      static_cast<std::size_t>(symbol)];
    }
    const std::vector<int>& delta() const { return delta_; }

    // Runs from the start state; throws ValidationError on foreign symbols.
    int run(const Word& w) const;

    // States from which some accepting state is reachable.
    std::vector<bool> live_states() const;
    bool empty_language() const;

    friend bool operator==(const Dfa& a, const Dfa& b);

private:
    Alphabet alphabet_;
    int num_states_ = 0;
    std::vector<int> delta_;
    int start_ = 0;
    std::vector<bool> accepting_;
};

/// Words w with phi(w) in the target set, phi a monoid map to a finite abelian group.
struct CongruenceSpec {
    AbelianGroup group;
    std::vector<int> phi;    // symbol -> group element index
    std::vector<int> target; // sorted element indices

    // The modulus of the language, i.e. the exponent of the group.
    int modulus() const { return group.exponent(); }
    bool contains(int element) const;
    int evaluate(const Word& w) const;
};

void validate(const Alphabet& alphabet, const CongruenceSpec& spec);

/// Intersection of an ordered language and a congruence language.
struct QuasiOrderedExpr {
    Alphabet alphabet;
    LanguageExpr ordered;
    CongruenceSpec congruence;
};

// NFA construction, subset construction, Hopcroft minimization; states are
// numbered canonically by breadth-first search from the start state.
Dfa compile_ordered(const Alphabet& alphabet, const LanguageExpr& expr);
// Exactly #Lambda states: state g, transition g -> g + phi(a), start 0.
Dfa compile_congruence(const Alphabet& alphabet, const CongruenceSpec& spec);
Dfa compile_quasi_ordered(const QuasiOrderedExpr& q);

// Reachable product automaton, BFS-numbered.
Dfa intersect_dfa(const Dfa& a, const Dfa& b);
Dfa union_dfa(const Dfa& a, const Dfa& b);
Dfa minimize(const Dfa& d);
Dfa all_words_dfa(const Alphabet& alphabet);
Dfa empty_dfa(const Alphabet& alphabet);

bool membership(const Dfa& d, const Word& w);

// Accepted words with norm <= bound coordinatewise, in lexicographic order.
std::vector<Word> enumerate_by_norm(const Dfa& d, const Norm& norm, const std::vector<int>& bound);

} // namespace qordkit
