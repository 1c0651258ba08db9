#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qordkit/abelian_group.hpp"
#include "qordkit/genfun.hpp"
#include "qordkit/langkit.hpp"

namespace qordkit {

/// Letters L = {0, ..., #L-1} and weights in a finite abelian group.
struct PosetContext {
    int num_letters = 0;
    AbelianGroup group;
    std::vector<std::string> letter_names; // defaults to a, b, c, ...

    PosetContext() = default;
    PosetContext(int num_letters_, AbelianGroup group_, std::vector<std::string> names = {});

    const std::string& letter_name(int letter) const { return letter_names.at(static_cast<std::size_t>(letter)); }
};

/// s/sigma: letters and group-element weights of equal length.
struct WeightedWord {
    std::vector<int> letters;
    std::vector<int> weights;

    int size() const { return static_cast<int>(letters.size()); }
    bool empty() const { return letters.empty(); }

    friend bool operator==(const WeightedWord& a, const WeightedWord& b)
    {
        return a.letters == b.letters && a.weights == b.weights;
    }
    friend bool operator<(const WeightedWord& a, const WeightedWord& b)
    {
        if (a.letters.size() != b.letters.size()) {
            return a.letters.size() < b.letters.size();
        }
        return a.letters != b.letters ? a.letters < b.letters : a.weights < b.weights;
    }
};

void validate(const PosetContext& ctx, const WeightedWord& x);
// "ab/(1,0)" for cyclic groups, "ab/((1,0),(0,1))" for products.
std::string to_string(const PosetContext& ctx, const WeightedWord& x);

/// f: [source] -> [target], 0-based; map[j] is the image of position j.
struct OrderedSurjection {
    int source = 0;
    int target = 0;
    std::vector<int> map;

    // Surjective with increasing fiber minima.
    bool valid() const;
    std::vector<std::vector<int>> fibers() const;

    friend bool operator==(const OrderedSurjection& a, const OrderedSurjection& b)
    {
        return a.source == b.source && a.target == b.target && a.map == b.map;
    }
};

std::vector<int> weight_invariant(const PosetContext& ctx, const WeightedWord& x);

// f witnesses x <= y: ordered surjection [|y|] -> [|x|], letters pulled
// back, weights summed over fibers.
bool validate_witness(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y,
                      const OrderedSurjection& f);

// Lexicographically first witness (each position of y tries fibers in
// ascending order), or nullopt.
std::optional<OrderedSurjection> leq(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y);

// First-occurrence positions, 0-based.
std::vector<int> special_indices(const WeightedWord& x);

// Conditions (a) and (b): the final r letters agree and so does their specialness.
bool suffix_conditions_hold(const WeightedWord& x, const WeightedWord& y, int r);

// A witness whose last r fibers are the singletons {m-1-i} -> n-1-i.
// Throws PreconditionError when the suffix conditions fail and NoWitness
// when x is not below y.
OrderedSurjection refine_witness(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y, int r);
// Same, starting from a given witness.
OrderedSurjection refine_witness(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y, int r,
                                 const OrderedSurjection& start);

// x' and y' delete the letters at offsets -beta (1 = last letter).
WeightedWord delete_from_right(const WeightedWord& x, const std::vector<int>& betas);

// Lifts a witness of x' <= y' to a witness of x <= y. betas are increasing
// offsets from the right, each <= r.
OrderedSurjection deletion_lift(const PosetContext& ctx, const WeightedWord& x, const WeightedWord& y, int r,
                                const std::vector<int>& betas, const OrderedSurjection& witness_sub);

struct Block {
    int first = 0; // 0-based, inclusive
    int last = 0;  // 0-based, inclusive
};

// Contiguous zero-sum block from the first repeated partial sum; falls back
// to the shortest zero prefix.
std::optional<Block> zero_sum_block(const AbelianGroup& group, const std::vector<int>& sigma);

struct DeletableBlock {
    std::vector<int> betas; // increasing offsets from the right
    int gamma = 0;
};

// Requires |x| >= #L * (#Lambda + 2).
DeletableBlock find_deletable_block(const PosetContext& ctx, const WeightedWord& x);

// Weight words with no zero-sum nonempty subsequence after the first entry.
bool is_minimal_weight_word(const AbelianGroup& group, const std::vector<int>& tau);

// Every word minimal over x, sorted.
std::vector<WeightedWord> minimal_words_over(const PosetContext& ctx, const WeightedWord& x);

// Sigma = L x Lambda; symbol index = letter * #Lambda + weight.
Alphabet sigma_alphabet(const PosetContext& ctx);
Word encode(const PosetContext& ctx, const WeightedWord& x);
WeightedWord decode(const PosetContext& ctx, const Word& w);

// L(t/tau) = (t1/tau1) Pi_1* ... (tn/taun) Pi_n*.
LanguageExpr word_language(const PosetContext& ctx, const WeightedWord& t);
// Membership in L(t/tau) by greedy leftmost matching.
bool in_word_language(const WeightedWord& t, const WeightedWord& r);

// Minimal words whose language is not contained in another's.
std::vector<WeightedWord> ideal_generators(const PosetContext& ctx, const WeightedWord& x);

// union of L(t/tau) over the minimal words, intersected with K_theta,
// theta = weight_invariant(x).
QuasiOrderedExpr principal_ideal_language(const PosetContext& ctx, const WeightedWord& x, bool prune = true);

// Hom_FWS([n], x): surjections from the weighted set with n_g elements of
// weight g onto x whose fiber sums equal the weights of x.
Integer count_weighted_surjections(const AbelianGroup& group, const std::vector<int>& x, const std::vector<int>& n);

// Coefficient of t^n = C_n * #Hom([n], x) for |n| <= degree; one variable
// per group element.
SeriesTruncation fws_principal_series(const AbelianGroup& group, const std::vector<int>& x, int degree);
FactoredRational fws_principal_closed_form(const AbelianGroup& group, const std::vector<int>& x);

} // namespace qordkit
