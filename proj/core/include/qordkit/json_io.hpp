#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "qordkit/genfun.hpp"
#include "qordkit/grouptheory.hpp"
#include "qordkit/langkit.hpp"
#include "qordkit/segre.hpp"
#include "qordkit/wordposet.hpp"
#include "qordkit/wreath.hpp"

// Exact JSON encodings. Numbers that can exceed machine range are strings:
// rationals "p/q", integers "n", cyclotomics [N, ["c0", ..., "c_{phi(N)-1}"]].
// Every parser throws ValidationError on malformed input, and every
// to_json/from_json pair round-trips canonical documents byte for byte.
namespace qordkit::json {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);
Json to_json(const Integer& z);
Integer integer_from_json(const Json& j);
Json to_json(const Cyclotomic& c);
Cyclotomic cyclotomic_from_json(const Json& j);

// {"symbols": [...], "norm": {"coordinate": [...], "dimension": d}}; norm optional.
Json to_json(const Alphabet& a);
Alphabet alphabet_from_json(const Json& j);
Json to_json(const Norm& n);
Norm norm_from_json(const Json& j, int num_symbols);

// {"type": "empty" | "epsilon" | "symbol" | "star" | "union" | "concat", ...}
Json to_json(const Alphabet& a, const LanguageExpr& e);
LanguageExpr expr_from_json(const Alphabet& a, const Json& j);

// {"orders": [...], "map": [[components] per symbol], "target": [[components]...]}
Json to_json(const CongruenceSpec& c);
CongruenceSpec congruence_from_json(const Alphabet& a, const Json& j);

// {"alphabet", "states", "start", "accepting": [...], "delta": [[next per symbol] per state]}
Json to_json(const Dfa& d);
Dfa dfa_from_json(const Json& j);

// {"alphabet", "ordered", "congruence"}
Json to_json(const QuasiOrderedExpr& q);
QuasiOrderedExpr quasi_ordered_from_json(const Json& j);

Json to_json(const Polynomial& p);
Polynomial polynomial_from_json(const Json& j);
Json to_json(const LinearForm& l);
LinearForm linear_form_from_json(const Json& j);
// {"nvars", "order", "numerator": [[exponent, cyclotomic]...], "factors": [[cyclotomic...]...]}
Json to_json(const FactoredRational& f);
FactoredRational factored_from_json(const Json& j);
// {"bound", "total_bound", "coefficients": [[exponent, cyclotomic]...]}
Json to_json(const SeriesTruncation& s);
SeriesTruncation series_from_json(const Json& j);

// Group Z/n_1 x ... x Z/n_r as [n_1, ..., n_r]; elements as component arrays.
Json to_json(const AbelianGroup& g);
AbelianGroup abelian_group_from_json(const Json& j);
Json element_to_json(const AbelianGroup& g, int element);
int element_from_json(const AbelianGroup& g, const Json& j);

// {"letters": [names], "lambda": [orders]}
Json to_json(const PosetContext& ctx);
PosetContext context_from_json(const Json& j);
// {"letters": [names], "weights": [[components]...]} or the text form "aa/(0,1)".
Json to_json(const PosetContext& ctx, const WeightedWord& x);
WeightedWord word_from_json(const PosetContext& ctx, const Json& j);
WeightedWord parse_weighted_word(const PosetContext& ctx, const std::string& text);
// Positions are 1-based in JSON.
Json to_json(const OrderedSurjection& f);
OrderedSurjection surjection_from_json(const Json& j);
Json to_json(const Block& b);
Json to_json(const DeletableBlock& b);

// {"order", "table": [[...]]} | {"cyclic": n} | {"symmetric": n} | {"trivial": true}
// | {"product": [g, h]}, each with an optional "characters" table.
Json to_json(const FiniteGroup& g);
FiniteGroup group_from_json(const Json& j);
// The group's table, from "characters" when given and computed otherwise.
CharacterTable table_for(const FiniteGroup& g, const Json& j);
Json to_json(const CharacterTable& t);
CharacterTable table_from_json(const Json& j);
// {"group", "embedding"} | {"young": [c_1, ...]} | {"trivial": true}
Subgroup subgroup_from_json(const FiniteGroup& g, const Json& j);
Json to_json(const IntMatrix& m);

// {"0": [partition], "2": [partition]}: missing keys are empty partitions.
Json partition_function_to_json(const PartitionValuedFunction& f);
PartitionValuedFunction partition_function_from_json(const Json& j, int slots);
Json to_json(const WreathClass& c);
Json to_json(const StabilityTable& t);

// {"vertices": [...], "facets": [[vertex labels]...]}
Json to_json(const SimplicialComplex& x);
SimplicialComplex complex_from_json(const Json& j);
// {"generators": [{"element": k, "perm": [vertex indices]}...]}
GroupAction action_from_json(const FiniteGroup& g, const CharacterTable& t, const SimplicialComplex& x,
                             const Json& j);
Json to_json(const HomologyData& h);
Json to_json(const EquivariantDegree& d);

} // namespace qordkit::json
