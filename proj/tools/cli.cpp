#include "cli.hpp"

#include <functional>
#include <map>
#include <set>

#include <qordkit/error.hpp>

namespace qordkit::cli {

using json::Json;

namespace {

const Json& need(const Json& j, const char* key)
{
    if (!j.contains(key)) {
        throw ValidationError(std::string("request needs '") + key + "'");
    }
    return j.at(key);
}

int int_field(const Json& j, const char* key, std::optional<int> fallback = std::nullopt)
{
    if (!j.contains(key)) {
        if (fallback) {
            return *fallback;
        }
        throw ValidationError(std::string("request needs '") + key + "'");
    }
    const Json& v = j.at(key);
    if (!v.is_number_integer()) {
        throw ValidationError(std::string("'") + key + "' must be an integer");
    }
    return v.get<int>();
}

std::vector<int> int_list(const Json& j, const char* key)
{
    const Json& v = need(j, key);
    if (!v.is_array()) {
        throw ValidationError(std::string("'") + key + "' must be an array");
    }
    std::vector<int> out;
    for (const auto& x : v) {
        if (!x.is_number_integer()) {
            throw ValidationError(std::string("'") + key + "' must hold integers");
        }
        out.push_back(x.get<int>());
    }
    return out;
}

std::size_t budget_of(const Json& r)
{
    const int b = int_field(r, "budget", static_cast<int>(default_simplex_budget));
    if (b < 1) {
        throw ValidationError("budget must be positive");
    }
    return static_cast<std::size_t>(b);
}

Word word_of(const Alphabet& a, const Json& w)
{
    if (w.is_string()) {
        return parse_word(a, w.get<std::string>());
    }
    std::vector<std::string> tokens;
    for (const auto& t : w) {
        if (!t.is_string()) {
            throw ValidationError("word tokens must be strings");
        }
        tokens.push_back(t.get<std::string>());
    }
    return parse_word(a, tokens);
}

Json word_json(const Alphabet& a, const Word& w)
{
    Json out = Json::array();
    for (int s : w) {
        out.push_back(a.symbols[static_cast<std::size_t>(s)]);
    }
    return out;
}

// Ordered expression, congruence, or both, over one alphabet.
Dfa compile_payload(const Json& r)
{
    if (r.contains("dfa")) {
        return json::dfa_from_json(r.at("dfa"));
    }
    const Alphabet a = json::alphabet_from_json(need(r, "alphabet"));
    const bool has_expr = r.contains("ordered");
    const bool has_cong = r.contains("congruence");
    if (has_expr && has_cong) {
        return compile_quasi_ordered(json::quasi_ordered_from_json(r));
    }
    if (has_expr) {
        const LanguageExpr e = json::expr_from_json(a, r.at("ordered"));
        validate(a, e);
        return compile_ordered(a, e);
    }
    if (has_cong) {
        return compile_congruence(a, json::congruence_from_json(a, r.at("congruence")));
    }
    throw ValidationError("request needs 'ordered', 'congruence' or 'dfa'");
}

Json lang_compile(const Json& r)
{
    return json::to_json(compile_payload(r));
}

Json lang_member(const Json& r)
{
    const Dfa d = compile_payload(r);
    return membership(d, word_of(d.alphabet(), need(r, "word")));
}

Json lang_enum(const Json& r)
{
    const Dfa d = compile_payload(r);
    Json out = Json::array();
    for (const auto& w : enumerate_by_norm(d, d.alphabet().norm(), int_list(r, "bound"))) {
        out.push_back(word_json(d.alphabet(), w));
    }
    return out;
}

Json genfun_series(const Json& r)
{
    if (r.contains("rational")) {
        return json::to_json(expand_rational(json::factored_from_json(r.at("rational")), int_list(r, "bound"),
                                             int_field(r, "total_bound", -1)));
    }
    const Dfa d = compile_payload(r);
    return json::to_json(series_from_dfa(d, d.alphabet().norm(), int_list(r, "bound")));
}

Json genfun_closed(const Json& r)
{
    const Alphabet a = json::alphabet_from_json(need(r, "alphabet"));
    FactoredRational f;
    if (r.contains("congruence")) {
        f = quasi_ordered_genfun(json::quasi_ordered_from_json(r), a.norm());
    } else {
        const LanguageExpr e = json::expr_from_json(a, need(r, "ordered"));
        f = ordered_genfun(a, e, a.norm());
    }
    Json out = json::to_json(f);
    out["class_kn"] = is_class_kn(f);
    return out;
}

Json genfun_translate(const Json& r)
{
    std::vector<long long> exps;
    for (int e : int_list(r, "exponents")) {
        exps.push_back(e);
    }
    return json::to_json(
        cyclotomic_translate(json::factored_from_json(need(r, "rational")), int_field(r, "order"), exps));
}

Json genfun_filter(const Json& r)
{
    const AbelianGroup g = json::abelian_group_from_json(need(r, "group"));
    std::vector<int> psi;
    for (const auto& e : need(r, "psi")) {
        psi.push_back(json::element_from_json(g, e));
    }
    std::set<int> target;
    for (const auto& e : need(r, "target")) {
        target.insert(json::element_from_json(g, e));
    }
    return json::to_json(congruence_filter(json::factored_from_json(need(r, "rational")), g, psi,
                                           std::vector<int>(target.begin(), target.end())));
}

// Letters default to a, b, ... up to the largest single-character letter used.
PosetContext context_of(const Json& r)
{
    if (r.contains("letters")) {
        return json::context_from_json(r);
    }
    const AbelianGroup g = json::abelian_group_from_json(need(r, "lambda"));
    int count = 0;
    auto scan = [&](const std::string& s) {
        for (char c : s) {
            if (c >= 'a' && c <= 'z') {
                count = std::max(count, c - 'a' + 1);
            }
        }
    };
    for (const char* key : {"x", "y"}) {
        if (!r.contains(key)) {
            continue;
        }
        const Json& w = r.at(key);
        if (w.is_string()) {
            scan(w.get<std::string>().substr(0, w.get<std::string>().find('/')));
        } else if (w.is_object() && w.contains("letters")) {
            if (w.at("letters").is_string()) {
                scan(w.at("letters").get<std::string>());
            } else {
                for (const auto& l : w.at("letters")) {
                    if (l.is_string()) {
                        scan(l.get<std::string>());
                    } else if (l.is_number_integer()) {
                        count = std::max(count, l.get<int>() + 1);
                    }
                }
            }
        }
    }
    return PosetContext(count, g);
}

Json poset_leq(const Json& r)
{
    const PosetContext ctx = context_of(r);
    const WeightedWord x = json::word_from_json(ctx, need(r, "x"));
    const WeightedWord y = json::word_from_json(ctx, need(r, "y"));
    const auto f = leq(ctx, x, y);
    return Json{{"leq", f.has_value()}, {"witness", f ? json::to_json(*f) : Json()}};
}

Json poset_minimal(const Json& r)
{
    const PosetContext ctx = context_of(r);
    Json out = Json::array();
    for (const auto& w : minimal_words_over(ctx, json::word_from_json(ctx, need(r, "x")))) {
        out.push_back(json::to_json(ctx, w));
    }
    return out;
}

Json poset_ideal(const Json& r)
{
    const PosetContext ctx = context_of(r);
    const WeightedWord x = json::word_from_json(ctx, need(r, "x"));
    const bool prune = !r.contains("prune") || r.at("prune").get<bool>();
    Json gens = Json::array();
    for (const auto& w : ideal_generators(ctx, x)) {
        gens.push_back(json::to_json(ctx, w));
    }
    Json out = json::to_json(principal_ideal_language(ctx, x, prune));
    out["generators"] = gens;
    return out;
}

Json poset_series(const Json& r)
{
    const AbelianGroup g = json::abelian_group_from_json(need(r, "lambda"));
    std::vector<int> x;
    for (const auto& e : need(r, "x")) {
        x.push_back(json::element_from_json(g, e));
    }
    const int degree = int_field(r, "degree");
    return Json{{"series", json::to_json(fws_principal_series(g, x, degree))},
                {"closed", json::to_json(fws_principal_closed_form(g, x))}};
}

Json poset_zero_block(const Json& r)
{
    const AbelianGroup g = json::abelian_group_from_json(need(r, "lambda"));
    std::vector<int> sigma;
    for (const auto& e : need(r, "sigma")) {
        sigma.push_back(json::element_from_json(g, e));
    }
    const auto b = zero_sum_block(g, sigma);
    return b ? json::to_json(*b) : Json();
}

Json poset_deletable(const Json& r)
{
    const PosetContext ctx = context_of(r);
    return json::to_json(find_deletable_block(ctx, json::word_from_json(ctx, need(r, "x"))));
}

struct GroupPayload {
    FiniteGroup group;
    CharacterTable table;
};

GroupPayload group_of(const Json& r)
{
    const Json& gj = need(r, "group");
    FiniteGroup g = json::group_from_json(gj);
    CharacterTable t = json::table_for(g, gj);
    return {std::move(g), std::move(t)};
}

// Wreath computations need only a character table, so large S_n tables can
// be requested without building the group.
CharacterTable table_of(const Json& r)
{
    if (r.contains("sn")) {
        return symmetric_character_table(int_field(r, "sn"));
    }
    return group_of(r).table;
}

Json group_table(const Json& r)
{
    return json::to_json(table_of(r));
}

Json group_restrict(const Json& r)
{
    const auto [g, t] = group_of(r);
    return json::to_json(restriction_matrix(g, t, json::subgroup_from_json(g, need(r, "subgroup"))));
}

Json group_good(const Json& r)
{
    const auto [g, t] = group_of(r);
    std::vector<Subgroup> subs;
    for (const auto& s : need(r, "subgroups")) {
        subs.push_back(json::subgroup_from_json(g, s));
    }
    const bool covering = r.contains("covering") && r.at("covering").get<bool>();
    const auto res = is_good_family(g, t, std::move(subs), covering);
    Json divisors = Json::array();
    for (const auto& d : res.elementary_divisors) {
        divisors.push_back(json::to_json(d));
    }
    return Json{{"good", res.good},
                {"elementary_divisors", divisors},
                {"exponent_lcm", res.exponent_lcm},
                {"matrix", json::to_json(res.matrix)}};
}

Json wreath_classes_cmd(const Json& r)
{
    const CharacterTable t = table_of(r);
    Json out = Json::array();
    for (const auto& c : wreath_classes(t, int_field(r, "n"))) {
        out.push_back(json::to_json(c));
    }
    return out;
}

Json wreath_char(const Json& r)
{
    const CharacterTable t = table_of(r);
    const auto lambda = json::partition_function_from_json(need(r, "lambda"), t.num_irreducibles());
    const ClassFunction f = wreath_irreducible_character(t, lambda);
    Json out = Json::array();
    for (std::size_t i = 0; i < f.classes.size(); ++i) {
        out.push_back(Json{{"class", json::partition_function_to_json(f.classes[i].label)},
                           {"value", json::to_json(f.values[i])}});
    }
    return out;
}

Json wreath_stability(const Json& r)
{
    const CharacterTable t = table_of(r);
    const int k = t.num_irreducibles();
    const auto l = json::partition_function_from_json(need(r, "lambda"), k);
    const auto m = json::partition_function_from_json(need(r, "mu"), k);
    const auto n = json::partition_function_from_json(need(r, "nu"), k);
    if (r.contains("n_first") || r.contains("n_last")) {
        const int first = int_field(r, "n_first", min_valid_n(t, {l, m, n}));
        return json::to_json(tensor_stability_table(t, l, m, n, first, int_field(r, "n_last", first + 6)));
    }
    return json::to_json(tensor_stability_table(t, l, m, n));
}

Json wreath_hilbert(const Json& r)
{
    const CharacterTable t = table_of(r);
    const int i = int_field(r, "irreducible");
    const int degree = int_field(r, "degree", 4);
    const FactoredRational f = diag_induced_series(t, i);
    Exponent bound(static_cast<std::size_t>(t.num_irreducibles()), degree);
    Json out{{"closed", json::to_json(f)}, {"series", json::to_json(expand_rational(f, bound, degree))}};
    if (r.contains("nmax")) {
        Json parts = Json::array();
        for (int n = 1; n <= int_field(r, "nmax"); ++n) {
            parts.push_back(json::to_json(monomial_image(decompose_induced(t, i, n), t.num_irreducibles())));
        }
        out["by_degree"] = parts;
    }
    return out;
}

Json segre_product_cmd(const Json& r)
{
    const std::size_t budget = budget_of(r);
    if (r.contains("power")) {
        return json::to_json(segre_power(json::complex_from_json(need(r, "x")), int_field(r, "power"), budget));
    }
    return json::to_json(
        segre_product(json::complex_from_json(need(r, "x")), json::complex_from_json(need(r, "y")), budget));
}

Json segre_homology(const Json& r)
{
    SimplicialComplex x = json::complex_from_json(need(r, "complex"));
    if (r.contains("power")) {
        x = segre_power(x, int_field(r, "power"), budget_of(r));
    }
    const HomologyData h = homology_ranks(x, int_field(r, "i_max", std::max(x.dimension(), 0)));
    Json out = json::to_json(h);
    out["components"] = connected_components(x);
    return out;
}

Json segre_series(const Json& r)
{
    const SimplicialComplex x = json::complex_from_json(need(r, "complex"));
    const auto [g, t] = group_of(r);
    const GroupAction a = json::action_from_json(g, t, x, need(r, "action"));
    Json out = Json::array();
    for (const auto& d : equivariant_hilbert_data(x, a, int_field(r, "i", 0), int_field(r, "nmax"), budget_of(r))) {
        out.push_back(json::to_json(d));
    }
    return out;
}

const std::map<std::string, std::function<Json(const Json&)>>& commands()
{
    static const std::map<std::string, std::function<Json(const Json&)>> table{
        {"lang.compile", lang_compile},
        {"lang.member", lang_member},
        {"lang.enum", lang_enum},
        {"genfun.series", genfun_series},
        {"genfun.closed", genfun_closed},
        {"genfun.translate", genfun_translate},
        {"genfun.filter", genfun_filter},
        {"poset.leq", poset_leq},
        {"poset.minimal", poset_minimal},
        {"poset.ideal", poset_ideal},
        {"poset.series", poset_series},
        {"poset.zero_block", poset_zero_block},
        {"poset.deletable", poset_deletable},
        {"group.table", group_table},
        {"group.restrict", group_restrict},
        {"group.good", group_good},
        {"wreath.classes", wreath_classes_cmd},
        {"wreath.char", wreath_char},
        {"wreath.stability", wreath_stability},
        {"wreath.hilbert", wreath_hilbert},
        {"segre.product", segre_product_cmd},
        {"segre.homology", segre_homology},
        {"segre.series", segre_series},
    };
    return table;
}

Json error_response(const std::string& message)
{
    return Json{{"status", "error"}, {"diagnostics", Json::array({message})}};
}

} // namespace

Json execute_request(const Json& request)
{
    try {
        if (!request.is_object()) {
            return error_response("request must be a JSON object");
        }
        if (!request.contains("cmd") || !request.at("cmd").is_string()) {
            return error_response("request needs a string 'cmd'");
        }
        const auto cmd = request.at("cmd").get<std::string>();
        const auto it = commands().find(cmd);
        if (it == commands().end()) {
            return error_response("unknown subcommand '" + cmd + "'");
        }
        return Json{{"status", "ok"}, {"result", it->second(request)}, {"diagnostics", Json::array()}};
    } catch (const AmbiguousExpression& e) {
        return error_response(std::string("ambiguous expression: ") + e.what());
    } catch (const Error& e) {
        return error_response(e.what());
    } catch (const nlohmann::json::exception& e) {
        return error_response(std::string("malformed request: ") + e.what());
    } catch (const std::exception& e) {
        return error_response(std::string("internal error: ") + e.what());
    }
}

std::string execute_text(const std::string& request_text)
{
    Json request;
    try {
        request = Json::parse(request_text);
    } catch (const nlohmann::json::parse_error& e) {
        return error_response(std::string("invalid JSON: ") + e.what()).dump();
    }
    return execute_request(request).dump();
}

} // namespace qordkit::cli
