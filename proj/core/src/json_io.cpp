#include "qordkit/json_io.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qordkit/error.hpp"

namespace qordkit::json {

namespace {

const Json& field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) {
        throw ValidationError(std::string("missing field '") + key + "'");
    }
    return j.at(key);
}

int as_int(const Json& j, const char* what)
{
    if (!j.is_number_integer()) {
        throw ValidationError(std::string(what) + " must be an integer");
    }
    const auto v = j.get<long long>();
    if (v < -(1LL << 30) || v > (1LL << 30)) {
        throw ValidationError(std::string(what) + " is out of range");
    }
    return static_cast<int>(v);
}

const Json& as_array(const Json& j, const char* what)
{
    if (!j.is_array()) {
        throw ValidationError(std::string(what) + " must be an array");
    }
    return j;
}

std::vector<int> int_list(const Json& j, const char* what)
{
    std::vector<int> out;
    for (const auto& v : as_array(j, what)) {
        out.push_back(as_int(v, what));
    }
    return out;
}

std::string as_string(const Json& j, const char* what)
{
    if (!j.is_string()) {
        throw ValidationError(std::string(what) + " must be a string");
    }
    return j.get<std::string>();
}

// Vertex labels may be numbers or strings in input; they are kept as text.
std::string label_of(const Json& j)
{
    return j.is_string() ? j.get<std::string>() : j.dump();
}

Json exponent_json(const Exponent& e)
{
    return Json(e);
}

} // namespace

Json to_json(const Rational& q)
{
    return to_string(q);
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return Rational(Integer(j.dump()));
    }
    return parse_rational(as_string(j, "rational"));
}

Json to_json(const Integer& z)
{
    return to_string(z);
}

Integer integer_from_json(const Json& j)
{
    if (j.is_number_integer()) {
        return Integer(j.dump());
    }
    const Rational q = parse_rational(as_string(j, "integer"));
    if (!is_integer(q)) {
        throw ValidationError("expected an integer");
    }
    return q.get_num();
}

Json to_json(const Cyclotomic& c)
{
    Json coeffs = Json::array();
    for (const auto& q : c.coeffs()) {
        coeffs.push_back(to_string(q));
    }
    return Json::array({c.order(), coeffs});
}

Cyclotomic cyclotomic_from_json(const Json& j)
{
    if (j.is_string() || j.is_number_integer()) {
        return Cyclotomic(rational_from_json(j));
    }
    if (!j.is_array() || j.size() != 2) {
        throw ValidationError("cyclotomic must be [N, [coefficients]]");
    }
    const int order = as_int(j[0], "cyclotomic order");
    if (order < 1) {
        throw ValidationError("cyclotomic order must be positive");
    }
    std::vector<Rational> coeffs;
    for (const auto& c : as_array(j[1], "cyclotomic coefficients")) {
        coeffs.push_back(rational_from_json(c));
    }
    if (static_cast<int>(coeffs.size()) != euler_phi(order)) {
        throw ValidationError("cyclotomic of order " + std::to_string(order) + " needs " +
                              std::to_string(euler_phi(order)) + " coefficients");
    }
    return Cyclotomic::from_coeffs(order, std::move(coeffs));
}

Json to_json(const Norm& n)
{
    return Json{{"coordinate", n.coordinate}, {"dimension", n.dimension}};
}

Norm norm_from_json(const Json& j, int num_symbols)
{
    Norm n;
    n.coordinate = int_list(field(j, "coordinate"), "norm coordinate");
    n.dimension = as_int(field(j, "dimension"), "norm dimension");
    if (static_cast<int>(n.coordinate.size()) != num_symbols) {
        throw ValidationError("norm needs one coordinate per symbol");
    }
    for (int c : n.coordinate) {
        if (c < 0 || c >= n.dimension) {
            throw ValidationError("norm coordinate out of range");
        }
    }
    return n;
}

Json to_json(const Alphabet& a)
{
    Json j{{"symbols", a.symbols}};
    if (a.norm_map) {
        j["norm"] = to_json(*a.norm_map);
    }
    return j;
}

Alphabet alphabet_from_json(const Json& j)
{
    const Json& syms = j.is_array() ? j : field(j, "symbols");
    std::vector<std::string> symbols;
    for (const auto& s : as_array(syms, "symbols")) {
        symbols.push_back(as_string(s, "symbol"));
    }
    std::optional<Norm> norm;
    if (j.is_object() && j.contains("norm")) {
        norm = norm_from_json(j.at("norm"), static_cast<int>(symbols.size()));
    }
    return Alphabet(std::move(symbols), std::move(norm));
}

Json to_json(const Alphabet& a, const LanguageExpr& e)
{
    using K = LanguageExpr::Kind;
    switch (e.kind) {
    case K::Empty:
        return Json{{"type", "empty"}};
    case K::Epsilon:
        return Json{{"type", "epsilon"}};
    case K::Singleton:
        return Json{{"type", "symbol"}, {"symbol", a.symbols.at(static_cast<std::size_t>(e.symbol))}};
    case K::Star: {
        Json subset = Json::array();
        for (int s : e.subset) {
            subset.push_back(a.symbols.at(static_cast<std::size_t>(s)));
        }
        return Json{{"type", "star"}, {"subset", subset}};
    }
    case K::Union:
    case K::Concat: {
        Json children = Json::array();
        for (const auto& c : e.children) {
            children.push_back(to_json(a, c));
        }
        return Json{{"type", e.kind == K::Union ? "union" : "concat"}, {"children", children}};
    }
    }
    throw Error("internal: unknown expression kind");
}

LanguageExpr expr_from_json(const Alphabet& a, const Json& j)
{
    const std::string type = as_string(field(j, "type"), "expression type");
    if (type == "empty") {
        return LanguageExpr::empty();
    }
    if (type == "epsilon") {
        return LanguageExpr::epsilon();
    }
    if (type == "symbol") {
        return LanguageExpr::singleton(a.index_of(as_string(field(j, "symbol"), "symbol")));
    }
    if (type == "star") {
        std::vector<int> subset;
        for (const auto& s : as_array(field(j, "subset"), "star subset")) {
            subset.push_back(a.index_of(as_string(s, "symbol")));
        }
        std::sort(subset.begin(), subset.end());
        if (std::adjacent_find(subset.begin(), subset.end()) != subset.end()) {
            throw ValidationError("star subset repeats a symbol");
        }
        return LanguageExpr::star(std::move(subset));
    }
    if (type == "union" || type == "concat") {
        std::vector<LanguageExpr> children;
        for (const auto& c : as_array(field(j, "children"), "children")) {
            children.push_back(expr_from_json(a, c));
        }
        return type == "union" ? LanguageExpr::union_of(std::move(children))
                               : LanguageExpr::concat(std::move(children));
    }
    throw ValidationError("unknown expression type '" + type + "'");
}

Json to_json(const AbelianGroup& g)
{
    return Json(g.cyclic_orders());
}

AbelianGroup abelian_group_from_json(const Json& j)
{
    const auto orders = j.is_number_integer() ? std::vector<int>{as_int(j, "group order")}
                                              : int_list(j, "cyclic orders");
    for (int n : orders) {
        if (n < 1) {
            throw ValidationError("cyclic orders must be positive");
        }
    }
    return AbelianGroup(orders);
}

Json element_to_json(const AbelianGroup& g, int element)
{
    return Json(g.components(element));
}

int element_from_json(const AbelianGroup& g, const Json& j)
{
    std::vector<int> comps = j.is_number_integer() ? std::vector<int>{as_int(j, "group element")}
                                                   : int_list(j, "group element");
    if (comps.size() != g.cyclic_orders().size()) {
        throw ValidationError("group element has the wrong number of components");
    }
    for (std::size_t i = 0; i < comps.size(); ++i) {
        if (comps[i] < 0 || comps[i] >= g.cyclic_orders()[i]) {
            throw ValidationError("group element component out of range");
        }
    }
    return g.element(comps);
}

Json to_json(const CongruenceSpec& c)
{
    Json map = Json::array();
    for (int e : c.phi) {
        map.push_back(element_to_json(c.group, e));
    }
    Json target = Json::array();
    for (int e : c.target) {
        target.push_back(element_to_json(c.group, e));
    }
    return Json{{"orders", to_json(c.group)}, {"map", map}, {"target", target}};
}

CongruenceSpec congruence_from_json(const Alphabet& a, const Json& j)
{
    CongruenceSpec c;
    c.group = abelian_group_from_json(field(j, "orders"));
    for (const auto& e : as_array(field(j, "map"), "congruence map")) {
        c.phi.push_back(element_from_json(c.group, e));
    }
    std::set<int> target;
    for (const auto& e : as_array(field(j, "target"), "congruence target")) {
        target.insert(element_from_json(c.group, e));
    }
    c.target.assign(target.begin(), target.end());
    validate(a, c);
    return c;
}

Json to_json(const Dfa& d)
{
    Json accepting = Json::array();
    Json delta = Json::array();
    for (int s = 0; s < d.num_states(); ++s) {
        if (d.accepting(s)) {
            accepting.push_back(s);
        }
        Json row = Json::array();
        for (int a = 0; a < d.num_symbols(); ++a) {
            row.push_back(d.next(s, a));
        }
        delta.push_back(row);
    }
    return Json{{"alphabet", to_json(d.alphabet())},
                {"states", d.num_states()},
                {"start", d.start()},
                {"accepting", accepting},
                {"delta", delta}};
}

Dfa dfa_from_json(const Json& j)
{
    Alphabet a = alphabet_from_json(field(j, "alphabet"));
    const int states = as_int(field(j, "states"), "state count");
    const int start = as_int(field(j, "start"), "start state");
    std::vector<bool> accepting(static_cast<std::size_t>(std::max(states, 0)), false);
    for (int s : int_list(field(j, "accepting"), "accepting states")) {
        if (s < 0 || s >= states) {
            throw ValidationError("accepting state out of range");
        }
        accepting[static_cast<std::size_t>(s)] = true;
    }
    std::vector<int> delta;
    const Json& rows = as_array(field(j, "delta"), "transition table");
    if (static_cast<int>(rows.size()) != states) {
        throw ValidationError("transition table needs one row per state");
    }
    for (const auto& row : rows) {
        const auto r = int_list(row, "transition row");
        if (static_cast<int>(r.size()) != a.size()) {
            throw ValidationError("transition row needs one entry per symbol");
        }
        delta.insert(delta.end(), r.begin(), r.end());
    }
    return Dfa(std::move(a), states, std::move(delta), start, std::move(accepting));
}

Json to_json(const QuasiOrderedExpr& q)
{
    return Json{{"alphabet", to_json(q.alphabet)},
                {"ordered", to_json(q.alphabet, q.ordered)},
                {"congruence", to_json(q.congruence)}};
}

QuasiOrderedExpr quasi_ordered_from_json(const Json& j)
{
    QuasiOrderedExpr q;
    q.alphabet = alphabet_from_json(field(j, "alphabet"));
    q.ordered = expr_from_json(q.alphabet, field(j, "ordered"));
    validate(q.alphabet, q.ordered);
    q.congruence = congruence_from_json(q.alphabet, field(j, "congruence"));
    return q;
}

Json to_json(const Polynomial& p)
{
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        terms.push_back(Json::array({exponent_json(e), to_json(c)}));
    }
    return Json{{"nvars", p.nvars()}, {"terms", terms}};
}

Polynomial polynomial_from_json(const Json& j)
{
    const int nvars = as_int(field(j, "nvars"), "variable count");
    if (nvars < 0) {
        throw ValidationError("variable count must be non-negative");
    }
    Polynomial p(nvars);
    for (const auto& t : as_array(field(j, "terms"), "terms")) {
        if (!t.is_array() || t.size() != 2) {
            throw ValidationError("term must be [exponent, coefficient]");
        }
        const Exponent e = int_list(t[0], "exponent");
        if (static_cast<int>(e.size()) != nvars ||
            std::any_of(e.begin(), e.end(), [](int v) { return v < 0; })) {
            throw ValidationError("exponent has the wrong shape");
        }
        p.add_term(e, cyclotomic_from_json(t[1]));
    }
    return p;
}

Json to_json(const LinearForm& l)
{
    Json j = Json::array();
    for (const auto& c : l.coeffs) {
        j.push_back(to_json(c));
    }
    return j;
}

LinearForm linear_form_from_json(const Json& j)
{
    LinearForm l;
    for (const auto& c : as_array(j, "linear form")) {
        l.coeffs.push_back(cyclotomic_from_json(c));
    }
    return l;
}

Json to_json(const FactoredRational& f)
{
    Json numerator = Json::array();
    for (const auto& [e, c] : f.numerator().terms()) {
        numerator.push_back(Json::array({exponent_json(e), to_json(c)}));
    }
    Json factors = Json::array();
    for (const auto& l : f.factors()) {
        factors.push_back(to_json(l));
    }
    return Json{{"nvars", f.nvars()}, {"order", f.order()}, {"numerator", numerator}, {"factors", factors}};
}

FactoredRational factored_from_json(const Json& j)
{
    const int nvars = as_int(field(j, "nvars"), "variable count");
    const int order = as_int(field(j, "order"), "field order");
    if (order < 1) {
        throw ValidationError("field order must be positive");
    }
    const Polynomial num = polynomial_from_json(Json{{"nvars", nvars}, {"terms", field(j, "numerator")}});
    std::vector<LinearForm> factors;
    for (const auto& l : as_array(field(j, "factors"), "factors")) {
        factors.push_back(linear_form_from_json(l));
        if (factors.back().nvars() != nvars) {
            throw ValidationError("linear form has the wrong number of variables");
        }
    }
    return FactoredRational::make(order, num.lifted(order), std::move(factors));
}

Json to_json(const SeriesTruncation& s)
{
    Json coeffs = Json::array();
    for (const auto& [e, c] : s.coeffs) {
        coeffs.push_back(Json::array({exponent_json(e), to_json(c)}));
    }
    return Json{{"bound", s.bound}, {"total_bound", s.total_bound}, {"coefficients", coeffs}};
}

SeriesTruncation series_from_json(const Json& j)
{
    SeriesTruncation s;
    s.bound = int_list(field(j, "bound"), "bound");
    s.total_bound = j.contains("total_bound") ? as_int(j.at("total_bound"), "total bound") : -1;
    for (const auto& t : as_array(field(j, "coefficients"), "coefficients")) {
        if (!t.is_array() || t.size() != 2) {
            throw ValidationError("coefficient must be [exponent, value]");
        }
        const Exponent e = int_list(t[0], "exponent");
        if (!s.in_range(e)) {
            throw ValidationError("coefficient exponent outside the truncation");
        }
        s.set(e, cyclotomic_from_json(t[1]));
    }
    return s;
}

Json to_json(const PosetContext& ctx)
{
    return Json{{"letters", ctx.letter_names}, {"lambda", to_json(ctx.group)}};
}

PosetContext context_from_json(const Json& j)
{
    const AbelianGroup g = abelian_group_from_json(field(j, "lambda"));
    const Json& letters = field(j, "letters");
    if (letters.is_number_integer()) {
        return PosetContext(as_int(letters, "letter count"), g);
    }
    std::vector<std::string> names;
    for (const auto& n : as_array(letters, "letters")) {
        names.push_back(as_string(n, "letter name"));
    }
    const int count = static_cast<int>(names.size());
    return PosetContext(count, g, std::move(names));
}

Json to_json(const PosetContext& ctx, const WeightedWord& x)
{
    Json letters = Json::array();
    Json weights = Json::array();
    for (int i = 0; i < x.size(); ++i) {
        letters.push_back(ctx.letter_name(x.letters[static_cast<std::size_t>(i)]));
        weights.push_back(element_to_json(ctx.group, x.weights[static_cast<std::size_t>(i)]));
    }
    return Json{{"letters", letters}, {"weights", weights}};
}

namespace {

int letter_index(const PosetContext& ctx, const std::string& name)
{
    for (int i = 0; i < ctx.num_letters; ++i) {
        if (ctx.letter_name(i) == name) {
            return i;
        }
    }
    throw ValidationError("unknown letter '" + name + "'");
}

// Splits on commas that are not nested inside parentheses.
std::vector<std::string> split_top(const std::string& s)
{
    std::vector<std::string> out;
    std::string cur;
    int depth = 0;
    for (char c : s) {
        if (c == '(') {
            ++depth;
        } else if (c == ')') {
            --depth;
        }
        if (c == ',' && depth == 0) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

int element_from_text(const AbelianGroup& g, std::string text)
{
    std::vector<int> comps;
    if (!text.empty() && text.front() == '(') {
        if (text.back() != ')') {
            throw ValidationError("unbalanced parentheses in weight");
        }
        text = text.substr(1, text.size() - 2);
        for (const auto& part : split_top(text)) {
            comps.push_back(static_cast<int>(parse_rational(part).get_num().get_si()));
        }
    } else {
        const Rational q = parse_rational(text);
        if (!is_integer(q)) {
            throw ValidationError("weights are integers");
        }
        comps.push_back(static_cast<int>(q.get_num().get_si()));
    }
    if (g.cyclic_orders().empty() && comps == std::vector<int>{0}) {
        return 0;
    }
    return element_from_json(g, Json(comps));
}

} // namespace

WeightedWord parse_weighted_word(const PosetContext& ctx, const std::string& text)
{
    const auto slash = text.find('/');
    if (slash == std::string::npos) {
        throw ValidationError("weighted word must look like 'ab/(1,0)'");
    }
    const std::string top = text.substr(0, slash);
    const std::string bottom = text.substr(slash + 1);
    WeightedWord x;
    std::size_t pos = 0;
    while (pos < top.size()) {
        // Longest letter name matching at pos.
        int best = -1;
        std::size_t best_len = 0;
        for (int i = 0; i < ctx.num_letters; ++i) {
            const auto& n = ctx.letter_name(i);
            if (n.size() > best_len && top.compare(pos, n.size(), n) == 0) {
                best = i;
                best_len = n.size();
            }
        }
        if (best < 0) {
            throw ValidationError("unknown letter in '" + top + "'");
        }
        x.letters.push_back(best);
        pos += best_len;
    }
    std::vector<std::string> parts;
    if (x.letters.size() == 1) {
        parts.push_back(bottom);
    } else {
        if (bottom.size() < 2 || bottom.front() != '(' || bottom.back() != ')') {
            throw ValidationError("weights of a word with several letters go in parentheses");
        }
        const std::string inner = bottom.substr(1, bottom.size() - 2);
        if (!inner.empty()) {
            parts = split_top(inner);
        }
    }
    for (const auto& p : parts) {
        x.weights.push_back(element_from_text(ctx.group, p));
    }
    validate(ctx, x);
    return x;
}

WeightedWord word_from_json(const PosetContext& ctx, const Json& j)
{
    if (j.is_string()) {
        return parse_weighted_word(ctx, j.get<std::string>());
    }
    WeightedWord x;
    const Json& letters = field(j, "letters");
    if (letters.is_string()) {
        for (char c : letters.get<std::string>()) {
            x.letters.push_back(letter_index(ctx, std::string(1, c)));
        }
    } else {
        for (const auto& l : as_array(letters, "letters")) {
            x.letters.push_back(l.is_number_integer() ? as_int(l, "letter") : letter_index(ctx, as_string(l, "letter")));
        }
    }
    for (const auto& w : as_array(field(j, "weights"), "weights")) {
        x.weights.push_back(element_from_json(ctx.group, w));
    }
    validate(ctx, x);
    return x;
}

Json to_json(const OrderedSurjection& f)
{
    Json map = Json::array();
    for (int v : f.map) {
        map.push_back(v + 1);
    }
    return Json{{"source", f.source}, {"target", f.target}, {"map", map}};
}

OrderedSurjection surjection_from_json(const Json& j)
{
    OrderedSurjection f;
    f.source = as_int(field(j, "source"), "source size");
    f.target = as_int(field(j, "target"), "target size");
    for (int v : int_list(field(j, "map"), "surjection map")) {
        f.map.push_back(v - 1);
    }
    if (!f.valid()) {
        throw ValidationError("map is not an ordered surjection");
    }
    return f;
}

Json to_json(const Block& b)
{
    return Json{{"first", b.first + 1}, {"last", b.last + 1}};
}

Json to_json(const DeletableBlock& b)
{
    return Json{{"betas", b.betas}, {"gamma", b.gamma}};
}

Json to_json(const CharacterTable& t)
{
    Json classes = Json::array();
    for (const auto& c : t.classes) {
        classes.push_back(Json{{"representative", c.representative}, {"size", to_json(c.size)}, {"label", c.label}});
    }
    Json chars = Json::array();
    for (const auto& row : t.chars) {
        Json r = Json::array();
        for (const auto& v : row) {
            r.push_back(to_json(v));
        }
        chars.push_back(r);
    }
    return Json{{"group_order", to_json(t.group_order)},
                {"order", t.order},
                {"classes", classes},
                {"characters", chars},
                {"names", t.names}};
}

CharacterTable table_from_json(const Json& j)
{
    CharacterTable t;
    t.group_order = integer_from_json(field(j, "group_order"));
    t.order = j.contains("order") ? as_int(j.at("order"), "field order") : 1;
    for (const auto& c : as_array(field(j, "classes"), "classes")) {
        CharacterTable::ClassInfo info;
        info.representative = c.contains("representative") ? as_int(c.at("representative"), "representative") : -1;
        info.size = integer_from_json(field(c, "size"));
        info.label = c.contains("label") ? as_string(c.at("label"), "class label") : "";
        t.classes.push_back(std::move(info));
    }
    int order = t.order;
    for (const auto& row : as_array(field(j, "characters"), "characters")) {
        std::vector<Cyclotomic> r;
        for (const auto& v : as_array(row, "character row")) {
            r.push_back(cyclotomic_from_json(v));
            order = common_order(order, r.back().order());
        }
        if (r.size() != t.classes.size()) {
            throw ValidationError("character row needs one value per class");
        }
        t.chars.push_back(std::move(r));
    }
    t.order = order;
    for (auto& row : t.chars) {
        for (auto& v : row) {
            v = v.lift(order);
        }
    }
    if (j.contains("names")) {
        for (const auto& n : as_array(j.at("names"), "names")) {
            t.names.push_back(as_string(n, "character name"));
        }
    }
    while (t.names.size() < t.chars.size()) {
        t.names.push_back("chi" + std::to_string(t.names.size()));
    }
    t.check();
    return t;
}

Json to_json(const FiniteGroup& g)
{
    using K = FiniteGroup::Structure::Kind;
    const auto& s = g.structure();
    switch (s.kind) {
    case K::Cyclic:
        return Json{{"cyclic", s.n}};
    case K::Symmetric:
        return Json{{"symmetric", s.n}};
    case K::Product:
        return Json{{"product", Json::array({to_json(*s.left), to_json(*s.right)})}};
    case K::Table:
        break;
    }
    Json table = Json::array();
    for (int a = 0; a < g.order(); ++a) {
        Json row = Json::array();
        for (int b = 0; b < g.order(); ++b) {
            row.push_back(g.mul(a, b));
        }
        table.push_back(row);
    }
    return Json{{"order", g.order()}, {"table", table}};
}

FiniteGroup group_from_json(const Json& j)
{
    if (!j.is_object()) {
        throw ValidationError("group must be a JSON object");
    }
    if (j.contains("cyclic")) {
        return FiniteGroup::cyclic(as_int(j.at("cyclic"), "cyclic order"));
    }
    if (j.contains("symmetric")) {
        return FiniteGroup::symmetric(as_int(j.at("symmetric"), "symmetric degree"));
    }
    if (j.contains("trivial")) {
        return FiniteGroup::trivial();
    }
    if (j.contains("product")) {
        const Json& p = as_array(j.at("product"), "product");
        if (p.size() != 2) {
            throw ValidationError("product needs exactly two factors");
        }
        return FiniteGroup::direct_product(group_from_json(p[0]), group_from_json(p[1]));
    }
    const int order = as_int(field(j, "order"), "group order");
    if (order < 1) {
        throw ValidationError("group order must be positive");
    }
    std::vector<int> table;
    const Json& rows = as_array(field(j, "table"), "multiplication table");
    if (static_cast<int>(rows.size()) != order) {
        throw ValidationError("multiplication table needs one row per element");
    }
    for (const auto& row : rows) {
        const auto r = int_list(row, "table row");
        if (static_cast<int>(r.size()) != order) {
            throw ValidationError("multiplication table row has the wrong length");
        }
        table.insert(table.end(), r.begin(), r.end());
    }
    return FiniteGroup(std::move(table), order, j.contains("name") ? as_string(j.at("name"), "name") : "G");
}

CharacterTable table_for(const FiniteGroup& g, const Json& j)
{
    if (j.is_object() && j.contains("characters")) {
        return attach_table(g, table_from_json(j.at("characters")));
    }
    return character_table(g);
}

Subgroup subgroup_from_json(const FiniteGroup& g, const Json& j)
{
    if (j.contains("young")) {
        const auto comp = int_list(j.at("young"), "composition");
        if (g.structure().kind != FiniteGroup::Structure::Kind::Symmetric) {
            throw ValidationError("Young subgroups need a symmetric group");
        }
        return young_subgroup(g.structure().n, comp);
    }
    if (j.contains("trivial")) {
        return trivial_subgroup(g);
    }
    const Json& gj = field(j, "group");
    FiniteGroup h = group_from_json(gj);
    Subgroup s{h, int_list(field(j, "embedding"), "embedding"), std::nullopt};
    if (gj.contains("characters")) {
        s.table = table_for(h, gj);
    }
    validate_embedding(g, s);
    return s;
}

Json to_json(const IntMatrix& m)
{
    Json j = Json::array();
    for (const auto& row : m) {
        Json r = Json::array();
        for (const auto& v : row) {
            r.push_back(to_json(v));
        }
        j.push_back(r);
    }
    return j;
}

Json partition_function_to_json(const PartitionValuedFunction& f)
{
    Json j = Json::object();
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!f[i].empty()) {
            j[std::to_string(i)] = f[i];
        }
    }
    return j;
}

PartitionValuedFunction partition_function_from_json(const Json& j, int slots)
{
    if (!j.is_object()) {
        throw ValidationError("partition-valued function must be an object keyed by index");
    }
    PartitionValuedFunction f(static_cast<std::size_t>(slots));
    for (const auto& [key, value] : j.items()) {
        std::size_t used = 0;
        int idx = -1;
        try {
            idx = std::stoi(key, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != key.size() || idx < 0 || idx >= slots) {
            throw ValidationError("partition key '" + key + "' is not an index in range");
        }
        Partition p = int_list(value, "partition");
        if (!p.empty() && !is_partition(p)) {
            throw ValidationError("entries must be weakly decreasing positive partitions");
        }
        f[static_cast<std::size_t>(idx)] = std::move(p);
    }
    return f;
}

Json to_json(const WreathClass& c)
{
    return Json{{"label", partition_function_to_json(c.label)},
                {"size", to_json(c.size)},
                {"centralizer", to_json(c.centralizer)}};
}

Json to_json(const StabilityTable& t)
{
    Json entries = Json::array();
    for (const auto& e : t.entries) {
        entries.push_back(Json{{"n", e.n}, {"multiplicity", e.multiplicity ? Json(to_string(*e.multiplicity)) : Json()}});
    }
    return Json{{"entries", entries},
                {"observed_onset", t.observed_onset ? Json(*t.observed_onset) : Json()},
                {"tail_constant", t.tail_constant}};
}

Json to_json(const SimplicialComplex& x)
{
    Json facets = Json::array();
    for (const auto& f : x.facets()) {
        Json labels = Json::array();
        for (int v : f) {
            labels.push_back(x.vertices()[static_cast<std::size_t>(v)]);
        }
        facets.push_back(labels);
    }
    return Json{{"vertices", x.vertices()}, {"facets", facets}};
}

SimplicialComplex complex_from_json(const Json& j)
{
    std::vector<std::string> vertices;
    std::map<std::string, int> index;
    for (const auto& v : as_array(field(j, "vertices"), "vertices")) {
        const std::string label = label_of(v);
        if (!index.emplace(label, static_cast<int>(vertices.size())).second) {
            throw ValidationError("duplicate vertex '" + label + "'");
        }
        vertices.push_back(label);
    }
    std::vector<Simplex> facets;
    for (const auto& f : as_array(field(j, "facets"), "facets")) {
        Simplex s;
        for (const auto& v : as_array(f, "facet")) {
            const auto it = index.find(label_of(v));
            if (it == index.end()) {
                throw ValidationError("facet uses unknown vertex " + label_of(v));
            }
            s.push_back(it->second);
        }
        facets.push_back(std::move(s));
    }
    return SimplicialComplex::from_facets(std::move(vertices), facets);
}

GroupAction action_from_json(const FiniteGroup& g, const CharacterTable& t, const SimplicialComplex& x,
                             const Json& j)
{
    std::vector<std::pair<int, std::vector<int>>> gens;
    for (const auto& gen : as_array(field(j, "generators"), "generators")) {
        gens.emplace_back(as_int(field(gen, "element"), "generator element"), int_list(field(gen, "perm"), "perm"));
    }
    return make_action(g, t, x, gens);
}

Json to_json(const HomologyData& h)
{
    Json reps = Json::array();
    for (std::size_t i = 0; i < h.representatives.size(); ++i) {
        Json layer = Json::array();
        for (const auto& v : h.representatives[i]) {
            Json entries = Json::array();
            for (const auto& [idx, c] : v) {
                entries.push_back(Json::array({idx, to_json(c)}));
            }
            layer.push_back(entries);
        }
        reps.push_back(layer);
    }
    return Json{{"ranks", h.ranks},
                {"chain_ranks", h.chain_ranks},
                {"boundary_ranks", h.boundary_ranks},
                {"representatives", reps}};
}

Json to_json(const EquivariantDegree& d)
{
    Json decomposition = Json::array();
    for (const auto& [tuple, mult] : d.decomposition) {
        decomposition.push_back(Json{{"irreducibles", tuple}, {"multiplicity", to_json(mult)}});
    }
    return Json{{"n", d.n}, {"rank", d.rank}, {"decomposition", decomposition}, {"monomial", to_json(d.monomial)}};
}

} // namespace qordkit::json
