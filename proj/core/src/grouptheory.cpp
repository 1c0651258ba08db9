#include "qordkit/grouptheory.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "qordkit/error.hpp"

namespace qordkit {

namespace {

int permutation_rank(const std::vector<int>& perm)
{
    const int n = static_cast<int>(perm.size());
    int rank = 0;
    std::vector<char> used(perm.size(), 0);
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int v = 0; v < perm[static_cast<std::size_t>(i)]; ++v) {
            smaller += used[static_cast<std::size_t>(v)] ? 0 : 1;
        }
        used[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = 1;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

std::string partition_label(const Partition& p)
{
    std::string out = "[";
    for (std::size_t i = 0; i < p.size(); ++i) {
        out += (i ? "," : "") + std::to_string(p[i]);
    }
    return out + "]";
}

} // namespace

// --------------------------------------------------------------- groups

FiniteGroup::FiniteGroup(std::vector<int> table, int order, std::string name) :
    order_(order), name_(std::move(name)), table_(std::move(table))
{
    if (order_ < 1 || table_.size() != static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_)) {
        throw ValidationError("multiplication table must be order x order");
    }
    for (int v : table_) {
        if (v < 0 || v >= order_) {
            throw ValidationError("multiplication table entry outside the group");
        }
    }
    identity_ = -1;
    for (int e = 0; e < order_ && identity_ < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < order_ && ok; ++a) {
            ok = mul(e, a) == a && mul(a, e) == a;
        }
        if (ok) {
            identity_ = e;
        }
    }
    if (identity_ < 0) {
        throw ValidationError("multiplication table has no identity");
    }
    inverse_.assign(static_cast<std::size_t>(order_), -1);
    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            if (mul(a, b) == identity_ && mul(b, a) == identity_) {
                inverse_[static_cast<std::size_t>(a)] = b;
                break;
            }
        }
        if (inverse_[static_cast<std::size_t>(a)] < 0) {
            throw ValidationError("element " + std::to_string(a) + " has no inverse");
        }
    }
    // Full associativity check at desk scale, a fixed sample beyond.
    const long long n = order_;
    const long long triples = n * n * n;
    const long long step = triples <= 8'000'000 ? 1 : triples / 8'000'000 + 1;
    for (long long t = 0; t < triples; t += step) {
        const int a = static_cast<int>(t / (n * n));
        const int b = static_cast<int>((t / n) % n);
        const int c = static_cast<int>(t % n);
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
            throw ValidationError("multiplication table is not associative");
        }
    }
    finish();
}

void FiniteGroup::finish()
{
    if (inverse_.empty()) {
        inverse_.assign(static_cast<std::size_t>(order_), -1);
        for (int a = 0; a < order_; ++a) {
            for (int b = 0; b < order_; ++b) {
                if (mul(a, b) == identity_) {
                    inverse_[static_cast<std::size_t>(a)] = b;
                    break;
                }
            }
        }
    }
    class_of_.assign(static_cast<std::size_t>(order_), -1);
    classes_.clear();
    std::vector<int> order_by_class;
    // The identity class comes first, then by smallest element.
    std::vector<int> seeds(static_cast<std::size_t>(order_));
    std::iota(seeds.begin(), seeds.end(), 0);
    std::stable_partition(seeds.begin(), seeds.end(), [&](int a) { return a == identity_; });
    for (int a : seeds) {
        if (class_of_[static_cast<std::size_t>(a)] >= 0) {
            continue;
        }
        const int id = static_cast<int>(classes_.size());
        std::set<int> members;
        for (int g = 0; g < order_; ++g) {
            members.insert(mul(mul(g, a), inv(g)));
        }
        for (int m : members) {
            class_of_[static_cast<std::size_t>(m)] = id;
        }
        classes_.emplace_back(members.begin(), members.end());
    }
}

FiniteGroup FiniteGroup::cyclic(int n)
{
    if (n < 1) {
        throw ValidationError("cyclic group order must be positive");
    }
    FiniteGroup g;
    g.order_ = n;
    g.name_ = "Z/" + std::to_string(n);
    g.table_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            g.table_[static_cast<std::size_t>(a * n + b)] = (a + b) % n;
        }
    }
    g.structure_.kind = Structure::Kind::Cyclic;
    g.structure_.n = n;
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::trivial()
{
    return cyclic(1);
}

FiniteGroup FiniteGroup::symmetric(int n)
{
    if (n < 0 || n > 6) {
        throw UnsupportedError("explicit symmetric groups are limited to n <= 6");
    }
    FiniteGroup g;
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        g.perms_.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    const int order = static_cast<int>(g.perms_.size());
    g.order_ = order;
    g.name_ = "S_" + std::to_string(n);
    g.table_.resize(static_cast<std::size_t>(order) * static_cast<std::size_t>(order));
    std::vector<int> comp(static_cast<std::size_t>(n));
    for (int a = 0; a < order; ++a) {
        for (int b = 0; b < order; ++b) {
            const auto& pa = g.perms_[static_cast<std::size_t>(a)];
            const auto& pb = g.perms_[static_cast<std::size_t>(b)];
            for (int i = 0; i < n; ++i) {
                comp[static_cast<std::size_t>(i)] = pa[static_cast<std::size_t>(pb[static_cast<std::size_t>(i)])];
            }
            g.table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order) + static_cast<std::size_t>(b)] =
                permutation_rank(comp);
        }
    }
    g.structure_.kind = Structure::Kind::Symmetric;
    g.structure_.n = n;
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b)
{
    FiniteGroup g;
    const int na = a.order();
    const int nb = b.order();
    g.order_ = na * nb;
    g.name_ = a.name() + " x " + b.name();
    g.table_.resize(static_cast<std::size_t>(g.order_) * static_cast<std::size_t>(g.order_));
    for (int x = 0; x < g.order_; ++x) {
        for (int y = 0; y < g.order_; ++y) {
            g.table_[static_cast<std::size_t>(x) * static_cast<std::size_t>(g.order_) + static_cast<std::size_t>(y)] =
                a.mul(x / nb, y / nb) * nb + b.mul(x % nb, y % nb);
        }
    }
    g.identity_ = a.identity() * nb + b.identity();
    g.structure_.kind = Structure::Kind::Product;
    g.structure_.left = std::make_shared<const FiniteGroup>(a);
    g.structure_.right = std::make_shared<const FiniteGroup>(b);
    g.finish();
    return g;
}

int FiniteGroup::pow(int a, long long e) const
{
    if (e < 0) {
        return pow(inv(a), -e);
    }
    int result = identity_;
    for (long long i = 0; i < e; ++i) {
        result = mul(result, a);
    }
    return result;
}

int FiniteGroup::element_order(int a) const
{
    int k = 1;
    for (int x = a; x != identity_; x = mul(x, a)) {
        ++k;
    }
    return k;
}

int FiniteGroup::exponent() const
{
    long long e = 1;
    for (int a = 0; a < order_; ++a) {
        e = lcm(e, element_order(a));
    }
    return static_cast<int>(e);
}

// ------------------------------------------------------- character tables

Integer CharacterTable::dimension(int irreducible) const
{
    const auto& v = chars.at(static_cast<std::size_t>(irreducible)).at(0);
    if (!v.is_rational() || !is_integer(v.rational_part())) {
        throw ValidationError("identity column must hold integer dimensions");
    }
    return v.rational_part().get_num();
}

int CharacterTable::trivial_index() const
{
    for (int i = 0; i < num_irreducibles(); ++i) {
        const auto& row = chars[static_cast<std::size_t>(i)];
        if (std::all_of(row.begin(), row.end(), [](const Cyclotomic& c) { return c.is_one(); })) {
            return i;
        }
    }
    throw ValidationError("character table has no trivial character");
}

Cyclotomic CharacterTable::inner_product(const std::vector<Cyclotomic>& f, const std::vector<Cyclotomic>& g) const
{
    if (f.size() != classes.size() || g.size() != classes.size()) {
        throw ValidationError("class function length does not match the table");
    }
    Cyclotomic sum(Rational(0), order);
    for (std::size_t c = 0; c < classes.size(); ++c) {
        if (f[c].is_zero() || g[c].is_zero()) {
            continue;
        }
        sum += Cyclotomic(Rational(classes[c].size)) * f[c] * g[c].conj();
    }
    return sum / Cyclotomic(Rational(group_order));
}

void CharacterTable::check() const
{
    if (classes.empty() || chars.size() != classes.size()) {
        throw ValidationError("character table must be square");
    }
    Integer total = 0;
    for (const auto& c : classes) {
        total += c.size;
    }
    if (total != group_order) {
        throw ValidationError("class sizes do not sum to the group order");
    }
    Integer squares = 0;
    for (int i = 0; i < num_irreducibles(); ++i) {
        const Integer d = dimension(i);
        squares += d * d;
        for (int j = i; j < num_irreducibles(); ++j) {
            const Cyclotomic ip = inner_product(chars[static_cast<std::size_t>(i)], chars[static_cast<std::size_t>(j)]);
            if (ip != Cyclotomic(i == j ? 1 : 0)) {
                throw ValidationError("irreducible characters are not orthonormal");
            }
        }
    }
    if (squares != group_order) {
        throw ValidationError("squared dimensions do not sum to the group order");
    }
}

std::vector<Partition> symmetric_irreducible_order(int n)
{
    auto parts = partitions(n);
    const Partition identity_type(static_cast<std::size_t>(n), 1);
    std::stable_sort(parts.begin(), parts.end(), [&](const Partition& a, const Partition& b) {
        return sn_character(a, identity_type) < sn_character(b, identity_type);
    });
    return parts;
}

namespace {

int num_irreducibles(const FiniteGroup& g)
{
    using Kind = FiniteGroup::Structure::Kind;
    const auto& s = g.structure();
    switch (s.kind) {
    case Kind::Cyclic:
        return s.n;
    case Kind::Symmetric:
        return static_cast<int>(partitions(s.n).size());
    case Kind::Product:
        return num_irreducibles(*s.left) * num_irreducibles(*s.right);
    case Kind::Table:
        break;
    }
    throw UnsupportedError("no built-in character table for " + g.name() + "; supply one");
}

Cyclotomic evaluate(const FiniteGroup& g, int irreducible, int element)
{
    using Kind = FiniteGroup::Structure::Kind;
    const auto& s = g.structure();
    switch (s.kind) {
    case Kind::Cyclic:
        return Cyclotomic::root(s.n, static_cast<long long>(irreducible) * element);
    case Kind::Symmetric: {
        const auto order = symmetric_irreducible_order(s.n);
        return Cyclotomic(Rational(sn_character(order[static_cast<std::size_t>(irreducible)],
                                                cycle_type(g.permutations()[static_cast<std::size_t>(element)]))));
    }
    case Kind::Product: {
        const int nb = s.right->order();
        const int kb = num_irreducibles(*s.right);
        return evaluate(*s.left, irreducible / kb, element / nb) * evaluate(*s.right, irreducible % kb, element % nb);
    }
    case Kind::Table:
        break;
    }
    throw UnsupportedError("no built-in character table for " + g.name() + "; supply one");
}

std::string irreducible_name(const FiniteGroup& g, int irreducible)
{
    using Kind = FiniteGroup::Structure::Kind;
    const auto& s = g.structure();
    switch (s.kind) {
    case Kind::Cyclic:
        return "chi" + std::to_string(irreducible);
    case Kind::Symmetric:
        return partition_label(symmetric_irreducible_order(s.n)[static_cast<std::size_t>(irreducible)]);
    case Kind::Product: {
        const int kb = num_irreducibles(*s.right);
        return "(" + irreducible_name(*s.left, irreducible / kb) + "," + irreducible_name(*s.right, irreducible % kb) +
               ")";
    }
    case Kind::Table:
        break;
    }
    return "chi" + std::to_string(irreducible);
}

} // namespace

CharacterTable character_table(const FiniteGroup& g)
{
    const int k = num_irreducibles(g);
    if (k != static_cast<int>(g.classes().size())) {
        throw Error("internal: irreducible count differs from class count");
    }
    CharacterTable t;
    t.group_order = g.order();
    t.order = g.exponent();
    for (const auto& cls : g.classes()) {
        t.classes.push_back({cls.front(), Integer(static_cast<long>(cls.size())), std::to_string(cls.front())});
    }
    for (int i = 0; i < k; ++i) {
        std::vector<Cyclotomic> row;
        for (const auto& cls : g.classes()) {
            row.push_back(evaluate(g, i, cls.front()).lift(t.order));
        }
        t.chars.push_back(std::move(row));
        t.names.push_back(irreducible_name(g, i));
    }
    if (g.structure().kind == FiniteGroup::Structure::Kind::Symmetric) {
        for (auto& c : t.classes) {
            c.label = partition_label(cycle_type(g.permutations()[static_cast<std::size_t>(c.representative)]));
        }
    }
    t.check();
    return t;
}

CharacterTable cyclic_character_table(int n)
{
    return character_table(FiniteGroup::cyclic(n));
}

CharacterTable symmetric_character_table(int n)
{
    if (n < 0 || n > 12) {
        throw UnsupportedError("symmetric character tables are limited to n <= 12");
    }
    auto types = partitions(n);
    std::reverse(types.begin(), types.end()); // (1^n) first
    CharacterTable t;
    t.group_order = factorial(n);
    t.order = 1;
    for (const auto& mu : types) {
        t.classes.push_back({-1, t.group_order / z_value(mu), partition_label(mu)});
    }
    for (const auto& lambda : symmetric_irreducible_order(n)) {
        std::vector<Cyclotomic> row;
        for (const auto& mu : types) {
            row.push_back(Cyclotomic(Rational(sn_character(lambda, mu))));
        }
        t.chars.push_back(std::move(row));
        t.names.push_back(partition_label(lambda));
    }
    return t;
}

CharacterTable product_character_table(const CharacterTable& a, const CharacterTable& b)
{
    CharacterTable t;
    t.group_order = a.group_order * b.group_order;
    t.order = static_cast<int>(lcm(a.order, b.order));
    for (const auto& ca : a.classes) {
        for (const auto& cb : b.classes) {
            t.classes.push_back({-1, ca.size * cb.size, "(" + ca.label + "," + cb.label + ")"});
        }
    }
    for (int i = 0; i < a.num_irreducibles(); ++i) {
        for (int j = 0; j < b.num_irreducibles(); ++j) {
            std::vector<Cyclotomic> row;
            for (const auto& x : a.chars[static_cast<std::size_t>(i)]) {
                for (const auto& y : b.chars[static_cast<std::size_t>(j)]) {
                    row.push_back((x * y).lift(t.order));
                }
            }
            t.chars.push_back(std::move(row));
            t.names.push_back("(" + a.names[static_cast<std::size_t>(i)] + "," + b.names[static_cast<std::size_t>(j)] +
                              ")");
        }
    }
    return t;
}

CharacterTable attach_table(const FiniteGroup& g, CharacterTable table)
{
    if (table.classes.size() != g.classes().size()) {
        throw ValidationError("character table class count differs from the group's");
    }
    table.group_order = g.order();
    for (auto& c : table.classes) {
        if (c.representative < 0 || c.representative >= g.order()) {
            throw ValidationError("class representative outside the group");
        }
    }
    std::set<int> seen;
    for (auto& c : table.classes) {
        const int cls = g.class_of(c.representative);
        if (!seen.insert(cls).second) {
            throw ValidationError("two table classes share a conjugacy class");
        }
        if (c.size != Integer(static_cast<long>(g.classes()[static_cast<std::size_t>(cls)].size()))) {
            throw ValidationError("class size does not match the group");
        }
    }
    if (table.names.size() != table.chars.size()) {
        table.names.clear();
        for (int i = 0; i < table.num_irreducibles(); ++i) {
            table.names.push_back("chi" + std::to_string(i));
        }
    }
    for (const auto& row : table.chars) {
        for (const auto& v : row) {
            if (table.order % v.order() != 0) {
                throw ValidationError("character value outside Q(zeta_N) for the declared N");
            }
        }
    }
    table.check();
    return table;
}

// -------------------------------------------------------------- subgroups

void validate_embedding(const FiniteGroup& g, const Subgroup& h)
{
    const int n = h.group.order();
    if (h.embedding.size() != static_cast<std::size_t>(n)) {
        throw ValidationError("embedding must map every subgroup element");
    }
    std::set<int> image;
    for (int x : h.embedding) {
        if (x < 0 || x >= g.order()) {
            throw ValidationError("embedding value outside the group");
        }
        image.insert(x);
    }
    if (image.size() != h.embedding.size()) {
        throw ValidationError("embedding is not injective");
    }
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (h.embedding[static_cast<std::size_t>(h.group.mul(a, b))] !=
                g.mul(h.embedding[static_cast<std::size_t>(a)], h.embedding[static_cast<std::size_t>(b)])) {
                throw ValidationError("embedding is not a homomorphism");
            }
        }
    }
}

Subgroup young_subgroup(int n, const std::vector<int>& composition)
{
    if (std::accumulate(composition.begin(), composition.end(), 0) != n) {
        throw ValidationError("Young subgroup composition must sum to n");
    }
    std::vector<int> parts;
    for (int c : composition) {
        if (c < 0) {
            throw ValidationError("composition parts must be non-negative");
        }
        if (c > 0) {
            parts.push_back(c);
        }
    }
    if (parts.empty()) {
        parts.push_back(0);
    }
    std::vector<FiniteGroup> factors;
    for (int c : parts) {
        factors.push_back(FiniteGroup::symmetric(c));
    }
    FiniteGroup product = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
        product = FiniteGroup::direct_product(product, factors[i]);
    }
    Subgroup h{product, {}, std::nullopt};
    for (int x = 0; x < product.order(); ++x) {
        // Decode the mixed-radix element index into one permutation per block.
        std::vector<int> idx(factors.size());
        int rest = x;
        for (std::size_t i = factors.size(); i-- > 0;) {
            idx[i] = rest % factors[i].order();
            rest /= factors[i].order();
        }
        std::vector<int> perm;
        int offset = 0;
        for (std::size_t i = 0; i < factors.size(); ++i) {
            for (int v : factors[i].permutations()[static_cast<std::size_t>(idx[i])]) {
                perm.push_back(v + offset);
            }
            offset += parts[i];
        }
        h.embedding.push_back(permutation_rank(perm));
    }
    return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g)
{
    return Subgroup{FiniteGroup::trivial(), {g.identity()}, std::nullopt};
}

namespace {

// Map from the group's class index to the row-column index of the table.
std::vector<int> table_columns(const FiniteGroup& g, const CharacterTable& t)
{
    std::vector<int> out(g.classes().size(), -1);
    for (int c = 0; c < t.num_classes(); ++c) {
        const int rep = t.classes[static_cast<std::size_t>(c)].representative;
        if (rep < 0 || rep >= g.order()) {
            throw ValidationError("character table is not attached to this group");
        }
        out[static_cast<std::size_t>(g.class_of(rep))] = c;
    }
    return out;
}

Integer as_count(const Cyclotomic& v)
{
    if (!v.is_rational() || !is_integer(v.rational_part()) || v.rational_part() < 0) {
        throw Error("internal: multiplicity is not a non-negative integer");
    }
    return v.rational_part().get_num();
}

} // namespace

IntMatrix restriction_matrix(const FiniteGroup& g, const CharacterTable& gt, const Subgroup& h)
{
    validate_embedding(g, h);
    const CharacterTable ht = h.table ? attach_table(h.group, *h.table) : character_table(h.group);
    const auto gcol = table_columns(g, gt);
    IntMatrix out(static_cast<std::size_t>(gt.num_irreducibles()),
                  std::vector<Integer>(static_cast<std::size_t>(ht.num_irreducibles()), 0));
    for (int v = 0; v < gt.num_irreducibles(); ++v) {
        // Res chi_V as a class function on H.
        std::vector<Cyclotomic> res(static_cast<std::size_t>(ht.num_classes()));
        for (int c = 0; c < ht.num_classes(); ++c) {
            const int image = h.embedding[static_cast<std::size_t>(ht.classes[static_cast<std::size_t>(c)].representative)];
            res[static_cast<std::size_t>(c)] =
                gt.chars[static_cast<std::size_t>(v)][static_cast<std::size_t>(gcol[static_cast<std::size_t>(g.class_of(image))])];
        }
        for (int w = 0; w < ht.num_irreducibles(); ++w) {
            out[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] =
                as_count(ht.inner_product(res, ht.chars[static_cast<std::size_t>(w)]));
        }
    }
    return out;
}

std::vector<int> commutator_subgroup(const FiniteGroup& h)
{
    std::set<int> gens;
    for (int a = 0; a < h.order(); ++a) {
        for (int b = 0; b < h.order(); ++b) {
            gens.insert(h.mul(h.mul(a, b), h.mul(h.inv(a), h.inv(b))));
        }
    }
    std::set<int> closure{h.identity()};
    std::vector<int> frontier{h.identity()};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int x : frontier) {
            for (int s : gens) {
                const int y = h.mul(x, s);
                if (closure.insert(y).second) {
                    next.push_back(y);
                }
            }
        }
        frontier = std::move(next);
    }
    return {closure.begin(), closure.end()};
}

int abelianization_exponent(const FiniteGroup& h)
{
    const auto k = commutator_subgroup(h);
    std::vector<char> in_k(static_cast<std::size_t>(h.order()), 0);
    for (int x : k) {
        in_k[static_cast<std::size_t>(x)] = 1;
    }
    long long e = 1;
    for (int a = 0; a < h.order(); ++a) {
        int power = a;
        long long steps = 1;
        while (!in_k[static_cast<std::size_t>(power)]) {
            power = h.mul(power, a);
            ++steps;
        }
        e = lcm(e, steps);
    }
    return static_cast<int>(e);
}

std::vector<int> linear_characters(const CharacterTable& t)
{
    std::vector<int> out;
    for (int i = 0; i < t.num_irreducibles(); ++i) {
        if (t.dimension(i) == 1) {
            out.push_back(i);
        }
    }
    return out;
}

IntMatrix abelianization_matrix(const FiniteGroup& h, const CharacterTable& ht)
{
    const auto lin = linear_characters(ht);
    const auto k = commutator_subgroup(h);
    if (static_cast<int>(lin.size()) * static_cast<int>(k.size()) != h.order()) {
        throw ValidationError("linear character count does not match |H| / |[H,H]|");
    }
    IntMatrix out(static_cast<std::size_t>(ht.num_irreducibles()), std::vector<Integer>(lin.size(), 0));
    for (int v = 0; v < ht.num_irreducibles(); ++v) {
        for (std::size_t l = 0; l < lin.size(); ++l) {
            out[static_cast<std::size_t>(v)][l] = as_count(
                ht.inner_product(ht.chars[static_cast<std::size_t>(v)], ht.chars[static_cast<std::size_t>(lin[l])]));
        }
    }
    return out;
}

GoodFamilyResult is_good_family(const FiniteGroup& g, const CharacterTable& gt, std::vector<Subgroup> subgroups,
                                bool covering)
{
    GoodFamilyResult out;
    const auto rows = static_cast<std::size_t>(gt.num_irreducibles());
    out.matrix.assign(rows, {});
    for (auto& h : subgroups) {
        if (!h.table) {
            h.table = character_table(h.group);
        }
        IntMatrix block = restriction_matrix(g, gt, h);
        if (!covering) {
            block = multiply(block, abelianization_matrix(h.group, *h.table));
        }
        for (std::size_t r = 0; r < rows; ++r) {
            out.matrix[r].insert(out.matrix[r].end(), block[r].begin(), block[r].end());
        }
        out.exponent_lcm = lcm(out.exponent_lcm, abelianization_exponent(h.group));
    }
    const std::size_t cols = out.matrix.empty() ? 0 : out.matrix[0].size();
    const SmithForm snf = smith_normal_form(out.matrix, cols);
    out.elementary_divisors = snf.divisors;
    out.good = cols >= rows && std::all_of(snf.divisors.begin(), snf.divisors.end(),
                                           [](const Integer& d) { return d == 1; });
    return out;
}

} // namespace qordkit
