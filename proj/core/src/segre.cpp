#include "qordkit/segre.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <set>

#include "qordkit/error.hpp"

namespace qordkit {

namespace {

void check_simplex(const Simplex& s, int num_vertices)
{
    if (s.empty()) {
        throw ValidationError("empty facet");
    }
    for (std::size_t k = 0; k < s.size(); ++k) {
        if (s[k] < 0 || s[k] >= num_vertices) {
            throw ValidationError("facet vertex out of range");
        }
        if (k > 0 && s[k - 1] >= s[k]) {
            throw ValidationError("facet has repeated vertices");
        }
    }
}

// Sorts the list in place and returns the sign of the sorting permutation.
int sort_with_sign(std::vector<int>& v)
{
    int sign = 1;
    for (std::size_t i = 1; i < v.size(); ++i) {
        for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; --j) {
            std::swap(v[j - 1], v[j]);
            sign = -sign;
        }
    }
    return sign;
}

} // namespace

SimplicialComplex SimplicialComplex::from_facets(std::vector<std::string> vertices, const std::vector<Simplex>& facets)
{
    const int nv = static_cast<int>(vertices.size());
    std::vector<std::set<Simplex>> by_dim(nv > 0 ? 1 : 0);
    for (int v = 0; v < nv; ++v) {
        by_dim[0].insert(Simplex{v});
    }
    for (Simplex f : facets) {
        std::sort(f.begin(), f.end());
        check_simplex(f, nv);
        if (f.size() > 20) {
            throw UnsupportedError("facets with more than 20 vertices");
        }
        const std::size_t k = f.size();
        if (by_dim.size() < k) {
            by_dim.resize(k);
        }
        for (unsigned mask = 1; mask < (1u << k); ++mask) {
            Simplex s;
            for (std::size_t b = 0; b < k; ++b) {
                if (mask & (1u << b)) {
                    s.push_back(f[b]);
                }
            }
            by_dim[s.size() - 1].insert(std::move(s));
        }
    }
    std::vector<std::vector<Simplex>> faces;
    for (auto& layer : by_dim) {
        faces.emplace_back(layer.begin(), layer.end());
    }
    return from_faces(std::move(vertices), std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<std::string> vertices,
                                                std::vector<std::vector<Simplex>> faces)
{
    SimplicialComplex c;
    c.vertices_ = std::move(vertices);
    while (!faces.empty() && faces.back().empty()) {
        faces.pop_back();
    }
    for (auto& layer : faces) {
        std::sort(layer.begin(), layer.end());
    }
    c.faces_ = std::move(faces);
    return c;
}

const std::vector<Simplex>& SimplicialComplex::faces(int d) const
{
    static const std::vector<Simplex> none;
    if (d < 0 || d >= static_cast<int>(faces_.size())) {
        return none;
    }
    return faces_[static_cast<std::size_t>(d)];
}

std::size_t SimplicialComplex::num_simplices() const
{
    std::size_t total = 0;
    for (const auto& layer : faces_) {
        total += layer.size();
    }
    return total;
}

int SimplicialComplex::index_of(const Simplex& s) const
{
    const auto& layer = faces(static_cast<int>(s.size()) - 1);
    const auto it = std::lower_bound(layer.begin(), layer.end(), s);
    if (it == layer.end() || *it != s) {
        return -1;
    }
    return static_cast<int>(it - layer.begin());
}

bool SimplicialComplex::contains(const Simplex& s) const
{
    return index_of(s) >= 0;
}

std::vector<Simplex> SimplicialComplex::facets() const
{
    std::vector<Simplex> out;
    for (int d = 0; d <= dimension(); ++d) {
        for (const auto& s : faces(d)) {
            bool maximal = true;
            for (int v = 0; v < num_vertices() && maximal; ++v) {
                if (std::binary_search(s.begin(), s.end(), v)) {
                    continue;
                }
                Simplex t = s;
                t.insert(std::upper_bound(t.begin(), t.end(), v), v);
                maximal = !contains(t);
            }
            if (maximal) {
                out.push_back(s);
            }
        }
    }
    return out;
}

SimplicialComplex SimplicialComplex::edge()
{
    return from_facets({"1", "2"}, {{0, 1}});
}

SimplicialComplex SimplicialComplex::point()
{
    return from_facets({"1"}, {});
}

SimplicialComplex segre_product(const SimplicialComplex& x, const SimplicialComplex& y, std::size_t budget)
{
    const int ny = y.num_vertices();
    std::vector<std::string> labels;
    for (const auto& a : x.vertices()) {
        for (const auto& b : y.vertices()) {
            labels.push_back("(" + a + "," + b + ")");
        }
    }
    std::vector<std::vector<Simplex>> faces;
    std::size_t count = 0;
    const int top = std::min(x.dimension(), y.dimension());
    for (int d = 0; d <= top; ++d) {
        std::vector<Simplex> layer;
        std::vector<int> perm(static_cast<std::size_t>(d + 1));
        for (const auto& s : x.faces(d)) {
            for (const auto& t : y.faces(d)) {
                std::iota(perm.begin(), perm.end(), 0);
                do {
                    Simplex u;
                    for (int k = 0; k <= d; ++k) {
                        u.push_back(s[static_cast<std::size_t>(k)] * ny + t[static_cast<std::size_t>(perm[static_cast<std::size_t>(k)])]);
                    }
                    std::sort(u.begin(), u.end());
                    layer.push_back(std::move(u));
                    if (++count > budget) {
                        throw UnsupportedError("Segre product exceeds the simplex budget of " + std::to_string(budget));
                    }
                } while (std::next_permutation(perm.begin(), perm.end()));
            }
        }
        faces.push_back(std::move(layer));
    }
    return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

std::vector<int> segre_vertex_map(const std::vector<int>& f, const std::vector<int>& g, int target_y_vertices)
{
    std::vector<int> out;
    out.reserve(f.size() * g.size());
    for (int a : f) {
        for (int b : g) {
            out.push_back(a * target_y_vertices + b);
        }
    }
    return out;
}

SimplicialComplex segre_power(const SimplicialComplex& x, int n, std::size_t budget)
{
    if (n < 1) {
        throw ValidationError("Segre power needs n >= 1");
    }
    SimplicialComplex p = x;
    for (int k = 2; k <= n; ++k) {
        p = segre_product(p, x, budget);
    }
    if (n == 1) {
        return p;
    }
    // Relabel nested pairs as flat n-tuples.
    const int m = x.num_vertices();
    std::vector<std::string> labels;
    for (int v = 0; v < p.num_vertices(); ++v) {
        std::vector<int> digits(static_cast<std::size_t>(n));
        int rest = v;
        for (int k = n - 1; k >= 0; --k) {
            digits[static_cast<std::size_t>(k)] = rest % m;
            rest /= m;
        }
        std::string label = "(";
        for (int k = 0; k < n; ++k) {
            label += (k ? "," : "") + x.vertices()[static_cast<std::size_t>(digits[static_cast<std::size_t>(k)])];
        }
        labels.push_back(label + ")");
    }
    std::vector<std::vector<Simplex>> faces;
    for (int d = 0; d <= p.dimension(); ++d) {
        faces.push_back(p.faces(d));
    }
    return SimplicialComplex::from_faces(std::move(labels), std::move(faces));
}

std::vector<SparseVector> boundary_columns(const SimplicialComplex& x, int d)
{
    std::vector<SparseVector> out;
    if (d <= 0) {
        out.resize(x.faces(d).size());
        return out;
    }
    for (const auto& s : x.faces(d)) {
        SparseVector col;
        for (std::size_t j = 0; j < s.size(); ++j) {
            Simplex face = s;
            face.erase(face.begin() + static_cast<std::ptrdiff_t>(j));
            const int idx = x.index_of(face);
            if (idx < 0) {
                throw ValidationError("complex is not closed under faces");
            }
            col[idx] = Rational(j % 2 == 0 ? 1 : -1);
        }
        out.push_back(std::move(col));
    }
    return out;
}

HomologyData homology_ranks(const SimplicialComplex& x, int i_max)
{
    if (i_max < 0) {
        throw ValidationError("i_max must be non-negative");
    }
    HomologyData h;
    std::vector<std::vector<SparseVector>> bd;
    for (int d = 0; d <= i_max + 1; ++d) {
        bd.push_back(boundary_columns(x, d));
        SparseEchelon e(static_cast<int>(x.faces(d - 1).size()));
        if (d > 0) {
            for (const auto& col : bd.back()) {
                e.add_row(col);
            }
        }
        h.boundary_ranks.push_back(e.rank());
        h.chain_ranks.push_back(static_cast<int>(x.faces(d).size()));
    }
    for (int d = 1; d <= i_max; ++d) {
        const auto& lower = bd[static_cast<std::size_t>(d)];
        for (const auto& col : bd[static_cast<std::size_t>(d + 1)]) {
            SparseVector acc;
            for (const auto& [idx, c] : col) {
                for (const auto& [j, v] : lower[static_cast<std::size_t>(idx)]) {
                    acc[j] += c * v;
                }
            }
            for (const auto& [j, v] : acc) {
                if (v != 0) {
                    throw Error("boundary of a boundary is nonzero");
                }
            }
        }
    }
    for (int i = 0; i <= i_max; ++i) {
        const auto ui = static_cast<std::size_t>(i);
        h.ranks.push_back(h.chain_ranks[ui] - h.boundary_ranks[ui] - h.boundary_ranks[ui + 1]);
        const int cols = h.chain_ranks[ui];
        SparseEchelon e(cols);
        std::vector<SparseVector> rows(x.faces(i - 1).size());
        for (int s = 0; s < cols && i > 0; ++s) {
            for (const auto& [t, c] : bd[ui][static_cast<std::size_t>(s)]) {
                rows[static_cast<std::size_t>(t)][s] = c;
            }
        }
        for (auto& r : rows) {
            e.add_row(std::move(r));
        }
        for (const auto& col : bd[ui + 1]) {
            e.add_row(col);
        }
        h.representatives.push_back(e.nullspace());
        h.coordinates.push_back(e.free_columns());
        if (static_cast<int>(h.representatives.back().size()) != h.ranks.back()) {
            throw Error("internal: harmonic space dimension differs from the homology rank");
        }
    }
    return h;
}

int connected_components(const SimplicialComplex& x)
{
    std::vector<int> parent(static_cast<std::size_t>(x.num_vertices()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    int count = x.num_vertices();
    for (const auto& e : x.faces(1)) {
        const int a = find(e[0]);
        const int b = find(e[1]);
        if (a != b) {
            parent[static_cast<std::size_t>(a)] = b;
            --count;
        }
    }
    return count;
}

namespace {

void check_permutation(const std::vector<int>& p, int n)
{
    if (static_cast<int>(p.size()) != n) {
        throw ValidationError("vertex permutation has the wrong length");
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (int v : p) {
        if (v < 0 || v >= n || seen[static_cast<std::size_t>(v)]) {
            throw ValidationError("vertex map is not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out(b.size());
    for (std::size_t v = 0; v < b.size(); ++v) {
        out[v] = a[static_cast<std::size_t>(b[v])];
    }
    return out;
}

} // namespace

void validate_action(const GroupAction& a, const SimplicialComplex& x)
{
    const int n = x.num_vertices();
    const int order = a.group.order();
    if (static_cast<int>(a.perms.size()) != order) {
        throw ValidationError("action needs one permutation per group element");
    }
    for (const auto& p : a.perms) {
        check_permutation(p, n);
    }
    for (int g = 0; g < order; ++g) {
        for (int h = 0; h < order; ++h) {
            if (a.perms[static_cast<std::size_t>(a.group.mul(g, h))] !=
                compose(a.perms[static_cast<std::size_t>(g)], a.perms[static_cast<std::size_t>(h)])) {
                throw ValidationError("vertex permutations do not form a homomorphism");
            }
        }
    }
    for (const auto& p : a.perms) {
        for (int d = 1; d <= x.dimension(); ++d) {
            for (const auto& s : x.faces(d)) {
                Simplex t;
                for (int v : s) {
                    t.push_back(p[static_cast<std::size_t>(v)]);
                }
                std::sort(t.begin(), t.end());
                if (!x.contains(t)) {
                    throw ValidationError("action does not preserve simplices");
                }
            }
        }
    }
    for (const auto& c : a.table.classes) {
        if (c.representative < 0 || c.representative >= order) {
            throw ValidationError("character table lacks class representatives for this group");
        }
    }
}

GroupAction make_action(const FiniteGroup& g, const CharacterTable& table, const SimplicialComplex& x,
                        const std::vector<std::pair<int, std::vector<int>>>& generators)
{
    const int n = x.num_vertices();
    std::vector<std::vector<int>> perms(static_cast<std::size_t>(g.order()));
    std::vector<int> id(static_cast<std::size_t>(n));
    std::iota(id.begin(), id.end(), 0);
    perms[static_cast<std::size_t>(g.identity())] = id;
    for (const auto& [elem, p] : generators) {
        if (elem < 0 || elem >= g.order()) {
            throw ValidationError("generator is not a group element");
        }
        check_permutation(p, n);
    }
    std::queue<int> todo;
    todo.push(g.identity());
    while (!todo.empty()) {
        const int a = todo.front();
        todo.pop();
        for (const auto& [s, p] : generators) {
            const int b = g.mul(a, s);
            auto image = compose(perms[static_cast<std::size_t>(a)], p);
            auto& slot = perms[static_cast<std::size_t>(b)];
            if (slot.empty()) {
                slot = std::move(image);
                todo.push(b);
            } else if (slot != image) {
                throw ValidationError("generator images do not define a homomorphism");
            }
        }
    }
    for (const auto& p : perms) {
        if (p.empty()) {
            throw ValidationError("generators do not generate the group");
        }
    }
    GroupAction out{g, table, std::move(perms)};
    validate_action(out, x);
    return out;
}

Cyclotomic homology_trace(const SimplicialComplex& x, const HomologyData& h, int i, const std::vector<int>& perm)
{
    if (i < 0 || i >= static_cast<int>(h.representatives.size())) {
        throw ValidationError("homology degree was not computed");
    }
    const auto& layer = x.faces(i);
    const auto& reps = h.representatives[static_cast<std::size_t>(i)];
    const auto& coords = h.coordinates[static_cast<std::size_t>(i)];
    Rational trace = 0;
    for (std::size_t k = 0; k < reps.size(); ++k) {
        for (const auto& [idx, c] : reps[k]) {
            std::vector<int> image;
            for (int v : layer[static_cast<std::size_t>(idx)]) {
                image.push_back(perm[static_cast<std::size_t>(v)]);
            }
            const int sign = sort_with_sign(image);
            if (x.index_of(image) == coords[k]) {
                trace += c * sign;
            }
        }
    }
    return Cyclotomic(trace);
}

std::vector<EquivariantDegree> equivariant_hilbert_data(const SimplicialComplex& x, const GroupAction& action, int i,
                                                        int n_max, std::size_t budget)
{
    validate_action(action, x);
    if (i < 0) {
        throw ValidationError("homology degree must be non-negative");
    }
    const CharacterTable& t = action.table;
    const int k = t.num_classes();
    const int m = x.num_vertices();
    std::vector<EquivariantDegree> out;
    for (int n = 1; n <= n_max; ++n) {
        const SimplicialComplex p = segre_power(x, n, budget);
        const HomologyData h = homology_ranks(p, i);

        // Traces over tuples of classes of G^n.
        std::vector<std::vector<int>> class_tuples;
        std::vector<Cyclotomic> traces;
        std::vector<int> tuple(static_cast<std::size_t>(n), 0);
        for (;;) {
            std::vector<int> perm(static_cast<std::size_t>(p.num_vertices()));
            for (int v = 0; v < p.num_vertices(); ++v) {
                int rest = v;
                int image = 0;
                int scale = 1;
                for (int c = n - 1; c >= 0; --c) {
                    const int digit = rest % m;
                    rest /= m;
                    const int g = t.classes[static_cast<std::size_t>(tuple[static_cast<std::size_t>(c)])].representative;
                    image += action.perms[static_cast<std::size_t>(g)][static_cast<std::size_t>(digit)] * scale;
                    scale *= m;
                }
                perm[static_cast<std::size_t>(v)] = image;
            }
            class_tuples.push_back(tuple);
            traces.push_back(homology_trace(p, h, i, perm));
            std::size_t pos = tuple.size();
            while (pos > 0 && tuple[pos - 1] == k - 1) {
                tuple[--pos] = 0;
            }
            if (pos == 0) {
                break;
            }
            ++tuple[pos - 1];
        }

        EquivariantDegree deg;
        deg.n = n;
        deg.rank = h.ranks[static_cast<std::size_t>(i)];
        Integer group_power = 1;
        for (int c = 0; c < n; ++c) {
            group_power *= t.group_order;
        }
        const int r = t.num_irreducibles();
        std::vector<int> irr(static_cast<std::size_t>(n), 0);
        for (;;) {
            Cyclotomic sum;
            for (std::size_t ct = 0; ct < class_tuples.size(); ++ct) {
                if (traces[ct].is_zero()) {
                    continue;
                }
                Cyclotomic term = traces[ct];
                Integer weight = 1;
                for (int c = 0; c < n; ++c) {
                    const auto cls = static_cast<std::size_t>(class_tuples[ct][static_cast<std::size_t>(c)]);
                    weight *= t.classes[cls].size;
                    term *= t.chars[static_cast<std::size_t>(irr[static_cast<std::size_t>(c)])][cls].conj();
                }
                sum += term * Cyclotomic(Rational(weight));
            }
            sum = sum / Cyclotomic(Rational(group_power));
            if (!sum.is_rational() || !is_integer(sum.rational_part()) || sum.rational_part() < 0) {
                throw Error("internal: homology character has a non-integral multiplicity");
            }
            if (sum.rational_part() != 0) {
                deg.decomposition.emplace(irr, sum.rational_part().get_num());
            }
            std::size_t pos = irr.size();
            while (pos > 0 && irr[pos - 1] == r - 1) {
                irr[--pos] = 0;
            }
            if (pos == 0) {
                break;
            }
            ++irr[pos - 1];
        }
        deg.monomial = Polynomial(r);
        for (const auto& [idx, mult] : deg.decomposition) {
            Exponent e(static_cast<std::size_t>(r), 0);
            for (int j : idx) {
                ++e[static_cast<std::size_t>(j)];
            }
            deg.monomial.add_term(e, Cyclotomic(Rational(mult)));
        }
        out.push_back(std::move(deg));
    }
    return out;
}

} // namespace qordkit
