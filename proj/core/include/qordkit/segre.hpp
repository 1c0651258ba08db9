#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "qordkit/grouptheory.hpp"
#include "qordkit/linalg.hpp"
#include "qordkit/polynomial.hpp"

namespace qordkit {

using Simplex = std::vector<int>; // sorted vertex indices

/// A finite simplicial complex stored with every face, grouped by dimension.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    // Closes the facets under subsets and adds every vertex.
    static SimplicialComplex from_facets(std::vector<std::string> vertices, const std::vector<Simplex>& facets);
    // faces[d] must already be downward closed; used by constructions.
    static SimplicialComplex from_faces(std::vector<std::string> vertices, std::vector<std::vector<Simplex>> faces);

    const std::vector<std::string>& vertices() const { return vertices_; }
    int num_vertices() const { return static_cast<int>(vertices_.size()); }
    int dimension() const { return static_cast<int>(faces_.size()) - 1; }
    const std::vector<Simplex>& faces(int d) const;
    std::size_t num_simplices() const;
    bool contains(const Simplex& s) const;
    // Position of s in faces(s.size() - 1); -1 when absent.
    int index_of(const Simplex& s) const;
    std::vector<Simplex> facets() const;

    // The edge on vertices 1, 2 and the one-point complex.
    static SimplicialComplex edge();
    static SimplicialComplex point();

private:
    std::vector<std::string> vertices_;
    std::vector<std::vector<Simplex>> faces_;
};

inline constexpr std::size_t default_simplex_budget = 200000;

// Vertex (x, y) has index x * #Y_0 + y.
SimplicialComplex segre_product(const SimplicialComplex& x, const SimplicialComplex& y,
                                std::size_t budget = default_simplex_budget);
// Vertex map of f * g given vertex maps f: X -> X' and g: Y -> Y'.
std::vector<int> segre_vertex_map(const std::vector<int>& f, const std::vector<int>& g, int target_y_vertices);
// X^{*n} with vertices labelled by n-tuples, index in base #X_0.
SimplicialComplex segre_power(const SimplicialComplex& x, int n, std::size_t budget = default_simplex_budget);

// Boundary of the d-simplices as sparse columns over the (d-1)-simplices.
std::vector<SparseVector> boundary_columns(const SimplicialComplex& x, int d);

struct HomologyData {
    std::vector<int> chain_ranks;    // dim C_i
    std::vector<int> boundary_ranks; // rank of d_i: C_i -> C_{i-1}
    std::vector<int> ranks;          // dim H_i
    // Harmonic cycles: a basis of ker d_i meeting im d_{i+1} orthogonally,
    // one per homology class.
    std::vector<std::vector<SparseVector>> representatives;
    std::vector<std::vector<int>> coordinates; // representative k is 1 at coordinates[i][k]
};

// Unreduced homology with rational coefficients for degrees 0..i_max.
// Throws Error when a boundary composite is nonzero.
HomologyData homology_ranks(const SimplicialComplex& x, int i_max);
int connected_components(const SimplicialComplex& x);

/// G acting on the vertices: perms[g][v] is the image of v under g.
struct GroupAction {
    FiniteGroup group;
    CharacterTable table;
    std::vector<std::vector<int>> perms;
};

// Closes generator images into a permutation per element; checks that the
// map is a homomorphism and preserves simplices.
GroupAction make_action(const FiniteGroup& g, const CharacterTable& table, const SimplicialComplex& x,
                        const std::vector<std::pair<int, std::vector<int>>>& generators);
void validate_action(const GroupAction& a, const SimplicialComplex& x);

// Trace of the simplicial map induced by a vertex permutation on H_i.
Cyclotomic homology_trace(const SimplicialComplex& x, const HomologyData& h, int i, const std::vector<int>& perm);

struct EquivariantDegree {
    int n = 0;
    int rank = 0;
    // Multiplicity of each tensor product of irreducibles of G, keyed by the
    // index tuple.
    std::map<std::vector<int>, Integer> decomposition;
    Polynomial monomial; // image in Sym^n, one variable per irreducible
};

std::vector<EquivariantDegree> equivariant_hilbert_data(const SimplicialComplex& x, const GroupAction& action, int i,
                                                        int n_max, std::size_t budget = default_simplex_budget);

} // namespace qordkit
