#pragma once

#include <map>
#include <optional>
#include <vector>

#include "qordkit/genfun.hpp"
#include "qordkit/grouptheory.hpp"
#include "qordkit/partitions.hpp"

namespace qordkit {

// One partition per irreducible of G (for irreducible labels) or per class
// of G (for class labels).
using PartitionValuedFunction = std::vector<Partition>;
using WreathClassLabel = std::vector<Partition>;

int total_size(const PartitionValuedFunction& f);
void validate(const CharacterTable& g, const PartitionValuedFunction& f, bool by_class);

struct WreathClass {
    WreathClassLabel label;
    Integer size;
    Integer centralizer; // z(rho)
};

// Every class of G wr S_n; sizes sum to |G|^n n!.
std::vector<WreathClass> wreath_classes(const CharacterTable& g, int n);
Integer wreath_centralizer(const CharacterTable& g, const WreathClassLabel& rho);

/// Values of a class function of G wr S_n, aligned with wreath_classes(g, n).
struct ClassFunction {
    int n = 0;
    std::vector<WreathClass> classes;
    std::vector<Cyclotomic> values;
};

ClassFunction wreath_irreducible_character(const CharacterTable& g, const PartitionValuedFunction& lambda);
// <f, h> = sum_rho f(rho) conj(h(rho)) / z(rho)
Cyclotomic wreath_inner_product(const ClassFunction& f, const ClassFunction& h);

// All partition-valued functions of total size n over the irreducibles.
std::vector<PartitionValuedFunction> wreath_irreducible_labels(const CharacterTable& g, int n);

// lambda[n]: the trivial slot becomes (n - |lambda|, lambda(1)_1, ...);
// nullopt when that is not a partition.
std::optional<PartitionValuedFunction> pad(const CharacterTable& g, const PartitionValuedFunction& lambda, int n);
// Smallest n for which all three pad.
int min_valid_n(const CharacterTable& g, const std::vector<PartitionValuedFunction>& labels);

struct StabilityEntry {
    int n = 0;
    std::optional<Integer> multiplicity; // nullopt: n too small
};

struct StabilityTable {
    std::vector<StabilityEntry> entries;
    // Entries from this n onward agree; reported, not certified.
    std::optional<int> observed_onset;
    bool tail_constant = false; // last 4 valid entries agree
};

StabilityTable tensor_stability_table(const CharacterTable& g, const PartitionValuedFunction& lambda,
                                      const PartitionValuedFunction& mu, const PartitionValuedFunction& nu,
                                      int n_first, int n_last);
// Default window [min valid n, min valid n + 6].
StabilityTable tensor_stability_table(const CharacterTable& g, const PartitionValuedFunction& lambda,
                                      const PartitionValuedFunction& mu, const PartitionValuedFunction& nu);

// (1/|G|) sum_c |c| conj(chi_i(c)) / (1 - sum_j chi_j(c) t_j), one variable
// per irreducible of G.
FactoredRational diag_induced_series(const CharacterTable& g, int i);

// Multiplicity of each outer tensor product chi_{j_1} x ... x chi_{j_n} in
// Ind_G^{G^n} chi_i, by Frobenius reciprocity; zero entries omitted.
std::map<std::vector<int>, Integer> decompose_induced(const CharacterTable& g, int i, int n);
// sum over the decomposition of mult * t_{j_1} ... t_{j_n}.
Polynomial monomial_image(const std::map<std::vector<int>, Integer>& decomposition, int nvars);

} // namespace qordkit
