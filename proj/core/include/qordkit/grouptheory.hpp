#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qordkit/cyclotomic.hpp"
#include "qordkit/linalg.hpp"
#include "qordkit/partitions.hpp"

namespace qordkit {

/// A finite group given by its multiplication table over elements 0..order-1.
///
/// Groups built by the named constructors remember how they were built, so
/// their character tables can be computed; table-only groups need a
/// user-supplied character table.
class FiniteGroup {
public:
    // Validates closure, associativity, identity and inverses.
    FiniteGroup(std::vector<int> table, int order, std::string name = "G");

    static FiniteGroup cyclic(int n);
    // Explicit permutations; n <= 6. Element k is the k-th permutation of
    // {0..n-1} in lexicographic order, so 0 is the identity.
    static FiniteGroup symmetric(int n);
    static FiniteGroup trivial();
    // Element (a, b) has index a * |H| + b.
    static FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

    int order() const { return order_; }
    const std::string& name() const { return name_; }
    int identity() const { return identity_; }
    int mul(int a, int b) const
    {
        return table_[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + static_cast<std::size_t>(b)];
    }
    int inv(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
    int pow(int a, long long e) const;
    int element_order(int a) const;
    const std::vector<int>& table() const { return table_; }

    // Conjugacy classes sorted by smallest element; class 0 holds the identity.
    const std::vector<std::vector<int>>& classes() const { return classes_; }
    int class_of(int element) const { return class_of_[static_cast<std::size_t>(element)]; }
    int exponent() const;

    // Permutation of element k for symmetric groups; empty otherwise.
    const std::vector<std::vector<int>>& permutations() const { return perms_; }

    struct Structure {
        enum class Kind { Table, Cyclic, Symmetric, Product } kind = Kind::Table;
        int n = 0;
        std::shared_ptr<const FiniteGroup> left, right;
    };
    const Structure& structure() const { return structure_; }

private:
    FiniteGroup() = default;
    void finish();

    int order_ = 0;
    std::string name_;
    std::vector<int> table_;
    int identity_ = 0;
    std::vector<int> inverse_;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
    std::vector<std::vector<int>> perms_;
    Structure structure_;
};

/// Classes with sizes and irreducible characters valued in Q(zeta_order).
struct CharacterTable {
    struct ClassInfo {
        int representative = -1; // element index, -1 when no group is attached
        Integer size;
        std::string label;
    };
    Integer group_order;
    int order = 1; // N: every value lies in Q(zeta_N)
    std::vector<ClassInfo> classes;
    std::vector<std::vector<Cyclotomic>> chars; // chars[irreducible][class]
    std::vector<std::string> names;

    int num_classes() const { return static_cast<int>(classes.size()); }
    int num_irreducibles() const { return static_cast<int>(chars.size()); }
    Integer dimension(int irreducible) const;
    // Index of the all-ones row.
    int trivial_index() const;
    // sum_c |c| f(c) conj(g(c)) / |G|
    Cyclotomic inner_product(const std::vector<Cyclotomic>& f, const std::vector<Cyclotomic>& g) const;
    // Row orthonormality and sum of squared dimensions; throws ValidationError.
    void check() const;
};

// Cyclic, symmetric or products of those; user tables otherwise.
CharacterTable character_table(const FiniteGroup& g);
// Classes labelled by cycle types (identity class first), irreducibles by
// partitions ordered by dimension; no group elements needed.
CharacterTable symmetric_character_table(int n);
CharacterTable cyclic_character_table(int n);
// Classes and irreducibles indexed (a, b) -> a * #B + b.
CharacterTable product_character_table(const CharacterTable& a, const CharacterTable& b);
// Validates a user-supplied table against the group's classes.
CharacterTable attach_table(const FiniteGroup& g, CharacterTable table);

// Irreducible labels of S_n in the order used by symmetric_character_table.
std::vector<Partition> symmetric_irreducible_order(int n);

/// H together with an injective homomorphism into G.
struct Subgroup {
    FiniteGroup group;
    std::vector<int> embedding;
    std::optional<CharacterTable> table; // computed when absent
};

void validate_embedding(const FiniteGroup& g, const Subgroup& h);

// Young subgroup S_{c_1} x ... x S_{c_k} of S_n acting on consecutive blocks.
Subgroup young_subgroup(int n, const std::vector<int>& composition);
Subgroup trivial_subgroup(const FiniteGroup& g);

// Integer map on irreducible bases: entry [V][W] = <Res V, W>_H.
IntMatrix restriction_matrix(const FiniteGroup& g, const CharacterTable& gt, const Subgroup& h);

// The commutator subgroup as a sorted element list.
std::vector<int> commutator_subgroup(const FiniteGroup& h);
// Exponent of H / [H, H].
int abelianization_exponent(const FiniteGroup& h);
// Linear characters of H (the irreducibles of H^ab), as row indices.
std::vector<int> linear_characters(const CharacterTable& t);
// Entry [V][lambda] = <chi_V, lambda o pi>_H over the linear characters.
IntMatrix abelianization_matrix(const FiniteGroup& h, const CharacterTable& ht);

struct GoodFamilyResult {
    bool good = false;
    std::vector<Integer> elementary_divisors;
    long long exponent_lcm = 1;
    IntMatrix matrix; // rows: irreducibles of G
};

// covering = true skips the abelianization step.
GoodFamilyResult is_good_family(const FiniteGroup& g, const CharacterTable& gt, std::vector<Subgroup> subgroups,
                                bool covering = false);

} // namespace qordkit
