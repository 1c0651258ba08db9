#pragma once

#include <string>
#include <vector>

namespace qordkit {

/// A finite abelian group Z/n_1 x ... x Z/n_r. Elements are addressed either
/// by their component tuple or by a dense index in mixed radix (first
/// component most significant), so index 0 is always the identity.
class AbelianGroup {
public:
    AbelianGroup() = default; // the trivial group
    explicit AbelianGroup(std::vector<int> cyclic_orders);

    const std::vector<int>& cyclic_orders() const { return orders_; }
    int size() const { return size_; }
    // lcm of the cyclic orders.
    int exponent() const { return exponent_; }

    std::vector<int> components(int element) const;
    // Components are reduced mod n_i.
    int element(const std::vector<int>& components) const;

    int add(int a, int b) const;
    int negate(int a) const;
    int multiple(int a, long long k) const;
    int identity() const { return 0; }

    // Index of the character chi_a(g) = prod_i zeta_{n_i}^{a_i g_i} as a
    // power of zeta_exponent(): returns (sum_i a_i g_i exponent/n_i) mod exponent.
    int character_exponent(int character, int element) const;

    // "1" for cyclic groups, "(1,0)" for products, "0" for the trivial group.
    std::string element_name(int element) const;

    friend bool operator==(const AbelianGroup& a, const AbelianGroup& b) { return a.orders_ == b.orders_; }

private:
    int add_slow(int a, int b) const;

    std::vector<int> orders_;
    std::vector<int> add_table_; // dense when the group is small
    int size_ = 1;
    int exponent_ = 1;
};

} // namespace qordkit
