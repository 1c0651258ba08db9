#pragma once

#include <vector>

#include "qordkit/rational.hpp"

namespace qordkit {

using Partition = std::vector<int>; // weakly decreasing, positive parts

bool is_partition(const Partition& p);
int size(const Partition& p);

// Partitions of n in reverse lexicographic order: (n), (n-1,1), ..., (1^n).
std::vector<Partition> partitions(int n);

// z_mu = prod_k k^{m_k} m_k!, the centralizer order of cycle type mu in S_n.
Integer z_value(const Partition& mu);
Integer factorial(int n);

// chi^lambda at cycle type mu by the Murnaghan-Nakayama rule (memoized).
Integer sn_character(const Partition& lambda, const Partition& mu);

// Cycle type of a permutation of {0, ..., n-1}.
Partition cycle_type(const std::vector<int>& perm);

} // namespace qordkit
