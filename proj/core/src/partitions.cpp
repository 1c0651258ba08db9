#include "qordkit/partitions.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>

#include "qordkit/error.hpp"

namespace qordkit {

bool is_partition(const Partition& p)
{
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] <= 0 || (i > 0 && p[i] > p[i - 1])) {
            return false;
        }
    }
    return true;
}

int size(const Partition& p)
{
    int s = 0;
    for (int x : p) {
        s += x;
    }
    return s;
}

std::vector<Partition> partitions(int n)
{
    if (n < 0) {
        throw ValidationError("cannot partition a negative number");
    }
    std::vector<Partition> out;
    Partition cur;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            cur.push_back(p);
            rec(remaining - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

Integer factorial(int n)
{
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
    return f;
}

Integer z_value(const Partition& mu)
{
    std::map<int, int> mult;
    for (int k : mu) {
        ++mult[k];
    }
    Integer z = 1;
    for (const auto& [k, m] : mult) {
        Integer power;
        mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(m));
        z *= power * factorial(m);
    }
    return z;
}

namespace {

// Removing a border strip of length k from lambda, via beta-numbers: strips
// correspond to moves b -> b - k onto a free position; the sign is
// (-1)^(number of beta-numbers jumped over).
Integer mn(const Partition& lambda, const Partition& mu, std::size_t from,
           std::map<std::pair<Partition, std::size_t>, Integer>& memo)
{
    if (from == mu.size()) {
        return lambda.empty() ? 1 : 0;
    }
    auto key = std::make_pair(lambda, from);
    auto it = memo.find(key);
    if (it != memo.end()) {
        return it->second;
    }
    const int k = mu[from];
    const auto len = lambda.size();
    std::vector<int> beta(len);
    for (std::size_t i = 0; i < len; ++i) {
        beta[i] = lambda[i] + static_cast<int>(len - 1 - i);
    }
    Integer total = 0;
    for (std::size_t i = 0; i < len; ++i) {
        const int target = beta[i] - k;
        if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) {
            continue;
        }
        int jumped = 0;
        for (int b : beta) {
            if (b > target && b < beta[i]) {
                ++jumped;
            }
        }
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        Partition next;
        for (std::size_t j = 0; j < len; ++j) {
            const int part = nb[j] - static_cast<int>(len - 1 - j);
            if (part > 0) {
                next.push_back(part);
            }
        }
        const Integer sub = mn(next, mu, from + 1, memo);
        total += jumped % 2 ? Integer(-sub) : sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

} // namespace

Integer sn_character(const Partition& lambda, const Partition& mu)
{
    if (!is_partition(lambda) || !is_partition(mu)) {
        throw ValidationError("character arguments must be partitions");
    }
    if (size(lambda) != size(mu)) {
        throw ValidationError("partition sizes differ");
    }
    static std::mutex guard;
    static std::map<std::pair<Partition, Partition>, Integer> cache;
    {
        std::lock_guard<std::mutex> lock(guard);
        auto it = cache.find({lambda, mu});
        if (it != cache.end()) {
            return it->second;
        }
    }
    std::map<std::pair<Partition, std::size_t>, Integer> memo;
    const Integer value = mn(lambda, mu, 0, memo);
    std::lock_guard<std::mutex> lock(guard);
    cache.emplace(std::make_pair(lambda, mu), value);
    return value;
}

Partition cycle_type(const std::vector<int>& perm)
{
    std::vector<char> seen(perm.size(), 0);
    Partition out;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) {
            continue;
        }
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
        }
        out.push_back(len);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

} // namespace qordkit
