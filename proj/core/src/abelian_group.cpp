#include "qordkit/abelian_group.hpp"

#include <numeric>

#include "qordkit/error.hpp"

namespace qordkit {

AbelianGroup::AbelianGroup(std::vector<int> cyclic_orders) : orders_(std::move(cyclic_orders))
{
    for (int n : orders_) {
        if (n < 1) {
            throw ValidationError("cyclic factor orders must be positive");
        }
        size_ *= n;
        exponent_ = std::lcm(exponent_, n);
    }
    if (size_ <= 1024) {
        add_table_.resize(static_cast<std::size_t>(size_) * static_cast<std::size_t>(size_));
        for (int a = 0; a < size_; ++a) {
            for (int b = 0; b < size_; ++b) {
                add_table_[static_cast<std::size_t>(a * size_ + b)] = add_slow(a, b);
            }
        }
    }
}

std::vector<int> AbelianGroup::components(int element) const
{
    if (element < 0 || element >= size_) {
        throw ValidationError("group element index " + std::to_string(element) + " out of range");
    }
    std::vector<int> out(orders_.size(), 0);
    for (std::size_t i = orders_.size(); i-- > 0;) {
        out[i] = element % orders_[i];
        element /= orders_[i];
    }
    return out;
}

int AbelianGroup::element(const std::vector<int>& components) const
{
    if (components.size() != orders_.size()) {
        throw ValidationError("group element has " + std::to_string(components.size()) + " components, expected " +
                              std::to_string(orders_.size()));
    }
    int idx = 0;
    for (std::size_t i = 0; i < orders_.size(); ++i) {
        int c = components[i] % orders_[i];
        if (c < 0) {
            c += orders_[i];
        }
        idx = idx * orders_[i] + c;
    }
    return idx;
}

int AbelianGroup::add(int a, int b) const
{
    if (!add_table_.empty() && a >= 0 && b >= 0 && a < size_ && b < size_) {
        return add_table_[static_cast<std::size_t>(a * size_ + b)];
    }
    return add_slow(a, b);
}

int AbelianGroup::add_slow(int a, int b) const
{
    auto ca = components(a);
    auto cb = components(b);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        ca[i] += cb[i];
    }
    return element(ca);
}

int AbelianGroup::negate(int a) const
{
    auto ca = components(a);
    for (auto& c : ca) {
        c = -c;
    }
    return element(ca);
}

int AbelianGroup::multiple(int a, long long k) const
{
    auto ca = components(a);
    for (std::size_t i = 0; i < ca.size(); ++i) {
        ca[i] = static_cast<int>((static_cast<long long>(ca[i]) * (k % orders_[i])) % orders_[i]);
    }
    return element(ca);
}

int AbelianGroup::character_exponent(int character, int element) const
{
    const auto a = components(character);
    const auto g = components(element);
    long long e = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        e += static_cast<long long>(a[i]) * g[i] * (exponent_ / orders_[i]);
    }
    return static_cast<int>(e % exponent_);
}

std::string AbelianGroup::element_name(int element) const
{
    const auto c = components(element);
    if (c.empty()) {
        return "0";
    }
    if (c.size() == 1) {
        return std::to_string(c[0]);
    }
    std::string out = "(";
    for (std::size_t i = 0; i < c.size(); ++i) {
        out += (i ? "," : "") + std::to_string(c[i]);
    }
    return out + ")";
}

} // namespace qordkit
