#include "qordkit/cyclotomic.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "qordkit/error.hpp"

namespace qordkit {

namespace {

using Poly = std::vector<Rational>; // dense, lowest degree first

void trim(Poly& p)
{
    while (!p.empty() && p.back() == 0) {
        p.pop_back();
    }
}

// x^e mod Phi_N for 0 <= e < N, as integer vectors of length phi(N).
struct PowerTable {
    int order = 1;
    int dim = 1;
    std::vector<std::vector<Integer>> powers;
};

std::vector<Integer> compute_cyclotomic_polynomial(int n)
{
    // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, exact division over Z.
    std::vector<Integer> num(static_cast<std::size_t>(n) + 1, 0);
    num[0] = -1;
    num[static_cast<std::size_t>(n)] = 1;
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) {
            continue;
        }
        const auto& div = cyclotomic_polynomial(d);
        const std::size_t dd = div.size() - 1;
        std::vector<Integer> quot(num.size() - dd, 0);
        for (std::size_t i = num.size(); i-- > dd;) {
            const Integer c = num[i]; // divisor is monic
            quot[i - dd] = c;
            for (std::size_t j = 0; j <= dd; ++j) {
                num[i - dd + j] -= c * div[j];
            }
        }
        num = std::move(quot);
    }
    return num;
}

std::mutex& cache_mutex()
{
    static std::mutex m;
    return m;
}

std::shared_ptr<const PowerTable> power_table(int n)
{
    static std::map<int, std::shared_ptr<const PowerTable>> cache;
    {
        std::lock_guard<std::mutex> lock(cache_mutex());
        auto it = cache.find(n);
        if (it != cache.end()) {
            return it->second;
        }
    }
    const auto& phi_poly = cyclotomic_polynomial(n);
    auto table = std::make_shared<PowerTable>();
    table->order = n;
    table->dim = static_cast<int>(phi_poly.size()) - 1;
    const auto dim = static_cast<std::size_t>(table->dim);
    std::vector<Integer> cur(dim, 0);
    cur[0] = 1;
    if (n == 1) {
        table->powers.push_back(cur);
    } else {
        for (int e = 0; e < n; ++e) {
            table->powers.push_back(cur);
            // multiply by x, then reduce the x^dim term using the monic Phi_n
            Integer top = cur[dim - 1];
            for (std::size_t i = dim - 1; i > 0; --i) {
                cur[i] = cur[i - 1];
            }
            cur[0] = 0;
            if (top != 0) {
                for (std::size_t i = 0; i < dim; ++i) {
                    cur[i] -= top * phi_poly[i];
                }
            }
        }
    }
    std::lock_guard<std::mutex> lock(cache_mutex());
    auto [it, inserted] = cache.emplace(n, std::move(table));
    return it->second;
}

// Reduce an arbitrary-degree polynomial in zeta_N to the power basis.
std::vector<Rational> reduce(int n, const Poly& p)
{
    auto table = power_table(n);
    const auto dim = static_cast<std::size_t>(table->dim);
    std::vector<Rational> out(dim, 0);
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (p[k] == 0) {
            continue;
        }
        if (k < dim) {
            out[k] += p[k];
            continue;
        }
        const auto& pw = table->powers[k % static_cast<std::size_t>(n)];
        for (std::size_t i = 0; i < dim; ++i) {
            if (pw[i] != 0) {
                out[i] += p[k] * pw[i];
            }
        }
    }
    return out;
}

// Polynomial division over Q: a = q*b + r.
void poly_divmod(const Poly& a, const Poly& b, Poly& q, Poly& r)
{
    r = a;
    trim(r);
    q.assign(r.size() >= b.size() ? r.size() - b.size() + 1 : 0, 0);
    while (r.size() >= b.size() && !r.empty()) {
        const std::size_t shift = r.size() - b.size();
        const Rational c = r.back() / b.back();
        q[shift] = c;
        for (std::size_t j = 0; j < b.size(); ++j) {
            r[shift + j] -= c * b[j];
        }
        trim(r);
    }
}

Poly poly_mul(const Poly& a, const Poly& b)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

Poly poly_sub(const Poly& a, const Poly& b)
{
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] += a[i];
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        out[i] -= b[i];
    }
    trim(out);
    return out;
}

} // namespace

int euler_phi(int n)
{
    if (n < 1) {
        throw PreconditionError("euler_phi requires n >= 1");
    }
    int result = n;
    int m = n;
    for (int p = 2; p * p <= m; ++p) {
        if (m % p == 0) {
            while (m % p == 0) {
                m /= p;
            }
            result -= result / p;
        }
    }
    if (m > 1) {
        result -= result / m;
    }
    return result;
}

const std::vector<Integer>& cyclotomic_polynomial(int n)
{
    if (n < 1) {
        throw PreconditionError("cyclotomic order must be positive");
    }
    static std::map<int, std::vector<Integer>> cache;
    static std::recursive_mutex m;
    std::lock_guard<std::recursive_mutex> lock(m);
    auto it = cache.find(n);
    if (it != cache.end()) {
        return it->second;
    }
    std::vector<Integer> poly;
    if (n == 1) {
        poly = {-1, 1};
    } else {
        poly = compute_cyclotomic_polynomial(n);
    }
    return cache.emplace(n, std::move(poly)).first->second;
}

int common_order(int a, int b)
{
    return static_cast<int>(lcm(a, b));
}

Cyclotomic::Cyclotomic() : order_(1), coeffs_{Rational(0)} {}

Cyclotomic::Cyclotomic(long value) : order_(1), coeffs_{Rational(value)} {}

Cyclotomic::Cyclotomic(const Rational& value, int order) : order_(order)
{
    if (order < 1) {
        throw PreconditionError("cyclotomic order must be positive");
    }
    coeffs_.assign(static_cast<std::size_t>(euler_phi(order)), 0);
    coeffs_[0] = value;
    coeffs_[0].canonicalize();
}

Cyclotomic::Cyclotomic(int order, std::vector<Rational> coeffs, bool) : order_(order), coeffs_(std::move(coeffs)) {}

Cyclotomic Cyclotomic::from_coeffs(int order, std::vector<Rational> coeffs)
{
    if (order < 1) {
        throw PreconditionError("cyclotomic order must be positive");
    }
    if (coeffs.size() != static_cast<std::size_t>(euler_phi(order))) {
        throw ValidationError("cyclotomic of order " + std::to_string(order) + " needs " +
                              std::to_string(euler_phi(order)) + " coefficients");
    }
    for (auto& c : coeffs) {
        c.canonicalize();
    }
    return Cyclotomic(order, std::move(coeffs), true);
}

Cyclotomic Cyclotomic::root(int order, long long k)
{
    if (order < 1) {
        throw PreconditionError("root of unity order must be positive");
    }
    auto table = power_table(order);
    long long e = k % order;
    if (e < 0) {
        e += order;
    }
    const auto& pw = table->powers[static_cast<std::size_t>(e)];
    std::vector<Rational> coeffs(pw.begin(), pw.end());
    return Cyclotomic(order, std::move(coeffs), true);
}

bool Cyclotomic::is_zero() const
{
    for (const auto& c : coeffs_) {
        if (c != 0) {
            return false;
        }
    }
    return true;
}

bool Cyclotomic::is_rational() const
{
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        if (coeffs_[i] != 0) {
            return false;
        }
    }
    return true;
}

bool Cyclotomic::is_one() const
{
    return is_rational() && coeffs_[0] == 1;
}

bool Cyclotomic::is_integral() const
{
    for (const auto& c : coeffs_) {
        if (!qordkit::is_integer(c)) {
            return false;
        }
    }
    return true;
}

Cyclotomic Cyclotomic::lift(int m) const
{
    if (m < 1 || m % order_ != 0) {
        throw PreconditionError("cannot embed Q(zeta_" + std::to_string(order_) + ") into Q(zeta_" +
                                std::to_string(m) + ")");
    }
    if (m == order_) {
        return *this;
    }
    const int step = m / order_;
    Poly p(static_cast<std::size_t>(step) * coeffs_.size(), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p[i * static_cast<std::size_t>(step)] = coeffs_[i];
    }
    return Cyclotomic(m, reduce(m, p), true);
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs)
{
    if (rhs.order_ != order_) {
        const int l = common_order(order_, rhs.order_);
        *this = lift(l);
        return *this += rhs.lift(l);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] += rhs.coeffs_[i];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs)
{
    if (rhs.order_ != order_) {
        const int l = common_order(order_, rhs.order_);
        *this = lift(l);
        return *this -= rhs.lift(l);
    }
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        coeffs_[i] -= rhs.coeffs_[i];
    }
    return *this;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs)
{
    if (rhs.order_ != order_) {
        const int l = common_order(order_, rhs.order_);
        *this = lift(l);
        return *this *= rhs.lift(l);
    }
    if (rhs.is_rational()) {
        const Rational c = rhs.coeffs_[0];
        for (auto& x : coeffs_) {
            x *= c;
        }
        return *this;
    }
    if (is_rational()) {
        const Rational c = coeffs_[0];
        coeffs_ = rhs.coeffs_;
        for (auto& x : coeffs_) {
            x *= c;
        }
        return *this;
    }
    coeffs_ = reduce(order_, poly_mul(coeffs_, rhs.coeffs_));
    return *this;
}

Cyclotomic& Cyclotomic::operator/=(const Cyclotomic& rhs)
{
    return *this *= rhs.inverse();
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic out = *this;
    for (auto& c : out.coeffs_) {
        c = -c;
    }
    return out;
}

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero()) {
        throw DivisionByZero("inverse of zero in Q(zeta_" + std::to_string(order_) + ")");
    }
    if (is_rational()) {
        return Cyclotomic(order_, [&] {
            std::vector<Rational> c(coeffs_.size(), 0);
            c[0] = 1 / coeffs_[0];
            return c;
        }(), true);
    }
    // Extended Euclid on (a, Phi_N) over Q: s*a + t*Phi = g, g a nonzero constant.
    const auto& phi_int = cyclotomic_polynomial(order_);
    Poly phi(phi_int.begin(), phi_int.end());
    Poly a = coeffs_;
    trim(a);
    Poly r0 = phi, r1 = a;
    Poly s0 = {}, s1 = {Rational(1)};
    while (!r1.empty()) {
        Poly q, r;
        poly_divmod(r0, r1, q, r);
        Poly s2 = poly_sub(s0, poly_mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the gcd, a nonzero constant since Phi_N is irreducible and deg a < deg Phi_N.
    if (r0.size() != 1) {
        throw Error("internal: cyclotomic gcd is not constant");
    }
    const Rational g = r0[0];
    for (auto& c : s0) {
        c /= g;
    }
    Poly q, rem;
    poly_divmod(s0, phi, q, rem);
    rem.resize(coeffs_.size(), 0);
    return Cyclotomic(order_, std::move(rem), true);
}

Cyclotomic Cyclotomic::galois(long long a) const
{
    if (std::gcd(a < 0 ? -a : a, static_cast<long long>(order_)) != 1) {
        throw PreconditionError("Galois exponent must be coprime to the order");
    }
    if (is_rational()) {
        return *this;
    }
    const long long n = order_;
    long long step = a % n;
    if (step < 0) {
        step += n;
    }
    Poly p(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        p[static_cast<std::size_t>((static_cast<long long>(i) * step) % n)] += coeffs_[i];
    }
    return Cyclotomic(order_, reduce(order_, p), true);
}

Cyclotomic Cyclotomic::conj() const
{
    return galois(-1);
}

Cyclotomic Cyclotomic::pow(long long e) const
{
    if (e < 0) {
        return inverse().pow(-e);
    }
    Cyclotomic result(Rational(1), order_);
    Cyclotomic base = *this;
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        base *= base;
        e >>= 1;
    }
    return result;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ == b.order_) {
        return a.coeffs_ == b.coeffs_;
    }
    const int l = common_order(a.order_, b.order_);
    return a.lift(l).coeffs_ == b.lift(l).coeffs_;
}

bool representation_less(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ != b.order_) {
        return a.order_ < b.order_;
    }
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] != b.coeffs_[i]) {
            return a.coeffs_[i] < b.coeffs_[i];
        }
    }
    return false;
}

std::string Cyclotomic::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const Rational& c = coeffs_[i];
        if (c == 0) {
            continue;
        }
        Rational mag = abs(c);
        if (first) {
            if (c < 0) {
                out << "-";
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            out << mag.get_str();
            continue;
        }
        if (mag != 1) {
            out << mag.get_str() << "*";
        }
        out << "z" << order_;
        if (i > 1) {
            out << "^" << i;
        }
    }
    return first ? std::string("0") : out.str();
}

} // namespace qordkit
