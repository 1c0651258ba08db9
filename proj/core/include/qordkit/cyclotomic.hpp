#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qordkit/rational.hpp"

namespace qordkit {

int euler_phi(int n);

// Integer coefficients of the n-th cyclotomic polynomial, lowest degree first.
const std::vector<Integer>& cyclotomic_polynomial(int n);

/// An element of the cyclotomic field Q(zeta_N), stored in the power basis
/// 1, zeta, ..., zeta^(phi(N)-1) of Q[x]/Phi_N(x).
///
/// Every value carries the order N of the field it currently lives in.
/// Binary operations on mixed orders embed both operands into Q(zeta_L),
/// L = lcm of the orders, via zeta_a = zeta_L^(L/a). Equality compares values,
/// not representations, so 1 in Q(zeta_1) equals 1 in Q(zeta_6).
class Cyclotomic {
public:
    Cyclotomic();
    Cyclotomic(long value); // NOLINT(google-explicit-constructor)
    Cyclotomic(const Rational& value, int order = 1);

    // coeffs.size() must equal euler_phi(order).
    static Cyclotomic from_coeffs(int order, std::vector<Rational> coeffs);

    // zeta_N^k; k is reduced mod N.
    static Cyclotomic root(int order, long long k);

    int order() const { return order_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    // Meaningful only when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }
    // Membership in Z[zeta_N]; the power basis is an integral basis.
    bool is_integral() const;

    // Re-express the value in Q(zeta_m); order() must divide m.
    Cyclotomic lift(int m) const;

    Cyclotomic inverse() const;
    // Complex conjugation, zeta -> zeta^-1.
    Cyclotomic conj() const;
    // The Galois automorphism zeta -> zeta^a, gcd(a, N) = 1.
    Cyclotomic galois(long long a) const;
    Cyclotomic pow(long long e) const;

    Cyclotomic& operator+=(const Cyclotomic& rhs);
    Cyclotomic& operator-=(const Cyclotomic& rhs);
    Cyclotomic& operator*=(const Cyclotomic& rhs);
    Cyclotomic& operator/=(const Cyclotomic& rhs);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend Cyclotomic operator/(Cyclotomic a, const Cyclotomic& b) { return a /= b; }
    Cyclotomic operator-() const;

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Total order on representations of equal order; used for canonical sorting.
    friend bool representation_less(const Cyclotomic& a, const Cyclotomic& b);

    // Human-readable, e.g. "1/2 - z^2" with z = zeta_N; "0" for zero.
    std::string to_string() const;

private:
    Cyclotomic(int order, std::vector<Rational> coeffs, bool /*trusted*/);

    int order_;
    std::vector<Rational> coeffs_;
};

// The common order two values are combined in.
int common_order(int a, int b);

} // namespace qordkit
