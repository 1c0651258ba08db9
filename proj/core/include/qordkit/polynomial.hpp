#pragma once

#include <map>
#include <string>
#include <vector>

#include "qordkit/cyclotomic.hpp"

namespace qordkit {

using Exponent = std::vector<int>;

/// Sparse multivariate polynomial with cyclotomic coefficients. Zero
/// coefficients are never stored.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial constant(int nvars, const Cyclotomic& c);
    static Polynomial monomial(int nvars, Exponent e, const Cyclotomic& c);

    int nvars() const { return nvars_; }
    const std::map<Exponent, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Cyclotomic coefficient(const Exponent& e) const;

    void add_term(const Exponent& e, const Cyclotomic& c);

    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);
    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Cyclotomic& c) const;

    // Every coefficient re-expressed in Q(zeta_m).
    Polynomial lifted(int m) const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

private:
    int nvars_ = 0;
    std::map<Exponent, Cyclotomic> terms_;
};

/// A linear form sum_i c_i t_i, stored densely over nvars variables.
struct LinearForm {
    std::vector<Cyclotomic> coeffs;

    int nvars() const { return static_cast<int>(coeffs.size()); }
    bool is_zero() const;
    // Coefficients lie in Z[zeta_N].
    bool is_integral() const;
    LinearForm lifted(int m) const;
    // The polynomial 1 - L.
    Polynomial one_minus() const;
    std::string to_string() const;

    friend bool operator==(const LinearForm& a, const LinearForm& b) { return a.coeffs == b.coeffs; }
    // Canonical order on forms whose coefficients share one order.
    friend bool operator<(const LinearForm& a, const LinearForm& b);
};

/// Truncated power series: coefficients of t^n for exponents n in a box
/// n <= bound coordinatewise, optionally further cut to total degree
/// <= total_bound. Only nonzero coefficients are stored.
struct SeriesTruncation {
    Exponent bound;
    int total_bound = -1; // -1: no total-degree cut
    std::map<Exponent, Cyclotomic> coeffs;

    int nvars() const { return static_cast<int>(bound.size()); }
    bool in_range(const Exponent& e) const;
    Cyclotomic coefficient(const Exponent& e) const;
    void set(const Exponent& e, const Cyclotomic& c);
    // Every exponent in range, in lexicographic order.
    std::vector<Exponent> exponents() const;

    friend bool operator==(const SeriesTruncation& a, const SeriesTruncation& b)
    {
        return a.bound == b.bound && a.total_bound == b.total_bound && a.coeffs == b.coeffs;
    }
};

// Compares coefficients on the exponents that lie in range for both.
bool agree(const SeriesTruncation& a, const SeriesTruncation& b);

int total_degree(const Exponent& e);

} // namespace qordkit
