#pragma once

#include <vector>

#include "qordkit/abelian_group.hpp"
#include "qordkit/langkit.hpp"
#include "qordkit/polynomial.hpp"

namespace qordkit {

/// numerator / prod_k (1 - factors[k]), all coefficients in Q(zeta_order).
///
/// The factor list is kept sorted, so two values built the same way compare
/// equal. Equality is structural: the same rational function can have
/// several representations.
class FactoredRational {
public:
    FactoredRational() = default;
    FactoredRational(int nvars, int order = 1);

    static FactoredRational zero(int nvars);
    static FactoredRational one(int nvars);
    static FactoredRational from_polynomial(const Polynomial& p);
    // 1 / (1 - form)
    static FactoredRational geometric(const LinearForm& form);

    int nvars() const { return nvars_; }
    int order() const { return order_; }
    const Polynomial& numerator() const { return numerator_; }
    const std::vector<LinearForm>& factors() const { return factors_; }
    bool is_zero() const { return numerator_.is_zero(); }

    // Re-express in Q(zeta_m); order() must divide m.
    FactoredRational lifted(int m) const;

    // Numerator and factors over one field; zero factors are dropped (1/(1-0) = 1).
    static FactoredRational make(int order, Polynomial numerator, std::vector<LinearForm> factors);

    FactoredRational& operator+=(const FactoredRational& rhs);
    FactoredRational& operator-=(const FactoredRational& rhs);
    friend FactoredRational operator+(FactoredRational a, const FactoredRational& b) { return a += b; }
    friend FactoredRational operator-(FactoredRational a, const FactoredRational& b) { return a -= b; }
    friend FactoredRational operator*(const FactoredRational& a, const FactoredRational& b);
    FactoredRational scaled(const Cyclotomic& c) const;

    friend bool operator==(const FactoredRational& a, const FactoredRational& b)
    {
        return a.nvars_ == b.nvars_ && a.order_ == b.order_ && a.numerator_ == b.numerator_ &&
               a.factors_ == b.factors_;
    }

private:
    int nvars_ = 0;
    int order_ = 1;
    Polynomial numerator_;
    std::vector<LinearForm> factors_;
};

// Denominator factors have Z[zeta_N]-integral coefficients, N = F.order().
bool is_class_kn(const FactoredRational& f);

// Coefficient of t^n = number of accepted words of norm n, by dynamic
// programming over (state, norm) pairs.
SeriesTruncation series_from_dfa(const Dfa& d, const Norm& norm, const Exponent& bound);

// Structural closed form of an unambiguous ordered expression under a
// universal norm. Throws AmbiguousExpression when the certificate fails.
FactoredRational ordered_genfun(const Alphabet& alphabet, const LanguageExpr& expr, const Norm& norm);

// Throws AmbiguousExpression with a reason when expr may count a word twice.
void certify_unambiguous(const Alphabet& alphabet, const LanguageExpr& expr);
bool is_unambiguous(const Alphabet& alphabet, const LanguageExpr& expr);

// t_i <- zeta_order^exponents[i] t_i.
FactoredRational cyclotomic_translate(const FactoredRational& f, int order, const std::vector<long long>& exponents);

// Keeps exactly the coefficients a_n with psi(n) in target. psi[i] is the
// group element assigned to the i-th basis vector.
FactoredRational congruence_filter(const FactoredRational& f, const AbelianGroup& group,
                                   const std::vector<int>& psi, const std::vector<int>& target);

// Requires a universal norm.
FactoredRational quasi_ordered_genfun(const QuasiOrderedExpr& q, const Norm& norm);

SeriesTruncation expand_rational(const FactoredRational& f, const Exponent& bound, int total_bound = -1);

} // namespace qordkit
