#include "qordkit/polynomial.hpp"

#include <algorithm>
#include <numeric>

#include "qordkit/error.hpp"

namespace qordkit {

Polynomial Polynomial::constant(int nvars, const Cyclotomic& c)
{
    Polynomial p(nvars);
    p.add_term(Exponent(static_cast<std::size_t>(nvars), 0), c);
    return p;
}

Polynomial Polynomial::monomial(int nvars, Exponent e, const Cyclotomic& c)
{
    if (e.size() != static_cast<std::size_t>(nvars)) {
        throw ValidationError("monomial exponent has the wrong number of variables");
    }
    Polynomial p(nvars);
    p.add_term(e, c);
    return p;
}

Cyclotomic Polynomial::coefficient(const Exponent& e) const
{
    auto it = terms_.find(e);
    return it == terms_.end() ? Cyclotomic() : it->second;
}

void Polynomial::add_term(const Exponent& e, const Cyclotomic& c)
{
    if (c.is_zero()) {
        return;
    }
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero()) {
            terms_.erase(it);
        }
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs)
{
    nvars_ = std::max(nvars_, rhs.nvars_);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, c);
    }
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs)
{
    nvars_ = std::max(nvars_, rhs.nvars_);
    for (const auto& [e, c] : rhs.terms_) {
        add_term(e, -c);
    }
    return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.nvars_ != b.nvars_) {
        throw ValidationError("polynomial variable counts differ");
    }
    Polynomial out(a.nvars_);
    Exponent e(static_cast<std::size_t>(a.nvars_));
    for (const auto& [ea, ca] : a.terms_) {
        for (const auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) {
                e[i] = ea[i] + eb[i];
            }
            out.add_term(e, ca * cb);
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Cyclotomic& c) const
{
    Polynomial out(nvars_);
    if (c.is_zero()) {
        return out;
    }
    for (const auto& [e, v] : terms_) {
        out.terms_.emplace(e, v * c);
    }
    return out;
}

Polynomial Polynomial::lifted(int m) const
{
    Polynomial out(nvars_);
    for (const auto& [e, v] : terms_) {
        out.terms_.emplace(e, v.lift(m));
    }
    return out;
}

bool LinearForm::is_zero() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Cyclotomic& c) { return c.is_zero(); });
}

bool LinearForm::is_integral() const
{
    return std::all_of(coeffs.begin(), coeffs.end(), [](const Cyclotomic& c) { return c.is_integral(); });
}

LinearForm LinearForm::lifted(int m) const
{
    LinearForm out;
    out.coeffs.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        out.coeffs.push_back(c.lift(m));
    }
    return out;
}

Polynomial LinearForm::one_minus() const
{
    const int n = nvars();
    Polynomial p = Polynomial::constant(n, Cyclotomic(1));
    for (int i = 0; i < n; ++i) {
        Exponent e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = 1;
        p.add_term(e, -coeffs[static_cast<std::size_t>(i)]);
    }
    return p;
}

std::string LinearForm::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) {
            continue;
        }
        if (!out.empty()) {
            out += " + ";
        }
        const std::string c = coeffs[i].to_string();
        out += (c == "1" ? "" : "(" + c + ")*") + "t" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

bool operator<(const LinearForm& a, const LinearForm& b)
{
    return std::lexicographical_compare(a.coeffs.begin(), a.coeffs.end(), b.coeffs.begin(), b.coeffs.end(),
                                        [](const Cyclotomic& x, const Cyclotomic& y) {
                                            const int m = common_order(x.order(), y.order());
                                            return representation_less(x.lift(m), y.lift(m));
                                        });
}

int total_degree(const Exponent& e)
{
    return std::accumulate(e.begin(), e.end(), 0);
}

bool SeriesTruncation::in_range(const Exponent& e) const
{
    if (e.size() != bound.size()) {
        return false;
    }
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] < 0 || e[i] > bound[i]) {
            return false;
        }
    }
    return total_bound < 0 || total_degree(e) <= total_bound;
}

Cyclotomic SeriesTruncation::coefficient(const Exponent& e) const
{
    auto it = coeffs.find(e);
    return it == coeffs.end() ? Cyclotomic() : it->second;
}

void SeriesTruncation::set(const Exponent& e, const Cyclotomic& c)
{
    if (c.is_zero()) {
        coeffs.erase(e);
    } else {
        coeffs[e] = c;
    }
}

std::vector<Exponent> SeriesTruncation::exponents() const
{
    std::vector<Exponent> out;
    Exponent e(bound.size(), 0);
    for (;;) {
        if (in_range(e)) {
            out.push_back(e);
        }
        std::size_t i = e.size();
        while (i > 0) {
            --i;
            if (e[i] < bound[i]) {
                ++e[i];
                break;
            }
            e[i] = 0;
            if (i == 0) {
                return out;
            }
        }
        if (e.empty()) {
            return out;
        }
    }
}

bool agree(const SeriesTruncation& a, const SeriesTruncation& b)
{
    if (a.bound.size() != b.bound.size()) {
        return false;
    }
    for (const auto* s : {&a, &b}) {
        const auto* other = s == &a ? &b : &a;
        for (const auto& [e, c] : s->coeffs) {
            if (other->in_range(e) && other->coefficient(e) != c) {
                return false;
            }
        }
    }
    return true;
}

} // namespace qordkit
