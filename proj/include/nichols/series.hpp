#pragma once

#include "nichols/braiding.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace nichols {

/// Integer polynomial in t_1..t_n, keyed by exponent vector.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(int rank) : rank_(rank) {}
    static IntPoly constant(int rank, const mpz_class& c);
    static IntPoly variable(int rank, int i);
    static IntPoly monomial(const MultiDegree& exponent, const mpz_class& c = 1);

    int rank() const { return rank_; }
    const std::map<MultiDegree, mpz_class>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    mpz_class coefficient(const MultiDegree& e) const;
    int total_degree() const;

    void add_term(const MultiDegree& e, const mpz_class& c);
    IntPoly& operator+=(const IntPoly& o);
    IntPoly& operator-=(const IntPoly& o);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly pow(int n) const;
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.terms_ == b.terms_; }

    /// Variables t_i renamed to t_(i + offset) in a ring of rank `new_rank`.
    IntPoly shifted(int offset, int new_rank) const;
    /// All t_i replaced by one variable; coefficients lowest degree first.
    std::vector<mpz_class> diagonal() const;

    std::string to_string() const;

private:
    int rank_ = 0;
    std::map<MultiDegree, mpz_class> terms_;
};

/// Parses integers, t1..tn, + - * ^ (nonnegative exponents) and parentheses.
IntPoly parse_int_poly(const std::string& text, int rank);

using SeriesTable = std::map<MultiDegree, mpq_class>;
using HilbertTable = std::map<MultiDegree, int>;

class RationalSeries {
public:
    RationalSeries() = default;
    /// Throws InvalidOperand when the denominator has zero constant term.
    RationalSeries(IntPoly numerator, IntPoly denominator);
    static RationalSeries parse(const std::string& numerator, const std::string& denominator, int rank);
    /// 1 / (1 - t^d).
    static RationalSeries geometric(const MultiDegree& d);

    int rank() const { return num_.rank(); }
    const IntPoly& numerator() const { return num_; }
    const IntPoly& denominator() const { return den_; }

    /// Power series coefficients for all multidegrees of total degree <= d.
    SeriesTable expand(int d) const;
    /// Product in the same variables.
    friend RationalSeries operator*(const RationalSeries& a, const RationalSeries& b);
    /// Product in disjoint variables: a in t_1..t_n, b in t_(n+1)..
    static RationalSeries block_product(const RationalSeries& a, const RationalSeries& b);

    std::string to_string() const;

private:
    IntPoly num_;
    IntPoly den_;
};

/// Order of the pole at t = 1 after setting all t_i = t; 0 when there is no
/// pole. Throws InvalidOperand for a zero numerator.
int gkdim_pole_order(const RationalSeries& s);

/// Coefficientwise product of two tables in the same variables, truncated to
/// total degree <= d.
SeriesTable convolve(const SeriesTable& a, const SeriesTable& b, int d);
/// Tables in disjoint variables, concatenated degrees, truncated.
SeriesTable block_convolve(const SeriesTable& a, const SeriesTable& b, int d);
SeriesTable to_series_table(const HilbertTable& h);

} // namespace nichols
