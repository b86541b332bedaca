#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace nichols {

/// Integer coefficients of the M-th cyclotomic polynomial, lowest degree first.
const std::vector<mpz_class>& cyclotomic_polynomial(int order);

/// Euler phi, the degree of Q(zeta_M) over Q.
int euler_phi(int order);

/// Element of Q(zeta_M), stored as coordinates in the power basis
/// 1, z, ..., z^(phi(M)-1) and always reduced modulo Phi_M.
class Cyclotomic {
public:
    Cyclotomic() : Cyclotomic(1) {}
    explicit Cyclotomic(int order);

    static Cyclotomic rational(int order, const mpq_class& value);
    static Cyclotomic zeta_power(int order, long exponent);

    int order() const { return order_; }
    int dimension() const { return static_cast<int>(coords_.size()); }
    const mpq_class& coord(int k) const { return coords_[k]; }

    bool is_zero() const;
    bool is_one() const;
    bool is_rational() const;
    const mpq_class& rational_part() const { return coords_[0]; }

    Cyclotomic operator-() const;
    Cyclotomic& operator+=(const Cyclotomic& other);
    Cyclotomic& operator-=(const Cyclotomic& other);
    Cyclotomic& operator*=(const Cyclotomic& other);

    friend Cyclotomic operator+(Cyclotomic a, const Cyclotomic& b) { return a += b; }
    friend Cyclotomic operator-(Cyclotomic a, const Cyclotomic& b) { return a -= b; }
    friend Cyclotomic operator*(Cyclotomic a, const Cyclotomic& b) { return a *= b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);

    Cyclotomic inverse() const;
    Cyclotomic pow(long exponent) const;

    /// Norm down to Q (determinant of multiplication by this element).
    mpq_class norm() const;

    /// Multiplicative order if this is a root of unity, otherwise nullopt.
    std::optional<int> root_of_unity_order() const;

    /// Canonical text, parseable by the scalar literal parser.
    std::string to_string(const std::string& zeta_name = "z") const;

private:
    void reduce_from(std::vector<mpq_class> raw);
    /// Lift into a common order with `other` (only rationals can be lifted).
    void unify(Cyclotomic& other);

    int order_;
    std::vector<mpq_class> coords_;
};

} // namespace nichols
