#include "nichols/cyclotomic.hpp"

#include "nichols/errors.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace nichols {

namespace {

std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num, const std::vector<mpz_class>& den)
{
    // den is monic
    std::vector<mpz_class> quo(num.size() - den.size() + 1);
    for (std::size_t k = quo.size(); k-- > 0;) {
        mpz_class c = num[k + den.size() - 1];
        quo[k] = c;
        for (std::size_t j = 0; j < den.size(); ++j)
            num[k + j] -= c * den[j];
    }
    return quo;
}

std::vector<mpz_class> compute_cyclotomic(int order)
{
    std::vector<mpz_class> p(order + 1);
    p[0] = -1;
    p[order] = 1;
    for (int d = 1; d < order; ++d)
        if (order % d == 0)
            p = poly_divide_exact(p, cyclotomic_polynomial(d));
    return p;
}

} // namespace

const std::vector<mpz_class>& cyclotomic_polynomial(int order)
{
    if (order < 1)
        throw InvalidOperand("cyclotomic order must be positive");
    static std::mutex mutex;
    static std::map<int, std::vector<mpz_class>> cache;
    {
        std::lock_guard lock(mutex);
        auto it = cache.find(order);
        if (it != cache.end())
            return it->second;
    }
    auto poly = compute_cyclotomic(order);
    std::lock_guard lock(mutex);
    return cache.emplace(order, std::move(poly)).first->second;
}

int euler_phi(int order)
{
    int result = order;
    int n = order;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0)
                n /= p;
            result -= result / p;
        }
    }
    if (n > 1)
        result -= result / n;
    return result;
}

Cyclotomic::Cyclotomic(int order) : order_(order)
{
    if (order < 1)
        throw InvalidOperand("cyclotomic order must be positive");
    coords_.assign(euler_phi(order), mpq_class(0));
}

Cyclotomic Cyclotomic::rational(int order, const mpq_class& value)
{
    Cyclotomic c(order);
    c.coords_[0] = value;
    return c;
}

Cyclotomic Cyclotomic::zeta_power(int order, long exponent)
{
    long e = exponent % order;
    if (e < 0)
        e += order;
    std::vector<mpq_class> raw(e + 1, mpq_class(0));
    raw[e] = 1;
    Cyclotomic c(order);
    c.reduce_from(std::move(raw));
    return c;
}

void Cyclotomic::reduce_from(std::vector<mpq_class> raw)
{
    const auto& phi = cyclotomic_polynomial(order_);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t k = raw.size(); k-- > deg;) {
        if (raw[k] == 0)
            continue;
        mpq_class c = raw[k];
        for (std::size_t j = 0; j <= deg; ++j)
            raw[k - deg + j] -= c * phi[j];
    }
    raw.resize(deg, mpq_class(0));
    coords_ = std::move(raw);
}

void Cyclotomic::unify(Cyclotomic& other)
{
    if (order_ == other.order_)
        return;
    if (is_rational()) {
        *this = rational(other.order_, coords_[0]);
        return;
    }
    if (other.is_rational()) {
        other = rational(order_, other.coords_[0]);
        return;
    }
    throw InvalidOperand("operands live in different cyclotomic fields");
}

bool Cyclotomic::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](const mpq_class& c) { return c == 0; });
}

bool Cyclotomic::is_one() const
{
    return is_rational() && coords_[0] == 1;
}

bool Cyclotomic::is_rational() const
{
    return std::all_of(coords_.begin() + 1, coords_.end(), [](const mpq_class& c) { return c == 0; });
}

Cyclotomic Cyclotomic::operator-() const
{
    Cyclotomic r = *this;
    for (auto& c : r.coords_)
        c = -c;
    return r;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& other)
{
    if (order_ != other.order_) {
        Cyclotomic o = other;
        unify(o);
        return *this += o;
    }
    for (std::size_t k = 0; k < coords_.size(); ++k)
        coords_[k] += other.coords_[k];
    return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& other)
{
    return *this += -other;
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& other)
{
    if (order_ != other.order_) {
        Cyclotomic o = other;
        unify(o);
        return *this *= o;
    }
    if (coords_.size() == 1) {
        coords_[0] *= other.coords_[0];
        return *this;
    }
    std::vector<mpq_class> raw(2 * coords_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        if (coords_[i] == 0)
            continue;
        for (std::size_t j = 0; j < other.coords_.size(); ++j)
            if (other.coords_[j] != 0)
                raw[i + j] += coords_[i] * other.coords_[j];
    }
    reduce_from(std::move(raw));
    return *this;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b)
{
    if (a.order_ == b.order_)
        return a.coords_ == b.coords_;
    return a.is_rational() && b.is_rational() && a.coords_[0] == b.coords_[0];
}

namespace {

/// Columns: coordinates of a * z^k.
std::vector<std::vector<mpq_class>> multiplication_matrix(const Cyclotomic& a)
{
    const int n = a.dimension();
    std::vector<std::vector<mpq_class>> rows(n, std::vector<mpq_class>(n));
    for (int k = 0; k < n; ++k) {
        Cyclotomic col = a * Cyclotomic::zeta_power(a.order(), k);
        for (int r = 0; r < n; ++r)
            rows[r][k] = col.coord(r);
    }
    return rows;
}

} // namespace

Cyclotomic Cyclotomic::inverse() const
{
    if (is_zero())
        throw InvalidOperand("inverse of zero");
    if (coords_.size() == 1)
        return rational(order_, 1 / coords_[0]);
    // Solve (multiplication by a) * x = 1 by Gauss-Jordan elimination.
    const int n = dimension();
    auto m = multiplication_matrix(*this);
    std::vector<mpq_class> rhs(n, mpq_class(0));
    rhs[0] = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (m[piv][col] == 0)
            ++piv;
        std::swap(m[piv], m[col]);
        std::swap(rhs[piv], rhs[col]);
        mpq_class inv = 1 / m[col][col];
        for (int j = col; j < n; ++j)
            m[col][j] *= inv;
        rhs[col] *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || m[r][col] == 0)
                continue;
            mpq_class f = m[r][col];
            for (int j = col; j < n; ++j)
                m[r][j] -= f * m[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    Cyclotomic r(order_);
    r.coords_ = std::move(rhs);
    return r;
}

Cyclotomic Cyclotomic::pow(long exponent) const
{
    Cyclotomic base = exponent < 0 ? inverse() : *this;
    unsigned long e = exponent < 0 ? -static_cast<unsigned long>(exponent) : exponent;
    Cyclotomic result = rational(order_, 1);
    while (e) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

mpq_class Cyclotomic::norm() const
{
    const int n = dimension();
    auto m = multiplication_matrix(*this);
    mpq_class det = 1;
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && m[piv][col] == 0)
            ++piv;
        if (piv == n)
            return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (int r = col + 1; r < n; ++r) {
            if (m[r][col] == 0)
                continue;
            mpq_class f = m[r][col] / m[col][col];
            for (int j = col; j < n; ++j)
                m[r][j] -= f * m[col][j];
        }
    }
    return det;
}

std::optional<int> Cyclotomic::root_of_unity_order() const
{
    if (is_zero())
        throw InvalidOperand("root-of-unity test on zero");
    // The roots of unity in Q(zeta_M) are +-zeta^k; their orders divide lcm(2, M).
    const int bound = std::lcm(2, order_);
    Cyclotomic power = *this;
    for (int n = 1; n <= bound; ++n) {
        if (power.is_one())
            return n;
        power *= *this;
    }
    return std::nullopt;
}

std::string Cyclotomic::to_string(const std::string& zeta_name) const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t k = 0; k < coords_.size(); ++k) {
        const mpq_class& c = coords_[k];
        if (c == 0)
            continue;
        bool negative = c < 0;
        mpq_class magnitude = negative ? mpq_class(-c) : c;
        if (first)
            out << (negative ? "-" : "");
        else
            out << (negative ? " - " : " + ");
        first = false;
        if (k == 0) {
            out << magnitude.get_str();
            continue;
        }
        if (magnitude != 1)
            out << magnitude.get_str() << "*";
        out << zeta_name;
        if (k > 1)
            out << "^" << k;
    }
    if (first)
        return "0";
    return out.str();
}

} // namespace nichols
