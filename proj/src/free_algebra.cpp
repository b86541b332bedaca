#include "nichols/free_algebra.hpp"

#include "nichols/errors.hpp"

#include <sstream>

namespace nichols {

MultiDegree word_degree(const Word& w, int rank)
{
    MultiDegree d(rank);
    for (auto letter : w) {
        if (letter >= rank)
            throw std::out_of_range("letter outside the generator range");
        d[letter] += 1;
    }
    return d;
}

std::string word_to_string(const Word& w)
{
    if (w.empty())
        return "1";
    std::string out;
    for (auto letter : w) {
        int index = letter + 1;
        out += index < 10 ? "x" + std::to_string(index) : "x(" + std::to_string(index) + ")";
    }
    return out;
}

namespace {

// Coefficient text for a term; empty for 1, "-" for -1.
std::string coefficient_prefix(const Scalar& c, const std::string& tr)
{
    if (c.is_one())
        return "";
    if ((-c).is_one())
        return "-";
    std::string text = c.to_string(tr);
    bool atomic = text.find_first_of("+-/ ", 1) == std::string::npos && text[0] != '-';
    return (atomic ? text : "(" + text + ")") + "*";
}

} // namespace

FreeElement FreeElement::unit(int rank)
{
    return word(rank, {});
}

FreeElement FreeElement::generator(int rank, int i)
{
    if (i < 0 || i >= rank)
        throw std::out_of_range("generator index out of range");
    return word(rank, {static_cast<std::uint8_t>(i)});
}

FreeElement FreeElement::word(int rank, Word w, Scalar coeff)
{
    FreeElement e(rank);
    e.add_term(w, coeff);
    return e;
}

void FreeElement::add_term(const Word& w, const Scalar& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(w, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Scalar FreeElement::coefficient(const Word& w) const
{
    auto it = terms_.find(w);
    return it == terms_.end() ? Scalar::zero(1) : it->second;
}

std::optional<MultiDegree> FreeElement::degree() const
{
    if (terms_.empty())
        return std::nullopt;
    MultiDegree d = word_degree(terms_.begin()->first, rank_);
    for (const auto& [w, c] : terms_)
        if (word_degree(w, rank_) != d)
            throw NonHomogeneous("element is not homogeneous: " + to_string());
    return d;
}

bool FreeElement::is_homogeneous() const
{
    try {
        degree();
        return true;
    } catch (const NonHomogeneous&) {
        return false;
    }
}

int FreeElement::max_length() const
{
    return terms_.empty() ? 0 : static_cast<int>(terms_.rbegin()->first.size());
}

std::map<MultiDegree, FreeElement> FreeElement::components() const
{
    std::map<MultiDegree, FreeElement> out;
    for (const auto& [w, c] : terms_) {
        auto [it, inserted] = out.try_emplace(word_degree(w, rank_), rank_);
        it->second.terms_.emplace(w, c);
    }
    return out;
}

FreeElement FreeElement::operator-() const
{
    FreeElement r(rank_);
    for (const auto& [w, c] : terms_)
        r.terms_.emplace(w, -c);
    return r;
}

FreeElement& FreeElement::operator+=(const FreeElement& other)
{
    if (rank_ == 0)
        rank_ = other.rank_;
    for (const auto& [w, c] : other.terms_)
        add_term(w, c);
    return *this;
}

FreeElement& FreeElement::operator-=(const FreeElement& other)
{
    if (rank_ == 0)
        rank_ = other.rank_;
    for (const auto& [w, c] : other.terms_)
        add_term(w, -c);
    return *this;
}

FreeElement& FreeElement::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, v] : terms_)
        v *= c;
    return *this;
}

FreeElement operator*(const FreeElement& a, const FreeElement& b)
{
    FreeElement r(std::max(a.rank_, b.rank_));
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) {
            Word w = wa;
            w.insert(w.end(), wb.begin(), wb.end());
            r.add_term(w, ca * cb);
        }
    return r;
}

std::string FreeElement::to_string(const std::string& transcendental) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        std::string prefix, body;
        if (w.empty()) {
            body = c.to_string(transcendental);
            if (body[0] == '-' && body.find_first_of("+-/ ", 1) == std::string::npos) {
                prefix = "-";
                body = body.substr(1);
            } else if (body.find_first_of("+-/ ", 1) != std::string::npos) {
                body = "(" + body + ")";
            }
        } else {
            prefix = coefficient_prefix(c, transcendental);
            body = word_to_string(w);
        }
        if (first) {
            out += prefix + body;
        } else if (!prefix.empty() && prefix[0] == '-') {
            out += " - " + prefix.substr(1) + body;
        } else {
            out += " + " + prefix + body;
        }
        first = false;
    }
    return out;
}

FreeElement power(const FreeElement& u, int n)
{
    if (n < 0)
        throw std::invalid_argument("negative power of a free algebra element");
    FreeElement r = FreeElement::unit(u.rank());
    for (int k = 0; k < n; ++k)
        r = r * u;
    return r;
}

FreeElement braided_commutator(const BraidingMatrix& q, const FreeElement& u, const FreeElement& v)
{
    auto du = u.degree();
    auto dv = v.degree();
    if (!du || !dv)
        return FreeElement(q.rank());
    return u * v - bicharacter(q, *du, *dv) * (v * u);
}

FreeElement ad_power(const BraidingMatrix& q, int i, const FreeElement& v, int n)
{
    if (n < 0)
        throw std::invalid_argument("negative adjoint power");
    v.degree(); // homogeneity check
    FreeElement x = FreeElement::generator(q.rank(), i);
    FreeElement r = v;
    for (int k = 0; k < n; ++k)
        r = braided_commutator(q, x, r);
    return r;
}

TensorElement TensorElement::pure(const FreeElement& a, const FreeElement& b)
{
    TensorElement r(std::max(a.rank(), b.rank()));
    for (const auto& [wa, ca] : a.terms())
        for (const auto& [wb, cb] : b.terms())
            r.add_term(wa, wb, ca * cb);
    return r;
}

void TensorElement::add_term(const Word& a, const Word& b, const Scalar& coeff)
{
    if (coeff.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(Key{a, b}, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

Scalar TensorElement::coefficient(const Word& a, const Word& b) const
{
    auto it = terms_.find(Key{a, b});
    return it == terms_.end() ? Scalar::zero(1) : it->second;
}

TensorElement& TensorElement::operator+=(const TensorElement& other)
{
    if (rank_ == 0)
        rank_ = other.rank_;
    for (const auto& [k, c] : other.terms_)
        add_term(k.first, k.second, c);
    return *this;
}

TensorElement& TensorElement::operator-=(const TensorElement& other)
{
    if (rank_ == 0)
        rank_ = other.rank_;
    for (const auto& [k, c] : other.terms_)
        add_term(k.first, k.second, -c);
    return *this;
}

TensorElement& TensorElement::operator*=(const Scalar& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, v] : terms_)
        v *= c;
    return *this;
}

std::string TensorElement::to_string(const std::string& transcendental) const
{
    if (terms_.empty())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first)
            out << " + ";
        first = false;
        if (!c.is_one())
            out << "(" << c.to_string(transcendental) << ")*";
        out << word_to_string(k.first) << " (x) " << word_to_string(k.second);
    }
    return out.str();
}

namespace {

// chi(deg a, deg b) computed letter by letter.
Scalar word_pairing(const BraidingMatrix& q, const Word& a, const Word& b)
{
    Scalar r = Scalar::one(1);
    for (auto x : a)
        for (auto y : b)
            r *= q(x, y);
    return r;
}

} // namespace

TensorElement braided_tensor_product(const BraidingMatrix& q, const TensorElement& x, const TensorElement& y)
{
    TensorElement r(std::max(x.rank(), y.rank()));
    for (const auto& [kx, cx] : x.terms())
        for (const auto& [ky, cy] : y.terms()) {
            Word left = kx.first;
            left.insert(left.end(), ky.first.begin(), ky.first.end());
            Word right = kx.second;
            right.insert(right.end(), ky.second.begin(), ky.second.end());
            r.add_term(left, right, cx * cy * word_pairing(q, kx.second, ky.first));
        }
    return r;
}

TensorElement coproduct_word(const BraidingMatrix& q, const Word& w)
{
    TensorElement acc(q.rank());
    acc.add_term({}, {}, Scalar::one(1));
    for (auto letter : w) {
        TensorElement next(q.rank());
        for (const auto& [k, c] : acc.terms()) {
            // letter to the left leg passes over the right leg
            Scalar braid = c;
            for (auto r : k.second)
                braid *= q(r, letter);
            Word left = k.first;
            left.push_back(letter);
            next.add_term(left, k.second, braid);
            Word right = k.second;
            right.push_back(letter);
            next.add_term(k.first, right, c);
        }
        acc = std::move(next);
    }
    return acc;
}

TensorElement coproduct(const BraidingMatrix& q, const FreeElement& u, int cutoff)
{
    if (u.max_length() > cutoff)
        throw CutoffExceeded("coproduct: element of degree " + std::to_string(u.max_length()) +
                             " exceeds cutoff " + std::to_string(cutoff));
    TensorElement r(q.rank());
    for (const auto& [w, c] : u.terms()) {
        TensorElement d = coproduct_word(q, w);
        d *= c;
        r += d;
    }
    return r;
}

TensorElement primitive_defect(const BraidingMatrix& q, const FreeElement& u)
{
    u.degree();
    if (!u.constant_term().is_zero())
        throw InvalidOperand("primitive_defect: element has a nonzero constant term");
    TensorElement r = coproduct(q, u, u.max_length());
    r -= TensorElement::pure(u, FreeElement::unit(q.rank()));
    r -= TensorElement::pure(FreeElement::unit(q.rank()), u);
    return r;
}

} // namespace nichols
