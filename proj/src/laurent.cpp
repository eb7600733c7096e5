#include "qlie/laurent.hpp"

#include <cassert>
#include <cmath>
#include <sstream>

namespace qlie {

LaurentPoly::LaurentPoly(BigInt constant) {
    if (constant != 0) {
        lo_ = 0;
        coeffs_.push_back(std::move(constant));
    }
}

LaurentPoly::LaurentPoly(int lo, std::vector<BigInt> coeffs) : lo_(lo), coeffs_(std::move(coeffs)) {
    trim();
}

LaurentPoly LaurentPoly::monomial(const BigInt& c, int exponent) {
    if (c == 0) return {};
    LaurentPoly p;
    p.lo_ = exponent;
    p.coeffs_.push_back(c);
    return p;
}

BigInt LaurentPoly::coeff(int exponent) const {
    if (is_zero() || exponent < lo_ || exponent > hi()) return 0;
    return coeffs_[static_cast<size_t>(exponent - lo_)];
}

void LaurentPoly::trim() {
    size_t head = 0;
    while (head < coeffs_.size() && coeffs_[head] == 0) ++head;
    if (head == coeffs_.size()) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    size_t tail = coeffs_.size();
    while (tail > head && coeffs_[tail - 1] == 0) --tail;
    if (head > 0 || tail < coeffs_.size()) {
        coeffs_ = std::vector<BigInt>(coeffs_.begin() + static_cast<long>(head),
                                      coeffs_.begin() + static_cast<long>(tail));
        lo_ += static_cast<int>(head);
    }
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& other) const {
    if (is_zero()) return other;
    if (other.is_zero()) return *this;
    int lo = std::min(lo_, other.lo_);
    int hi_exp = std::max(hi(), other.hi());
    std::vector<BigInt> out(static_cast<size_t>(hi_exp - lo + 1));
    for (size_t i = 0; i < coeffs_.size(); ++i) out[static_cast<size_t>(lo_ - lo) + i] += coeffs_[i];
    for (size_t i = 0; i < other.coeffs_.size(); ++i)
        out[static_cast<size_t>(other.lo_ - lo) + i] += other.coeffs_[i];
    return LaurentPoly(lo, std::move(out));
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& other) const { return *this + (-other); }

LaurentPoly LaurentPoly::operator*(const LaurentPoly& other) const {
    if (is_zero() || other.is_zero()) return {};
    std::vector<BigInt> out(coeffs_.size() + other.coeffs_.size() - 1);
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < other.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * other.coeffs_[j];
    return LaurentPoly(lo_ + other.lo_, std::move(out));
}

LaurentPoly LaurentPoly::shifted(int by) const {
    if (is_zero()) return {};
    LaurentPoly r = *this;
    r.lo_ += by;
    return r;
}

BigInt LaurentPoly::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? BigInt(-g) : g;
}

BigInt LaurentPoly::lead() const { return is_zero() ? BigInt(0) : coeffs_.back(); }

LaurentPoly LaurentPoly::divide_exact(const LaurentPoly& divisor) const {
    assert(!divisor.is_zero());
    if (is_zero()) return {};
    // Long division from the top; remainder must vanish.
    std::vector<BigInt> rem = coeffs_;
    const auto& d = divisor.coeffs_;
    assert(rem.size() >= d.size());
    std::vector<BigInt> quot(rem.size() - d.size() + 1);
    for (size_t k = quot.size(); k-- > 0;) {
        BigInt top = rem[k + d.size() - 1];
        if (top == 0) continue;
        assert(top % d.back() == 0);
        BigInt q = top / d.back();
        quot[k] = q;
        for (size_t j = 0; j < d.size(); ++j) rem[k + j] -= q * d[j];
    }
    for (const auto& c : rem) {
        (void)c;
        assert(c == 0);
    }
    return LaurentPoly(lo_ - divisor.lo_, std::move(quot));
}

double LaurentPoly::eval(double s) const {
    // Horner on the ordinary part, then the s^lo factor.
    double acc = 0.0;
    for (size_t i = coeffs_.size(); i-- > 0;) acc = acc * s + coeffs_[i].convert_to<double>();
    return acc * std::pow(s, lo_);
}

std::string LaurentPoly::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        int e = lo_ + static_cast<int>(i);
        BigInt a = c < 0 ? BigInt(-c) : c;
        if (!first)
            os << (c < 0 ? "-" : "+");
        else if (c < 0)
            os << "-";
        first = false;
        if (e == 0) {
            os << a.str();
        } else {
            if (a != 1) os << a.str() << "*";
            os << "s";
            if (e != 1) os << "^" << e;
        }
    }
    return os.str();
}

namespace {

// Primitive part of the ordinary-polynomial content of p (s^lo stripped).
LaurentPoly primitive_ordinary(const LaurentPoly& p) {
    if (p.is_zero()) return {};
    LaurentPoly q = p.shifted(-p.lo());
    BigInt c = q.content();
    if (q.lead() < 0) c = -c;
    std::vector<BigInt> out;
    out.reserve(q.coeffs().size());
    for (const auto& x : q.coeffs()) out.push_back(x / c);
    return LaurentPoly(0, std::move(out));
}

LaurentPoly scaled(const LaurentPoly& p, const BigInt& by) {
    std::vector<BigInt> cs = p.coeffs();
    for (auto& c : cs) c *= by;
    return LaurentPoly(p.lo(), std::move(cs));
}

// Remainder of the primitive pseudo-division of a by b. Both inputs are
// primitive ordinary polynomials; the result is again primitive ordinary
// (content, sign and unit s-powers stripped, which leaves gcd classes
// unchanged because s does not divide b).
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    while (!a.is_zero() && a.hi() >= b.hi()) {
        a = scaled(a, b.lead()) - scaled(b.shifted(a.hi() - b.hi()), a.lead());
        a = primitive_ordinary(a);
    }
    return a;
}

} // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.is_zero() ? LaurentPoly() : primitive_ordinary(b);
    if (b.is_zero()) return primitive_ordinary(a);
    LaurentPoly x = primitive_ordinary(a);
    LaurentPoly y = primitive_ordinary(b);
    // Primitive Euclidean algorithm; degrees here are tiny.
    while (!y.is_zero()) {
        if (x.hi() < y.hi()) std::swap(x, y);
        LaurentPoly r = pseudo_rem(x, y);
        x = y;
        y = r;
    }
    return primitive_ordinary(x);
}

} // namespace qlie
