#include "qlie/coeff.hpp"

#include <cmath>

namespace qlie {

RatFun::RatFun(LaurentPoly numerator) : num_(std::move(numerator)) {}

RatFun::RatFun(LaurentPoly numerator, LaurentPoly denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    reduce();
}

void RatFun::reduce() {
    if (num_.is_zero()) {
        den_ = LaurentPoly::one();
        return;
    }
    // Unit factors s^k live in the numerator only.
    if (den_.lo() != 0) {
        num_ = num_.shifted(-den_.lo());
        den_ = den_.shifted(-den_.lo());
    }
    LaurentPoly g = poly_gcd(num_, den_); // primitive, constant term != 0
    if (!(g == LaurentPoly::one())) {
        num_ = num_.divide_exact(g);
        den_ = den_.divide_exact(g);
    }
    // Shared integer content, with the denominator's sign normalized.
    BigInt c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (den_.lead() < 0) c = -c;
    if (c != 1) {
        std::vector<BigInt> ncs = num_.coeffs();
        for (auto& x : ncs) x /= c;
        num_ = LaurentPoly(num_.lo(), std::move(ncs));
        std::vector<BigInt> dcs = den_.coeffs();
        for (auto& x : dcs) x /= c;
        den_ = LaurentPoly(den_.lo(), std::move(dcs));
    }
}

RatFun RatFun::operator-() const {
    RatFun r = *this;
    r.num_ = -r.num_;
    return r;
}

RatFun RatFun::operator+(const RatFun& other) const {
    return RatFun(num_ * other.den_ + other.num_ * den_, den_ * other.den_);
}

RatFun RatFun::operator-(const RatFun& other) const { return *this + (-other); }

RatFun RatFun::operator*(const RatFun& other) const {
    return RatFun(num_ * other.num_, den_ * other.den_);
}

RatFun RatFun::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFun(den_, num_);
}

double RatFun::eval(double s) const {
    double d = den_.eval(s);
    if (std::abs(d) < 1e-300) throw PoleAtPoint("denominator vanishes at evaluation point");
    return num_.eval(s) / d;
}

std::string RatFun::str() const { return "(" + num_.str() + ")/(" + den_.str() + ")"; }

namespace {

// p^2 = s^2 + s^-2 as a rational function: (s^4 + 1)/s^2.
const RatFun& p_squared() {
    static const RatFun v(LaurentPoly(-2, {BigInt(1), BigInt(0), BigInt(0), BigInt(0), BigInt(1)}));
    return v;
}

} // namespace

CoeffElem CoeffElem::s_power(int k) { return CoeffElem(RatFun(LaurentPoly::monomial(1, k))); }

CoeffElem CoeffElem::lambda() {
    return CoeffElem(RatFun(LaurentPoly(-2, {BigInt(-1), BigInt(0), BigInt(0), BigInt(0), BigInt(1)})));
}

CoeffElem CoeffElem::lambda_plus() {
    return CoeffElem(RatFun(LaurentPoly(-2, {BigInt(1), BigInt(0), BigInt(0), BigInt(0), BigInt(1)})));
}

CoeffElem CoeffElem::p() { return CoeffElem(RatFun(), RatFun::from_int(1)); }

CoeffElem CoeffElem::lambda_plus_half_power(int m) {
    bool odd = (m % 2) != 0;
    int whole = odd ? (m - 1) / 2 : m / 2;
    CoeffElem r = lambda_plus().pow(whole);
    if (odd) r = r * p();
    return r;
}

bool CoeffElem::is_invertible() const { return !is_zero(); }

CoeffElem CoeffElem::operator-() const { return CoeffElem(-a_, -b_); }

CoeffElem CoeffElem::operator+(const CoeffElem& other) const {
    return CoeffElem(a_ + other.a_, b_ + other.b_);
}

CoeffElem CoeffElem::operator-(const CoeffElem& other) const {
    return CoeffElem(a_ - other.a_, b_ - other.b_);
}

CoeffElem CoeffElem::operator*(const CoeffElem& other) const {
    return CoeffElem(a_ * other.a_ + b_ * other.b_ * p_squared(), a_ * other.b_ + b_ * other.a_);
}

CoeffElem CoeffElem::inverse() const {
    // (a + bp)^-1 = (a - bp) / (a^2 - b^2 p^2); the norm vanishes only for
    // the zero element because p^2 is not a square in Q(s).
    RatFun norm = a_ * a_ - b_ * b_ * p_squared();
    if (norm.is_zero()) throw DivisionByZero("inverse of non-invertible coefficient");
    RatFun ninv = norm.inverse();
    return CoeffElem(a_ * ninv, -b_ * ninv);
}

CoeffElem CoeffElem::operator/(const CoeffElem& other) const { return *this * other.inverse(); }

CoeffElem CoeffElem::pow(int e) const {
    CoeffElem base = e < 0 ? inverse() : *this;
    int n = e < 0 ? -e : e;
    CoeffElem acc = one();
    while (n > 0) {
        if (n & 1) acc = acc * base;
        base = base * base;
        n >>= 1;
    }
    return acc;
}

double CoeffElem::eval_numeric(double qval) const {
    if (qval <= 0) throw InvalidArgument("eval_numeric requires qval > 0");
    double s = std::sqrt(qval);
    double pv = std::sqrt(qval + 1.0 / qval);
    return a_.eval(s) + b_.eval(s) * pv;
}

std::string CoeffElem::str() const { return a_.str() + " + " + b_.str() + "*p"; }

CoeffElem qnum(int n, int a) {
    if (n < 1) throw InvalidArgument("qnum requires n >= 1");
    if (a == 0) throw InvalidArgument("qnum requires a != 0");
    CoeffElem r = CoeffElem::zero();
    for (int k = 0; k < n; ++k) r += CoeffElem::q_power(a * k);
    return r;
}

} // namespace qlie
