#pragma once

#include "qlie/errors.hpp"
#include "qlie/laurent.hpp"

#include <string>

namespace qlie {

/// Reduced fraction of Laurent polynomials in s. Canonical form: numerator
/// and denominator coprime, denominator an ordinary polynomial (lowest
/// exponent 0) with content 1 and positive leading coefficient. All unit
/// factors s^k live in the numerator.
class RatFun {
  public:
    RatFun() = default;
    RatFun(LaurentPoly numerator); // NOLINT: implicit from polynomials
    RatFun(LaurentPoly numerator, LaurentPoly denominator);

    static RatFun from_int(long v) { return RatFun(LaurentPoly(BigInt(v))); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    bool operator==(const RatFun& other) const = default;

    RatFun operator-() const;
    RatFun operator+(const RatFun& other) const;
    RatFun operator-(const RatFun& other) const;
    RatFun operator*(const RatFun& other) const;
    RatFun inverse() const;

    double eval(double s) const;
    std::string str() const; // "(num)/(den)"

  private:
    void reduce();
    LaurentPoly num_ = LaurentPoly::zero();
    LaurentPoly den_ = LaurentPoly::one();
};

/// Element of the coefficient field K = Q(s)[p]/(p^2 - s^2 - s^-2), with
/// q = s^2. Every entry of the transcribed tables lives here: q^{k/2} = s^k,
/// lambda = q - q^-1, lambda_+ = q + q^-1 and its half-integer powers via p.
class CoeffElem {
  public:
    CoeffElem() = default;
    CoeffElem(RatFun a) : a_(std::move(a)) {} // NOLINT: implicit rational part
    CoeffElem(RatFun a, RatFun b) : a_(std::move(a)), b_(std::move(b)) {}

    static CoeffElem from_int(long v) { return CoeffElem(RatFun::from_int(v)); }
    static CoeffElem zero() { return {}; }
    static CoeffElem one() { return from_int(1); }
    /// s^k, i.e. q^{k/2}.
    static CoeffElem s_power(int k);
    /// q^k.
    static CoeffElem q_power(int k) { return s_power(2 * k); }
    /// lambda = q - q^{-1}.
    static CoeffElem lambda();
    /// lambda_+ = q + q^{-1}.
    static CoeffElem lambda_plus();
    /// lambda_+^{m/2} for any integer m (odd m uses p).
    static CoeffElem lambda_plus_half_power(int m);
    /// p itself (= lambda_+^{1/2}).
    static CoeffElem p();

    const RatFun& rational_part() const { return a_; }
    const RatFun& p_part() const { return b_; }
    bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
    bool is_invertible() const;

    bool operator==(const CoeffElem& other) const = default;

    CoeffElem operator-() const;
    CoeffElem operator+(const CoeffElem& other) const;
    CoeffElem operator-(const CoeffElem& other) const;
    CoeffElem operator*(const CoeffElem& other) const;
    CoeffElem operator/(const CoeffElem& other) const;
    CoeffElem& operator+=(const CoeffElem& other) { return *this = *this + other; }
    CoeffElem& operator-=(const CoeffElem& other) { return *this = *this - other; }
    CoeffElem& operator*=(const CoeffElem& other) { return *this = *this * other; }

    CoeffElem inverse() const;
    CoeffElem pow(int e) const;

    /// Substitutes s = sqrt(qval), p = sqrt(qval + 1/qval).
    double eval_numeric(double qval) const;

    /// "(num)/(den) + (num)/(den)*p", polynomials in ascending exponent order.
    std::string str() const;

  private:
    RatFun a_;
    RatFun b_;
};

/// Antisymmetric q-number [[n]]_{q^a} = 1 + q^a + ... + q^{(n-1)a}.
CoeffElem qnum(int n, int a);

inline CoeffElem operator*(long scalar, const CoeffElem& x) { return CoeffElem::from_int(scalar) * x; }

} // namespace qlie
