#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace qlie {

using BigInt = boost::multiprecision::cpp_int;

/// Laurent polynomial in one variable s with arbitrary-precision integer
/// coefficients. Stored densely as a lowest exponent plus a coefficient
/// vector; the zero polynomial has an empty vector. Nonzero polynomials
/// keep front() != 0 and back() != 0.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(BigInt constant);                    // NOLINT: implicit for literals
    LaurentPoly(int lo, std::vector<BigInt> coeffs); // trims automatically

    static LaurentPoly monomial(const BigInt& c, int exponent);
    static LaurentPoly zero() { return {}; }
    static LaurentPoly one() { return LaurentPoly(BigInt(1)); }

    bool is_zero() const { return coeffs_.empty(); }
    int lo() const { return lo_; }
    int hi() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    BigInt coeff(int exponent) const;

    bool operator==(const LaurentPoly& other) const = default;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& other) const;
    LaurentPoly operator-(const LaurentPoly& other) const;
    LaurentPoly operator*(const LaurentPoly& other) const;
    LaurentPoly shifted(int by) const; // multiply by s^by

    /// Content (gcd of coefficients), always >= 0; 0 for the zero polynomial.
    BigInt content() const;
    /// Leading (highest-exponent) coefficient; 0 for the zero polynomial.
    BigInt lead() const;

    /// Exact division; the caller guarantees divisibility (asserted).
    LaurentPoly divide_exact(const LaurentPoly& divisor) const;

    double eval(double s) const;

    /// Terms in ascending exponent order, e.g. "-s^-2+2+3*s".
    std::string str() const;

  private:
    void trim();
    int lo_ = 0;
    std::vector<BigInt> coeffs_;
};

/// gcd of two Laurent polynomials up to units s^k: the result is an ordinary
/// polynomial with nonzero constant term, positive leading coefficient and
/// content 1.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

} // namespace qlie
