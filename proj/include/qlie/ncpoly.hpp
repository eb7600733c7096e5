#pragma once

#include "qlie/coeff.hpp"

#include <initializer_list>
#include <map>
#include <string>
#include <vector>

namespace qlie {

/// A word is a finite product of named symbols (coordinates or algebra
/// generators); the empty word is the unit.
using Word = std::vector<std::string>;

/// Noncommutative polynomial over the coefficient field in named symbols.
/// Zero coefficients are never stored; the ordered map keeps every
/// traversal deterministic.
class NCPoly {
  public:
    NCPoly() = default;

    static NCPoly zero() { return {}; }
    static NCPoly unit(CoeffElem c = CoeffElem::one());
    static NCPoly sym(const std::string& name, CoeffElem c = CoeffElem::one());
    static NCPoly word(const Word& w, CoeffElem c = CoeffElem::one());

    bool is_zero() const { return terms_.empty(); }
    const std::map<Word, CoeffElem>& terms() const { return terms_; }
    int degree() const; // max word length, -1 for zero

    void add_term(const Word& w, const CoeffElem& c);

    bool operator==(const NCPoly& other) const = default;

    NCPoly operator-() const;
    NCPoly operator+(const NCPoly& other) const;
    NCPoly operator-(const NCPoly& other) const;
    NCPoly operator*(const NCPoly& other) const; // word concatenation
    NCPoly scaled(const CoeffElem& by) const;
    NCPoly& operator+=(const NCPoly& other) { return *this = *this + other; }

    std::string str() const;

  private:
    std::map<Word, CoeffElem> terms_;
};

inline NCPoly operator*(const CoeffElem& c, const NCPoly& p) { return p.scaled(c); }

/// Finite sum of left (x) right tensor factors; Sweedler coproducts live here.
class TensorExpr {
  public:
    struct Term {
        NCPoly left;
        NCPoly right;
    };

    TensorExpr() = default;
    TensorExpr(std::initializer_list<Term> terms);

    static TensorExpr of(NCPoly left, NCPoly right);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add(NCPoly left, NCPoly right);

    TensorExpr operator+(const TensorExpr& other) const;
    TensorExpr operator*(const TensorExpr& other) const; // (a x b)(c x d) = ac x bd
    TensorExpr scaled(const CoeffElem& by) const;

  private:
    void merge();
    std::vector<Term> terms_;
};

} // namespace qlie
