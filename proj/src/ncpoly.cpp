#include "qlie/ncpoly.hpp"

#include <algorithm>
#include <sstream>

namespace qlie {

NCPoly NCPoly::unit(CoeffElem c) {
    NCPoly p;
    p.add_term({}, c);
    return p;
}

NCPoly NCPoly::sym(const std::string& name, CoeffElem c) {
    NCPoly p;
    p.add_term({name}, c);
    return p;
}

NCPoly NCPoly::word(const Word& w, CoeffElem c) {
    NCPoly p;
    p.add_term(w, c);
    return p;
}

int NCPoly::degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, static_cast<int>(w.size()));
    return d;
}

void NCPoly::add_term(const Word& w, const CoeffElem& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

NCPoly NCPoly::operator-() const {
    NCPoly r;
    for (const auto& [w, c] : terms_) r.terms_.emplace(w, -c);
    return r;
}

NCPoly NCPoly::operator+(const NCPoly& other) const {
    NCPoly r = *this;
    for (const auto& [w, c] : other.terms_) r.add_term(w, c);
    return r;
}

NCPoly NCPoly::operator-(const NCPoly& other) const { return *this + (-other); }

NCPoly NCPoly::operator*(const NCPoly& other) const {
    NCPoly r;
    for (const auto& [w1, c1] : terms_)
        for (const auto& [w2, c2] : other.terms_) {
            Word w = w1;
            w.insert(w.end(), w2.begin(), w2.end());
            r.add_term(w, c1 * c2);
        }
    return r;
}

NCPoly NCPoly::scaled(const CoeffElem& by) const {
    NCPoly r;
    if (by.is_zero()) return r;
    for (const auto& [w, c] : terms_) r.add_term(w, c * by);
    return r;
}

std::string NCPoly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "[" << c.str() << "]";
        for (const auto& s : w) os << "*" << s;
    }
    return os.str();
}

TensorExpr::TensorExpr(std::initializer_list<Term> terms) {
    for (const auto& t : terms) add(t.left, t.right);
}

TensorExpr TensorExpr::of(NCPoly left, NCPoly right) {
    TensorExpr e;
    e.add(std::move(left), std::move(right));
    return e;
}

void TensorExpr::add(NCPoly left, NCPoly right) {
    if (left.is_zero() || right.is_zero()) return;
    terms_.push_back({std::move(left), std::move(right)});
    merge();
}

void TensorExpr::merge() {
    // Combine terms whose left factors coincide structurally.
    std::vector<Term> out;
    for (auto& t : terms_) {
        bool merged = false;
        for (auto& o : out) {
            if (o.left == t.left) {
                o.right = o.right + t.right;
                merged = true;
                break;
            }
        }
        if (!merged) out.push_back(std::move(t));
    }
    std::erase_if(out, [](const Term& t) { return t.left.is_zero() || t.right.is_zero(); });
    terms_ = std::move(out);
}

TensorExpr TensorExpr::operator+(const TensorExpr& other) const {
    TensorExpr r = *this;
    for (const auto& t : other.terms_) r.add(t.left, t.right);
    return r;
}

TensorExpr TensorExpr::operator*(const TensorExpr& other) const {
    TensorExpr r;
    for (const auto& a : terms_)
        for (const auto& b : other.terms_) r.add(a.left * b.left, a.right * b.right);
    return r;
}

TensorExpr TensorExpr::scaled(const CoeffElem& by) const {
    TensorExpr r;
    for (const auto& t : terms_) r.add(t.left.scaled(by), t.right);
    return r;
}

} // namespace qlie
