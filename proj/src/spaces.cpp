#include "qlie/spaces.hpp"

#include "qlie/errors.hpp"
#include "qlie/linalg.hpp"

#include <algorithm>
#include <cassert>

namespace qlie {

namespace {

CoeffElem Q(int k) { return CoeffElem::q_power(k); }
CoeffElem S(int k) { return CoeffElem::s_power(k); }
CoeffElem C(long v) { return CoeffElem::from_int(v); }
CoeffElem LAM() { return CoeffElem::lambda(); }

NCPoly w2(const std::string& a, const std::string& b, CoeffElem c) {
    return NCPoly::word({a, b}, std::move(c));
}

SparseTensor invert_metric(const SparseTensor& upper, int dim) {
    KMatrix g(dim, dim);
    for (const auto& [ij, v] : upper) g.at(ij[0], ij[1]) = v;
    KMatrix inv = exact_inverse(g);
    SparseTensor lower;
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j)
            if (!inv.at(i, j).is_zero()) lower[{i, j}] = inv.at(i, j);
    return lower;
}

QSpaceSpec make_manin2() {
    QSpaceSpec s;
    s.name = SpaceName::Manin2;
    s.coordinates = {"th1", "th2"};
    s.rewrite_rules[{"th2", "th1"}] = w2("th1", "th2", -Q(1));
    s.spinor_metric_upper[{0, 1}] = S(-1);
    s.spinor_metric_upper[{1, 0}] = -S(1);
    s.spinor_metric_lower = invert_metric(s.spinor_metric_upper, 2);
    return s;
}

QSpaceSpec make_euclid3() {
    QSpaceSpec s;
    s.name = SpaceName::Euclid3;
    s.coordinates = {"X+", "X3", "X-"};
    s.rewrite_rules[{"X3", "X+"}] = w2("X+", "X3", Q(2));
    s.rewrite_rules[{"X-", "X3"}] = w2("X3", "X-", Q(2));
    {
        NCPoly rhs = w2("X+", "X-", C(1)) + w2("X3", "X3", LAM());
        s.rewrite_rules[{"X-", "X+"}] = rhs;
    }
    s.metric_upper[{0, 2}] = -Q(1);
    s.metric_upper[{1, 1}] = C(1);
    s.metric_upper[{2, 0}] = -Q(-1);
    s.metric_lower = invert_metric(s.metric_upper, 3);

    auto& e = s.epsilon;
    e[{2, 1, 0}] = C(1);
    e[{1, 2, 0}] = -Q(-2);
    e[{2, 0, 1}] = -Q(-2);
    e[{0, 2, 1}] = Q(-2);
    e[{1, 0, 2}] = Q(-2);
    e[{0, 1, 2}] = -Q(-4);
    e[{1, 1, 1}] = -Q(-2) * LAM();
    return s;
}

QSpaceSpec make_euclid4() {
    QSpaceSpec s;
    s.name = SpaceName::Euclid4;
    s.coordinates = {"X1", "X2", "X3", "X4"};
    s.rewrite_rules[{"X2", "X1"}] = w2("X1", "X2", Q(-1));
    s.rewrite_rules[{"X3", "X1"}] = w2("X1", "X3", Q(-1));
    s.rewrite_rules[{"X3", "X2"}] = w2("X2", "X3", C(1));
    s.rewrite_rules[{"X4", "X1"}] = w2("X1", "X4", C(1)) + w2("X2", "X3", LAM());
    s.rewrite_rules[{"X4", "X2"}] = w2("X2", "X4", Q(-1));
    s.rewrite_rules[{"X4", "X3"}] = w2("X3", "X4", Q(-1));

    s.metric_upper[{0, 3}] = Q(-1);
    s.metric_upper[{1, 2}] = C(1);
    s.metric_upper[{2, 1}] = C(1);
    s.metric_upper[{3, 0}] = Q(1);
    s.metric_lower = invert_metric(s.metric_upper, 4);

    auto& e = s.epsilon;
    e[{0, 1, 2, 3}] = Q(4);
    e[{1, 0, 2, 3}] = -Q(3);
    e[{0, 2, 1, 3}] = -Q(4);
    e[{2, 0, 1, 3}] = Q(3);
    e[{1, 2, 0, 3}] = Q(2);
    e[{2, 1, 0, 3}] = -Q(2);
    e[{0, 2, 3, 1}] = Q(3);
    e[{2, 0, 3, 1}] = -Q(2);
    e[{0, 3, 2, 1}] = -Q(2);
    e[{3, 0, 2, 1}] = Q(2);
    e[{2, 3, 0, 1}] = Q(2);
    e[{3, 2, 0, 1}] = -Q(1);
    e[{1, 3, 0, 2}] = -Q(2);
    e[{3, 1, 0, 2}] = Q(1);
    e[{1, 2, 3, 0}] = -Q(2);
    e[{2, 1, 3, 0}] = Q(2);
    e[{1, 3, 2, 0}] = Q(1);
    e[{3, 1, 2, 0}] = -C(1);
    e[{2, 3, 1, 0}] = -Q(1);
    e[{3, 2, 1, 0}] = C(1);
    e[{0, 1, 3, 2}] = -Q(3);
    e[{1, 0, 3, 2}] = Q(2);
    e[{0, 3, 1, 2}] = Q(2);
    e[{3, 0, 1, 2}] = -Q(2);
    // Non-classical components.
    e[{2, 1, 2, 1}] = Q(2) * LAM();
    e[{1, 2, 1, 2}] = -Q(2) * LAM();
    return s;
}

QSpaceSpec make_minkowski() {
    QSpaceSpec s;
    s.name = SpaceName::Minkowski;
    s.coordinates = {"X0", "X+", "X3", "X-"};
    s.rewrite_rules[{"X+", "X0"}] = w2("X0", "X+", C(1));
    s.rewrite_rules[{"X3", "X0"}] = w2("X0", "X3", C(1));
    s.rewrite_rules[{"X-", "X0"}] = w2("X0", "X-", C(1));
    s.rewrite_rules[{"X3", "X+"}] = w2("X+", "X3", Q(2)) + w2("X0", "X+", -Q(1) * LAM());
    s.rewrite_rules[{"X-", "X3"}] = w2("X3", "X-", Q(2)) + w2("X0", "X-", Q(3) * LAM());
    s.rewrite_rules[{"X-", "X+"}] =
        w2("X+", "X-", C(1)) + w2("X3", "X3", LAM()) + w2("X0", "X3", -LAM());

    s.metric_upper[{0, 0}] = -C(1);
    s.metric_upper[{2, 2}] = C(1);
    s.metric_upper[{1, 3}] = -Q(1);
    s.metric_upper[{3, 1}] = -Q(-1);
    s.metric_lower = invert_metric(s.metric_upper, 4);

    auto& e = s.epsilon;
    e[{1, 2, 0, 3}] = -Q(-4);
    e[{2, 1, 0, 3}] = Q(-2);
    e[{1, 0, 2, 3}] = Q(-4);
    e[{0, 1, 2, 3}] = -Q(-4);
    e[{2, 0, 1, 3}] = -Q(-2);
    e[{0, 2, 1, 3}] = Q(-2);
    e[{1, 0, 3, 2}] = -Q(-2);
    e[{0, 1, 3, 2}] = Q(-2);
    e[{1, 3, 0, 2}] = Q(-2);
    e[{3, 1, 0, 2}] = -Q(-2);
    e[{0, 3, 1, 2}] = -Q(-2);
    e[{3, 0, 1, 2}] = Q(-2);
    e[{1, 2, 3, 0}] = Q(-4);
    e[{2, 1, 3, 0}] = -Q(-2);
    e[{1, 3, 2, 0}] = -Q(-2);
    e[{3, 1, 2, 0}] = Q(-2);
    e[{2, 3, 1, 0}] = Q(-2);
    e[{3, 2, 1, 0}] = -C(1);
    e[{2, 0, 3, 1}] = Q(-2);
    e[{0, 2, 3, 1}] = -Q(-2);
    e[{2, 3, 0, 1}] = -Q(-2);
    e[{3, 2, 0, 1}] = C(1);
    e[{0, 3, 2, 1}] = C(1);
    e[{3, 0, 2, 1}] = -C(1);
    // lambda components
    e[{0, 3, 0, 1}] = Q(-1) * LAM();
    e[{3, 0, 1, 0}] = -Q(-1) * LAM();
    e[{0, 2, 2, 2}] = -Q(-2) * LAM();
    e[{2, 2, 2, 0}] = Q(-2) * LAM();
    e[{2, 0, 2, 2}] = Q(-2) * LAM();
    e[{2, 0, 2, 0}] = -Q(-2) * LAM();
    e[{2, 2, 0, 2}] = -Q(-2) * LAM();
    e[{1, 0, 3, 0}] = -Q(-3) * LAM();
    e[{0, 2, 0, 2}] = Q(-2) * LAM();
    e[{0, 1, 0, 3}] = Q(-3) * LAM();
    return s;
}

const QSpaceSpec& get(SpaceName n) {
    static const QSpaceSpec manin2 = make_manin2();
    static const QSpaceSpec euclid3 = make_euclid3();
    static const QSpaceSpec euclid4 = make_euclid4();
    static const QSpaceSpec minkowski = make_minkowski();
    switch (n) {
    case SpaceName::Manin2: return manin2;
    case SpaceName::Euclid3: return euclid3;
    case SpaceName::Euclid4: return euclid4;
    case SpaceName::Minkowski: return minkowski;
    }
    throw InvalidArgument("unknown space");
}

} // namespace

std::string to_string(SpaceName s) {
    switch (s) {
    case SpaceName::Manin2: return "manin2";
    case SpaceName::Euclid3: return "euclid3";
    case SpaceName::Euclid4: return "euclid4";
    case SpaceName::Minkowski: return "minkowski";
    }
    return "?";
}

SpaceName space_from_string(const std::string& s) {
    if (s == "manin2") return SpaceName::Manin2;
    if (s == "euclid3") return SpaceName::Euclid3;
    if (s == "euclid4") return SpaceName::Euclid4;
    if (s == "minkowski") return SpaceName::Minkowski;
    throw ConfigError("unknown space name: " + s);
}

int QSpaceSpec::coordinate_index(const std::string& symbol) const {
    auto it = std::find(coordinates.begin(), coordinates.end(), symbol);
    if (it == coordinates.end()) throw UnknownSymbol("not a coordinate of " + to_string(name) + ": " + symbol);
    return static_cast<int>(it - coordinates.begin());
}

KMatrix QSpaceSpec::metric_upper_matrix() const {
    const auto& t = has_metric() ? metric_upper : spinor_metric_upper;
    KMatrix g(dim(), dim());
    for (const auto& [ij, v] : t) g.at(ij[0], ij[1]) = v;
    return g;
}

KMatrix QSpaceSpec::metric_lower_matrix() const {
    const auto& t = has_metric() ? metric_lower : spinor_metric_lower;
    KMatrix g(dim(), dim());
    for (const auto& [ij, v] : t) g.at(ij[0], ij[1]) = v;
    return g;
}

const QSpaceSpec& space(SpaceName name) { return get(name); }

CoeffElem metric_entry(SpaceName name, bool upper, int i, int j) {
    const QSpaceSpec& s = space(name);
    if (i < 0 || j < 0 || i >= s.dim() || j >= s.dim()) throw UnknownIndex("metric index out of range");
    const SparseTensor& t = s.has_metric() ? (upper ? s.metric_upper : s.metric_lower)
                                           : (upper ? s.spinor_metric_upper : s.spinor_metric_lower);
    auto it = t.find({i, j});
    return it == t.end() ? CoeffElem::zero() : it->second;
}

CoeffElem epsilon_entry(SpaceName name, const IndexTuple& idx) {
    const QSpaceSpec& s = space(name);
    size_t rank = name == SpaceName::Euclid3 ? 3 : 4;
    if (name == SpaceName::Manin2) throw UnknownIndex("manin2 has no epsilon table");
    if (idx.size() != rank) throw UnknownIndex("epsilon index tuple of wrong rank");
    for (int i : idx)
        if (i < 0 || i >= s.dim()) throw UnknownIndex("epsilon index out of range");
    auto it = s.epsilon.find(idx);
    return it == s.epsilon.end() ? CoeffElem::zero() : it->second;
}

SparseTensor raise_lower(SpaceName name, const SparseTensor& tensor, int rank, int position,
                         bool lower) {
    const QSpaceSpec& s = space(name);
    if (position < 0 || position >= rank) throw DimensionMismatch("contract position out of range");
    const SparseTensor& g = s.has_metric() ? (lower ? s.metric_lower : s.metric_upper)
                                           : (lower ? s.spinor_metric_lower : s.spinor_metric_upper);
    SparseTensor out;
    for (const auto& [idx, v] : tensor) {
        if (static_cast<int>(idx.size()) != rank) throw DimensionMismatch("tensor rank mismatch");
        for (const auto& [gij, gv] : g) {
            if (gij[1] != idx[static_cast<size_t>(position)]) continue;
            IndexTuple nidx = idx;
            nidx[static_cast<size_t>(position)] = gij[0];
            CoeffElem add = gv * v;
            auto [it, inserted] = out.try_emplace(nidx, add);
            if (!inserted) {
                it->second += add;
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

SparseTensor eps_mixed(SpaceName name, EpsMixedVariant variant) {
    const QSpaceSpec& s = space(name);
    if (!s.has_metric()) throw UnknownIndex("eps_mixed needs a metric");
    SparseTensor out;
    int n = s.dim();
    auto add = [&](const IndexTuple& t, const CoeffElem& v) {
        if (v.is_zero()) return;
        auto [it, inserted] = out.try_emplace(t, v);
        if (!inserted) {
            it->second += v;
            if (it->second.is_zero()) out.erase(it);
        }
    };
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                CoeffElem v = CoeffElem::zero();
                switch (variant) {
                case EpsMixedVariant::LowerLowerUpper:
                    // e_{ab}^c = g^{cd} e_{abd}
                    for (int d = 0; d < n; ++d)
                        v += metric_entry(name, true, c, d) * epsilon_entry(name, {a, b, d});
                    break;
                case EpsMixedVariant::UpperUpperLower:
                    for (int d = 0; d < n; ++d)
                        for (int e = 0; e < n; ++e)
                            v += metric_entry(name, true, a, d) * metric_entry(name, true, b, e) *
                                 epsilon_entry(name, {d, e, c});
                    break;
                case EpsMixedVariant::UpperUpperLowerFirst:
                    for (int d = 0; d < n; ++d)
                        for (int e = 0; e < n; ++e)
                            v += metric_entry(name, true, a, d) * metric_entry(name, true, b, e) *
                                 epsilon_entry(name, {c, d, e});
                    break;
                }
                add({a, b, c}, v);
            }
    return out;
}

std::vector<int> reducible_positions(SpaceName name, const Word& w) {
    const QSpaceSpec& s = space(name);
    std::vector<int> out;
    for (size_t i = 0; i + 1 < w.size(); ++i)
        if (s.rewrite_rules.count({w[i], w[i + 1]}) > 0) out.push_back(static_cast<int>(i));
    return out;
}

std::optional<NCPoly> rewrite_at(SpaceName name, const Word& w, int position) {
    const QSpaceSpec& s = space(name);
    auto it = s.rewrite_rules.find({w[static_cast<size_t>(position)], w[static_cast<size_t>(position) + 1]});
    if (it == s.rewrite_rules.end()) return std::nullopt;
    NCPoly prefix = NCPoly::word(Word(w.begin(), w.begin() + position));
    NCPoly suffix = NCPoly::word(Word(w.begin() + position + 2, w.end()));
    return prefix * it->second * suffix;
}

NCPoly normal_order_counted(SpaceName name, const NCPoly& poly, ReduceStrategy strategy, long& steps,
                            long step_limit) {
    const QSpaceSpec& s = space(name);
    for (const auto& [w, c] : poly.terms())
        for (const auto& sym : w) (void)s.coordinate_index(sym);

    NCPoly work = poly;
    steps = 0;
    for (;;) {
        const Word* target = nullptr;
        int pos = -1;
        for (const auto& [w, c] : work.terms()) {
            auto positions = reducible_positions(name, w);
            if (!positions.empty()) {
                target = &w;
                pos = strategy == ReduceStrategy::Leftmost ? positions.front() : positions.back();
                break;
            }
        }
        if (target == nullptr) return work;
        if (++steps > step_limit) throw DegreeExceeded("rewrite step limit exceeded");
        Word w = *target;
        CoeffElem c = work.terms().at(w);
        NCPoly replaced = *rewrite_at(name, w, pos);
        work.add_term(w, -c);
        work += replaced.scaled(c);
    }
}

NCPoly normal_order(SpaceName name, const NCPoly& poly, ReduceStrategy strategy) {
    long steps = 0;
    return normal_order_counted(name, poly, strategy, steps, 1000000);
}

std::map<int, CoeffElem> lower_coordinate(SpaceName name, int index) {
    const QSpaceSpec& s = space(name);
    std::map<int, CoeffElem> out;
    for (int b = 0; b < s.dim(); ++b) {
        CoeffElem g = metric_entry(name, false, index, b);
        if (!g.is_zero()) out[b] = g;
    }
    return out;
}

} // namespace qlie
