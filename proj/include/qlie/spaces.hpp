#pragma once

#include "qlie/kmatrix.hpp"
#include "qlie/ncpoly.hpp"

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qlie {

enum class SpaceName { Manin2, Euclid3, Euclid4, Minkowski };

std::string to_string(SpaceName s);
SpaceName space_from_string(const std::string& s);

using IndexTuple = std::vector<int>;
using SparseTensor = std::map<IndexTuple, CoeffElem>;

/// Which mixed form of the epsilon tensor to build, and how the kept lower
/// index of the all-upper form is slotted into the all-lower table. The
/// contraction patterns of the source tables are not all mutually
/// consistent, so both slot orders are exposed and the verification suite
/// reports which one the representation matrices actually satisfy.
enum class EpsMixedVariant {
    LowerLowerUpper,      // e_{AB}^C = g^{CD} e_{ABD}
    UpperUpperLower,      // e^{AB}_C = g^{AD} g^{BE} e_{DEC}
    UpperUpperLowerFirst, // e^{AB}_C = g^{AD} g^{BE} e_{CDE}
};

/// Static data of one quantum space: coordinates in canonical order, the
/// normal-ordering rewrite rules, metric and epsilon tables.
class QSpaceSpec {
  public:
    SpaceName name;
    std::vector<std::string> coordinates;
    /// Rules keyed by a descending adjacent pair; right sides are already
    /// normally ordered.
    std::map<std::pair<std::string, std::string>, NCPoly> rewrite_rules;
    SparseTensor metric_upper; // empty for manin2 (which uses the spinor metric)
    SparseTensor metric_lower;
    SparseTensor spinor_metric_upper; // manin2 only
    SparseTensor spinor_metric_lower;
    SparseTensor epsilon; // all-lower components

    int dim() const { return static_cast<int>(coordinates.size()); }
    int coordinate_index(const std::string& symbol) const;
    bool has_metric() const { return !metric_upper.empty(); }

    KMatrix metric_upper_matrix() const;
    KMatrix metric_lower_matrix() const;
};

const QSpaceSpec& space(SpaceName name);

/// Table value or exact zero; throws UnknownIndex for out-of-range indices.
CoeffElem metric_entry(SpaceName space, bool upper, int i, int j);
CoeffElem epsilon_entry(SpaceName space, const IndexTuple& idx);

/// Contracts the tensor with the metric (lower=true) or inverse metric at
/// the given position.
SparseTensor raise_lower(SpaceName space, const SparseTensor& tensor, int rank, int position,
                         bool lower);

/// Mixed epsilon tables for the three-dimensional space.
SparseTensor eps_mixed(SpaceName space, EpsMixedVariant variant);

enum class ReduceStrategy { Leftmost, Rightmost };

/// Rewrites every monomial into nondecreasing coordinate order. Throws
/// UnknownSymbol when the polynomial mentions a symbol outside the space.
NCPoly normal_order(SpaceName space, const NCPoly& poly,
                    ReduceStrategy strategy = ReduceStrategy::Leftmost);

/// normal_order with an explicit rewrite-step counter (termination checks).
NCPoly normal_order_counted(SpaceName space, const NCPoly& poly, ReduceStrategy strategy,
                            long& steps, long step_limit);

/// Applies one rewrite at the given word position; nullopt when that
/// position is not reducible.
std::optional<NCPoly> rewrite_at(SpaceName space, const Word& w, int position);

/// All reducible positions of a word.
std::vector<int> reducible_positions(SpaceName space, const Word& w);

/// Lower-index coordinate X_A = g_AB X^B expanded over upper coordinates,
/// as (coordinate index -> coefficient).
std::map<int, CoeffElem> lower_coordinate(SpaceName space, int index);

} // namespace qlie
