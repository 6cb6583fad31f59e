#pragma once

#include <optional>
#include <set>
#include <vector>

#include "quadpreper/graphs.hpp"
#include "quadpreper/qfield.hpp"

namespace quadpreper {

struct OrbitRecord {
    QuadElem start;
    std::vector<QuadElem> trajectory;
    std::optional<PointType> type;  // empty means ESCAPED
    enum class EscapeReason { NONE, ARCHIMEDEAN, LATTICE, STEP_CAP };
    EscapeReason escape = EscapeReason::NONE;
    bool escaped() const { return !type.has_value(); }
};

// Search-box data for PrePer(f_c, K) \ {infinity}.
struct PreperBounds {
    bool empty = false;          // some finite place has odd negative v(c)
    Integer denominator = 1;     // M: every preperiodic alpha lies in (1/M)(Z + Z sqrt(D))
    // archimedean bounds on |alpha| (B at the single place for K = Q or
    // imaginary K; B1/B2 at the two real places, sqrt(D) -> +/-)
    Rational b1, b2;
    Integer q_min = 0, q_max = 0;  // sqrt(D)-coordinate range (0..0 over Q)
    Integer box_cardinality = 0;   // conservative candidate count

    // integer p-range for a given q-coordinate; empty range when p_min > p_max
    std::pair<Integer, Integer> p_range(const FieldDesc& k, const Integer& q) const;
};

PreperBounds preper_bounds(const FieldDesc& k, const QuadElem& c);

// Exact forward orbit of x under z^2 + c with sound early escape: an iterate
// leaving the preper_bounds lattice/box cannot be preperiodic.
OrbitRecord orbit(const QuadElem& c, const QuadElem& x, long step_cap);

// preimages {gamma : gamma^2 + c = beta} inside the common field
std::vector<QuadElem> preimages(const QuadElem& c, const QuadElem& beta);

using PointSet = std::vector<std::pair<QuadElem, PointType>>;  // sorted by (a, b)

// Complete finite set PrePer(f_c, K) \ {infinity} by bounded lattice
// enumeration plus exact orbit verification.
PointSet preperiodic_points(const FieldDesc& k, const QuadElem& c);

// Independent oracle: periodic points from enumeration, then backward
// closure under preimages.
PointSet preper_via_closure(const FieldDesc& k, const QuadElem& c);

// functional digraph on the given points; input must be closed under f_c
PreperGraph build_graph(const PointSet& points, const QuadElem& c);

// guard for pathological boxes (spec'd limit 10^7 candidates)
inline constexpr long kDefaultBoxLimit = 10000000;

struct PreperOptions {
    long box_limit = kDefaultBoxLimit;
};

PointSet preperiodic_points(const FieldDesc& k, const QuadElem& c, const PreperOptions& opt);

}  // namespace quadpreper
