#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadpreper/graphs.hpp"
#include "quadpreper/qfield.hpp"

namespace quadpreper {

// Closed enumeration of the implemented marked-point parametrizations.
enum class FamilyId {
    PER1, PER2, PER3, PER4, PER12, PER13, PER23, PER33, PER14, PER34, PER123,
    G1, G4P, G5, G6P, G8P, G10,
};

struct FamilyInfo {
    FamilyId id;
    std::string name;
    int param_count;
    std::string params;       // parameter names, e.g. "t,y"
    std::string marks;        // marked point types, e.g. "1_0, 3_0"
    std::vector<std::string> curve_equations;  // empty for free parameters
    std::string cusp_condition;
    std::optional<int> genus_annotation;
};

const std::vector<FamilyInfo>& family_table();
const FamilyInfo& family_info(FamilyId id);
FamilyId family_from_name(const std::string& name);

struct MarkedConfig {
    QuadElem c;
    std::vector<std::pair<QuadElem, PointType>> points;
};

// Evaluate the family's forward map.  Parameters must satisfy the curve
// equations exactly (OffCurveError) and avoid the cusp locus (CuspError,
// naming the vanishing factor).  Every produced point is re-verified to have
// its claimed type by exact iteration before returning.
MarkedConfig family_forward(FamilyId id, const std::vector<QuadElem>& params);

// Recover parameters from a realizing configuration;
// family_forward(id, family_inverse(id, config)) == config.
std::vector<QuadElem> family_inverse(FamilyId id, const MarkedConfig& config);

// exact type check by iteration: does x have type `want` under z^2 + c?
bool verify_point_type(const QuadElem& c, const QuadElem& x, const PointType& want);

enum class CurveAutomorphism {
    SIGMA3_T,       // t -> -(t+1)/t                       (order 3)
    SIGMA4_UV,      // (u,v) -> (-1/u, v/u^3)              (order 4)
    SIGMA33,        // (t,u) -> (-(t+1)/t, -1/(u+1))       (order 3 per slot)
    SIGMA6_12AND3,  // (t,w) -> (-(t+1)/t, -w/t^6)         (order 6)
    AUTO_C3,        // (u,w) -> (-1/u, w/u^4)              (order 2)
    AUTO_C4,        // (u,y) -> (-1/u, y/u^5)              (order 4)
};

std::vector<QuadElem> curve_automorphism(CurveAutomorphism name,
                                         const std::vector<QuadElem>& pt);

// Quotient data for the composite period-(3,4) locus: invariants
// T = (t^3-3t-1)/(t(t+1)), U = u - 1/u, and the short Weierstrass-side image
// (x, y) = (-U/4, -(TU+U+4)/8) on y^2 + y = x^3 - x^2.
struct X034Image {
    QuadElem T, U, x, y;
};
X034Image x034_quotient(const QuadElem& t, const QuadElem& u);

}  // namespace quadpreper
