#pragma once

#include "snt/hom.hpp"

#include <map>
#include <string>
#include <vector>

namespace snt {

/// One horizontal element of a slice. Labels keep their printed star-form so
/// diagrams round-trip through the printer; the evaluator lowers everything
/// to underlying labels.
struct DiagElem {
    enum class Kind { Id, Cup, Cap, Coupon, KCup, KCap };
    Kind kind = Kind::Id;
    int label = -1;
    bool star = false;
    std::string name;  // coupon payload
    int pivot = 0;     // initial half-edge marker
    int kirby = -1;    // circle id, assigned by the parser

    int top_arity() const;
};

struct Slice {
    std::vector<DiagElem> elems;
    int line = 0;
};

struct CouponDef {
    MorphismVector value;
    bool from_basis = false;
    int basis_index = 0;
    std::vector<std::pair<cplx, FusionTree>> terms;  // `sum` form, for printing
    Word word;
    std::vector<std::pair<int, bool>> spelled;  // (label, star) as written
};

struct PlanarDiagram {
    std::vector<Slice> slices;
    std::vector<std::string> let_order;
    std::map<std::string, CouponDef> lets;
    int kirby_circles = 0;
    Word bottom;  // boundary word after the last slice
};

struct DiagramValue {
    MorphismVector value;
    bool closed() const { return value.word.empty(); }
};

/// Parse the slice DSL against a category. Errors carry the offending line
/// and slice index.
PlanarDiagram parse_diagram(const std::string& text, const FusionCategoryData& cat);

/// Canonical printed form.
std::string print_diagram(const PlanarDiagram& d, const FusionCategoryData& cat);

/// Compose the slices top to bottom. Kirby circles expand as the
/// dimension-weighted sum over simple labels, ascending, with a fixed
/// sequential reduction order.
DiagramValue evaluate(const PlanarDiagram& d, const FusionCategoryData& cat);

cplx evaluate_closed(const PlanarDiagram& d, const FusionCategoryData& cat);

} // namespace snt
