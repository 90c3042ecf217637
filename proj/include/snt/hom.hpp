#pragma once

#include "snt/category.hpp"

#include <vector>

namespace snt {

/// A word of simple labels. An upward-oriented strand labelled X is stored as
/// a downward strand labelled X*, so words carry underlying labels only; the
/// DSL layer keeps the starred spelling for printing.
using Word = std::vector<int>;

/// Intermediates m_0..m_n of a fusion path, m_0 = m_n = 0 and each step
/// m_{k-1} -> m_k admissible under letter k.
using FusionTree = std::vector<int>;

Word reversed_dual(const FusionCategoryData& cat, const Word& w);

/// Complete, duplicate-free, lexicographically ordered tree basis of
/// Hom(1, w). Empty when the word admits no invariant vector.
std::vector<FusionTree> hom_basis(const FusionCategoryData& cat, const Word& w);

struct MorphismVector {
    Word word;
    std::vector<cplx> coeff;  // aligned with hom_basis(cat, word)

    bool is_scalar() const { return word.empty(); }
    cplx scalar() const { return coeff.empty() ? cplx(0) : coeff[0]; }
};

MorphismVector mv_zero(const FusionCategoryData& cat, const Word& w);
MorphismVector mv_basis(const FusionCategoryData& cat, const Word& w, int k);
MorphismVector mv_unit(const FusionCategoryData& cat);  // empty word, value 1
MorphismVector mv_add(const MorphismVector& a, const MorphismVector& b);
MorphismVector mv_scale(const MorphismVector& a, cplx s);
double mv_dist(const MorphismVector& a, const MorphismVector& b);

/// Which duality datum a cup or cap uses. For a pair of adjacent letters
/// (x, x*): Right is the evaluation/coevaluation of the object X_x,
/// Left the one of X_{x*} transported by the pivotal. The two differ by the
/// Frobenius-Schur phase on self-dual objects.
enum class Bend { Right, Left };

/// Cap state 1 -> (x, x*), i.e. a bare arc with both ends at the bottom.
MorphismVector cap_vector(const FusionCategoryData& cat, int x, Bend fam);

/// Tensor-insert g into f at letter position pos (0..|word|): the linear map
/// (id (x) g (x) id) o f in tree coordinates. Coefficients come from
/// transporting g's splitting vertices onto the spine with inverse F-moves.
MorphismVector graft(const FusionCategoryData& cat, const MorphismVector& f, int pos,
                     const MorphismVector& g);

/// Cup the adjacent pair (pos, pos+1), which must read (x, x*).
MorphismVector apply_cup(const FusionCategoryData& cat, const MorphismVector& f, int pos,
                         Bend fam);

/// Bend the first letter over the top to the end (initial-half-edge rotation).
MorphismVector rotate(const FusionCategoryData& cat, const MorphismVector& f);
/// Inverse rotation: last letter to the front.
MorphismVector rotate_inv(const FusionCategoryData& cat, const MorphismVector& f);
MorphismVector rotate_by(const FusionCategoryData& cat, const MorphismVector& f, int k);

/// The nondegenerate pairing Hom(1,w) x Hom(1, reversed_dual(w)) -> C,
/// closing up with right bends. pair_left uses left bends; pivotality makes
/// the two agree.
cplx pair(const FusionCategoryData& cat, const MorphismVector& u, const MorphismVector& v);
cplx pair_left(const FusionCategoryData& cat, const MorphismVector& u, const MorphismVector& v);

/// f \box g: the merged vertex on the concatenated word. In the left-comb
/// tree encoding this is just the coordinate outer product.
MorphismVector vertex_merge(const FusionCategoryData& cat, const MorphismVector& f,
                            const MorphismVector& g);

/// Basis e_alpha of Hom(1, w) together with the dual basis e^alpha of
/// Hom(1, reversed_dual(w)) under pair(). Throws when the Gram matrix is
/// singular beyond tol.
void dual_basis(const FusionCategoryData& cat, const Word& w,
                std::vector<MorphismVector>& e, std::vector<MorphismVector>& edual,
                double tol = 1e-10);

struct ResolutionChannel {
    int simple;          // channel label i
    double weight;       // d_i
    MorphismVector lower;  // in Hom(1, w ++ (i*))
    MorphismVector upper;  // in Hom(1, (i) ++ reversed_dual(w))
};

/// Decomposition of the identity on the bundle w[0:split] into simple
/// channels (semisimplicity). Recombining lower (x) upper with the listed
/// weights reproduces the identity on the bundle.
std::vector<ResolutionChannel> resolve_identity(const FusionCategoryData& cat, const Word& w,
                                                int split);

/// Replace the bundle at [pos, pos+len) by a single letter via the closing
/// coupon c in Hom(1, reversed_dual(bundle) ++ (tail...)); grafts c after the
/// bundle and cups the interface.
MorphismVector close_bundle(const FusionCategoryData& cat, const MorphismVector& f, int pos,
                            int len, const MorphismVector& closer);

/// Cutting move on the parallel bundle at [pos, pos+len): replaces it by the
/// sum over dual coupon pairs. Projects onto the vacuum channel of the bundle.
MorphismVector cut_bundle(const FusionCategoryData& cat, const MorphismVector& f, int pos,
                          int len, bool conjugated = false, double tol = 1e-10);

} // namespace snt
