#pragma once

#include "snt/diagram.hpp"

#include <string>
#include <vector>

namespace snt {

struct SurfaceComponent {
    enum class Kind { Sphere, Torus };
    Kind kind = Kind::Sphere;
};

struct SurfaceModel {
    std::vector<SurfaceComponent> comps;
    int torus_count() const;
};

/// A string-net on the torus presented on the square fundamental polygon
/// a b a^-1 b^-1: the ordered words of strands crossing the two edge pairs
/// plus the evaluated interior, a vector over the polygon boundary word
/// wa ++ wb ++ rd(wa) ++ rd(wb).
struct TorusNet {
    Word wa, wb;
    MorphismVector interior;
};

/// Pre-basis and quotient data for Z_SN(T^2) of one category.
///
/// Pre-basis elements are (x, y, t): x the simple channel crossing the
/// a-edge pair, y the one crossing the b-edge pair, t a fusion tree of the
/// word (x, y, x*, y*). The null space is generated by the corner-slide
/// relations, one per pre-basis vector per edge pair; the quotient dimension
/// is pinned against the state-sum oracle on T^3.
class TorusSpace {
public:
    struct El {
        int x, y, t;
    };

    TorusSpace(const FusionCategoryData& cat, double tol = 1e-8, bool parallel = true);

    const FusionCategoryData& cat() const { return *cat_; }
    int pre_dim() const { return (int)els_.size(); }
    int dim() const { return dim_; }
    const std::vector<El>& els() const { return els_; }
    int el_index(int x, int y, int t) const;
    Word word_of(int x, int y) const;

    /// Bundle the crossing words into simple channels and express the net
    /// over the pre-basis.
    std::vector<cplx> normalize(const TorusNet& net) const;

    /// The corner-slide relation vectors v - rho_h(v).
    const std::vector<std::vector<cplx>>& relations() const { return rels_; }

    std::vector<cplx> project(const std::vector<cplx>& pre) const;
    std::vector<cplx> section(const std::vector<cplx>& quotient) const;

    Mat pre_matrix_S() const { return s_pre_; }
    Mat pre_matrix_T() const { return t_pre_; }

    /// Quotient matrix of a pre-basis endomorphism.
    Mat quotient_matrix(const Mat& pre) const;

    /// Max norm of (off-quotient component of M * relation), normalized;
    /// small iff M descends.
    double descent_residual(const Mat& pre) const;

    /// Matrix on the quotient of an MCG word over {S, S', T, t}; letters
    /// compose left to right (the leftmost acts last).
    Mat mcg_word_matrix(const std::string& word) const;

    /// Pre-basis vector of a bare loop crossing the a-edge once with label i;
    /// reversed flips the strand orientation.
    std::vector<cplx> loop_state(int i, bool reversed = false) const;

    /// Value of the loop left on the sphere after cutting the a-channel of a
    /// pre-basis element with x = 0 and b-channel y.
    cplx sphere_closure(int y) const;

    double tol() const { return tol_; }

private:
    const FusionCategoryData* cat_;
    double tol_;
    std::vector<El> els_;
    std::vector<std::vector<int>> offset_;  // (x,y) -> first el index
    std::vector<std::vector<cplx>> rels_;
    Mat rel_q_;   // orthonormal basis of the relation span
    Mat sect_;    // pre x dim
    int dim_ = 0;
    Mat s_pre_, t_pre_, s_q_, t_q_, s_q_inv_, t_q_inv_;

    std::vector<cplx> normalize_channelled(const MorphismVector& f, int na, int nb) const;
    TorusNet slide_a(const El& e) const;
    TorusNet slide_b(const El& e) const;
    TorusNet twist_net(const El& e) const;
    TorusNet rot_net(const El& e) const;
    void build_relations(bool parallel);
    void build_quotient();
};

/// Relation vectors assembled serially; reference implementation for the
/// parallel path used inside TorusSpace.
std::vector<std::vector<cplx>> slide_relations_serial(const FusionCategoryData& cat, double tol);

/// Parse an MCG word: 'S', 'T' generators, "S'" and 't' their inverses.
std::vector<int> parse_mcg_word(const std::string& word);

} // namespace snt
