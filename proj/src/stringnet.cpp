#include "snt/stringnet.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace snt {

namespace {

// Cap families for the polygon arcs produced by the corner slide and the
// twist. The two dragged arcs of a slide carry opposite bends; pinned by the
// requirement that corner slides are exactly null and by the oracle
// dimensions on T^3.
constexpr Bend kSlideOuter = Bend::Right;
constexpr Bend kSlideInner = Bend::Left;
constexpr Bend kTwistArc = Bend::Right;
constexpr Bend kLoopArc = Bend::Right;

struct Channel {
    int simple;
    double weight;
    MorphismVector lower;  // Hom(1, w ++ (i*))
    MorphismVector upper;  // Hom(1, (i) ++ rd(w))
};

std::vector<Channel> channels_of(const FusionCategoryData& cat, const Word& w) {
    std::vector<Channel> out;
    if (w.empty()) {
        auto u = mv_basis(cat, {0}, 0);
        out.push_back({0, 1.0, u, u});
        return out;
    }
    for (const auto& ch : resolve_identity(cat, w, (int)w.size()))
        out.push_back({ch.simple, ch.weight, ch.lower, ch.upper});
    return out;
}

}  // namespace

int SurfaceModel::torus_count() const {
    int n = 0;
    for (const auto& c : comps)
        if (c.kind == SurfaceComponent::Kind::Torus) ++n;
    return n;
}

std::vector<int> parse_mcg_word(const std::string& word) {
    std::vector<int> out;  // 0=S 1=S^-1 2=T 3=T^-1
    for (size_t i = 0; i < word.size(); ++i) {
        char c = word[i];
        if (c == ' ') continue;
        if (c == 'S') {
            if (i + 1 < word.size() && word[i + 1] == '\'') {
                out.push_back(1);
                ++i;
            } else {
                out.push_back(0);
            }
        } else if (c == 'T') {
            if (i + 1 < word.size() && word[i + 1] == '\'') {
                out.push_back(3);
                ++i;
            } else {
                out.push_back(2);
            }
        } else if (c == 't') {
            out.push_back(3);
        } else if (c == 's') {
            out.push_back(1);
        } else {
            throw std::runtime_error(std::string("bad mapping class letter '") + c + "'");
        }
    }
    return out;
}

TorusSpace::TorusSpace(const FusionCategoryData& cat, double tol, bool parallel)
    : cat_(&cat), tol_(tol) {
    const int n = cat.n();
    offset_.assign(n, std::vector<int>(n, -1));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            offset_[x][y] = (int)els_.size();
            int m = (int)hom_basis(cat, word_of(x, y)).size();
            for (int t = 0; t < m; ++t) els_.push_back({x, y, t});
        }

    s_pre_ = Mat(pre_dim(), pre_dim());
    t_pre_ = Mat(pre_dim(), pre_dim());
    for (int j = 0; j < pre_dim(); ++j) {
        auto sc = normalize(rot_net(els_[j]));
        auto tc = normalize(twist_net(els_[j]));
        for (int i = 0; i < pre_dim(); ++i) {
            s_pre_(i, j) = sc[i];
            t_pre_(i, j) = tc[i];
        }
    }

    build_relations(parallel);
    build_quotient();

    s_q_ = quotient_matrix(s_pre_);
    t_q_ = quotient_matrix(t_pre_);
    s_q_inv_ = inverse(s_q_);
    t_q_inv_ = inverse(t_q_);
}

Word TorusSpace::word_of(int x, int y) const {
    return {x, y, cat_->dual[x], cat_->dual[y]};
}

int TorusSpace::el_index(int x, int y, int t) const { return offset_[x][y] + t; }

cplx TorusSpace::sphere_closure(int y) const {
    // value of the y-loop left on the sphere after cutting the a-channel
    const auto& cat = *cat_;
    auto v = mv_basis(cat, {y, cat.dual[y]}, 0);
    auto s = apply_cup(cat, v, 0, kLoopArc == Bend::Right ? Bend::Right : Bend::Left);
    return s.scalar();
}

std::vector<cplx> TorusSpace::normalize_channelled(const MorphismVector& f, int na, int nb) const {
    const auto& cat = *cat_;
    Word wa(f.word.begin(), f.word.begin() + na);
    Word wb(f.word.begin() + na, f.word.begin() + na + nb);
    std::vector<cplx> out(pre_dim(), 0.0);
    for (const auto& ca : channels_of(cat, wa)) {
        for (const auto& cb : channels_of(cat, wb)) {
            auto st = close_bundle(cat, f, na + nb + na, nb, cb.lower);
            st = close_bundle(cat, st, na + nb, na, ca.lower);
            st = close_bundle(cat, st, na, nb, rotate(cat, cb.upper));
            st = close_bundle(cat, st, 0, na, rotate(cat, ca.upper));
            Word expect = word_of(ca.simple, cb.simple);
            if (st.word != expect) throw std::runtime_error("normalize: channel word mismatch");
            int base = offset_[ca.simple][cb.simple];
            for (size_t t = 0; t < st.coeff.size(); ++t)
                out[base + t] += ca.weight * cb.weight * st.coeff[t];
        }
    }
    return out;
}

std::vector<cplx> TorusSpace::normalize(const TorusNet& net) const {
    Word expect = net.wa;
    expect.insert(expect.end(), net.wb.begin(), net.wb.end());
    Word rda = reversed_dual(*cat_, net.wa), rdb = reversed_dual(*cat_, net.wb);
    expect.insert(expect.end(), rda.begin(), rda.end());
    expect.insert(expect.end(), rdb.begin(), rdb.end());
    if (net.interior.word != expect)
        throw std::runtime_error("normalize: interior word inconsistent with the crossing words");
    return normalize_channelled(net.interior, (int)net.wa.size(), (int)net.wb.size());
}

TorusNet TorusSpace::slide_a(const El& e) const {
    const auto& cat = *cat_;
    int x = e.x, y = e.y;
    auto g = rotate(cat, mv_basis(cat, word_of(x, y), e.t));  // (y, x*, y*, x)
    g = graft(cat, g, 1, cap_vector(cat, x, kSlideInner));
    g = graft(cat, g, 0, cap_vector(cat, x, kSlideOuter));
    TorusNet net;
    net.wa = {x};
    net.wb = {cat.dual[x], y, x};
    net.interior = std::move(g);
    return net;
}

TorusNet TorusSpace::slide_b(const El& e) const {
    const auto& cat = *cat_;
    int x = e.x, y = e.y;
    auto g = rotate_inv(cat, mv_basis(cat, word_of(x, y), e.t));  // (y*, x, y, x*)
    g = graft(cat, g, 3, cap_vector(cat, y, kSlideInner));
    g = graft(cat, g, 6, cap_vector(cat, y, kSlideOuter));
    TorusNet net;
    net.wa = {cat.dual[y], x, y};
    net.wb = {y};
    net.interior = std::move(g);
    return net;
}

TorusNet TorusSpace::twist_net(const El& e) const {
    // the strand crossing the b-edge picks up one wrap across the a-edge;
    // handedness chosen so that with the clockwise quarter rotation the
    // modular relations (ST)^3 = S^2, S^4 = 1 hold
    const auto& cat = *cat_;
    int x = e.x, y = e.y;
    auto g = rotate_inv(cat, mv_basis(cat, word_of(x, y), e.t));  // (y*, x, y, x*)
    g = graft(cat, g, 4, cap_vector(cat, y, kTwistArc));          // (y*, x, y, x*, y, y*)
    TorusNet net;
    net.wa = {cat.dual[y], x};
    net.wb = {y};
    net.interior = std::move(g);
    return net;
}

TorusNet TorusSpace::rot_net(const El& e) const {
    const auto& cat = *cat_;
    TorusNet net;
    net.wa = {e.y};
    net.wb = {cat.dual[e.x]};
    net.interior = rotate(cat, mv_basis(cat, word_of(e.x, e.y), e.t));  // (y, x*, y*, x)
    return net;
}

void TorusSpace::build_relations(bool parallel) {
    const int m = pre_dim();
    rels_.assign(2 * m, {});
    auto fill = [&](int k) {
        const El& e = els_[k / 2];
        auto img = normalize((k % 2) ? slide_b(e) : slide_a(e));
        std::vector<cplx> r(m, 0.0);
        r[k / 2] = 1.0;
        for (int i = 0; i < m; ++i) r[i] -= img[i];
        rels_[k] = std::move(r);
    };
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int k = 0; k < 2 * m; ++k) fill(k);
        return;
    }
#endif
    (void)parallel;
    for (int k = 0; k < 2 * m; ++k) fill(k);
}

void TorusSpace::build_quotient() {
    const int m = pre_dim();

    // Functionals phi_w(v) = (cap off the torus after the mapping class w):
    // cut the a-channel, evaluate the leftover sphere. The quotient is the
    // pre-space modulo the joint kernel; the corner-slide relations land in
    // the kernel automatically.
    std::vector<std::vector<cplx>> funcs;
    std::vector<cplx> phi0(m, 0.0);
    for (int j = 0; j < m; ++j) {
        const El& e = els_[j];
        if (e.x == 0) phi0[j] = sphere_closure(e.y);
    }
    funcs.push_back(phi0);

    Mat strans = s_pre_.adjoint(), ttrans = t_pre_.adjoint();
    // grow the span under the transposed mapping class action
    auto apply_t = [&](const Mat& mt, const std::vector<cplx>& f) {
        std::vector<cplx> out(m, 0.0);
        for (int i = 0; i < m; ++i)
            for (int k = 0; k < m; ++k) out[i] += std::conj(mt(i, k)) * f[k];
        return out;  // out = f * M (row vector times matrix)
    };
    size_t head = 0;
    Mat fmat(m, 0);
    auto current_rank = [&](const std::vector<std::vector<cplx>>& rows) {
        Mat a(m, (int)rows.size());
        for (int j = 0; j < (int)rows.size(); ++j)
            for (int i = 0; i < m; ++i) a(i, j) = std::conj(rows[j][i]);
        return column_space(a, tol_ / std::max(1.0, a.max_abs()));
    };
    int rank_now = current_rank(funcs).cols();
    while (head < funcs.size() && (int)funcs.size() < 8 * m + 8) {
        auto base = funcs[head++];
        for (const Mat* g : {&strans, &ttrans}) {
            auto cand = apply_t(*g, base);
            funcs.push_back(cand);
            int r = current_rank(funcs).cols();
            if (r == rank_now)
                funcs.pop_back();
            else
                rank_now = r;
        }
    }
    sect_ = current_rank(funcs);
    dim_ = sect_.cols();

    // orthonormal basis of the null space, for descent checks
    Mat p(m, m);
    for (int i = 0; i < m; ++i) p(i, i) = 1.0;
    p = p - sect_ * sect_.adjoint();
    rel_q_ = column_space(p, tol_);
}

std::vector<cplx> TorusSpace::project(const std::vector<cplx>& pre) const {
    std::vector<cplx> out(dim_, 0.0);
    for (int i = 0; i < dim_; ++i)
        for (int k = 0; k < pre_dim(); ++k) out[i] += std::conj(sect_(k, i)) * pre[k];
    return out;
}

std::vector<cplx> TorusSpace::section(const std::vector<cplx>& q) const {
    std::vector<cplx> out(pre_dim(), 0.0);
    for (int k = 0; k < pre_dim(); ++k)
        for (int i = 0; i < dim_; ++i) out[k] += sect_(k, i) * q[i];
    return out;
}

Mat TorusSpace::quotient_matrix(const Mat& pre) const { return sect_.adjoint() * pre * sect_; }

double TorusSpace::descent_residual(const Mat& pre) const {
    if (rel_q_.cols() == 0) return 0.0;
    Mat img = pre * rel_q_;
    Mat off = sect_.adjoint() * img;  // null vectors must stay off the quotient
    double scale = std::max(1.0, pre.max_abs());
    return off.max_abs() / scale;
}

Mat TorusSpace::mcg_word_matrix(const std::string& word) const {
    Mat m = Mat::identity(dim_);
    for (int g : parse_mcg_word(word)) {
        const Mat* f = nullptr;
        switch (g) {
            case 0: f = &s_q_; break;
            case 1: f = &s_q_inv_; break;
            case 2: f = &t_q_; break;
            case 3: f = &t_q_inv_; break;
        }
        m = m * (*f);
    }
    return m;
}

std::vector<cplx> TorusSpace::loop_state(int i, bool reversed) const {
    const auto& cat = *cat_;
    TorusNet net;
    if (!reversed) {
        net.wa = {i};
        net.interior = cap_vector(cat, i, kLoopArc);
    } else {
        net.wa = {cat.dual[i]};
        net.interior = cap_vector(cat, cat.dual[i],
                                  kLoopArc == Bend::Right ? Bend::Left : Bend::Right);
    }
    return normalize(net);
}

std::vector<std::vector<cplx>> slide_relations_serial(const FusionCategoryData& cat, double tol) {
    TorusSpace sp(cat, tol, /*parallel=*/false);
    return sp.relations();
}

} // namespace snt
