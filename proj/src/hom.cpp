#include "snt/hom.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <stdexcept>

namespace snt {

Word reversed_dual(const FusionCategoryData& cat, const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& x : out) x = cat.dual[x];
    return out;
}

static void basis_dfs(const FusionCategoryData& cat, const Word& w, size_t k, FusionTree& cur,
                      std::vector<FusionTree>& out) {
    if (k == w.size()) {
        if (cur.back() == 0) out.push_back(cur);
        return;
    }
    for (int m = 0; m < cat.n(); ++m) {
        if (!cat.admissible(cur.back(), w[k], m)) continue;
        cur.push_back(m);
        basis_dfs(cat, w, k + 1, cur, out);
        cur.pop_back();
    }
}

std::vector<FusionTree> hom_basis(const FusionCategoryData& cat, const Word& w) {
    std::vector<FusionTree> out;
    FusionTree cur{0};
    basis_dfs(cat, w, 0, cur, out);
    return out;
}

static std::map<FusionTree, int> tree_index(const std::vector<FusionTree>& basis) {
    std::map<FusionTree, int> idx;
    for (int i = 0; i < (int)basis.size(); ++i) idx[basis[i]] = i;
    return idx;
}

MorphismVector mv_zero(const FusionCategoryData& cat, const Word& w) {
    MorphismVector v;
    v.word = w;
    v.coeff.assign(hom_basis(cat, w).size(), 0.0);
    return v;
}

MorphismVector mv_basis(const FusionCategoryData& cat, const Word& w, int k) {
    auto v = mv_zero(cat, w);
    if (k < 0 || k >= (int)v.coeff.size()) throw std::runtime_error("basis index out of range");
    v.coeff[k] = 1.0;
    return v;
}

MorphismVector mv_unit(const FusionCategoryData& cat) {
    MorphismVector v;
    v.word = {};
    v.coeff = {1.0};
    (void)cat;
    return v;
}

MorphismVector mv_add(const MorphismVector& a, const MorphismVector& b) {
    if (a.word != b.word) throw std::runtime_error("word mismatch in vector addition");
    MorphismVector out = a;
    for (size_t i = 0; i < out.coeff.size(); ++i) out.coeff[i] += b.coeff[i];
    return out;
}

MorphismVector mv_scale(const MorphismVector& a, cplx s) {
    MorphismVector out = a;
    for (auto& c : out.coeff) c *= s;
    return out;
}

double mv_dist(const MorphismVector& a, const MorphismVector& b) {
    if (a.word != b.word) return 1e300;
    double m = 0;
    for (size_t i = 0; i < a.coeff.size(); ++i) m = std::max(m, std::abs(a.coeff[i] - b.coeff[i]));
    return m;
}

MorphismVector cap_vector(const FusionCategoryData& cat, int x, Bend fam) {
    Word w{x, cat.dual[x]};
    auto v = mv_zero(cat, w);
    auto basis = hom_basis(cat, w);
    FusionTree t{0, x, 0};
    for (int i = 0; i < (int)basis.size(); ++i)
        if (basis[i] == t) v.coeff[i] = (fam == Bend::Right) ? cat.bendA(x) : cat.bendB(cat.dual[x]);
    return v;
}

// Mount the splitting vertices of g one at a time onto the spine at label m;
// each step contributes one inverse F entry.
static void graft_spine_dfs(const FusionCategoryData& cat, const Word& u, const FusionTree& tg,
                            int m, size_t j, int s_prev, cplx acc, FusionTree& spine,
                            const std::function<void(const FusionTree&, cplx)>& emit) {
    if (j == u.size()) {
        if (s_prev == m) emit(spine, acc);
        return;
    }
    for (int s = 0; s < cat.n(); ++s) {
        cplx f = cat.Finv(m, tg[j], u[j], s, tg[j + 1], s_prev);
        if (f == cplx(0)) continue;
        spine.push_back(s);
        graft_spine_dfs(cat, u, tg, m, j + 1, s, acc * f, spine, emit);
        spine.pop_back();
    }
}

MorphismVector graft(const FusionCategoryData& cat, const MorphismVector& f, int pos,
                     const MorphismVector& g) {
    if (pos < 0 || pos > (int)f.word.size()) throw std::runtime_error("graft position out of range");
    Word nw;
    nw.insert(nw.end(), f.word.begin(), f.word.begin() + pos);
    nw.insert(nw.end(), g.word.begin(), g.word.end());
    nw.insert(nw.end(), f.word.begin() + pos, f.word.end());

    auto out = mv_zero(cat, nw);
    auto out_basis = hom_basis(cat, nw);
    auto out_idx = tree_index(out_basis);
    auto f_basis = hom_basis(cat, f.word);
    auto g_basis = hom_basis(cat, g.word);

    for (size_t fi = 0; fi < f_basis.size(); ++fi) {
        cplx cf = f.coeff[fi];
        if (cf == cplx(0)) continue;
        const FusionTree& tf = f_basis[fi];
        int m = tf[pos];
        for (size_t gi = 0; gi < g_basis.size(); ++gi) {
            cplx cg = g.coeff[gi];
            if (cg == cplx(0)) continue;
            const FusionTree& tg = g_basis[gi];
            FusionTree spine;
            std::function<void(const FusionTree&, cplx)> emit = [&](const FusionTree& sp, cplx w) {
                FusionTree nt;
                nt.insert(nt.end(), tf.begin(), tf.begin() + pos + 1);
                nt.insert(nt.end(), sp.begin(), sp.end());
                nt.insert(nt.end(), tf.begin() + pos + 1, tf.end());
                auto it = out_idx.find(nt);
                if (it == out_idx.end()) throw std::runtime_error("internal: grafted tree not in basis");
                out.coeff[it->second] += cf * cg * w;
            };
            graft_spine_dfs(cat, g.word, tg, m, 0, m, cplx(1.0), spine, emit);
        }
    }
    return out;
}

MorphismVector apply_cup(const FusionCategoryData& cat, const MorphismVector& f, int pos, Bend fam) {
    const Word& w = f.word;
    if (pos < 0 || pos + 1 >= (int)w.size()) throw std::runtime_error("cup position out of range");
    int x = w[pos];
    if (w[pos + 1] != cat.dual[x]) throw std::runtime_error("cup on non-dual letter pair");

    Word nw;
    nw.insert(nw.end(), w.begin(), w.begin() + pos);
    nw.insert(nw.end(), w.begin() + pos + 2, w.end());

    auto out = mv_zero(cat, nw);
    auto out_idx = tree_index(hom_basis(cat, nw));
    auto basis = hom_basis(cat, w);
    cplx base = (fam == Bend::Right) ? cat.bendC(x) : cat.bendE(cat.dual[x]);

    for (size_t i = 0; i < basis.size(); ++i) {
        cplx c = f.coeff[i];
        if (c == cplx(0)) continue;
        const FusionTree& t = basis[i];
        int m = t[pos], mid = t[pos + 1];
        if (t[pos + 2] != m) continue;
        cplx s = base * cat.F(m, x, cat.dual[x], m, mid, 0);
        if (s == cplx(0)) continue;
        FusionTree nt;
        nt.insert(nt.end(), t.begin(), t.begin() + pos + 1);
        nt.insert(nt.end(), t.begin() + pos + 3, t.end());
        auto it = out_idx.find(nt);
        if (it == out_idx.end()) throw std::runtime_error("internal: cupped tree not in basis");
        out.coeff[it->second] += c * s;
    }
    return out;
}

MorphismVector rotate(const FusionCategoryData& cat, const MorphismVector& f) {
    if (f.word.empty()) return f;
    int v = f.word[0];
    auto state = cap_vector(cat, cat.dual[v], Bend::Left);  // eta_{X_v}: (v*, v)
    state = graft(cat, state, 1, f);
    return apply_cup(cat, state, 0, Bend::Left);
}

MorphismVector rotate_inv(const FusionCategoryData& cat, const MorphismVector& f) {
    if (f.word.empty()) return f;
    int v = f.word.back();
    auto state = cap_vector(cat, v, Bend::Right);  // n_{X_v}: (v, v*)
    state = graft(cat, state, 1, f);
    return apply_cup(cat, state, (int)f.word.size(), Bend::Right);
}

MorphismVector rotate_by(const FusionCategoryData& cat, const MorphismVector& f, int k) {
    MorphismVector out = f;
    if (k >= 0)
        for (int i = 0; i < k; ++i) out = rotate(cat, out);
    else
        for (int i = 0; i < -k; ++i) out = rotate_inv(cat, out);
    return out;
}

cplx pair(const FusionCategoryData& cat, const MorphismVector& u, const MorphismVector& v) {
    if (v.word != reversed_dual(cat, u.word)) throw std::runtime_error("pair: word mismatch");
    auto state = graft(cat, u, (int)u.word.size(), v);
    for (int k = (int)u.word.size(); k >= 1; --k) state = apply_cup(cat, state, k - 1, Bend::Right);
    return state.scalar();
}

cplx pair_left(const FusionCategoryData& cat, const MorphismVector& u, const MorphismVector& v) {
    if (v.word != reversed_dual(cat, u.word)) throw std::runtime_error("pair: word mismatch");
    auto state = graft(cat, u, 0, v);
    for (int k = (int)u.word.size(); k >= 1; --k) state = apply_cup(cat, state, k - 1, Bend::Left);
    return state.scalar();
}

MorphismVector vertex_merge(const FusionCategoryData& cat, const MorphismVector& f,
                            const MorphismVector& g) {
    return graft(cat, f, (int)f.word.size(), g);
}

void dual_basis(const FusionCategoryData& cat, const Word& w, std::vector<MorphismVector>& e,
                std::vector<MorphismVector>& edual, double tol) {
    e.clear();
    edual.clear();
    const Word wd = reversed_dual(cat, w);
    const int n = (int)hom_basis(cat, w).size();
    const int nd = (int)hom_basis(cat, wd).size();
    if (n != nd) throw std::runtime_error("dual basis: dimension mismatch (invalid category data)");
    if (n == 0) return;
    for (int i = 0; i < n; ++i) e.push_back(mv_basis(cat, w, i));
    std::vector<MorphismVector> f;
    for (int j = 0; j < n; ++j) f.push_back(mv_basis(cat, wd, j));

    Mat p(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p(i, j) = pair(cat, e[i], f[j]);
    Mat pinv;
    try {
        pinv = inverse(p, tol);
    } catch (const std::exception&) {
        throw std::runtime_error("dual basis: pairing Gram matrix singular beyond tolerance");
    }
    for (int a = 0; a < n; ++a) {
        auto v = mv_zero(cat, wd);
        for (int b = 0; b < n; ++b)
            for (size_t k = 0; k < v.coeff.size(); ++k) v.coeff[k] += pinv(b, a) * f[b].coeff[k];
        edual.push_back(std::move(v));
    }
}

std::vector<ResolutionChannel> resolve_identity(const FusionCategoryData& cat, const Word& w,
                                                int split) {
    if (split <= 0 || split > (int)w.size())
        throw std::runtime_error("resolve_identity: split out of range");
    Word bundle(w.begin(), w.begin() + split);
    std::vector<ResolutionChannel> out;
    for (int i = 0; i < cat.n(); ++i) {
        Word wl = bundle;
        wl.push_back(cat.dual[i]);
        if (hom_basis(cat, wl).empty()) continue;
        std::vector<MorphismVector> lo, up;
        dual_basis(cat, wl, lo, up);
        for (size_t a = 0; a < lo.size(); ++a)
            out.push_back({i, cat.dim(i), lo[a], up[a]});
    }
    return out;
}

MorphismVector close_bundle(const FusionCategoryData& cat, const MorphismVector& f, int pos,
                            int len, const MorphismVector& closer) {
    auto state = graft(cat, f, pos + len, closer);
    for (int k = len; k >= 1; --k) state = apply_cup(cat, state, pos + k - 1, Bend::Right);
    return state;
}

MorphismVector cut_bundle(const FusionCategoryData& cat, const MorphismVector& f, int pos,
                          int len, bool conjugated, double tol) {
    Word bundle(f.word.begin() + pos, f.word.begin() + pos + len);
    auto out = mv_zero(cat, f.word);
    std::vector<MorphismVector> e, ed;
    if (!conjugated) {
        dual_basis(cat, bundle, e, ed, tol);
        for (size_t a = 0; a < e.size(); ++a) {
            auto g = close_bundle(cat, f, pos, len, ed[a]);
            out = mv_add(out, graft(cat, g, pos, e[a]));
        }
    } else {
        dual_basis(cat, reversed_dual(cat, bundle), e, ed, tol);
        for (size_t a = 0; a < e.size(); ++a) {
            auto g = close_bundle(cat, f, pos, len, e[a]);
            out = mv_add(out, graft(cat, g, pos, ed[a]));
        }
    }
    return out;
}

} // namespace snt
