#include <doctest.h>

#include "snt/hom.hpp"

#include <cmath>
#include <functional>
#include <random>

using namespace snt;

namespace {

MorphismVector random_vector(const FusionCategoryData& cat, const Word& w, std::mt19937_64& rng) {
    auto v = mv_zero(cat, w);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (auto& c : v.coeff) c = cplx(u(rng), u(rng));
    return v;
}

Word all_words_entry(const FusionCategoryData& cat, int len, size_t k) {
    Word w(len);
    for (int i = 0; i < len; ++i) {
        w[i] = int(k % cat.n());
        k /= cat.n();
    }
    return w;
}

// Resolution of identity applied to the whole word; should act as id.
MorphismVector resolution_op(const FusionCategoryData& cat, const MorphismVector& f) {
    const int len = (int)f.word.size();
    auto out = mv_zero(cat, f.word);
    for (const auto& ch : resolve_identity(cat, f.word, len)) {
        auto g = close_bundle(cat, f, 0, len, rotate(cat, ch.upper));
        g = graft(cat, g, 0, ch.lower);
        g = apply_cup(cat, g, len, Bend::Left);
        out = mv_add(out, mv_scale(g, ch.weight));
    }
    return out;
}

}  // namespace

TEST_SUITE("hom") {

TEST_CASE("basis counts") {
    auto fib = builtin("fibonacci");
    CHECK(hom_basis(fib, {1, 1, 1, 1}).size() == 2);  // paths 1->tau->{1,tau}->tau->1
    auto z2 = builtin("vec_z2");
    CHECK(hom_basis(z2, {1, 1}).size() == 1);
    auto z3 = builtin("vec_z3");
    CHECK(hom_basis(z3, {1, 1}).size() == 0);  // g g has nonzero total grading
    CHECK(hom_basis(z3, {1, 1, 1}).size() == 1);
    CHECK(hom_basis(fib, {}).size() == 1);  // empty word: the unit
}

TEST_CASE("basis convolution identity") {
    // dim Hom(1, w ++ (a)) counts admissible extensions of dim Hom-paths.
    for (const auto& name : builtin_names()) {
        auto cat = builtin(name);
        for (int len = 1; len <= 4; ++len) {
            size_t total = 1;
            for (int i = 0; i < len; ++i) total *= cat.n();
            for (size_t k = 0; k < total; ++k) {
                Word w = all_words_entry(cat, len, k);
                // count paths ending at x, then fold the last letter
                for (int a = 0; a < cat.n(); ++a) {
                    Word wa = w;
                    wa.push_back(a);
                    size_t lhs = hom_basis(cat, wa).size();
                    // paths of w ending at dual(a)-compatible x with x (x) a -> 1
                    size_t rhs = 0;
                    FusionTree cur{0};
                    std::function<void(size_t)> dfs = [&](size_t i) {
                        if (i == w.size()) {
                            if (cat.admissible(cur.back(), a, 0)) ++rhs;
                            return;
                        }
                        for (int m = 0; m < cat.n(); ++m)
                            if (cat.admissible(cur.back(), w[i], m)) {
                                cur.push_back(m);
                                dfs(i + 1);
                                cur.pop_back();
                            }
                    };
                    dfs(0);
                    CHECK(lhs == rhs);
                }
            }
        }
    }
}

TEST_CASE("pair on the unit word") {
    auto fib = builtin("fibonacci");
    CHECK(std::abs(pair(fib, mv_unit(fib), mv_unit(fib)) - cplx(1.0)) < 1e-14);
}

TEST_CASE("pair word mismatch throws") {
    auto fib = builtin("fibonacci");
    auto u = mv_basis(fib, {1, 1}, 0);
    CHECK_THROWS(pair(fib, u, mv_basis(fib, {1, 1, 1}, 0)));
}

TEST_CASE("left and right bending give the same pairing") {
    std::mt19937_64 rng(2024);
    for (const auto& name : builtin_names()) {
        auto cat = builtin(name);
        std::vector<Word> words = {{1, 1}, {1, 1, 1, 1}};
        if (cat.n() > 2) words.push_back({1, 2, 1, 2});
        for (const auto& w : words) {
            if (hom_basis(cat, w).empty()) continue;
            auto wd = reversed_dual(cat, w);
            for (int rep = 0; rep < 20; ++rep) {
                auto u = random_vector(cat, w, rng);
                auto v = random_vector(cat, wd, rng);
                CHECK(std::abs(pair(cat, u, v) - pair_left(cat, u, v)) < 1e-10);
            }
        }
    }
}

TEST_CASE("pairing is nondegenerate up to length 6") {
    for (const auto& name : builtin_names()) {
        auto cat = builtin(name);
        for (int len = 0; len <= 6; ++len) {
            size_t total = 1;
            for (int i = 0; i < len; ++i) total *= cat.n();
            // sample the diagonal-ish words to keep runtime sane
            for (size_t k = 0; k < total; k += (total > 81 ? 7 : 1)) {
                Word w = all_words_entry(cat, len, k);
                if (hom_basis(cat, w).empty()) continue;
                std::vector<MorphismVector> e, ed;
                CHECK_NOTHROW(dual_basis(cat, w, e, ed));
            }
        }
    }
}

TEST_CASE("dual basis biorthogonality") {
    auto fib = builtin("fibonacci");
    Word w{1, 1, 1, 1};
    std::vector<MorphismVector> e, ed;
    dual_basis(fib, w, e, ed);
    REQUIRE(e.size() == 2);
    for (size_t i = 0; i < e.size(); ++i)
        for (size_t j = 0; j < ed.size(); ++j)
            CHECK(std::abs(pair(fib, e[i], ed[j]) - (i == j ? cplx(1) : cplx(0))) < 1e-10);

    Word w2{1, 1};
    dual_basis(fib, w2, e, ed);
    REQUIRE(e.size() == 1);
    CHECK(std::abs(pair(fib, e[0], ed[0]) - cplx(1)) < 1e-10);

    auto z2 = builtin("vec_z2");
    dual_basis(z2, {1}, e, ed);
    CHECK(e.empty());  // Hom(1, z) = 0
}

TEST_CASE("rotate is identity on the empty word") {
    auto fib = builtin("fibonacci");
    auto u = mv_unit(fib);
    CHECK(mv_dist(rotate(fib, u), u) < 1e-14);
}

TEST_CASE("rotate then rotate_inv is the identity") {
    std::mt19937_64 rng(7);
    for (const auto& name : builtin_names()) {
        auto cat = builtin(name);
        Word w{1, 1, 1, 1};
        if (hom_basis(cat, w).empty()) continue;
        auto f = random_vector(cat, w, rng);
        CHECK(mv_dist(rotate_inv(cat, rotate(cat, f)), f) < 1e-10);
        CHECK(mv_dist(rotate(cat, rotate_inv(cat, f)), f) < 1e-10);
    }
}

TEST_CASE("full rotation on X^4 words") {
    // One full revolution of the initial half-edge marker returns the vertex.
    auto z2 = builtin("vec_z2");
    auto f = mv_basis(z2, {1, 1, 1, 1}, 0);
    CHECK(mv_dist(rotate_by(z2, f, 4), f) < 1e-10);

    auto sem = builtin("semion");
    auto g = mv_basis(sem, {1, 1, 1, 1}, 0);
    CHECK(mv_dist(rotate_by(sem, g, 4), g) < 1e-10);

    auto fib = builtin("fibonacci");
    for (int k = 0; k < 2; ++k) {
        auto h = mv_basis(fib, {1, 1, 1, 1}, k);
        CHECK(mv_dist(rotate_by(fib, h, 4), h) < 1e-8);
    }
}

TEST_CASE("rotation has root-of-unity spectrum") {
    // rotate^n acts as the identity on Hom(1, X^n) here; in particular every
    // eigenvalue of a single rotation is a root of unity.
    for (const auto& name : builtin_names()) {
        auto cat = builtin(name);
        for (int x = 1; x < cat.n(); ++x) {
            for (int n = 2; n <= 4; ++n) {
                Word w(n, x);
                auto basis = hom_basis(cat, w);
                if (basis.empty()) continue;
                for (size_t k = 0; k < basis.size(); ++k) {
                    auto f = mv_basis(cat, w, (int)k);
                    CHECK(mv_dist(rotate_by(cat, f, n), f) < 1e-8);
                }
            }
        }
    }
}

TEST_CASE("frobenius-schur sign from the two self-duality caps") {
    // The two bare arcs over a self-dual simple differ by nu = d * F1.
    auto sem = builtin("semion");
    auto n_cap = cap_vector(sem, 1, Bend::Right);
    auto eta_cap = cap_vector(sem, 1, Bend::Left);
    REQUIRE(n_cap.word == eta_cap.word);
    CHECK(std::abs(n_cap.coeff[0] / eta_cap.coeff[0] - cplx(-1.0)) < 1e-12);

    auto z2 = builtin("vec_z2");
    auto n2 = cap_vector(z2, 1, Bend::Right);
    auto e2 = cap_vector(z2, 1, Bend::Left);
    CHECK(std::abs(n2.coeff[0] / e2.coeff[0] - cplx(1.0)) < 1e-12);
}

TEST_CASE("zig-zag identities") {
    std::mt19937_64 rng(99);
    for (const auto& name : builtin_names()) {
        auto cat = builtin(name);
        Word w{1, 1};
        if (hom_basis(cat, w).empty()) continue;
        auto f = random_vector(cat, w, rng);
        for (int p = 0; p < (int)w.size(); ++p) {
            int v = w[p];
            // (epsilon, eta): insert eta after p, cup (p, p+1) right
            auto g = graft(cat, f, p + 1, cap_vector(cat, cat.dual[v], Bend::Left));
            g = apply_cup(cat, g, p, Bend::Right);
            CHECK(mv_dist(g, f) < 1e-10);
            // (n, e): insert n before p, cup (p+1, p+2) left
            auto h = graft(cat, f, p, cap_vector(cat, v, Bend::Right));
            h = apply_cup(cat, h, p + 1, Bend::Left);
            CHECK(mv_dist(h, f) < 1e-10);
        }
    }
}

TEST_CASE("vertex merge unit and associativity") {
    std::mt19937_64 rng(3);
    auto fib = builtin("fibonacci");
    auto f = random_vector(fib, {1, 1}, rng);
    auto g = random_vector(fib, {1, 1, 1}, rng);
    auto h = random_vector(fib, {1}, rng);
    CHECK(mv_dist(vertex_merge(fib, f, mv_unit(fib)), f) < 1e-12);
    CHECK(mv_dist(vertex_merge(fib, mv_unit(fib), f), f) < 1e-12);
    auto lhs = vertex_merge(fib, vertex_merge(fib, f, g), h);
    auto rhs = vertex_merge(fib, f, vertex_merge(fib, g, h));
    CHECK(mv_dist(lhs, rhs) < 1e-10);
}

TEST_CASE("merge pairing factorization") {
    // pair(f box g, dual of the same split) = pair(f,.)*pair(g,.) on tree pairs
    auto fib = builtin("fibonacci");
    std::mt19937_64 rng(11);
    auto f = random_vector(fib, {1, 1}, rng);
    auto g = random_vector(fib, {1, 1}, rng);
    auto fd = random_vector(fib, {1, 1}, rng);
    auto gd = random_vector(fib, {1, 1}, rng);
    // (g box f)^vee pairs against rd(f.word ++ g.word) = rd(g) ++ rd(f)
    auto m = vertex_merge(fib, f, g);
    auto md = vertex_merge(fib, gd, fd);
    cplx lhs = pair(fib, m, md);
    // independent evaluation by factoring through the vacuum channel only
    // (tau tau words pair diagonally through the unit)
    cplx rhs = pair(fib, f, fd) * pair(fib, g, gd);
    // the factorization holds only after projecting the middle onto the unit
    // channel; cut does exactly that
    auto cutm = cut_bundle(fib, m, 0, 2);
    cplx lhs_cut = pair(fib, cutm, md);
    CHECK(std::abs(lhs_cut - rhs) < 1e-9);
    (void)lhs;
}

TEST_CASE("resolution of identity recombines to the identity") {
    std::mt19937_64 rng(5);
    for (const auto& name : builtin_names()) {
        auto cat = builtin(name);
        std::vector<Word> words = {{1}, {1, 1}};
        if (cat.n() > 2) words.push_back({1, 2});
        for (const auto& w : words) {
            auto f = random_vector(cat, w, rng);
            if (f.coeff.empty()) continue;
            CHECK(mv_dist(resolution_op(cat, f), f) < 1e-9);
        }
    }
}

TEST_CASE("resolution channels match the fusion table") {
    auto z2 = builtin("vec_z2");
    auto ch = resolve_identity(z2, {1, 1}, 2);
    REQUIRE(ch.size() == 1);
    CHECK(ch[0].simple == 0);
    CHECK(ch[0].weight == doctest::Approx(1.0));

    auto fib = builtin("fibonacci");
    auto chf = resolve_identity(fib, {1, 1}, 2);
    REQUIRE(chf.size() == 2);
    CHECK(chf[0].simple == 0);
    CHECK(chf[0].weight == doctest::Approx(1.0));
    CHECK(chf[1].simple == 1);
    CHECK(chf[1].weight == doctest::Approx(1.6180339887498949));

    auto one = resolve_identity(fib, {1}, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0].simple == 1);
}

TEST_CASE("cut projects onto the vacuum channel") {
    auto fib = builtin("fibonacci");
    // A single tau strand carries no vacuum channel: cutting kills it.
    auto f = mv_basis(fib, {1, 1}, 0);  // word (tau, tau), 1-dim
    auto cut1 = cut_bundle(fib, f, 0, 1);
    for (auto& c : cut1.coeff) CHECK(std::abs(c) < 1e-12);
    // Cutting the full (tau,tau) bundle keeps the unit channel part.
    auto cut2 = cut_bundle(fib, f, 0, 2);
    CHECK(mv_dist(cut_bundle(fib, cut2, 0, 2), cut2) < 1e-9);  // idempotent
    // conjugated cut agrees (pairing symmetry)
    CHECK(mv_dist(cut_bundle(fib, f, 0, 2, true), cut2) < 1e-9);
}

TEST_CASE("basis order is deterministic and lexicographic") {
    auto fib = builtin("fibonacci");
    auto b = hom_basis(fib, {1, 1, 1, 1});
    REQUIRE(b.size() == 2);
    CHECK(b[0] < b[1]);
}

}
