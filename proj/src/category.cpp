#include "snt/category.hpp"

#include <json.hpp>

#include <array>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace snt {

using nlohmann::json;

bool ValidationReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

double ValidationReport::max_residual() const {
    double m = 0;
    for (const auto& c : checks) m = std::max(m, c.residual);
    return m;
}

cplx FusionCategoryData::F(int a, int b, int c, int d, int e, int f) const {
    auto it = f_blocks_.find({a, b, c, d});
    if (it == f_blocks_.end()) return 0.0;
    const FBlock& blk = it->second;
    for (int i = 0; i < (int)blk.es.size(); ++i)
        if (blk.es[i] == e)
            for (int j = 0; j < (int)blk.fs.size(); ++j)
                if (blk.fs[j] == f) return blk.mat(i, j);
    return 0.0;
}

cplx FusionCategoryData::Finv(int a, int b, int c, int d, int f, int e) const {
    auto it = f_blocks_.find({a, b, c, d});
    if (it == f_blocks_.end()) return 0.0;
    const FBlock& blk = it->second;
    if (!blk.invertible) return 0.0;
    for (int j = 0; j < (int)blk.fs.size(); ++j)
        if (blk.fs[j] == f)
            for (int i = 0; i < (int)blk.es.size(); ++i)
                if (blk.es[i] == e) return blk.inv(j, i);
    return 0.0;
}

int FusionCategoryData::simple_by_name(const std::string& s) const {
    for (const auto& l : simples)
        if (l.name == s) return l.index;
    return -1;
}

void FusionCategoryData::set_f_entry(int a, int b, int c, int d, int e, int f, cplx v) {
    f_raw_[{a, b, c, d, e, f}] = v;
}

void FusionCategoryData::finalize() {
    const int nn = n();
    f_blocks_.clear();
    for (int a = 0; a < nn; ++a)
        for (int b = 0; b < nn; ++b)
            for (int c = 0; c < nn; ++c)
                for (int d = 0; d < nn; ++d) {
                    FBlock blk;
                    for (int e = 0; e < nn; ++e)
                        if (admissible(a, b, e) && admissible(e, c, d)) blk.es.push_back(e);
                    for (int f = 0; f < nn; ++f)
                        if (admissible(b, c, f) && admissible(a, f, d)) blk.fs.push_back(f);
                    if (blk.es.empty() || blk.fs.empty()) continue;
                    blk.mat = Mat((int)blk.es.size(), (int)blk.fs.size());
                    for (int i = 0; i < (int)blk.es.size(); ++i)
                        for (int j = 0; j < (int)blk.fs.size(); ++j) {
                            auto it = f_raw_.find({a, b, c, d, blk.es[i], blk.fs[j]});
                            blk.mat(i, j) = (it != f_raw_.end()) ? it->second : cplx(1.0);
                        }
                    if (blk.es.size() == blk.fs.size()) {
                        try {
                            blk.inv = inverse(blk.mat);
                            blk.invertible = true;
                        } catch (const std::exception&) {
                            blk.invertible = false;
                        }
                    }
                    f_blocks_[{a, b, c, d}] = std::move(blk);
                }

    f1_.assign(nn, 0.0);
    for (int a = 0; a < nn; ++a) f1_[a] = F(a, dual[a], a, a, 0, 0);

    bend_b_.assign(nn, 0.0);
    bend_e_.assign(nn, 0.0);
    for (int a = 0; a < nn; ++a) {
        bend_b_[a] = dims.empty() ? cplx(0) : dims[a] * f1_[a];
        bend_e_[a] = (f1_[a] != cplx(0)) ? 1.0 / f1_[a] : cplx(0);
    }

    pivotal.assign(nn, 0.0);
    for (int a = 0; a < nn; ++a)
        pivotal[a] = dims.empty() ? cplx(0) : dims[a] * f1_[dual[a]];

    global_dim_sq = 0;
    for (double d : dims) global_dim_sq += d * d;
}

double global_dimension(const FusionCategoryData& cat) { return cat.global_dim_sq; }

// ---------------------------------------------------------------------------
// validation

ValidationReport validate(const FusionCategoryData& cat, double tol) {
    ValidationReport rep;
    const int n = cat.n();
    auto push = [&rep, tol](const std::string& name, double residual) {
        rep.checks.push_back({name, residual <= tol, residual});
    };

    {
        double r = 0;
        if (cat.dual[0] != 0) r = 1;
        for (int a = 0; a < n; ++a)
            if (cat.dual[cat.dual[a]] != a) r = 1;
        push("dual_involution", r);
    }
    {
        double r = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                if (cat.admissible(a, 0, b) != (a == b)) r = 1;
                if (cat.admissible(0, a, b) != (a == b)) r = 1;
                if (cat.admissible(a, b, 0) != (b == cat.dual[a])) r = 1;
            }
        push("unit_fusion", r);
    }
    {
        double r = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) {
                    int v = cat.admissible(a, b, c);
                    if (v != cat.admissible(b, cat.dual[c], cat.dual[a])) r = 1;
                    if (v != cat.admissible(cat.dual[b], cat.dual[a], cat.dual[c])) r = 1;
                    if (v != cat.admissible(c, cat.dual[b], a)) r = 1;
                }
        push("fusion_rigidity", r);
    }
    {
        // unit-strict gauge: any F block with a unit tensorand is scalar 1
        double r = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d) {
                        if (a != 0 && b != 0 && c != 0) continue;
                        for (int e = 0; e < n; ++e)
                            for (int f = 0; f < n; ++f) {
                                if (!(cat.admissible(a, b, e) && cat.admissible(e, c, d) &&
                                      cat.admissible(b, c, f) && cat.admissible(a, f, d)))
                                    continue;
                                r = std::max(r, std::abs(cat.F(a, b, c, d, e, f) - cplx(1.0)));
                            }
                    }
        push("unit_F", r);
    }
    {
        double r = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c)
                    for (int d = 0; d < n; ++d)
                        for (int f = 0; f < n; ++f) {
                            if (!cat.admissible(a, b, f)) continue;
                            for (int g = 0; g < n; ++g) {
                                if (!cat.admissible(f, c, g)) continue;
                                for (int e = 0; e < n; ++e) {
                                    if (!cat.admissible(g, d, e)) continue;
                                    for (int l = 0; l < n; ++l) {
                                        if (!(cat.admissible(c, d, l) && cat.admissible(f, l, e)))
                                            continue;
                                        for (int k = 0; k < n; ++k) {
                                            if (!(cat.admissible(b, l, k) && cat.admissible(a, k, e)))
                                                continue;
                                            cplx lhs = cat.F(f, c, d, e, g, l) * cat.F(a, b, l, e, f, k);
                                            cplx rhs = 0;
                                            for (int h = 0; h < n; ++h)
                                                if (cat.admissible(b, c, h) && cat.admissible(a, h, g) &&
                                                    cat.admissible(h, d, k))
                                                    rhs += cat.F(a, b, c, g, f, h) *
                                                           cat.F(a, h, d, e, g, k) *
                                                           cat.F(b, c, d, k, h, l);
                                            r = std::max(r, std::abs(lhs - rhs));
                                        }
                                    }
                                }
                            }
                        }
        push("pentagon", r);
    }
    {
        double r = 0;
        for (int a = 0; a < n; ++a) r = std::max(r, std::abs(cat.dims[a] - cat.dims[cat.dual[a]]));
        push("sphericality", r);
    }
    {
        double r = 0;
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b) {
                double s = 0;
                for (int c = 0; c < n; ++c)
                    if (cat.admissible(a, b, c)) s += cat.dims[c];
                r = std::max(r, std::abs(cat.dims[a] * cat.dims[b] - s));
            }
        push("character_identity", r);
    }
    {
        double s = 0;
        for (double d : cat.dims) s += d * d;
        double r = std::abs(s - cat.global_dim_sq);
        if (s <= 0) r = 1;
        push("global_dim_positive", r);
    }
    {
        // the loop/bending compatibility d_a^2 F1(a) F1(a*) = 1 pins the cup
        // and cap normalizations used everywhere downstream
        double r = 0;
        for (int a = 0; a < n; ++a)
            r = std::max(r, std::abs(cat.dims[a] * cat.dims[a] * cat.F1(a) * cat.F1(cat.dual[a]) -
                                     cplx(1.0)));
        push("bend_compatibility", r);
    }
    {
        double r = 0;
        for (int a = 0; a < n; ++a)
            r = std::max(r, std::abs(cat.pivotal[a] * cat.pivotal[cat.dual[a]] - cplx(1.0)));
        push("pivotal_involution", r);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// JSON loader

static double num_field(const json& j, const char* key, double dflt) {
    if (!j.contains(key)) return dflt;
    return j.at(key).get<double>();
}

FusionCategoryData load_category(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("category parse error: ") + e.what());
    }

    FusionCategoryData cat;
    if (!j.contains("simples") || !j["simples"].is_array())
        throw std::runtime_error("category parse error: missing 'simples' array");
    int idx = 0;
    for (const auto& s : j["simples"]) cat.simples.push_back({idx++, s.get<std::string>()});
    const int n = cat.n();
    if (n == 0) throw std::runtime_error("category parse error: no simples");

    if (!j.contains("dual")) throw std::runtime_error("category parse error: missing 'dual'");
    cat.dual = j["dual"].get<std::vector<int>>();
    if ((int)cat.dual.size() != n)
        throw std::runtime_error("category parse error: 'dual' size does not match simples");
    for (int a = 0; a < n; ++a) {
        if (cat.dual[a] < 0 || cat.dual[a] >= n)
            throw std::runtime_error("category parse error: dual index out of range");
        if (cat.dual[cat.dual[a]] != a) throw std::runtime_error("dual not involutive");
    }
    if (cat.dual[0] != 0) throw std::runtime_error("dual not involutive: dual(unit) != unit");

    cat.fusion_table.assign(size_t(n) * n * n, 0);
    if (!j.contains("fusion")) throw std::runtime_error("category parse error: missing 'fusion'");
    for (const auto& t : j["fusion"]) {
        if (!t.is_array() || t.size() != 3)
            throw std::runtime_error("category parse error: fusion entries must be [a,b,c]");
        int a = t[0].get<int>(), b = t[1].get<int>(), c = t[2].get<int>();
        if (a < 0 || a >= n || b < 0 || b >= n || c < 0 || c >= n)
            throw std::runtime_error("category parse error: fusion index out of range");
        cat.fusion_table[(size_t(a) * n + b) * n + c] = 1;
    }

    if (j.contains("F")) {
        for (const auto& rec : j["F"]) {
            int a = rec.at("a").get<int>(), b = rec.at("b").get<int>(), c = rec.at("c").get<int>();
            int d = rec.at("d").get<int>(), e = rec.at("e").get<int>(), f = rec.at("f").get<int>();
            for (int v : {a, b, c, d, e, f})
                if (v < 0 || v >= n)
                    throw std::runtime_error("category parse error: F index out of range");
            bool adm = cat.admissible(a, b, e) && cat.admissible(e, c, d) &&
                       cat.admissible(b, c, f) && cat.admissible(a, f, d);
            if (!adm) {
                std::ostringstream os;
                os << "F entry on inadmissible tuple (" << a << "," << b << "," << c << "," << d
                   << "," << e << "," << f << ")";
                throw std::runtime_error(os.str());
            }
            cat.set_f_entry(a, b, c, d, e, f, cplx(num_field(rec, "re", 1.0), num_field(rec, "im", 0.0)));
        }
    }

    if (j.contains("dims")) {
        cat.dims = j["dims"].get<std::vector<double>>();
        if ((int)cat.dims.size() != n)
            throw std::runtime_error("category parse error: 'dims' size does not match simples");
        cat.finalize();
    } else {
        // Derive dims from the F data: |d_a| is forced by
        // d_a^2 F1(a) F1(a*) = 1, the signs by the character identity with
        // d_0 = 1. Prefer the all-positive solution when several work.
        cat.dims.assign(n, 1.0);
        cat.finalize();  // for F1
        std::vector<double> mag(n);
        for (int a = 0; a < n; ++a) {
            cplx prod = cat.F1(a) * cat.F1(cat.dual[a]);
            if (std::abs(prod.imag()) > 1e-9 || prod.real() <= 0)
                throw std::runtime_error("cannot derive dims: F loop values admit no real solution");
            mag[a] = 1.0 / std::sqrt(prod.real());
        }
        std::vector<std::vector<double>> sols;
        for (unsigned mask = 0; mask < (1u << n); ++mask) {
            if (mask & 1) continue;  // d_0 = +1
            std::vector<double> d(n);
            for (int a = 0; a < n; ++a) d[a] = (mask >> a & 1) ? -mag[a] : mag[a];
            bool ok = std::abs(d[0] - 1.0) < 1e-9;
            for (int a = 0; a < n && ok; ++a)
                ok = std::abs(d[a] - d[cat.dual[a]]) < 1e-9;
            for (int a = 0; a < n && ok; ++a)
                for (int b = 0; b < n && ok; ++b) {
                    double s = 0;
                    for (int c = 0; c < n; ++c)
                        if (cat.admissible(a, b, c)) s += d[c];
                    ok = std::abs(d[a] * d[b] - s) < 1e-7;
                }
            if (ok) sols.push_back(std::move(d));
        }
        if (sols.empty())
            throw std::runtime_error("cannot derive dims: no real solution matches the F data");
        cat.dims = sols.front();
        cat.finalize();
    }

    if (j.contains("pivotal")) {
        if (j["pivotal"].size() != (size_t)n)
            throw std::runtime_error("category parse error: 'pivotal' size does not match simples");
        for (int a = 0; a < n; ++a) {
            cplx p(num_field(j["pivotal"][a], "re", 1.0), num_field(j["pivotal"][a], "im", 0.0));
            if (std::abs(p - cat.pivotal[a]) > 1e-8)
                throw std::runtime_error(
                    "pivotal coefficients disagree with the bending gauge derived from F");
        }
    }

    if (j.contains("name")) cat.name = j["name"].get<std::string>();
    return cat;
}

// ---------------------------------------------------------------------------
// builtins

static FusionCategoryData make_group_category(const std::string& name,
                                              const std::vector<std::string>& labels,
                                              const std::vector<int>& dual,
                                              const std::vector<std::array<int, 3>>& triples) {
    FusionCategoryData cat;
    cat.name = name;
    int idx = 0;
    for (const auto& l : labels) cat.simples.push_back({idx++, l});
    cat.dual = dual;
    const int n = cat.n();
    cat.fusion_table.assign(size_t(n) * n * n, 0);
    for (auto& t : triples) cat.fusion_table[(size_t(t[0]) * n + t[1]) * n + t[2]] = 1;
    cat.dims.assign(n, 1.0);
    return cat;
}

FusionCategoryData builtin(const std::string& bname) {
    if (bname == "vec_z2") {
        auto cat = make_group_category("vec_z2", {"1", "z"}, {0, 1},
                                       {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        cat.finalize();
        return cat;
    }
    if (bname == "semion") {
        auto cat = make_group_category("semion", {"1", "s"}, {0, 1},
                                       {{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}});
        cat.set_f_entry(1, 1, 1, 1, 0, 0, -1.0);
        cat.finalize();
        return cat;
    }
    if (bname == "vec_z3") {
        std::vector<std::array<int, 3>> t;
        for (int a = 0; a < 3; ++a)
            for (int b = 0; b < 3; ++b) t.push_back({a, b, (a + b) % 3});
        auto cat = make_group_category("vec_z3", {"1", "g", "g2"}, {0, 2, 1}, t);
        cat.finalize();
        return cat;
    }
    if (bname == "fibonacci") {
        FusionCategoryData cat;
        cat.name = "fibonacci";
        cat.simples = {{0, "1"}, {1, "tau"}};
        cat.dual = {0, 1};
        cat.fusion_table.assign(8, 0);
        for (auto& t : std::vector<std::array<int, 3>>{{0, 0, 0}, {0, 1, 1}, {1, 0, 1}, {1, 1, 0}, {1, 1, 1}})
            cat.fusion_table[(size_t(t[0]) * 2 + t[1]) * 2 + t[2]] = 1;
        const double phi = (1.0 + std::sqrt(5.0)) / 2.0;
        cat.dims = {1.0, phi};
        cat.set_f_entry(1, 1, 1, 1, 0, 0, 1.0 / phi);
        cat.set_f_entry(1, 1, 1, 1, 0, 1, 1.0 / std::sqrt(phi));
        cat.set_f_entry(1, 1, 1, 1, 1, 0, 1.0 / std::sqrt(phi));
        cat.set_f_entry(1, 1, 1, 1, 1, 1, -1.0 / phi);
        cat.finalize();
        return cat;
    }
    if (bname == "ising") {
        FusionCategoryData cat;
        cat.name = "ising";
        cat.simples = {{0, "1"}, {1, "sigma"}, {2, "psi"}};
        cat.dual = {0, 1, 2};
        cat.fusion_table.assign(27, 0);
        for (auto& t : std::vector<std::array<int, 3>>{{0, 0, 0}, {0, 1, 1}, {0, 2, 2},
                                                       {1, 0, 1}, {2, 0, 2}, {1, 1, 0},
                                                       {1, 1, 2}, {1, 2, 1}, {2, 1, 1},
                                                       {2, 2, 0}})
            cat.fusion_table[(size_t(t[0]) * 3 + t[1]) * 3 + t[2]] = 1;
        const double s2 = 1.0 / std::sqrt(2.0);
        cat.dims = {1.0, std::sqrt(2.0), 1.0};
        cat.set_f_entry(1, 1, 1, 1, 0, 0, s2);
        cat.set_f_entry(1, 1, 1, 1, 0, 2, s2);
        cat.set_f_entry(1, 1, 1, 1, 2, 0, s2);
        cat.set_f_entry(1, 1, 1, 1, 2, 2, -s2);
        cat.set_f_entry(1, 2, 1, 2, 1, 1, -1.0);  // [F^{sigma psi sigma}_psi]
        cat.set_f_entry(2, 1, 2, 1, 1, 1, -1.0);  // [F^{psi sigma psi}_sigma]
        cat.finalize();
        return cat;
    }
    throw std::runtime_error("unknown builtin category: " + bname);
}

std::vector<std::string> builtin_names() {
    return {"vec_z2", "vec_z3", "semion", "fibonacci", "ising"};
}

FusionCategoryData resolve_category(const std::string& name_or_path) {
    for (const auto& b : builtin_names())
        if (b == name_or_path) return builtin(b);
    std::ifstream in(name_or_path);
    if (!in) throw std::runtime_error("unknown category (not a builtin, file not found): " + name_or_path);
    std::stringstream ss;
    ss << in.rdbuf();
    auto cat = load_category(ss.str());
    if (cat.name.empty()) cat.name = name_or_path;
    return cat;
}

} // namespace snt
