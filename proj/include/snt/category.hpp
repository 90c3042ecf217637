#pragma once

#include "snt/linalg.hpp"

#include <array>
#include <map>
#include <string>
#include <vector>

namespace snt {

struct SimpleLabel {
    int index = 0;
    std::string name;
};

struct ValidationCheck {
    std::string name;
    bool pass = false;
    double residual = 0.0;
};

struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool all_pass() const;
    double max_residual() const;
};

/// Immutable spherical-fusion-category data in the multiplicity-free setting.
///
/// Conventions baked in here and used by every other module:
///  * simples are 0..n-1 with 0 the tensor unit,
///  * N(a,b,c) = 1 iff c appears in a (x) b,
///  * [F^{abc}_d]_{e,f} relates the two splitting trees of d -> a (x) b (x) c,
///    e running over intermediates of (ab), f over (bc),
///  * the unit-strict gauge F^{1bc} = F^{a1c} = F^{ab1} = 1 is required,
///  * bending scalars are fixed in the gauge A_a = 1 (see bend_* below), so
///    C_a = d_a, B_a = d_a F1(a), E_a = 1/F1(a) with F1(a) = [F^{a a* a}_a]_{11}.
class FusionCategoryData {
public:
    std::vector<SimpleLabel> simples;
    std::vector<int> dual;
    std::vector<unsigned char> fusion_table;  // n^3, values 0/1
    std::vector<double> dims;
    std::vector<cplx> pivotal;                // derived: p_a = d_a F1(a*)
    double global_dim_sq = 0.0;
    std::string name;

    int n() const { return (int)simples.size(); }
    bool admissible(int a, int b, int c) const {
        return fusion_table[(size_t(a) * n() + b) * n() + c] != 0;
    }
    double dim(int a) const { return dims[a]; }

    /// F-symbol entry; 0 on inadmissible index combinations.
    cplx F(int a, int b, int c, int d, int e, int f) const;
    /// Entry (f,e) of the inverse F-matrix for the block (a,b,c,d).
    cplx Finv(int a, int b, int c, int d, int f, int e) const;

    cplx F1(int a) const { return f1_[a]; }
    cplx bendA(int a) const { return 1.0; }
    cplx bendB(int a) const { return bend_b_[a]; }
    cplx bendC(int a) const { return dims[a]; }
    cplx bendE(int a) const { return bend_e_[a]; }

    int simple_by_name(const std::string& s) const;  // -1 if unknown

    /// Populates F-matrix blocks/inverses and bending scalars. Must be called
    /// after all tables are filled and before any engine use.
    void finalize();

    void set_f_entry(int a, int b, int c, int d, int e, int f, cplx v);
    const std::map<std::array<int, 6>, cplx>& raw_f_entries() const { return f_raw_; }

private:
    struct FBlock {
        std::vector<int> es, fs;
        Mat mat, inv;
        bool invertible = false;
    };
    std::map<std::array<int, 4>, FBlock> f_blocks_;
    std::map<std::array<int, 6>, cplx> f_raw_;
    std::vector<cplx> f1_, bend_b_, bend_e_;

    friend ValidationReport validate(const FusionCategoryData&, double);
};

/// Parse a category file (UTF-8 JSON). Throws std::runtime_error with a
/// descriptive message on malformed input. The result is finalized but not
/// validated.
FusionCategoryData load_category(const std::string& text);

/// Runs the full check battery (pentagon over all admissible instances, unit
/// constraints, duality symmetries, sphericality, character identity, D^2,
/// bending compatibility). Failures are report entries, never exceptions.
ValidationReport validate(const FusionCategoryData& cat, double tol);

/// Bundled example categories: vec_z2, vec_z3, semion, fibonacci, ising.
FusionCategoryData builtin(const std::string& bname);
std::vector<std::string> builtin_names();

/// Resolve a --category argument: builtin name, or a path to a JSON file.
FusionCategoryData resolve_category(const std::string& name_or_path);

double global_dimension(const FusionCategoryData& cat);

} // namespace snt
