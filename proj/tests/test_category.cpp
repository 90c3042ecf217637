#include <doctest.h>

#include "snt/category.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

using namespace snt;

namespace {
std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}
std::string data_dir() {
    if (const char* e = std::getenv("SNT_DATA_DIR")) return e;
    return SNT_DEFAULT_DATA_DIR;
}
}

TEST_SUITE("category") {

TEST_CASE("builtins validate") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        auto cat = builtin(name);
        auto rep = validate(cat, 1e-9);
        for (const auto& c : rep.checks) {
            CAPTURE(c.name);
            CHECK(c.pass);
        }
        CHECK(rep.all_pass());
    }
}

TEST_CASE("pentagon residual tiny for fibonacci") {
    auto cat = builtin("fibonacci");
    auto rep = validate(cat, 1e-9);
    for (const auto& c : rep.checks)
        if (c.name == "pentagon") CHECK(c.residual < 1e-12);
}

TEST_CASE("builtin values") {
    auto z3 = builtin("vec_z3");
    CHECK(z3.n() == 3);
    CHECK(z3.dual[1] == 2);
    CHECK(global_dimension(z3) == doctest::Approx(3.0));

    auto fib = builtin("fibonacci");
    CHECK(fib.dim(1) == doctest::Approx(1.6180339887).epsilon(1e-9));
    CHECK(global_dimension(fib) == doctest::Approx((5.0 + std::sqrt(5.0)) / 2.0));

    auto is = builtin("ising");
    CHECK(is.n() == 3);
    CHECK(global_dimension(is) == doctest::Approx(4.0));

    CHECK(global_dimension(builtin("vec_z2")) == doctest::Approx(2.0));
}

TEST_CASE("perturbed F fails pentagon") {
    auto cat = builtin("fibonacci");
    cat.set_f_entry(1, 1, 1, 1, 0, 0, 1.0 / 1.6180339887498949 + 1e-3);
    cat.finalize();
    auto rep = validate(cat, 1e-9);
    bool pentagon_ok = true;
    for (const auto& c : rep.checks)
        if (c.name == "pentagon") pentagon_ok = c.pass;
    CHECK(!pentagon_ok);
}

TEST_CASE("sphericality failure detected") {
    auto cat = builtin("vec_z3");
    cat.dims = {1.0, 1.0, -1.0};  // d_g != d_{g*}
    cat.finalize();
    auto rep = validate(cat, 1e-9);
    bool spher = true;
    for (const auto& c : rep.checks)
        if (c.name == "sphericality") spher = c.pass;
    CHECK(!spher);
}

TEST_CASE("bundled files load and validate") {
    for (const auto& name : builtin_names()) {
        CAPTURE(name);
        auto cat = load_category(slurp(data_dir() + "/categories/" + name + ".json"));
        auto rep = validate(cat, 1e-9);
        CHECK(rep.all_pass());
        auto ref = builtin(name);
        CHECK(cat.n() == ref.n());
        for (int a = 0; a < cat.n(); ++a) CHECK(cat.dim(a) == doctest::Approx(ref.dim(a)));
    }
}

TEST_CASE("loader rejects bad input") {
    CHECK_THROWS_WITH_AS(load_category("{"), doctest::Contains("parse error"), std::runtime_error);
    // non-involutive dual
    CHECK_THROWS_WITH_AS(
        load_category(R"({"simples":["1","a","b"],"dual":[0,1,0],"fusion":[[0,0,0]]})"),
        doctest::Contains("involutive"), std::runtime_error);
    // F entry on an inadmissible tuple
    CHECK_THROWS_WITH_AS(
        load_category(
            R"({"simples":["1","z"],"dual":[0,1],
                "fusion":[[0,0,0],[0,1,1],[1,0,1],[1,1,0]],
                "F":[{"a":1,"b":1,"c":1,"d":0,"e":0,"f":0,"re":1.0}],
                "dims":[1,1]})"),
        doctest::Contains("inadmissible"), std::runtime_error);
}

TEST_CASE("dims derived when omitted") {
    // Fibonacci file without dims: the character identity forces d_tau = phi.
    auto cat = load_category(R"({
      "simples":["1","tau"],"dual":[0,1],
      "fusion":[[0,0,0],[0,1,1],[1,0,1],[1,1,0],[1,1,1]],
      "F":[{"a":1,"b":1,"c":1,"d":1,"e":0,"f":0,"re":0.6180339887498949},
           {"a":1,"b":1,"c":1,"d":1,"e":0,"f":1,"re":0.7861513777574233},
           {"a":1,"b":1,"c":1,"d":1,"e":1,"f":0,"re":0.7861513777574233},
           {"a":1,"b":1,"c":1,"d":1,"e":1,"f":1,"re":-0.6180339887498949}]})");
    CHECK(cat.dim(1) == doctest::Approx(1.6180339887498949));
}

}
