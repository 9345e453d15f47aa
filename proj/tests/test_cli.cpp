#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace cyclowed;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(const std::vector<std::string>& args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args, int expect_code = 0)
{
    args.push_back("--json");
    const Outcome o = run_cli(args);
    CHECK(o.code == expect_code);
    return Json::parse(o.out);
}

std::string write_temp(const std::string& name, const std::string& content)
{
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream(path) << content;
    return path.string();
}

} // namespace

TEST_CASE("eldiv")
{
    const Outcome o = run_cli({"eldiv", "dedekind", "--p", "3", "--n", "2"});
    CHECK(o.code == 0);
    CHECK(o.out.find("0 1 4 5 8 9") != std::string::npos);

    const Json j = run_json({"eldiv", "dedekind", "--p", "3", "--n", "2", "--oracle"});
    CHECK(j.at("command") == "eldiv dedekind --p 3 --n 2 --oracle --json");
    CHECK(j.at("status") == "ok");
    CHECK(j.at("payload").at("closed_form") == Json::array({0, 1, 4, 5, 8, 9}));
    CHECK(j.at("payload").at("oracle") == j.at("payload").at("closed_form"));
    CHECK(j.at("payload").at("determinant_valuation") == 27);
    CHECK(j.at("timing_ms").is_number());

    CHECK(run_json({"eldiv", "wedderburn", "--p", "2", "--n", "3", "--oracle"}).at("payload").at("agree") == true);
    const Json a = run_json({"eldiv", "absolute", "--p", "3", "--n", "1", "--oracle"});
    CHECK(a.at("payload").at("closed_form") == Json::array({1, 1, 3}));
    CHECK(a.at("payload").at("index") == 3);
}

TEST_CASE("radical series, index and discriminant")
{
    const Outcome o = run_cli({"radical-series", "--p", "3", "--n", "4", "--max-i", "9"});
    CHECK(o.code == 0);
    CHECK(o.out == "1,5,15,31,50,66,76,80,81,81\n");
    CHECK(run_cli({"radical-series", "--p", "3", "--n", "2", "--max-i", "7", "--lambda"}).out == "1,2,3,4,5,6,6,6\n");

    CHECK(run_json({"index", "--m", "1"}).at("payload").at("index") == 1);
    const Json i12 = run_json({"index", "--m", "12"});
    CHECK(i12.at("payload").at("index") == 512 * 81);
    CHECK(i12.at("payload").at("factored") == "2^9 * 3^4");
    CHECK(i12.at("payload").at("consistency").at("holds") == true);
    CHECK(run_json({"discriminant", "--m", "9"}).at("payload").at("discriminant") == 19683);
}

TEST_CASE("ties")
{
    const Outcome o = run_cli({"ties", "absolute", "--p", "3", "--n", "1"});
    CHECK(o.out == "x_{0,0} ≡_3 x_{1,0} + x_{1,1}\n");
    const Json j = run_json({"ties", "absolute", "--p", "3", "--n", "2"});
    CHECK(j.at("payload").at("congruences").size() == 3);
    CHECK(j.at("payload").at("text")[2] == "x_{0,0} ≡_9 3(x_{2,2} + x_{2,5}) + (x_{1,0} + x_{1,1})");

    const Json d = run_json({"ties", "dedekind", "--p", "3", "--n", "2"});
    std::vector<long> vals;
    for (const auto& c : d.at("payload").at("congruences"))
        vals.push_back(c.at("modulus_valuation").get<long>());
    CHECK(vals == std::vector<long>{0, 1, 4, 5, 8, 9});

    const Json w = run_json({"ties", "wedderburn", "--m", "6"});
    CHECK(w.at("payload").at("order").size() == 6);
    CHECK(w.at("payload").at("congruences")[0].at("modulus_valuation").is_null());
    CHECK(!run_json({"ties", "wedderburn", "--p", "3", "--n", "1"}).at("payload").at("congruences")[2].at("modulus_valuation").is_null());
}

TEST_CASE("check absolute and composite")
{
    const std::string bad = write_temp("cyclowed_bad_tuple.json",
                                       R"({"p":3,"n":2,"components":[{"i":0,"coeffs":{}},{"i":1,"coeffs":{"1":1}},{"i":2,"coeffs":{}}]})");
    const Json j = run_json({"check", "absolute", "--input", bad, "--oracle"}, 1);
    CHECK(j.at("status") == "violation");
    CHECK(j.at("payload").at("report").at("member") == false);
    CHECK(j.at("payload").at("agree") == true);
    const Json v = j.at("payload").at("report").at("violations")[0];
    CHECK(v.at("l") == 1);
    CHECK(v.at("j") == 1);
    CHECK(v.at("modulus") == 3);
    CHECK(v.at("lhs_residue") == 1);
    CHECK(v.at("rhs_residue") == 0);

    const std::string good = write_temp("cyclowed_good_tuple.json",
                                        R"({"p":3,"n":2,"components":[{"i":0,"coeffs":{"0":1}},{"i":1,"coeffs":{"0":1}},{"i":2,"coeffs":{"0":1}}]})");
    CHECK(run_cli({"check", "absolute", "--input", good, "--oracle"}).code == 0);

    const std::string comp = write_temp(
        "cyclowed_composite.json",
        R"({"m":12,"components":[{"d":1,"coeffs":[1]},{"d":2,"coeffs":[1]},{"d":3,"coeffs":[1,0]},{"d":4,"coeffs":[1,0]},{"d":6,"coeffs":[1,0]},{"d":12,"coeffs":[1,0,0,0]}]})");
    const Json c = run_json({"check", "composite", "--m", "12", "--input", comp});
    CHECK(c.at("payload").at("member") == true);
    CHECK(c.at("payload").at("checks").size() == 7);
    const std::string comp_bad = write_temp(
        "cyclowed_composite_bad.json",
        R"({"m":12,"components":[{"d":1,"coeffs":[1]},{"d":2,"coeffs":[0]},{"d":3,"coeffs":[1,0]},{"d":4,"coeffs":[1,0]},{"d":6,"coeffs":[1,0]},{"d":12,"coeffs":[1,0,0,0]}]})");
    CHECK(run_cli({"check", "composite", "--m", "12", "--input", comp_bad}).code == 1);
    CHECK(run_cli({"check", "composite", "--m", "6", "--input", comp}).code == 2);
}

TEST_CASE("usage errors")
{
    CHECK(run_cli({}).code == 2);
    CHECK(run_cli({"frobnicate"}).code == 2);
    CHECK(run_cli({"eldiv", "dedekind", "--p", "4", "--n", "1"}).code == 2);
    CHECK(run_cli({"eldiv", "dedekind", "--p", "3"}).code == 2);
    CHECK(run_cli({"eldiv", "dedekind", "--p", "3", "--n", "5"}).code == 2);
    CHECK(run_cli({"index", "--m", "65"}).code == 2);
    CHECK(run_cli({"hochschild", "--p", "3", "--n", "2", "--twist", "3", "--max-degree", "2"}).code == 2);
    const std::string bad = write_temp("cyclowed_malformed.json", "{bad");
    const Json j = run_json({"check", "absolute", "--input", bad}, 2);
    CHECK(j.at("status") == "error");
    const std::string outside = write_temp("cyclowed_outside.json", R"({"p":3,"n":1,"components":[{"i":1,"coeffs":{"2":1}}]})");
    CHECK(run_cli({"check", "absolute", "--input", outside}).code == 2);
    CHECK(run_cli({"--help"}).code == 0);
}

TEST_CASE("ceiling override")
{
    setenv("CYCLOWED_MAX_DEGREE", "300", 1);
    CHECK(run_cli({"eldiv", "dedekind", "--p", "3", "--n", "5"}).code == 0);
    setenv("CYCLOWED_MAX_DEGREE", "8", 1);
    CHECK(run_cli({"index", "--m", "9"}).code == 2);
    setenv("CYCLOWED_MAX_DEGREE", "zero", 1);
    CHECK(run_cli({"index", "--m", "2"}).code == 2);
    unsetenv("CYCLOWED_MAX_DEGREE");
}

TEST_CASE("hochschild, basis, verify, experiment")
{
    const Json h = run_json({"hochschild", "--p", "3", "--n", "2", "--max-degree", "5"});
    CHECK(h.at("payload").at("phi") == 9);
    CHECK(h.at("payload").at("rows").size() == 6 * 6);
    const Json h4 = run_json({"hochschild", "--p", "3", "--n", "2", "--twist", "4", "--max-degree", "1", "--cohomology"});
    CHECK(h4.at("payload").at("rows")[1].at("descriptor") == Json{{"kind", "t_mod_t_power"}, {"exponent", 3}});

    const Json b = run_json({"basis", "w1", "--m", "3"});
    CHECK(b.at("payload").at("rows") == 3);
    CHECK(b.at("payload").at("domain") == Json{{"cyclotomic", 3}});
    CHECK(run_json({"basis", "dedekind", "--p", "3", "--n", "2", "--generator", "zeta"}).at("payload").at("cols") == 6);
    CHECK(run_cli({"basis", "dedekind", "--p", "3", "--n", "2", "--generator", "theta"}).code == 2);

    const Json v1 = run_json({"verify", "--suite", "toperators", "--trials", "10", "--seed", "5"});
    const Json v2 = run_json({"verify", "--suite", "toperators", "--trials", "10", "--seed", "5"});
    CHECK(v1.at("payload") == v2.at("payload"));
    CHECK(v1.at("payload").at("suites")[0].at("ok") == true);
    CHECK(run_cli({"verify", "--suite", "qpascal", "--trials", "5"}).code == 0);

    const Json e = run_json({"experiment", "w2-subring", "--p", "3", "--n", "2"});
    CHECK(e.at("payload").at("products") == 45);
    CHECK(e.at("payload").at("subring") == true);
}
