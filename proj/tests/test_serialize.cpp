#include "catch_amalgamated.hpp"

#include "pqsym/cli.hpp"

using namespace pqsym;
using io::json;

TEST_CASE("QSym file round trip")
{
    const json in = json::parse(R"({"degree": 4, "basis": "F", "coeffs": {"": "1", "1,3": "-2/3", "2": "5"}})");
    const QSym q = io::qsym_from_json(in);
    CHECK(io::qsym_from_json(io::qsym_to_json_compact(q, Basis::F)) == q);
    CHECK(io::qsym_from_json(io::qsym_to_json_compact(q, Basis::K)) == q);
    CHECK(nlohmann::json(io::qsym_to_json_compact(q, Basis::F)["coeffs"]) == nlohmann::json(in["coeffs"]));

    const QSym mixed = q + QSym::one();
    const json arr = io::qsym_to_json(mixed);
    REQUIRE(arr.size() == 2);
    CHECK(arr[0]["degree"] == 0);
    CHECK(arr[0]["coeffs"][""] == "1");
}

TEST_CASE("QSym file validation")
{
    auto bad = [](const char* text) { return io::qsym_from_json(json::parse(text)); };
    CHECK_THROWS_AS(bad(R"({"degree": 3})"), validation_error);
    CHECK_THROWS_AS(bad(R"({"degree": "3", "coeffs": {}})"), validation_error);
    CHECK_THROWS_AS(bad(R"({"degree": 3, "coeffs": {"1": 2}})"), validation_error);
    CHECK_THROWS_AS(bad(R"({"degree": 3, "coeffs": {"3": "1"}})"), validation_error);
    CHECK_THROWS_AS(bad(R"({"degree": 3, "coeffs": {"1": "1/0"}})"), validation_error);
    CHECK_THROWS_AS(bad(R"({"degree": 3, "basis": "X", "coeffs": {}})"), validation_error);
    CHECK_THROWS_AS(bad(R"({"degree": 0, "coeffs": {"1": "1"}})"), validation_error);
    CHECK_THROWS_AS(io::read_json_file("/nonexistent/file.json"), validation_error);
}

TEST_CASE("cd-polynomials and polynomials")
{
    const CdPolynomial p{{"1", 3}, {"cd", -2}};
    const json j = io::cd_to_json(p);
    CHECK(j[""] == "3");
    CHECK(j["cd"] == "-2");
    CHECK(io::cd_from_json(j) == p);
    CHECK(io::cd_from_json(json::parse(R"({"1": "3", "cd": "-2"})")) == p);
    CHECK(io::polynomial_to_json(Polynomial{1, Rational(1, 2)}) == json::parse(R"(["1", "1/2"])"));
}

TEST_CASE("family grammar")
{
    CHECK(io::parse_family("boolean:3").name() == boolean_poset(3).name());
    CHECK(flag_vector(io::parse_family("polygon:5*chain:1")) == flag_vector(product(polygon_poset(5), chain_poset(1))));
    CHECK(flag_vector(io::parse_family("dual:cube:3")) == flag_vector(dual(cube_faces_poset(3))));
    CHECK(io::parse_family("hat0:boolean:2").top_rank() == 3);
    CHECK(io::parse_family("simplex_faces:2").size() == 8);
    CHECK_THROWS_AS(io::parse_family(""), validation_error);
    CHECK_THROWS_AS(io::parse_family("boolean"), validation_error);
    CHECK_THROWS_AS(io::parse_family("boolean:x"), validation_error);
    CHECK_THROWS_AS(io::parse_family("torus:3"), validation_error);
    CHECK_THROWS_AS(io::parse_family("boolean:2*"), validation_error);
    CHECK_THROWS_AS(io::parse_family("polygon:2"), validation_error);
}

TEST_CASE("poset files")
{
    const GradedPoset p = polygon_poset(4);
    const GradedPoset back = io::poset_from_json(io::poset_to_json(p));
    CHECK(back.labels() == p.labels());
    CHECK(flag_vector(back) == flag_vector(p));
    CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"elements": ["a"]})")), validation_error);
    CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"elements": ["a", "b"], "covers": [["a"]]})")), validation_error);
    CHECK_THROWS_AS(io::poset_from_json(json::parse(R"({"elements": [1], "covers": []})")), validation_error);
}

TEST_CASE("qsym command")
{
    const QSym k = io::qsym_from_json(json::parse(R"({"degree": 2, "basis": "K", "coeffs": {"": "1"}})"));
    const json converted = cli::cmd_qsym("convert", k, std::nullopt, Basis::M);
    CHECK(converted["coeffs"] == json::parse(R"({"": "1", "1": "2"})"));

    const QSym sq = qsym_of_poset(polygon_poset(4));
    CHECK(cli::cmd_qsym("theta", sq * Rational(2), std::nullopt, Basis::M) == json::parse(R"({"cc": "1", "d": "1"})"));
    CHECK(cli::cmd_qsym("membership", sq, std::nullopt, Basis::M)["member"] == true);
    const json m = cli::cmd_qsym("membership", QSym::monomial(Subset(1, {1})), std::nullopt, Basis::M);
    CHECK(m["member"] == false);
    CHECK(m.contains("violated"));
    CHECK(cli::cmd_qsym("g", sq, std::nullopt, Basis::M) == json::parse(R"(["1", "1"])"));
    CHECK_THROWS_AS(cli::cmd_qsym("multiply", sq, std::nullopt, Basis::M), validation_error);
    CHECK_THROWS_AS(cli::cmd_qsym("nope", sq, std::nullopt, Basis::M), validation_error);
    CHECK_THROWS_AS(cli::cmd_qsym("theta", QSym::monomial(Subset(1, {1})), std::nullopt, Basis::M), precondition_error);
    const json prod = cli::cmd_qsym("multiply", QSym::monomial(Subset(0, {})), QSym::monomial(Subset(0, {})), Basis::M);
    CHECK(prod["coeffs"] == json::parse(R"({"": "1", "1": "2"})"));
    CHECK(cli::cmd_qsym("coproduct", sq, std::nullopt, Basis::M)["terms"].size() == 12);
}

TEST_CASE("theta command")
{
    cli::ThetaReports r;
    r.eta = true;
    r.spectrum = true;
    r.peaks = true;
    const json out = cli::cmd_theta(3, r);
    CHECK(out["eta"][0] == json::parse("[4, 1, 1]"));
    CHECK(out["eigenvalues"] == json::parse("[16, 4, 4]"));
    CHECK(out["peaks"] == json::parse(R"({"": 8, "2": 8, "3": 8})"));
    r.peaks_route = "theta";
    CHECK(cli::cmd_theta(3, r)["peaks"] == out["peaks"]);
    r.peaks_route = "other";
    CHECK_THROWS_AS(cli::cmd_theta(3, r), validation_error);
    CHECK_THROWS_AS(cli::cmd_theta(13, r), validation_error);
    CHECK_THROWS_AS(cli::cmd_theta(-1, {}), validation_error);
    cli::ThetaReports big;
    big.peaks = true;
    CHECK_THROWS_AS(cli::cmd_theta(8, big), validation_error);
}

TEST_CASE("poset command")
{
    cli::PosetReports r;
    r.cd = true;
    r.g = true;
    r.eulerian = true;
    const json b4 = cli::cmd_poset(boolean_poset(4), r);
    CHECK(b4["eulerian"] == true);
    CHECK(b4["cd_index"] == json::parse(R"({"ccc": "1", "cd": "2", "dc": "2"})"));
    CHECK(cli::cmd_poset(polygon_poset(5), r)["g"] == json::parse(R"(["1", "2"])"));
    try {
        cli::cmd_poset(chain_poset(2), r);
        FAIL("expected a precondition error");
    } catch (const precondition_error& e) {
        CHECK(std::string(e.what()).find("not Eulerian") != std::string::npos);
    }
    cli::PosetReports cd_only;
    cd_only.cd = true;
    CHECK_THROWS_AS(cli::cmd_poset(chain_poset(2), cd_only), precondition_error);
    cli::PosetReports flags;
    flags.flag_f = true;
    CHECK(cli::cmd_poset(polygon_poset(4), flags)["flag_f"] == json::parse(R"({"": "1", "1": "4", "2": "4", "1,2": "8"})"));
}

TEST_CASE("exit codes")
{
    CHECK(cli::exit_code_for(validation_error("x")) == 2);
    CHECK(cli::exit_code_for(precondition_error("x")) == 3);
    CHECK(cli::exit_code_for(invariant_error("x")) == 4);
    CHECK(cli::exit_code_for(std::runtime_error("x")) == 4);
}
