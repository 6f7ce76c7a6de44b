#include "test_support.hpp"

#include <polydecomp/cli.hpp>

#include <gtest/gtest.h>

#include <functional>

using namespace polydecomp;
using namespace polydecomp::testing;
using nlohmann::json;

namespace {

const std::vector<std::string> xy{"x", "y"};

ErrorCode error_of(const std::function<void()>& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

TEST(Parse, Examples)
{
    const Poly f = parse_poly("x^6+6*x^5+6*x+1", Qq(), {"x"});
    EXPECT_EQ(f, Poly::from_integers(Qq(), "x", {1, 6, 0, 0, 0, 6, 1}));

    const Poly g = parse_poly("x^2 - 1/2", Qq(), {"x"});
    EXPECT_EQ(g.coefficients(), (Element::Coefficients{q(-1, 2), q(0), q(1)}));

    const Poly m = parse_poly("x^2 + y*x + 1", Qq(), xy);
    EXPECT_TRUE(m.is_monic());
    EXPECT_EQ(m.domain(), Domain::poly_ring(Qq(), "y"));
    EXPECT_EQ(m.coeff(1), Element::generator(m.domain(), "y"));
}

TEST(Parse, GrammarDetails)
{
    EXPECT_EQ(P("-x^2"), -P("x^2"));
    EXPECT_EQ(P("--x"), P("x"));
    EXPECT_EQ(P("2*-x"), P("-2*x"));
    EXPECT_EQ(P(" ( x + 1 ) ^ 2 "), P("x^2+2*x+1"));
    EXPECT_EQ(P("6/4*x"), P("3/2*x"));
    EXPECT_EQ(P("x^0"), P("1"));
    EXPECT_EQ(P("3/2", Domain::prime_field(5)), P("4", Domain::prime_field(5)));
    EXPECT_EQ(P("y*x1 + x1^2", Qq(), std::vector<std::string>{"x1", "y"}).degree(), Degree(2));
}

TEST(Parse, Errors)
{
    for (const char* bad : {"x^", "2x", "x+*1", "(x+1", "", "x^-1", "1/2/3", "x**2", "1.5*x", "x)"})
        EXPECT_EQ(error_of([&] { P(bad); }), ErrorCode::SyntaxError) << bad;
    EXPECT_EQ(error_of([] { P("x + z"); }), ErrorCode::UnknownVariable);
    EXPECT_EQ(error_of([] { P("x + 1/0"); }), ErrorCode::DivisionByZeroLiteral);
    EXPECT_EQ(error_of([] { P("x + 1/3", Domain::prime_field(3)); }), ErrorCode::DivisionByZeroLiteral);
    try {
        P("x + + 1");
        FAIL();
    } catch (const SyntaxError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
    EXPECT_EQ(error_of([] { parse_poly("x", Qq(), {"x", "x"}); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(error_of([] { parse_poly("x", Qq(), {"x"}, "y"); }), ErrorCode::UnknownVariable);
    EXPECT_EQ(error_of([] { parse_field("gf:9"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(error_of([] { parse_field("R"); }), ErrorCode::InvalidArgument);
    EXPECT_EQ(parse_field("gf:7"), Domain::prime_field(7));
}

TEST(Format, Text)
{
    EXPECT_EQ(format_poly(P("x^3+3*x^2-9/2*x+27/2")), "x^3 + 3*x^2 - 9/2*x + 27/2");
    EXPECT_EQ(format_poly(Poly::zero(Qq(), "x")), "0");
    EXPECT_EQ(format_poly(P("-x^2+1")), "-x^2 + 1");
    EXPECT_EQ(format_poly(P("-1")), "-1");
    EXPECT_EQ(format_poly(P("x^2+4*x+1", Domain::prime_field(5))), "x^2 + 4*x + 1");
    EXPECT_EQ(format_poly(P("x^2 + (y^2-1)*x - 2*y", Qq(), xy)), "x^2 + x*y^2 - x - 2*y");
}

TEST(Format, Json)
{
    EXPECT_EQ(poly_to_json(P("x^2+2*x+1")), json::parse(R"({"var":"x","coeffs":["1","2","1"]})"));
    EXPECT_EQ(poly_to_json(P("x - 1/2")), json::parse(R"({"var":"x","coeffs":["-1/2","1"]})"));
    EXPECT_EQ(poly_to_json(P("x^2+y*x", Qq(), xy)),
              json::parse(R"({"var":"x","coeffs":[{"var":"y","coeffs":[]},{"var":"y","coeffs":["0","1"]},
                              {"var":"y","coeffs":["1"]}]})"));
    EXPECT_EQ(error_of([] { poly_from_json(json::parse(R"({"var":"x","coeffs":["1","0"]})"), Qq()); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(error_of([] { poly_from_json(json::parse(R"({"var":"x","coeffs":["7"]})"), Domain::prime_field(5)); }),
              ErrorCode::InvalidArgument);
    EXPECT_EQ(error_of([] { poly_from_json(json::parse(R"({"coeffs":[]})"), Qq()); }), ErrorCode::InvalidArgument);
}

class RoundTrip : public ::testing::TestWithParam<Domain> {};

TEST_P(RoundTrip, TextAndJson)
{
    const Domain field = GetParam();
    const Domain tower = Domain::poly_ring(field, "y");
    Rng rng(51);
    for (int trial = 0; trial < 1000; ++trial) {
        const bool multi = trial % 4 == 3;
        const Poly f = random_poly(multi ? tower : field, "x", uniform(rng, 0, 6), rng, false);
        const auto vars = multi ? xy : std::vector<std::string>{"x"};
        ASSERT_EQ(parse_poly(format_poly(f), field, vars), f) << format_poly(f);
        const json j = json::parse(poly_to_json(f).dump());
        ASSERT_EQ(poly_from_json(j, f.domain()), f);
    }
}

INSTANTIATE_TEST_SUITE_P(Fields, RoundTrip, ::testing::Values(Domain::rationals(), Domain::prime_field(7)));

cli::Outcome run_args(std::vector<std::string> args)
{
    args.insert(args.begin(), "polydecomp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    return cli::run(static_cast<int>(argv.size()), argv.data());
}

TEST(Cli, DecomposeReferenceExample)
{
    const auto o = run_args({"decompose", "--d", "3", "x^6+6*x^5+6*x+1"});
    EXPECT_EQ(o.status, 0);
    EXPECT_EQ(o.out, "h = t^3 + 65\nQ = x^2 + 2*x - 4\nR = 40*x^3 - 90*x\n");
    EXPECT_TRUE(o.err.empty());

    const auto v = run_args({"decompose", "--d", "2", "--verify", "x^6+6*x^5+6*x+1"});
    EXPECT_EQ(v.out, "h = t^2 - 725/4\nQ = x^3 + 3*x^2 - 9/2*x + 27/2\nR = -405/4*x^2 + 255/2*x\n"
                     "monic: pass\ndegree_bound: pass\nindex_condition: pass\nreconstruction: pass\n");
}

TEST(Cli, DecomposeJsonSchema)
{
    const auto o = run_args({"decompose", "--d", "3", "--json", "x^6+6*x^5+6*x+1"});
    ASSERT_EQ(o.status, 0);
    const json j = json::parse(o.out);
    EXPECT_EQ(j["d"], 3);
    EXPECT_EQ(j["h"], json::parse(R"({"var":"t","coeffs":["65","0","0","1"]})"));
    EXPECT_EQ(poly_from_json(j["Q"], Qq()), P("x^2+2*x-4"));
    EXPECT_EQ(poly_from_json(j["R"], Qq()), P("40*x^3-90*x"));
    for (const char* key : {"monic", "degree_bound", "index_condition", "reconstruction"})
        EXPECT_EQ(j["conditions"][key], true) << key;
}

TEST(Cli, Root)
{
    const auto o = run_args({"root", "--d", "2", "x^6+6*x^5+6*x+1"});
    EXPECT_EQ(o.status, 0);
    EXPECT_EQ(o.out, "Q = x^3 + 3*x^2 - 9/2*x + 27/2\n");
    const auto j = run_args({"root", "--d", "6", "--json", "x^6+6*x^5+6*x+1"});
    EXPECT_EQ(json::parse(j.out)["Q"], json::parse(R"({"var":"x","coeffs":["1","1"]})"));
}

TEST(Cli, CheckExitCodes)
{
    const auto yes = run_args({"check", "--d", "6", "x^6+6*x^5+6*x+1"});
    EXPECT_EQ(yes.status, 0);
    EXPECT_NE(yes.out.find("decomposable: yes"), std::string::npos);
    EXPECT_NE(yes.out.find("Q = x + 1"), std::string::npos);

    const auto no = run_args({"check", "--d", "3", "x^6+6*x^5+6*x+1"});
    EXPECT_EQ(no.status, 2);
    EXPECT_NE(no.out.find("R = 40*x^3 - 90*x"), std::string::npos);

    const auto err = run_args({"check", "--d", "2", "--field", "gf:2", "x^4+x^2"});
    EXPECT_EQ(err.status, 1);
    EXPECT_EQ(err.err.rfind("error[NotInvertible]: ", 0), 0u);
    EXPECT_TRUE(err.out.empty());

    const auto jerr = run_args({"check", "--d", "2", "--field", "gf:2", "--json", "x^4+x^2"});
    EXPECT_EQ(jerr.status, 1);
    EXPECT_EQ(json::parse(jerr.err)["error"]["code"], "NotInvertible");

    const auto normalized = run_args({"check", "--d", "2", "2*x^2+1"});
    EXPECT_EQ(normalized.status, 0);
    EXPECT_NE(normalized.out.find("normalized: divided by 2"), std::string::npos);
}

TEST(Cli, CheckMultivariate)
{
    const auto yes = run_args({"check", "--d", "2", "--vars", "x,y", "(x^2+y*x+1)^2+3"});
    EXPECT_EQ(yes.status, 0);
    EXPECT_NE(yes.out.find("h = t^2 + 3"), std::string::npos);

    const auto no = run_args({"check", "--d", "2", "--vars", "x,y", "x^2+y"});
    EXPECT_EQ(no.status, 2);
    EXPECT_NE(no.out.find("non-constant"), std::string::npos);

    // Monic in y only; chosen automatically.
    const auto auto_main = run_args({"check", "--d", "2", "--vars", "x,y", "y^2 + x*y + 3*x^5"});
    EXPECT_EQ(auto_main.status, 2);
    EXPECT_NE(auto_main.out.find("R = "), std::string::npos);

    const auto neither = run_args({"check", "--d", "2", "--vars", "x,y", "2*x^2*y^2 + 1"});
    EXPECT_EQ(neither.status, 1);
    EXPECT_NE(neither.err.find("NotMonicInMainVar"), std::string::npos);
    EXPECT_NE(neither.err.find("x, y"), std::string::npos);

    const auto explicit_main = run_args({"check", "--d", "2", "--vars", "x,y", "--main-var", "x", "y^2*x^2+1"});
    EXPECT_EQ(explicit_main.status, 1);
    EXPECT_NE(explicit_main.err.find("NotMonicInMainVar"), std::string::npos);

    const auto j = run_args({"check", "--d", "2", "--vars", "x,y", "--json", "(x^2+y*x+1)^2+3"});
    const json verdict = json::parse(j.out);
    EXPECT_EQ(verdict["decomposable"], true);
    EXPECT_EQ(poly_from_json(verdict["witness"]["h"], Qq()), P("t^2+3", Qq(), "t"));
    EXPECT_EQ(poly_from_json(verdict["witness"]["Q"], Domain::poly_ring(Qq(), "y")), P("x^2+y*x+1", Qq(), xy));
}

TEST(Cli, Variety)
{
    const auto o = run_args({"variety", "--n", "6", "--d", "2"});
    EXPECT_EQ(o.status, 0);
    EXPECT_EQ(o.out, "-5/64*a1^4 + 3/8*a1^2*a2 - 1/2*a1*a3 - 1/4*a2^2 + a4\n"
                     "1/64*a1^5 - 1/8*a1^3*a2 + 1/8*a1^2*a3 + 1/4*a1*a2^2 - 1/2*a2*a3 + a5\n");
    const auto j = run_args({"variety", "--n", "4", "--d", "2", "--json"});
    const json s = json::parse(j.out);
    EXPECT_EQ(s["equations"].size(), 1u);
    EXPECT_EQ(s["equations"][0]["index"], 1);
    EXPECT_EQ(s["equations"][0]["text"], "1/8*a1^3 - 1/2*a1*a2 + a3");
    EXPECT_EQ(run_args({"variety", "--n", "6", "--d", "4"}).status, 1);
    EXPECT_EQ(run_args({"variety", "--n", "6", "--d", "2", "--field", "gf:5"}).status, 1);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(run_args({}).status, 1);
    EXPECT_EQ(run_args({"--help"}).status, 0);
    const auto missing_d = run_args({"root", "x^4"});
    EXPECT_EQ(missing_d.status, 1);
    EXPECT_NE(missing_d.err.find("InvalidD"), std::string::npos);
    EXPECT_EQ(run_args({"root", "--d", "2", "--bogus", "x^4"}).status, 1);
    const auto not_div = run_args({"decompose", "--d", "4", "x^6+1"});
    EXPECT_EQ(not_div.status, 1);
    EXPECT_NE(not_div.err.find("DegreeNotDivisible"), std::string::npos);
    const auto syntax = run_args({"root", "--d", "2", "x^4 +* 1"});
    EXPECT_NE(syntax.err.find("SyntaxError"), std::string::npos);
    EXPECT_EQ(run_args({"root", "--d", "2", "--field", "gf:4", "x^4"}).status, 1);
}

} // namespace
