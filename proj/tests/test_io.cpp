#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "ccs/errors.hpp"
#include "ccs/io.hpp"

using namespace ccs;

namespace {

std::filesystem::path temp_file(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("ccs_test_" + name);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::stringstream s;
    s << in.rdbuf();
    return s.str();
}

std::optional<ErrorCode> code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    return std::nullopt;
}

}  // namespace

TEST(Json, ComplexAndMatrix) {
    EXPECT_EQ(to_json(cplx(0.1, -2.5)).dump(), "[0.1,-2.5]");
    EXPECT_EQ(complex_from_json(json::parse("[0.1, -2.5]")), cplx(0.1, -2.5));
    EXPECT_THROW(complex_from_json(json::parse("[1]")), Error);
    const GroupElement r = rotation(5, 2);
    const GroupElement back = group_element_from_json(to_json(r));
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(back.entries()[i], r.entries()[i]);
}

TEST(Json, ChainRoundTripIsExact) {
    for (int n = 2; n <= 6; ++n) {
        const BarChain t = torsion_cycle(n);
        const std::string text = to_json(t).dump();
        const BarChain back = chain_from_json(json::parse(text));
        ASSERT_EQ(back.terms().size(), t.terms().size());
        for (std::size_t k = 0; k < t.terms().size(); ++k) {
            EXPECT_EQ(back.terms()[k].coef, t.terms()[k].coef);
            for (std::size_t i = 0; i < 3; ++i) {
                EXPECT_EQ(back.terms()[k].symbol[i].entries(), t.terms()[k].symbol[i].entries());
            }
        }
        EXPECT_EQ(to_json(back).dump(), text);
    }
}

TEST(Json, DeterminantErrorNamesTerm) {
    const json j = json::parse(R"({"group":"SL2C","degree":1,"terms":[
        {"coef":1,"bar":[[[1,0],[0,0],[0,0],[1,0]]]},
        {"coef":1,"bar":[[[2,0],[0,0],[0,0],[1,0]]]}]})");
    try {
        chain_from_json(j);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DeterminantError);
        EXPECT_NE(std::string(e.what()).find("term 1, matrix 0"), std::string::npos) << e.what();
    }
}

TEST(Json, SchemaErrors) {
    EXPECT_EQ(code_of([] { chain_from_json(json::parse(R"({"group":"SL2R","degree":1,"terms":[]})")); }),
              ErrorCode::SchemaError);
    EXPECT_EQ(code_of([] { chain_from_json(json::parse(R"({"group":"SL2C","terms":[]})")); }),
              ErrorCode::SchemaError);
    EXPECT_EQ(code_of([] { chain_from_json(json::parse(R"({"group":"SL2C","degree":7,"terms":[]})")); }),
              ErrorCode::SchemaError);
    EXPECT_EQ(code_of([] {
                  chain_from_json(json::parse(R"({"group":"SL2C","degree":2,"terms":[
                      {"coef":1,"bar":[[[1,0],[0,0],[0,0],[1,0]]]}]})"));
              }),
              ErrorCode::SchemaError);
    EXPECT_EQ(code_of([] { chain_from_json(json::parse(R"({"group":"SL2C","degree":1,"terms":[{"coef":1.5,"bar":[]}]})")); }),
              ErrorCode::SchemaError);
}

TEST(Json, EmptyChainIsCycle) {
    const BarChain c = chain_from_json(json::parse(R"({"group":"SL2C","degree":3,"terms":[]})"));
    EXPECT_TRUE(c.empty());
    EXPECT_TRUE(is_cycle(c).is_cycle);
}

TEST(Json, PreBlochRoundTrip) {
    PreBlochElement e;
    e.add(2, CoveringPoint(cplx(0.3, 0.4), 2, -4));
    e.add(-1, CoveringPoint(cplx(5.0, -1.0), 0, 2));
    const PreBlochElement back = pre_bloch_from_json(json::parse(to_json(e).dump()));
    ASSERT_EQ(back.size(), 2u);
    EXPECT_EQ(back.terms()[0].coef, 2);
    EXPECT_EQ(back.terms()[0].point.z(), cplx(0.3, 0.4));
    EXPECT_EQ(back.terms()[0].point.p(), 2);
    EXPECT_EQ(back.terms()[0].point.q(), -4);
    EXPECT_EQ(back.terms()[1].point.q(), 2);
}

TEST(Files, ReadErrors) {
    EXPECT_EQ(code_of([] { read_json_file(temp_file("does_not_exist.json")); }), ErrorCode::IoError);
    const auto bad = temp_file("bad.json");
    std::ofstream(bad) << "{ not json";
    EXPECT_EQ(code_of([&] { read_json_file(bad); }), ErrorCode::SchemaError);
    std::filesystem::remove(bad);
}

TEST(Files, CycleFileAndReport) {
    const auto cycle = temp_file("torsion3.json");
    write_json(to_json(torsion_cycle(3)), cycle);
    const BarChain c = parse_cycle_file(cycle);
    EXPECT_EQ(c.terms().size(), 3u);

    Config config;
    config.seed = 9;
    config.trials = 4;
    ASSERT_TRUE(config.valid());
    const auto a = temp_file("report_a.json"), b = temp_file("report_b.json");
    emit_report(ccs_value(c, config.seed, config.trials), config, a);
    emit_report(ccs_value(parse_cycle_file(cycle), config.seed, config.trials), config, b);
    EXPECT_EQ(slurp(a), slurp(b));

    const json r = read_json_file(a);
    EXPECT_EQ(r.at("trials").size(), 4u);
    EXPECT_EQ(r.at("seed").get<std::uint64_t>(), 9u);
    const double re = r.at("value").at(0).get<double>();
    EXPECT_NEAR(re, 1.0 / 3.0, 1e-7);
    for (const auto& p : {cycle, a, b}) std::filesystem::remove(p);
}

TEST(Config, Validity) {
    Config c;
    EXPECT_TRUE(c.valid());
    c.trials = 0;
    EXPECT_FALSE(c.valid());
    c.trials = 1;
    c.tol.cmp = -1.0;
    EXPECT_FALSE(c.valid());
}
