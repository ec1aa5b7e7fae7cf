#include <gtest/gtest.h>

#include <json.hpp>

#include <fstream>
#include <sstream>

#include "capflow/report_io.hpp"

using namespace capflow;

TEST(FormatNumber, SeventeenDigitsRoundTrip) {
    for (double v : {0.1, 1.0 / 3.0, 7.0 / 9.42, 1e-300, 123456789.123456789}) {
        EXPECT_EQ(std::stod(io::format_number(v)), v);
    }
    EXPECT_EQ(io::format_number(0.1), "0.10000000000000001");
    EXPECT_EQ(io::format_number(2.0), "2");
}

TEST(Rows, CsvHeaderAndJsonMatch) {
    io::ResultRow a;
    a.kind = TubeKind::Conical;
    a.r_min = 1; a.r_max = 2; a.length = 1; a.mu = 1; a.rho = 1; a.alpha = 4.0 / 3.0;
    a.q = 1; a.p = 0.74272306776217834; a.resistance = a.p;
    io::ResultRow b = a;
    b.r_min = 3;
    b.error = "r_min must not exceed r_max";
    const io::ResultRow rows[] = {a, b};

    std::ostringstream csv, json;
    io::write_rows_csv(csv, rows);
    io::write_rows_json(json, rows);

    std::istringstream lines(csv.str());
    std::string header, first, second;
    std::getline(lines, header);
    std::getline(lines, first);
    std::getline(lines, second);
    EXPECT_EQ(header, "kind,r_min,r_max,length,mu,rho,alpha,model,q,p,resistance");
    EXPECT_EQ(first, "conical,1,2,1,1,1,1.3333333333333333,navier-stokes,1,0.74272306776217834,"
                     "0.74272306776217834");
    EXPECT_NE(second.find(",error,error"), std::string::npos);

    const auto doc = nlohmann::json::parse(json.str());
    ASSERT_EQ(doc["rows"].size(), 2u);
    EXPECT_EQ(doc["rows"][0]["p"].get<double>(), a.p);
    EXPECT_EQ(doc["rows"][0]["alpha"].get<double>(), a.alpha);
    EXPECT_TRUE(doc["rows"][1]["p"].is_null());
    EXPECT_EQ(doc["rows"][1]["error"], "r_min must not exceed r_max");
    EXPECT_NE(json.str().find("0.74272306776217834"), std::string::npos);
}

TEST(Reports, SuiteJsonSchema) {
    SuiteOptions opts;
    opts.random_draws = 2;
    const auto suite = run_validation_suite(opts);
    std::ostringstream out;
    io::write_suite_json(out, suite);
    const auto doc = nlohmann::json::parse(out.str());
    EXPECT_EQ(doc["passed"], true);
    ASSERT_EQ(doc["checks"].size(), suite.reports.size());
    for (const auto& check : doc["checks"]) {
        EXPECT_TRUE(check.contains("check_name"));
        EXPECT_TRUE(check["passed"].is_boolean());
        EXPECT_TRUE(check["worst_case_relative_error"].is_number());
        for (const auto& c : check["cases"]) {
            EXPECT_TRUE(c["inputs"].is_object());
            if (c.contains("skipped")) continue;
            EXPECT_TRUE(c["value_a"].is_number());
            EXPECT_TRUE(c["value_b"].is_number());
            EXPECT_TRUE(c["relative_error"].is_number());
        }
    }
}

TEST(Fixture, CanonicalFileMatchesBuiltIn) {
    std::ifstream in(std::string(CAPFLOW_FIXTURE_DIR) + "/canonical.json");
    ASSERT_TRUE(in);
    const auto doc = nlohmann::json::parse(in);
    const auto& fx = kCanonicalFixture;
    EXPECT_EQ(doc["r_min"].get<double>(), fx.r_min);
    EXPECT_EQ(doc["r_max"].get<double>(), fx.r_max);
    EXPECT_EQ(doc["length"].get<double>(), fx.length);
    EXPECT_EQ(doc["mu"].get<double>(), fx.mu);
    EXPECT_EQ(doc["rho"].get<double>(), fx.rho);
    EXPECT_EQ(doc["alpha"].get<double>(), fx.alpha);
    EXPECT_EQ(doc["q"].get<double>(), fx.q);
}
