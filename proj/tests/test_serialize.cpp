#include <sstream>
#include <string>

#include <gtest/gtest.h>

#include "relgw/errors.hpp"
#include "relgw/serialize.hpp"
#include "test_support.hpp"

using namespace relgw;
using relgw::testing::solved;

TEST(Serialize, JsonRoundTrip) {
  for (int d = 1; d <= 4; ++d) {
    const auto& table = solved(d).table;
    const Json doc = table_to_json(table);
    EXPECT_EQ(table_from_json(doc), table) << d;
    EXPECT_EQ(table_from_json(Json::parse(doc.dump())), table) << d;
  }
}

TEST(Serialize, JsonLayout) {
  const Json doc = table_to_json(solved(1).table);
  EXPECT_EQ(doc["solved_through_degree"], 1);
  ASSERT_EQ(doc["two_point"].size(), 2U);
  ASSERT_EQ(doc["three_point_r0"].size(), 1U);
  EXPECT_EQ(doc["two_point"][0]["a"], 1);
  EXPECT_EQ(doc["two_point"][1]["value"], "4");
  EXPECT_EQ(doc["three_point_r0"][0]["d"], 1);
  EXPECT_EQ(doc["three_point_r0"][0]["value"], "6");
  EXPECT_EQ(table_to_json(solved(2).table)["two_point"][3]["value"], "7/2");
}

TEST(Serialize, Csv) {
  EXPECT_EQ(table_to_csv(solved(1).table),
            "kind,a,b,d,value\n"
            "two_point,1,2,1,1\n"
            "two_point,2,1,1,4\n"
            "three_point_r0,1,2,1,6\n");
  const std::string csv = table_to_csv(solved(2).table);
  EXPECT_NE(csv.find("two_point,2,4,2,7/2\n"), std::string::npos);
  EXPECT_NE(csv.find("three_point_r0,3,3,2,54\n"), std::string::npos);
}

TEST(Serialize, ImportErrors) {
  const Json good = table_to_json(solved(2).table);

  Json missing = good;
  missing["two_point"].erase(1);
  EXPECT_THROW(table_from_json(missing), ParseError);

  Json duplicate = good;
  duplicate["two_point"].push_back(good["two_point"][0]);
  EXPECT_THROW(table_from_json(duplicate), ParseError);

  Json wrong_degree = good;
  wrong_degree["three_point_r0"][0]["d"] = 2;
  EXPECT_THROW(table_from_json(wrong_degree), ParseError);

  Json illegal = good;
  illegal["two_point"][0]["b"] = 3;
  EXPECT_THROW(table_from_json(illegal), ParseError);

  Json too_high = good;
  too_high["solved_through_degree"] = 1;
  EXPECT_THROW(table_from_json(too_high), ParseError);

  Json bad_value = good;
  bad_value["two_point"][0]["value"] = "1/0";
  EXPECT_THROW(table_from_json(bad_value), ParseError);

  EXPECT_THROW(table_from_json(Json::array()), ParseError);
  EXPECT_THROW(table_from_json(Json::object()), ParseError);
}

TEST(Serialize, ThetaElement) {
  const auto product = mul_basis(1, 5, 2, ConcreteMode(solved(2).table));
  const Json doc = theta_to_json(product);
  const Json expected = Json::parse(R"({"terms": [
    {"p": 6, "series": [{"k": 0, "value": "1"}]},
    {"p": 3, "series": [{"k": 1, "value": "2"}]},
    {"p": 0, "series": [{"k": 2, "value": "30"}]}]})");
  EXPECT_EQ(doc, expected);
}

TEST(Serialize, Report) {
  const auto& report = solved(1).reports[0];
  const Json doc = report_to_json(report);
  EXPECT_EQ(doc["degree"], 1);
  EXPECT_EQ(doc["rank"], report.rank);
  EXPECT_EQ(doc["solution"]["N_{2,1}"], "4");
  EXPECT_EQ(doc["solution"]["N_{1,2,0}^1"], "6");
  EXPECT_FALSE(doc.contains("equations"));
  const Json full = report_to_json(report, true);
  ASSERT_TRUE(full.contains("equations"));
  EXPECT_EQ(full["equations"].size(), report.equations.size());
}

TEST(Serialize, Punctured) {
  const std::vector<PuncturedRow> rows{{{5, 2, 1, 2}, Rational(39)}, {{2, 3, 5, 0}, Rational(1)}};
  EXPECT_EQ(punctured_to_csv(rows), "p,q,r,d,value\n5,2,1,2,39\n2,3,5,0,1\n");
  const Json doc = punctured_to_json(rows);
  EXPECT_EQ(doc[0]["value"], "39");
  EXPECT_EQ(doc[1]["r"], 5);
}
