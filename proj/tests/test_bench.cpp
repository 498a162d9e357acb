#include <sstream>

#include <gtest/gtest.h>

#include "sylv/bench.hpp"

TEST(ParsePairs, ReadsRows) {
    std::istringstream in("a,b\n3,5\n101,103\r\n\n");
    const auto pairs = sylv::parse_pairs_csv(in);
    ASSERT_EQ(pairs.size(), 2u);
    EXPECT_EQ(pairs[1].a(), 101);
    EXPECT_EQ(pairs[1].b(), 103);
}

TEST(ParsePairs, Errors) {
    std::istringstream not_coprime("a,b\n4,6\n");
    try {
        sylv::parse_pairs_csv(not_coprime);
        FAIL() << "expected NotCoprime";
    } catch (const sylv::NotCoprime& e) {
        EXPECT_STREQ(e.what(), "not coprime at line 2");
    }
    std::istringstream no_header("3,5\n");
    EXPECT_THROW(sylv::parse_pairs_csv(no_header), sylv::InputError);
    std::istringstream junk("a,b\n3,x\n");
    EXPECT_THROW(sylv::parse_pairs_csv(junk), sylv::InputError);
    std::istringstream three("a,b\n3,5,7\n");
    EXPECT_THROW(sylv::parse_pairs_csv(three), sylv::InputError);
    std::istringstream empty("");
    EXPECT_THROW(sylv::parse_pairs_csv(empty), sylv::InputError);
}

TEST(RunBench, BothMethodsAgreeInBound) {
    const auto report = sylv::run_bench({sylv::make_pair(101, 103)}, 5, 1);
    ASSERT_EQ(report.rows.size(), 2u);
    EXPECT_EQ(report.rows[0].method, "recursive");
    EXPECT_EQ(report.rows[1].method, "enumerate");
    EXPECT_EQ(report.rows[1].status, "ok");
    // S_5(101,103) = 28157802541444275703500
    EXPECT_EQ(report.rows[0].value_digits, 23u);
    EXPECT_EQ(report.rows[1].value_digits, 23u);
}

TEST(RunBench, SkipsEnumerationOverBound) {
    const auto report = sylv::run_bench({sylv::make_pair(10007, 10009)}, 5, 1);
    ASSERT_EQ(report.rows.size(), 2u);
    EXPECT_EQ(report.rows[0].status, "ok");
    EXPECT_TRUE(report.rows[0].value_digits.has_value());
    EXPECT_EQ(report.rows[1].status, "skipped_over_bound");
    EXPECT_FALSE(report.rows[1].wall_time_ns.has_value());
}

TEST(RunBench, CsvLayout) {
    const auto report = sylv::run_bench({sylv::make_pair(3, 5)}, 3, 3);
    const std::string csv = sylv::render_bench_csv(report);
    EXPECT_EQ(csv.rfind("a,b,m,method,status,wall_time_ns,value_digits\n3,5,3,recursive,ok,", 0), 0u);
    EXPECT_NE(csv.find("\n3,5,3,enumerate,ok,"), std::string::npos);
    EXPECT_EQ(csv.find('\r'), std::string::npos);
}

TEST(RunBench, ZeroRepetitionsRejected) {
    EXPECT_THROW(sylv::run_bench({sylv::make_pair(3, 5)}, 3, 0), sylv::InputError);
}
