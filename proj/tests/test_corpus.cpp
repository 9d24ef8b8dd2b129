#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "caudit/corpus/document.hpp"
#include "caudit/corpus/sampling.hpp"
#include "caudit/corpus/shard_io.hpp"
#include "caudit/util/io.hpp"

using namespace caudit;
using corpus::Document;

namespace {

std::string temp_path(const std::string& name) {
    auto dir = std::filesystem::temp_directory_path() / "caudit_tests";
    std::filesystem::create_directories(dir);
    return (dir / name).string();
}

}  // namespace

TEST_CASE("jsonl shard reading") {
    std::string path = temp_path("basic.jsonl");
    util::write_file(path,
                     "{\"url\":\"http://a.com\",\"text\":\"Hi.\"}\n"
                     "{\"url\":\"http://b.com\",\"text\":\"Yo.\",\"timestamp\":\"2019-04-18T00:00:00Z\"}\n");
    std::uint64_t skipped = 0;
    auto docs = corpus::read_shard(path, corpus::ShardFormat::Jsonl, &skipped);
    REQUIRE(docs.size() == 2);
    CHECK(docs[0].url == "http://a.com");
    CHECK(docs[0].text == "Hi.");
    CHECK(!docs[0].timestamp.has_value());
    CHECK(docs[1].timestamp.has_value());
    CHECK(skipped == 0);
}

TEST_CASE("jsonl shard skips malformed records") {
    std::string path = temp_path("malformed.jsonl");
    util::write_file(path,
                     "{\"url\":\"http://1.com\",\"text\":\"a\"}\n"
                     "this is not json\n"
                     "{\"url\":\"http://2.com\",\"text\":\"b\"}\n"
                     "{\"text\":\"missing url\"}\n"
                     "{\"url\":\"http://3.com\",\"text\":\"c\"}\n");
    std::uint64_t skipped = 0;
    auto docs = corpus::read_shard(path, corpus::ShardFormat::Jsonl, &skipped);
    CHECK(docs.size() == 3);
    CHECK(skipped == 2);
}

TEST_CASE("empty file yields empty stream") {
    std::string path = temp_path("empty.jsonl");
    util::write_file(path, "");
    std::uint64_t skipped = 0;
    auto docs = corpus::read_shard(path, corpus::ShardFormat::Jsonl, &skipped);
    CHECK(docs.empty());
    CHECK(skipped == 0);
}

TEST_CASE("unreadable file throws") {
    CHECK_THROWS_AS(corpus::read_shard(temp_path("does_not_exist.jsonl")), util::IoError);
}

TEST_CASE("shard round trip, including newlines in text") {
    std::vector<Document> docs = {
        {"http://a.com/x", "line one\nline two\n", std::nullopt},
        {"http://b.com/y", "tabs\tand \"quotes\" and \\backslash", 1555545600},
        {"http://c.com/z", "", std::nullopt},
    };
    for (const char* name : {"rt.jsonl", "rt.jsonl.gz"}) {
        std::string path = temp_path(name);
        CHECK(corpus::write_shard(docs, path) == 3);
        auto back = corpus::read_shard(path);
        CHECK(back == docs);
    }
}

TEST_CASE("empty stream writes empty file") {
    std::string path = temp_path("empty_out.jsonl");
    CHECK(corpus::write_shard({}, path) == 0);
    CHECK(corpus::read_shard(path).empty());
}

TEST_CASE("wet shard reading") {
    std::string wet =
        "WARC/1.0\r\n"
        "WARC-Type: warcinfo\r\n"
        "Content-Length: 4\r\n"
        "\r\n"
        "info\r\n"
        "\r\n"
        "WARC/1.0\r\n"
        "WARC-Type: conversion\r\n"
        "WARC-Target-URI: http://example.com/page\r\n"
        "WARC-Date: 2019-04-18T10:30:00Z\r\n"
        "Content-Length: 19\r\n"
        "\r\n"
        "Hello there.\nBody2.\r\n"
        "\r\n";
    std::string path = temp_path("sample.warc.wet");
    util::write_file(path, wet);
    auto docs = corpus::read_shard(path);
    REQUIRE(docs.size() == 1);
    CHECK(docs[0].url == "http://example.com/page");
    CHECK(docs[0].text == "Hello there.\nBody2.");
    REQUIRE(docs[0].timestamp.has_value());
    CHECK(*docs[0].timestamp == 1555583400);
}

TEST_CASE("corpus stats") {
    CHECK(corpus::stats_of({"u", "", std::nullopt}) ==
          corpus::CorpusStats{1, 0, 0});
    corpus::CorpusStats s = corpus::stats_of({"u", "Hello world.", std::nullopt});
    CHECK(s.doc_count == 1);
    CHECK(s.token_count == 3);  // Hello, world, .
    CHECK(s.byte_size == 12);
}

TEST_CASE("corpus stats are additive") {
    std::vector<Document> a = {{"u1", "First doc here.", std::nullopt},
                               {"u2", "Second one.", std::nullopt}};
    std::vector<Document> b = {{"u3", "don't stop", std::nullopt}};
    corpus::CorpusStats sa, sb, sall;
    for (auto& d : a)
        sa += corpus::stats_of(d);
    for (auto& d : b)
        sb += corpus::stats_of(d);
    for (auto& docs : {a, b})
        for (auto& d : docs)
            sall += corpus::stats_of(d);
    CHECK(sall == sa + sb);
}

TEST_CASE("reservoir sample shorter streams") {
    std::vector<int> five = {1, 2, 3, 4, 5};
    auto got = corpus::reservoir_sample(five, 10, 42);
    CHECK(got == five);
    std::vector<int> ten = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
    CHECK(corpus::reservoir_sample(ten, 10, 42) == ten);
    CHECK_THROWS_AS(corpus::reservoir_sample(ten, 0, 1), std::invalid_argument);
}

TEST_CASE("reservoir sample deterministic for fixed seed") {
    std::vector<int> pop(1000);
    for (int i = 0; i < 1000; ++i)
        pop[i] = i;
    auto a = corpus::reservoir_sample(pop, 50, 7);
    auto b = corpus::reservoir_sample(pop, 50, 7);
    auto c = corpus::reservoir_sample(pop, 50, 8);
    CHECK(a == b);
    CHECK(a != c);
    CHECK(a.size() == 50);
}

// chi-square uniformity of inclusion counts; the critical value comes from
// the Wilson-Hilferty approximation at alpha = 0.001.
TEST_CASE("reservoir sample is uniform (chi-square)") {
    const int population = 1000;
    const std::size_t sample_size = 100;
    const int seeds = 2000;
    std::vector<int> pop(population);
    for (int i = 0; i < population; ++i)
        pop[i] = i;
    std::vector<int> counts(population, 0);
    for (int s = 0; s < seeds; ++s)
        for (int x : corpus::reservoir_sample(pop, sample_size, 1000 + s))
            ++counts[x];
    double expected = static_cast<double>(seeds) * sample_size / population;
    double chi2 = 0;
    for (int c : counts) {
        double d = c - expected;
        chi2 += d * d / expected;
    }
    double dof = population - 1;
    double z = 3.0902;  // upper 0.001 quantile of the standard normal
    double h = 1.0 - 2.0 / (9.0 * dof) + z * std::sqrt(2.0 / (9.0 * dof));
    double critical = dof * h * h * h;
    CHECK(chi2 < critical);
}

TEST_CASE("reservoir per-doc inclusion frequency near target") {
    const int population = 100000;
    const std::size_t sample_size = 1000;
    const int seeds = 200;
    std::vector<int> pop(population);
    for (int i = 0; i < population; ++i)
        pop[i] = i;
    std::vector<int> counts(population, 0);
    for (int s = 0; s < seeds; ++s) {
        corpus::ReservoirSampler<int> sampler(sample_size, 555 + s);
        for (int x : pop)
            sampler.offer(x);
        for (int x : sampler.sample())
            ++counts[x];
    }
    const double p = static_cast<double>(sample_size) / population;
    const double sigma = std::sqrt(p * (1 - p) / seeds);
    int within = 0;
    for (int c : counts) {
        double freq = static_cast<double>(c) / seeds;
        if (std::abs(freq - p) <= 3 * sigma)
            ++within;
    }
    // ~99.5% of binomial mass lies within 3 sigma at these parameters
    CHECK(within >= static_cast<int>(0.985 * population));
}
