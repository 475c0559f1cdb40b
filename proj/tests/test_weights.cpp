#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "lincor/weights.hpp"
#include "test_util.hpp"

using namespace lincor;
using namespace testutil;

namespace {

WeightDistribution make_wd(std::size_t n, std::vector<long long> counts) {
    WeightDistribution wd;
    wd.n = n;
    for (long long c : counts)
        wd.counts.emplace_back(c);
    return wd;
}

} // namespace

TEST_CASE("enumerate_wd: textbook distributions") {
    CHECK(enumerate_wd(hamming74()) == make_wd(7, {1, 0, 0, 7, 7, 0, 0, 1}));
    CHECK(enumerate_wd(repetition(5)) == make_wd(5, {1, 0, 0, 0, 0, 1}));
    // extended [8,4] Hamming
    CHECK(enumerate_wd(load_code("codes/ext_hamming_8_4.json")) ==
          make_wd(8, {1, 0, 0, 0, 14, 0, 0, 0, 1}));
    // [7,3] simplex: all nonzero words at weight 4
    CHECK(enumerate_wd(load_code("codes/simplex_7_3.json")) == make_wd(7, {1, 0, 0, 0, 7, 0, 0, 0}));
    // [23,12] Golay
    CHECK(enumerate_wd(golay23()) ==
          make_wd(23, {1, 0, 0, 0, 0, 0, 0, 253, 506, 0, 0, 1288, 1288, 0, 0, 506, 253, 0, 0, 0,
                       0, 0, 0, 1}));
}

TEST_CASE("enumerate_wd: dimension cap and thread partitioning") {
    CHECK_THROWS_AS(enumerate_wd(golay23(), 11), Error);
    auto one = enumerate_wd(golay23(), 28, 1);
    auto four = enumerate_wd(golay23(), 28, 4);
    auto seven = enumerate_wd(golay23(), 28, 7); // non power of two thread count
    CHECK(one == four);
    CHECK(one == seven);
}

TEST_CASE("macwilliams: known pairs") {
    auto ham = enumerate_wd(hamming74());
    CHECK(macwilliams(ham, 4) == make_wd(7, {1, 0, 0, 0, 7, 0, 0, 0}));
    // full space <-> singleton
    auto full = enumerate_wd(identity_code(6), 28);
    WeightDistribution point = make_wd(6, {1, 0, 0, 0, 0, 0, 0});
    CHECK(macwilliams(full, 6) == point);
    // transform of the point mass with k=0 gives back the full-space binomials
    CHECK(macwilliams(point, 0) == full);
}

TEST_CASE("macwilliams round trips against direct dual enumeration") {
    for (const auto& c : small_corpus()) {
        auto wd = enumerate_wd(c);
        auto via_transform = macwilliams(wd, c.k());
        auto direct = enumerate_wd(dual(c));
        CHECK(via_transform == direct);
        // and back
        CHECK(macwilliams(via_transform, c.n() - c.k()) == wd);
    }
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        std::size_t n = 4 + rng() % 11;
        std::size_t k = 1 + rng() % (n - 1);
        auto c = random_code(rng, n, k);
        CHECK(macwilliams(enumerate_wd(c), k) == enumerate_wd(dual(c)));
    }
}

TEST_CASE("macwilliams flags corrupted inputs") {
    auto wd = enumerate_wd(hamming74());
    // claiming the wrong dimension makes the division non-exact
    CHECK_THROWS_AS(macwilliams(wd, 5), Error);
    // a perturbed count produces a negative or fractional coefficient
    auto bad = wd;
    bad.counts[3] += 1;
    CHECK_THROWS_AS(macwilliams(bad, 4), Error);
}

TEST_CASE("validate_wd") {
    auto wd = enumerate_wd(golay23());
    CHECK_NOTHROW(validate_wd(wd, 12, 7));
    CHECK_THROWS_AS(validate_wd(wd, 11), Error);   // sum != 2^k
    CHECK_THROWS_AS(validate_wd(wd, 12, 8), Error); // nonzero count below claimed d
    auto bad = wd;
    bad.counts[0] = 0;
    CHECK_THROWS_AS(validate_wd(bad, 12), Error);
}

TEST_CASE("wd file format: write/read round trip") {
    auto wd = enumerate_wd(golay23());
    std::stringstream ss;
    write_wd_stream(ss, wd, 12);
    // zero counts are omitted
    CHECK(ss.str().find("\n1 0\n") == std::string::npos);
    auto back = read_wd_stream(ss, 23, 12, 7);
    CHECK(back == wd);
}

TEST_CASE("wd file format: rejects malformed input") {
    auto parse = [](const std::string& text) {
        std::stringstream ss(text);
        return read_wd_stream(ss, 3, 1);
    };
    CHECK_NOTHROW(parse("3 1\n0 1\n3 1\n"));
    CHECK_THROWS_AS(parse(""), Error);                   // no header
    CHECK_THROWS_AS(parse("3 2\n0 1\n3 1\n"), Error);    // wrong k
    CHECK_THROWS_AS(parse("4 1\n0 1\n3 1\n"), Error);    // wrong n
    CHECK_THROWS_AS(parse("3 1\n0 1\n4 1\n"), Error);    // index beyond n
    CHECK_THROWS_AS(parse("3 1\n3 1\n0 1\n"), Error);    // not ascending
    CHECK_THROWS_AS(parse("3 1\n0 1\n3 2\n"), Error);    // sum != 2^k
    CHECK_THROWS_AS(parse("3 1\n3 2\n"), Error);         // A_0 missing
}

TEST_CASE("bundled wd files match enumeration") {
    auto gol = golay23();
    auto file_wd = read_wd_file(data_path("wd/golay_23_12.wd"), 23, 12, 7);
    CHECK(file_wd == enumerate_wd(gol));
    auto ham15 = load_code("codes/hamming_15_11.json");
    CHECK(read_wd_file(data_path("wd/hamming_15_11.wd"), 15, 11, 3) == enumerate_wd(ham15));
}

TEST_CASE("wd_for_code picks a workable route") {
    // direct: k within cap
    auto gol = golay23();
    auto direct = wd_for_code(gol, 28);
    CHECK(direct == enumerate_wd(gol));
    // via dual: k over cap but n-k within it
    auto via_dual = wd_for_code(gol, 11);
    CHECK(via_dual == direct);
    // ingested file wins when attached
    auto from_file = wd_for_code(gol, 5, data_path("wd/golay_23_12.wd"));
    CHECK(from_file == direct);
    // no route at all
    CHECK_THROWS_AS(wd_for_code(load_code("codes/rm_3_8.json"), 28), Error);
}
