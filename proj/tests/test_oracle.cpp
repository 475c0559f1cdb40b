#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numeric>

#include "lincor/oracle.hpp"
#include "test_util.hpp"

using namespace lincor;
using namespace testutil;

namespace {

BitProbabilities iid(std::size_t n, double p) {
    return {std::vector<double>(n, p)};
}

BitProbabilities random_probs(std::mt19937_64& rng, std::size_t n) {
    std::uniform_real_distribution<> u(0.0, 1.0);
    BitProbabilities bp;
    for (std::size_t i = 0; i < n; ++i)
        bp.probs.push_back(u(rng));
    return bp;
}

double mass_sum(const OutputDistribution& d) {
    return std::accumulate(d.mass.begin(), d.mass.end(), 0.0);
}

} // namespace

TEST_CASE("two-bit parity by hand") {
    BitMatrix g({bv_from_bits({1, 1})});
    BinaryLinearCode c(std::move(g));
    auto d = exact_output_dist(c, iid(2, 0.25));
    REQUIRE(d.mass.size() == 2);
    CHECK(d.mass[0] == doctest::Approx(0.625).epsilon(1e-15));
    CHECK(d.mass[1] == doctest::Approx(0.375).epsilon(1e-15));
    CHECK(exact_min_entropy(d).value == doctest::Approx(-std::log2(0.625)).epsilon(1e-12));
}

TEST_CASE("identity corrector reproduces the input distribution") {
    auto c = identity_code(4);
    BitProbabilities bp{{0.9, 0.2, 0.5, 0.7}};
    auto d = exact_output_dist(c, bp);
    for (std::size_t idx = 0; idx < 16; ++idx) {
        double expect = 1.0;
        for (std::size_t i = 0; i < 4; ++i) {
            bool one = (idx >> (3 - i)) & 1u; // coordinate 0 = MSB of the index
            expect *= one ? bp.probs[i] : 1.0 - bp.probs[i];
        }
        CHECK(d.mass[idx] == doctest::Approx(expect).epsilon(1e-13));
    }
    // uniform input stays uniform: full k bits out
    auto u = exact_output_dist(c, iid(4, 0.5));
    CHECK(exact_min_entropy(u).value == doctest::Approx(4.0).epsilon(1e-12));
}

TEST_CASE("masses sum to one") {
    std::mt19937_64 rng(43);
    for (const auto& c : small_corpus()) {
        auto d = exact_output_dist(c, random_probs(rng, c.n()));
        CHECK(std::fabs(mass_sum(d) - 1.0) < 1e-12);
    }
}

TEST_CASE("oracle refuses oversized inputs") {
    CHECK_THROWS_AS(exact_output_dist(golay23(), iid(23, 0.4), 20), Error);
    CHECK_NOTHROW(exact_output_dist(golay23(), iid(23, 0.4), 23));
    CHECK_THROWS_AS(exact_output_dist(hamming74(), iid(6, 0.4)), Error); // length mismatch
    CHECK_THROWS_AS(exact_output_dist(hamming74(), iid(7, 1.5)), Error); // bad probability
}

TEST_CASE("bound is sound: never exceeds the exact min-entropy") {
    std::mt19937_64 rng(47);
    std::uniform_real_distribution<> u(0.0, 1.0);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t n = 3 + rng() % 12;
        std::size_t k = 1 + rng() % n;
        auto c = k == n ? identity_code(n) : random_code(rng, n, k);
        auto bp = random_probs(rng, n);
        double h = bp.min_entropy_rate();
        double exact = exact_min_entropy(exact_output_dist(c, bp)).value;
        if (h <= 0.0)
            continue; // a deterministic bit: bound domain excluded
        double bound = new_bound(enumerate_wd(c), c.k(), {h}).value;
        CHECK(bound <= exact + 1e-9);
    }
}

TEST_CASE("bound is tight for biased IID sources") {
    std::mt19937_64 rng(53);
    std::uniform_real_distribution<> u(0.02, 0.48);
    for (const auto& c : small_corpus()) {
        auto wd = enumerate_wd(c);
        for (int trial = 0; trial < 8; ++trial) {
            double p = u(rng);
            double h = -std::log2(1.0 - p); // rate of an IID source with p < 1/2
            double exact = exact_min_entropy(exact_output_dist(c, iid(c.n(), p))).value;
            double bound = new_bound(wd, c.k(), {h}).value;
            CHECK(std::fabs(bound - exact) < 1e-9);
        }
    }
}

TEST_CASE("most probable input maps into the most probable output") {
    // hand case: heavily biased independent bits through [7,4]
    BitProbabilities bp{{0.9, 0.2, 0.8, 0.3, 0.95, 0.1, 0.6}};
    CHECK(most_probable_coset_check(hamming74(), bp));
    // the predicted input itself
    auto x = most_probable_input(bp);
    CHECK(to_hex(x) == to_hex(bv_from_bits({1, 0, 1, 0, 1, 0, 1})));

    std::mt19937_64 rng(59);
    for (int trial = 0; trial < 300; ++trial) {
        std::size_t n = 3 + rng() % 10;
        std::size_t k = 1 + rng() % (std::max<std::size_t>(n - 1, 1));
        auto c = random_code(rng, n, k);
        CHECK(most_probable_coset_check(c, random_probs(rng, n)));
    }
}

TEST_CASE("probability file ingestion") {
    auto tmp = std::filesystem::temp_directory_path() / "lincor_probs_test.txt";
    {
        std::ofstream out(tmp);
        out << "0.5\n0.25\n0.75\n";
    }
    auto bp = read_probs_file(tmp.string(), 3);
    CHECK(bp.probs == std::vector<double>{0.5, 0.25, 0.75});
    CHECK(bp.min_entropy_rate() == doctest::Approx(-std::log2(0.75)).epsilon(1e-12));
    CHECK_THROWS_AS(read_probs_file(tmp.string(), 4), Error);
    {
        std::ofstream out(tmp);
        out << "0.5\n1.25\n0.75\n";
    }
    CHECK_THROWS_AS(read_probs_file(tmp.string(), 3), Error);
    std::filesystem::remove(tmp);
}
