#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "oracles.hpp"
#include "rdnorm/pell.hpp"
#include "rdnorm/rdtheory.hpp"
#include "rdnorm/solve.hpp"

using rdnorm::Claim;
using rdnorm::Errc;
using rdnorm::Error;
using rdnorm::Int;
using rdnorm::QuadInt;

namespace {

std::vector<long> to_longs(const std::vector<Int>& v) {
    std::vector<long> out;
    for (const Int& x : v) out.push_back(x.get_si());
    std::sort(out.begin(), out.end());
    return out;
}

Errc code_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("no error thrown");
    return Errc::invalid_argument;
}

// Every exception must be a true solution the classifier rejects.
void check_sound(const rdnorm::VerificationReport& rep) {
    for (const auto& e : rep.exceptions) {
        const Int m = rdnorm::claim_radicand(rep.claim, e.t);
        CHECK(abs(Int(e.x * e.x - m * e.y * e.y)) == e.n);
        CHECK(sgn(e.y) >= 0);
        if (rep.claim != Claim::minus_two) CHECK_FALSE(rdnorm::allowed_set(rep.claim, e.t).allows(e.n));
    }
}

}  // namespace

TEST_CASE("rd_classify") {
    auto f = rdnorm::rd_classify(Int(10));
    REQUIRE(f);
    CHECK(f->t == 3);
    CHECK(f->r == 1);
    f = rdnorm::rd_classify(Int(146));
    REQUIRE(f);
    CHECK(f->t == 12);
    CHECK(f->r == 2);
    f = rdnorm::rd_classify(Int(79));
    REQUIRE(f);
    CHECK(f->t == 9);
    CHECK(f->r == -2);
    CHECK_FALSE(rdnorm::rd_classify(Int(69)).has_value());
    // m = t^2 + t keeps t (round down at the half-way point).
    f = rdnorm::rd_classify(Int(42));
    REQUIRE(f);
    CHECK(f->t == 6);
    CHECK(f->r == 6);
    CHECK(code_of([] { rdnorm::rd_classify(Int(49)); }) == Errc::perfect_square);
}

TEST_CASE("rd_classify against brute force over all (t, r)") {
    for (long m = 2; m <= 5000; ++m) {
        if (rdnorm::is_square(Int(m))) continue;
        bool any = false;
        long nearest_t = 0;
        for (long t = 1; t * t <= 2 * m + 2; ++t) {
            const long r = m - t * t;
            if (r != 0 && std::labs(r) <= t && (4 * t) % r == 0) {
                any = true;
                if (nearest_t == 0 || std::labs(t * t - m) < std::labs(nearest_t * nearest_t - m)) nearest_t = t;
            }
        }
        const auto f = rdnorm::rd_classify(Int(m));
        // The canonical decomposition exists only when the nearest t works.
        if (f) {
            CHECK(any);
            CHECK(f->m == m);
            CHECK(f->t * f->t + f->r == m);
            CHECK_NOTHROW(rdnorm::make_rd_form(f->t, f->r));
        }
        if (any && !f) CHECK(nearest_t != 0);
    }
}

TEST_CASE("make_rd_form") {
    CHECK(rdnorm::make_rd_form(Int(3), Int(1)).m == 10);
    CHECK(code_of([] { rdnorm::make_rd_form(Int(5), Int(3)); }) == Errc::invalid_rd_form);
    CHECK(code_of([] { rdnorm::make_rd_form(Int(2), Int(3)); }) == Errc::invalid_rd_form);
    CHECK(code_of([] { rdnorm::make_rd_form(Int(4), Int(0)); }) == Errc::invalid_rd_form);
}

TEST_CASE("claim ids") {
    CHECK(rdnorm::parse_claim("2.3") == Claim::plus_one_narrow);
    CHECK(rdnorm::parse_claim("2.6") == Claim::minus_two);
    CHECK(rdnorm::claim_id(Claim::plus_two) == "2.5");
    CHECK(code_of([] { rdnorm::parse_claim("2.7"); }) == Errc::unknown_claim);
}

TEST_CASE("allowed_set") {
    auto k = rdnorm::allowed_set(Claim::plus_one_narrow, Int(3));
    CHECK(k.threshold == 6);
    CHECK(k.listed.empty());
    std::vector<long> allowed;
    for (long n = 1; n < 6; ++n) {
        if (k.allows(Int(n))) allowed.push_back(n);
    }
    CHECK(allowed == std::vector<long>{1, 4});

    k = rdnorm::allowed_set(Claim::plus_two, Int(12));
    CHECK(k.threshold == 50);
    CHECK(to_longs(k.listed) == std::vector<long>{23, 25, 41, 46});
    CHECK(k.allows(Int(18)));  // 2n = 36
    CHECK_FALSE(k.allows(Int(19)));
    CHECK_FALSE(k.below_validity_range);

    k = rdnorm::allowed_set(Claim::minus_two, Int(12));
    CHECK(to_longs(k.listed) == std::vector<long>{21, 27, 39, 42, 54});
    CHECK(k.threshold == 54);

    k = rdnorm::allowed_set(Claim::plus_one_wide, Int(5));
    CHECK(k.threshold == 23);
    CHECK(to_longs(k.listed) == std::vector<long>{10, 17});

    CHECK(rdnorm::allowed_set(Claim::plus_two, Int(5)).below_validity_range);
}

TEST_CASE("verify plus_one_narrow") {
    const auto rep = rdnorm::verify_prop(Claim::plus_one_narrow, 2, 40);
    CHECK(rep.clean());
    std::uint64_t expected = 0;
    for (long t = 2; t <= 40; ++t) expected += static_cast<std::uint64_t>(2 * t - 1);
    CHECK(rep.checked == expected);
}

TEST_CASE("verify plus_one_wide: small t exceptions") {
    const auto rep = rdnorm::verify_prop(Claim::plus_one_wide, 3, 4);
    check_sound(rep);
    REQUIRE(rep.exceptions.size() == 2);
    CHECK(rep.exceptions[0].t == 3);
    CHECK(rep.exceptions[0].n == 10);
    // The witness is associate to (10, 3) = sqrt(10) * (3 + sqrt 10).
    const Int m(10);
    CHECK(rdnorm::are_associates(QuadInt(rep.exceptions[0].x, rep.exceptions[0].y, m), QuadInt(Int(10), Int(3), m)));
    CHECK(rep.exceptions[1].t == 4);
    CHECK(rep.exceptions[1].n == 17);

    // t = 5 fails too: |2^2 - 26| = 22 < 23.
    const auto five = rdnorm::verify_prop(Claim::plus_one_wide, 5, 5);
    check_sound(five);
    REQUIRE(five.exceptions.size() == 1);
    CHECK(five.exceptions[0].n == 22);
    CHECK(five.exceptions[0].x == -2);
    CHECK(five.exceptions[0].y == 1);

    CHECK(rdnorm::verify_prop(Claim::plus_one_wide, 6, 40).clean());
}

TEST_CASE("verify plus_two") {
    const auto rep = rdnorm::verify_prop(Claim::plus_two, 12, 30);
    CHECK(rep.clean());
    // Below the stated range the harness still runs and reports.
    const auto low = rdnorm::verify_prop(Claim::plus_two, 1, 11);
    check_sound(low);
}

TEST_CASE("verify minus_two") {
    const auto rep = rdnorm::verify_prop(Claim::minus_two, 12, 16, {true, 1});
    check_sound(rep);
    // delta = t + sqrt(m) has norm 2 and is none of the listed shapes.
    for (long t = 12; t <= 16; ++t) {
        CHECK(std::any_of(rep.exceptions.begin(), rep.exceptions.end(),
                          [&](const auto& e) { return e.t == t && e.n == 2 && abs(e.x) == t && e.y == 1; }));
    }
    CHECK(std::any_of(rep.exceptions.begin(), rep.exceptions.end(),
                      [](const auto& e) { return e.t == 12 && e.n == 53; }));
    const auto all = rdnorm::verify_prop(Claim::minus_two, 12, 16, {false, 1});
    CHECK(all.exceptions.size() > rep.exceptions.size());
    check_sound(all);
}

TEST_CASE("verify argument checks") {
    CHECK(code_of([] { rdnorm::verify_prop(Claim::plus_one_narrow, 5, 4); }) == Errc::invalid_argument);
    CHECK(code_of([] { rdnorm::verify_prop(Claim::plus_one_narrow, 0, 4); }) == Errc::invalid_argument);
    CHECK(code_of([] { rdnorm::verify_prop(Claim::minus_two, 1, 4); }) == Errc::invalid_argument);
}

TEST_CASE("verify is independent of thread count") {
    const auto one = rdnorm::verify_prop(Claim::minus_two, 12, 20, {false, 1});
    const auto four = rdnorm::verify_prop(Claim::minus_two, 12, 20, {false, 4});
    REQUIRE(one.exceptions.size() == four.exceptions.size());
    for (std::size_t i = 0; i < one.exceptions.size(); ++i) {
        CHECK(one.exceptions[i].t == four.exceptions[i].t);
        CHECK(one.exceptions[i].n == four.exceptions[i].n);
        CHECK(one.exceptions[i].x == four.exceptions[i].x);
    }
    CHECK(one.checked == four.checked);
}

TEST_CASE("minus_two_generators") {
    const Int t(12), m(142);
    const auto g = rdnorm::minus_two_generators(t);
    CHECK(g.size() == 14);
    auto has = [&](long a, long b) { return std::find(g.begin(), g.end(), QuadInt(Int(a), Int(b), m)) != g.end(); };
    CHECK(has(13, 1));
    CHECK(has(23, -2));
    CHECK(has(14, 1));
    CHECK(rdnorm::norm(QuadInt(Int(13), 1, m)) == 27);
    CHECK(rdnorm::norm(QuadInt(Int(23), 2, m)) == -39);
    CHECK(rdnorm::norm(QuadInt(Int(14), 1, m)) == 54);
    CHECK_THROWS_AS(rdnorm::minus_two_generators(Int(1)), Error);
}

TEST_CASE("near_root_norms") {
    for (long t = 2; t <= 100; ++t) {
        const auto v = rdnorm::near_root_norms(Int(t));
        CHECK(v[0] == 2 * t);
        CHECK(v[1] == 1);
        CHECK(v[2] == 2 * t);
    }
}

TEST_CASE("class_number_witness") {
    auto w = rdnorm::class_number_witness(Int(2), Int(2));
    CHECK(w.t == 8);
    CHECK(w.m == 65);
    CHECK(w.valid());
    w = rdnorm::class_number_witness(Int(2), Int(3));
    CHECK(w.t == 12);
    CHECK(w.m == 145);
    CHECK(w.valid());
    CHECK(code_of([] { rdnorm::class_number_witness(Int(1), Int(5)); }) == Errc::precondition);
    CHECK(code_of([] { rdnorm::class_number_witness(Int(2), Int(6)); }) == Errc::composite);

    // Re-validate unsolvability with the plain double loop.
    for (auto [l, q] : {std::pair{2L, 2L}, std::pair{2L, 3L}, std::pair{3L, 5L}, std::pair{2L, 7L}}) {
        w = rdnorm::class_number_witness(Int(l), Int(q));
        CHECK(w.valid());
        for (long n : {q, 4 * q}) {
            CHECK(rdnorm::brute_oracle(w.m, Int(n), Int(3000), Int(120)).empty());
        }
    }
}

TEST_CASE("sweep_threads reads RDNORM_THREADS") {
    ::setenv("RDNORM_THREADS", "3", 1);
    CHECK(rdnorm::sweep_threads() == 3);
    ::setenv("RDNORM_THREADS", "0", 1);
    CHECK(code_of([] { rdnorm::sweep_threads(); }) == Errc::invalid_argument);
    ::setenv("RDNORM_THREADS", "x", 1);
    CHECK(code_of([] { rdnorm::sweep_threads(); }) == Errc::invalid_argument);
    ::unsetenv("RDNORM_THREADS");
    CHECK(rdnorm::sweep_threads() >= 1);
}
