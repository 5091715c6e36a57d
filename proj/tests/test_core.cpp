#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "matchmarket/market.hpp"

using namespace matchmarket;

TEST_CASE("rational parsing is exact") {
    CHECK(parse_rational("3/4") == rat(3, 4));
    CHECK(parse_rational("-6/8") == rat(-3, 4));
    CHECK(parse_rational("2") == 2);
    CHECK(parse_rational(" -17 ") == -17);
    CHECK(parse_rational("0.5") == rat(1, 2));
    CHECK(parse_rational("-1.25") == rat(-5, 4));
    CHECK(parse_rational("10.00") == 10);
    CHECK(parse_rational(".5") == rat(1, 2));
    CHECK(format_rational(rat(3, 4)) == "3/4");
    CHECK(format_rational(rat(-8, 2)) == "-4");
    CHECK_THROWS_AS(parse_rational(""), MarketError);
    CHECK_THROWS_AS(parse_rational("1/0"), MarketError);
    CHECK_THROWS_AS(parse_rational("abc"), MarketError);
    CHECK_THROWS_AS(parse_rational("1.2.3"), MarketError);
}

TEST_CASE("dyadic helpers") {
    CHECK(pow2(3) == 8);
    CHECK(pow2(-2) == rat(1, 4));
    CHECK(dyadic_round(rat(1, 3), 4) == rat(5, 16));
    CHECK(rat_from_double(0.25) == rat(1, 4));
}

TEST_CASE("scalar arithmetic and sign queries") {
    Scalar a = Scalar::exact(rat(1, 2));
    Scalar b = Scalar::exact(rat(3, 2));
    CHECK((a + b).value() == 2);
    CHECK((a * b).value() == rat(3, 4));
    CHECK((a - b).sign_or_throw() == -1);

    Scalar iv = Scalar::interval(rat(-1, 8), rat(1, 8));
    CHECK(!iv.sign().has_value());
    CHECK_THROWS_AS(iv.sign_or_throw(), MarketError);
    CHECK(Scalar::interval(rat(1, 8), rat(1, 4)).sign_or_throw() == 1);
    CHECK_THROWS_AS(a / iv, MarketError);

    Scalar w = Scalar::interval(rat(1, 3), rat(1, 2));
    Scalar r = w.outward_rounded(4);
    CHECK(r.lo() <= w.lo());
    CHECK(r.hi() >= w.hi());
    CHECK(r.lo().get_den() <= 16);
}

namespace {

// random expression tree evaluated twice: exact, and with fattened leaves
struct TreeEval {
    std::mt19937_64 rng;
    explicit TreeEval(unsigned seed) : rng(seed) {}

    Rat leaf_value() {
        std::uniform_int_distribution<int> num(-8, 8), den(1, 6);
        return rat(num(rng), den(rng));
    }

    // returns (exact, certified) pair for the same tree
    std::pair<Rat, Scalar> build(int depth) {
        if (depth == 0 || std::uniform_int_distribution<int>(0, 3)(rng) == 0) {
            Rat v = leaf_value();
            Rat pad = rat(1, 1 << std::uniform_int_distribution<int>(4, 12)(rng));
            Scalar s = (std::uniform_int_distribution<int>(0, 1)(rng) == 0)
                           ? Scalar::exact(v)
                           : Scalar::interval(v - pad, v + pad);
            return {v, s};
        }
        auto [lv, ls] = build(depth - 1);
        auto [rv, rs] = build(depth - 1);
        switch (std::uniform_int_distribution<int>(0, 3)(rng)) {
            case 0: return {lv + rv, ls + rs};
            case 1: return {lv - rv, ls - rs};
            case 2: return {lv * rv, ls * rs};
            default:
                if (rs.lo() <= 0 && rs.hi() >= 0) return {lv + rv, ls + rs};
                return {lv / rv, ls / rs};
        }
    }
};

} // namespace

TEST_CASE("certified evaluation always contains the exact result") {
    TreeEval gen(20260809);
    for (int trial = 0; trial < 500; ++trial) {
        auto [exact, certified] = gen.build(4);
        INFO("trial " << trial);
        REQUIRE(certified.contains(exact));
    }
}

namespace {

Market example_market() {
    Market raw;
    raw.n = 2;
    raw.m = 2;
    raw.values = {{rat(2), rat(1)}, {rat(0), rat(1)}};
    raw.capacities = {rat(1), rat(1)};
    return validate_market(raw);
}

} // namespace

TEST_CASE("market validation") {
    SECTION("two-agent example market with unique tops") {
        Market mk = example_market();
        CHECK(mk.unique_top == std::vector<bool>{true, true});
        CHECK(mk.top_item == std::vector<int>{0, 1});
    }
    SECTION("minimal instance") {
        Market raw;
        raw.n = 1;
        raw.m = 1;
        raw.values = {{rat(5)}};
        raw.capacities = {rat(1)};
        CHECK_NOTHROW(validate_market(raw));
    }
    SECTION("capacity mismatch") {
        Market raw;
        raw.n = 2;
        raw.m = 2;
        raw.values = {{rat(2), rat(1)}, {rat(0), rat(1)}};
        raw.capacities = {rat(1), rat(2)};
        try {
            validate_market(raw);
            FAIL("expected capacity_mismatch");
        } catch (const MarketError& e) {
            CHECK(e.code() == Errc::capacity_mismatch);
        }
    }
    SECTION("negative value") {
        Market raw;
        raw.n = 1;
        raw.m = 1;
        raw.values = {{rat(-1)}};
        raw.capacities = {rat(1)};
        CHECK_THROWS_AS(validate_market(raw), MarketError);
    }
    SECTION("empty market") {
        Market raw;
        CHECK_THROWS_AS(validate_market(raw), MarketError);
    }
    SECTION("idempotent") {
        Market once = example_market();
        Market twice = validate_market(once);
        CHECK(once.values == twice.values);
        CHECK(once.top_item == twice.top_item);
        CHECK(once.unique_top == twice.unique_top);
    }
    SECTION("tied top detected") {
        Market raw;
        raw.n = 1;
        raw.m = 2;
        raw.values = {{rat(3), rat(3)}};
        raw.capacities = {rat(1), rat(0)};
        Market mk = validate_market(raw);
        CHECK(!mk.unique_top[0]);
        CHECK(mk.top_item[0] == 0);
    }
}

TEST_CASE("allocation value") {
    Market mk = example_market();
    Allocation onehot = Allocation::from_rats({{rat(1), rat(0)}, {rat(0), rat(1)}});
    CHECK(allocation_value(mk, onehot, 0).value() == 2);

    Allocation half = Allocation::from_rats({{rat(1, 2), rat(1, 2)}, {rat(1, 3), rat(2, 3)}});
    CHECK(allocation_value(mk, half, 0).value() == rat(3, 2));
    CHECK(allocation_value(mk, half, 1).value() == rat(2, 3));

    // interval mode must bracket the exact result
    Allocation fuzzy(2, 2);
    fuzzy.x[1][0] = Scalar::interval(rat(1, 3) - pow2(-10), rat(1, 3) + pow2(-10));
    fuzzy.x[1][1] = Scalar::interval(rat(2, 3) - pow2(-10), rat(2, 3) + pow2(-10));
    CHECK(allocation_value(mk, fuzzy, 1).contains(rat(2, 3)));

    Allocation bad(1, 2);
    CHECK_THROWS_AS(allocation_value(mk, bad, 0), MarketError);
}
