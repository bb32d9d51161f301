#include <doctest.h>

#include <algorithm>

#include "isac/model.hpp"

using namespace isac;

namespace {

// independent brute-force ground set with the constraint re-checked via validate
std::vector<ResourceAllocation> brute_force_feasible(const NetworkParams& p) {
    std::vector<ResourceAllocation> out;
    for (int k = 0; k <= p.m_t + 1; ++k)
        for (int l = 1; l <= p.m_t + 1; ++l)
            for (int j = 0; j <= p.j_max + 1; ++j)
                for (int q = 1; q <= p.m_t + 1; ++q) {
                    if (k == 0 && l > 1) continue;  // canonical degenerate axes
                    if (j == 0 && q > 1) continue;
                    ResourceAllocation a{k, l, j, q};
                    if (validate(p, a).empty()) out.push_back(a);
                }
    return out;
}

bool same_set(std::vector<ResourceAllocation> a, std::vector<ResourceAllocation> b) {
    auto key = [](const ResourceAllocation& x) {
        return std::tuple{x.k, x.l, x.j, x.q};
    };
    auto lt = [&](const ResourceAllocation& x, const ResourceAllocation& y) {
        return key(x) < key(y);
    };
    std::sort(a.begin(), a.end(), lt);
    std::sort(b.begin(), b.end(), lt);
    return a == b;
}

}  // namespace

TEST_CASE("validate accepts the baseline comm-optimal allocation") {
    NetworkParams p;
    CHECK(validate(p, {12, 1, 0, 1}).empty());
}

TEST_CASE("validate reports DoF violations with the offending arithmetic") {
    NetworkParams p;
    auto v = validate(p, {10, 2, 1, 2});  // 20 + 1 + 1 = 22 > 20
    REQUIRE_FALSE(v.empty());
    bool found = false;
    for (const auto& viol : v) found = found || viol.field == "alloc";
    CHECK(found);
}

TEST_CASE("validate rejects j above j_max") {
    NetworkParams p;
    auto v = validate(p, {1, 1, 11, 1});
    REQUIRE_FALSE(v.empty());
    CHECK(v[0].field == "j");
}

TEST_CASE("validate flags bad network parameters") {
    NetworkParams p;
    p.alpha = 2.0;  // interference integral diverges
    CHECK_FALSE(validate_params(p).empty());
    NetworkParams p2;
    p2.lambda_u = 0.5;  // below lambda_b
    CHECK_FALSE(validate_params(p2).empty());
    NetworkParams p3;
    p3.m_t = 1;
    CHECK_FALSE(validate_params(p3).empty());
}

TEST_CASE("enumerate_feasible matches brute force on small antenna counts") {
    for (int m_t : {2, 3, 4, 6}) {
        NetworkParams p;
        p.m_t = m_t;
        p.j_max = (m_t == 3) ? 1 : 10;
        CAPTURE(m_t);
        CHECK(same_set(enumerate_feasible(p), brute_force_feasible(p)));
    }
}

TEST_CASE("enumerate_feasible contains the expected small-instance tuples") {
    NetworkParams p;
    p.m_t = 3;
    p.j_max = 1;
    auto set = enumerate_feasible(p);
    auto has = [&](int k, int l, int j, int q) {
        return std::find(set.begin(), set.end(), ResourceAllocation{k, l, j, q}) != set.end();
    };
    CHECK(has(1, 1, 1, 1));
    CHECK(has(2, 1, 0, 1));
    CHECK(has(1, 2, 0, 1));
    CHECK(has(1, 1, 1, 2));
    CHECK(has(0, 1, 1, 1));
    CHECK_FALSE(has(2, 1, 1, 2));  // 2 + 1 + 1 > 3
}

TEST_CASE("enumerate_feasible at m_t=2 keeps only unit-budget tuples") {
    NetworkParams p;
    p.m_t = 2;
    for (const auto& a : enumerate_feasible(p)) CHECK(a.nulling_dof() <= 1);
}

TEST_CASE("enumerate_feasible count matches brute force at m_t=20") {
    NetworkParams p;  // m_t=20, j_max=10
    CHECK(enumerate_feasible(p).size() == brute_force_feasible(p).size());
}

TEST_CASE("enumerate_feasible is lexicographically ordered") {
    NetworkParams p;
    p.m_t = 6;
    auto set = enumerate_feasible(p);
    auto key = [](const ResourceAllocation& x) { return std::tuple{x.k, x.l, x.j, x.q}; };
    for (std::size_t i = 1; i < set.size(); ++i) CHECK(key(set[i - 1]) < key(set[i]));
}

TEST_CASE("perf point identities hold by construction") {
    NetworkParams p;
    p.lambda_b = 2.0;
    ResourceAllocation a{3, 1, 2, 2};
    PerfPoint perf = make_perf(p, a, 1.25, 0.5);
    CHECK(perf.t_c == p.lambda_b * a.k * 1.25);
    CHECK(perf.t_s == p.lambda_b * a.j * 0.5);
    CHECK(perf.t_sum == perf.t_c + perf.t_s);
}

TEST_CASE("signal_dof equals the DoF margin plus one") {
    NetworkParams p;
    ResourceAllocation a{4, 2, 6, 2};  // kl=8, nu=6
    CHECK(a.signal_dof(p) == 20 - 14 + 1);
    CHECK(validate(p, a).empty());
}
