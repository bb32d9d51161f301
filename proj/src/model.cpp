#include "isac/model.hpp"

#include <sstream>

namespace isac {

namespace {

template <class T>
void check(std::vector<Violation>& out, bool ok, const std::string& field,
           const std::string& what, T value) {
    if (ok) return;
    std::ostringstream msg;
    msg << what << " (got " << value << ")";
    out.push_back({field, msg.str()});
}

}  // namespace

const char* to_string(FormulaVariant v) {
    return v == FormulaVariant::rederived ? "rederived" : "as_written";
}

std::vector<Violation> validate_params(const NetworkParams& p) {
    std::vector<Violation> v;
    check(v, p.lambda_b > 0.0, "lambda_b", "BS density must be > 0", p.lambda_b);
    check(v, p.m_t >= 2, "m_t", "need at least 2 transmit antennas", p.m_t);
    check(v, p.m_r >= 1, "m_r", "need at least 1 receive antenna", p.m_r);
    check(v, p.alpha > 2.0, "alpha", "pathloss exponent must exceed 2 for the interference integral to converge", p.alpha);
    check(v, p.beta > 1.0, "beta", "sensing pathloss exponent must exceed 1", p.beta);
    check(v, p.xi > 0.0, "xi", "radar cross-section must be > 0", p.xi);
    check(v, p.delta_t > 0.0, "delta_t", "matched-filter gain must be > 0", p.delta_t);
    check(v, p.j_max >= 1, "j_max", "max target count must be >= 1", p.j_max);
    if (p.lambda_u)
        check(v, *p.lambda_u >= p.lambda_b, "lambda_u", "user density below BS density", *p.lambda_u);
    if (p.lambda_s)
        check(v, *p.lambda_s >= p.lambda_b, "lambda_s", "target density below BS density", *p.lambda_s);
    return v;
}

std::vector<Violation> validate(const NetworkParams& p, const ResourceAllocation& a) {
    std::vector<Violation> v = validate_params(p);
    check(v, a.k >= 0, "k", "user count must be >= 0", a.k);
    check(v, a.j >= 0, "j", "target count must be >= 0", a.j);
    check(v, a.l >= 1, "l", "communication cluster size must be >= 1", a.l);
    check(v, a.q >= 1, "q", "sensing cluster size must be >= 1", a.q);
    check(v, a.j <= p.j_max, "j", "target count exceeds j_max", a.j);
    if (a.k >= 0 && a.j >= 0 && a.l >= 1 && a.q >= 1)
        check(v, a.nulling_dof() + 1 <= p.m_t, "alloc",
              "DoF constraint k*l + j*(q-1) + 1 <= m_t violated", a.nulling_dof() + 1);
    return v;
}

std::vector<ResourceAllocation> enumerate_feasible(const NetworkParams& p) {
    std::vector<ResourceAllocation> out;
    const int budget = p.m_t - 1;  // k*l + j*(q-1) <= budget
    for (int k = 0; k <= budget; ++k) {
        const int l_hi = (k == 0) ? 1 : budget / k;
        for (int l = 1; l <= l_hi; ++l) {
            const int rem = budget - k * l;
            if (rem < 0) break;
            for (int j = 0; j <= p.j_max; ++j) {
                if (j == 0) {
                    out.push_back({k, l, 0, 1});
                    continue;
                }
                const int q_hi = rem / j + 1;
                for (int q = 1; q <= q_hi; ++q)
                    out.push_back({k, l, j, q});
            }
        }
    }
    return out;
}

}  // namespace isac
