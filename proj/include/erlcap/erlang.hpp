#pragma once

#include <optional>

namespace erlcap {

/// Probability that an arrival finds every server busy. Invariant: value in [0, 1].
class BlockingProbability {
public:
    BlockingProbability() = default;
    explicit BlockingProbability(double v);

    double value() const { return value_; }
    operator double() const { return value_; }

private:
    double value_ = 0.0;
};

/// A finite-capacity station: c servers (beds), no waiting room.
struct LossStation {
    int servers = 0;                 // c >= 0
    double mean_service = 1.0;       // 1/mu, days per stay, > 0
    double traffic_intensity = 0.0;  // rho, erlangs, >= 0

    void validate() const;
};

/// Offered load estimated from an observed no-loss period: mean number present
/// equals the offered load, so rho = occupied bed-days / observation days.
struct StandardIntensity {
    double rho_s = 0.0;
    std::optional<BlockingProbability> alpha_s;  // set by planner::standardize
    bool alpha_s_valid = false;                  // alpha_s at or below the configured cap
    long source_days = 0;
    double source_hospital_days = 0.0;
};

/// Erlang loss formula B(c, rho), evaluated by the stable recurrence
/// B(0) = 1, B(j) = rho*B(j-1) / (j + rho*B(j-1)). Never forms factorials.
/// Throws std::domain_error on negative servers or rho.
BlockingProbability erlang_b(int servers, double rho);

/// Independent check path: direct term-by-term summation of
/// (rho^c/c!) / sum_j rho^j/j! in extended precision. Supports servers <= 500;
/// beyond that throws std::domain_error (unsupported scale).
/// Agrees with erlang_b to <= 1e-12 relative for all representable results.
BlockingProbability erlang_b_reference(int servers, double rho);

/// rho = gamma / mu = arrival rate times mean service time.
double traffic_intensity(double gamma, double mean_service);

/// rho_s = total occupied bed-days / window length. alpha_s stays unset until
/// a server count is supplied (planner::standardize).
StandardIntensity estimate_rho_standard(double total_hospital_days, long window_days);

}  // namespace erlcap
