#pragma once

#include <cmath>
#include <limits>
#include <numbers>

#include "pcombine/errors.hpp"

namespace pcombine {

// The three unit-scale laws with regularly varying (index 1) right tails that
// combination transforms of uniform p-values follow.
enum class TailLawKind {
  StandardCauchy,  // tan((0.5-p)*pi), p ~ U(0,1)
  HalfCauchy,      // tan((0.5-p/2)*pi) = |Cauchy|
  ParetoUnit,      // 1/p, support [1, inf)
};

struct TailLaw {
  TailLawKind kind;

  double cdf(double x) const {
    using std::numbers::pi;
    switch (kind) {
      case TailLawKind::StandardCauchy:
        // atan(1/x) form keeps relative accuracy deep in either tail.
        if (x > 1.0) return 1.0 - std::atan(1.0 / x) / pi;
        if (x < -1.0) return -std::atan(1.0 / x) / pi;
        return 0.5 + std::atan(x) / pi;
      case TailLawKind::HalfCauchy:
        if (x <= 0.0) return 0.0;
        if (x > 1.0) return 1.0 - 2.0 * std::atan(1.0 / x) / pi;
        return 2.0 * std::atan(x) / pi;
      case TailLawKind::ParetoUnit:
        if (x <= 1.0) return 0.0;
        return 1.0 - 1.0 / x;
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  double quantile(double u) const {
    using std::numbers::pi;
    if (!(u > 0.0) || !(u < 1.0))
      throw DomainError("tail law quantile requires u in (0,1)");
    switch (kind) {
      case TailLawKind::StandardCauchy:
        if (u > 0.5) return 1.0 / std::tan(pi * (1.0 - u));
        if (u < 0.5) return -1.0 / std::tan(pi * u);
        return 0.0;
      case TailLawKind::HalfCauchy:
        if (u > 0.5) return 1.0 / std::tan(pi * (1.0 - u) / 2.0);
        return std::tan(pi * u / 2.0);
      case TailLawKind::ParetoUnit:
        return 1.0 / (1.0 - u);
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  // c with 1 - F(x) ~ c/x as x -> inf.
  double tail_constant() const {
    switch (kind) {
      case TailLawKind::StandardCauchy: return 1.0 / std::numbers::pi;
      case TailLawKind::HalfCauchy: return 2.0 / std::numbers::pi;
      case TailLawKind::ParetoUnit: return 1.0;
    }
    return std::numeric_limits<double>::quiet_NaN();
  }

  double support_lo() const {
    switch (kind) {
      case TailLawKind::StandardCauchy:
        return -std::numeric_limits<double>::infinity();
      case TailLawKind::HalfCauchy: return 0.0;
      case TailLawKind::ParetoUnit: return 1.0;
    }
    return std::numeric_limits<double>::quiet_NaN();
  }
};

}  // namespace pcombine
