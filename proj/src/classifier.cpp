#include <algorithm>
#include <exception>
#include <string>

#include "lienil/classifier.hpp"
#include "lienil/errors.hpp"
#include "lienil/group_algebra.hpp"

namespace lienil {

namespace {

Subgroup derived_subgroup(const std::vector<Subgroup>& lcs) {
  return lcs.size() > 1 ? lcs[1] : lcs[0];
}

Subgroup gamma3(const std::vector<Subgroup>& lcs) {
  if (lcs.size() > 2) return lcs[2];
  return lcs.back();
}

std::vector<std::size_t> orders_of(const std::vector<Subgroup>& terms) {
  std::vector<std::size_t> out;
  for (const auto& t : terms) out.push_back(t.order());
  return out;
}

std::optional<std::string> lie_nilpotency_violation(const std::vector<Subgroup>& lcs, std::uint32_t p) {
  if (!lcs.back().is_trivial()) return "G is not nilpotent";
  const std::size_t d = derived_subgroup(lcs).order();
  if (!log_exact(d, p))
    return "G' has order " + std::to_string(d) + ", not a power of p = " + std::to_string(p);
  return std::nullopt;
}

bool predicate_from_series(const std::vector<Subgroup>& lcs, std::uint32_t p) {
  const Subgroup derived = derived_subgroup(lcs);
  if (is_cyclic(derived)) return true;
  return p == 2 && is_klein_four(derived) && !gamma3(lcs).is_trivial();
}

}  // namespace

bool is_lie_nilpotent_group(const GroupPtr& G, std::uint32_t p) {
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  return !lie_nilpotency_violation(lower_central_series(G), p);
}

bool theorem_predicate(const GroupPtr& G, std::uint32_t p) {
  if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
  const auto lcs = lower_central_series(G);
  if (auto why = lie_nilpotency_violation(lcs, p)) throw PreconditionError("F_p G is not Lie nilpotent: " + *why);
  return predicate_from_series(lcs, p);
}

bool corollary_check(const LieReport& report) {
  if (!report.lie_nilpotent) throw StateError("corollary_check: group algebra is not Lie nilpotent");
  if (!report.t_L || !report.t_U) throw StateError("corollary_check: brute-force indices are absent");
  return *report.t_U != report.derived_order + 1 || *report.t_L == *report.t_U;
}

bool LieReport::passed() const { return !error && failed_checks().empty(); }

std::vector<std::string> LieReport::failed_checks() const {
  std::vector<std::string> out;
  for (const auto& [name, ok] : checks)
    if (!ok) out.push_back(name);
  return out;
}

LieReport analyze(const GroupPtr& G, std::uint32_t p, std::string name, const AnalyzeOptions& options) {
  LieReport r;
  r.group_name = std::move(name);
  r.p = p;
  r.convention = options.convention;
  try {
    if (!G) throw InputError("analyze: null group");
    if (!is_prime(p)) throw InputError("modulus " + std::to_string(p) + " is not prime");
    r.order = G->order();
    const auto lcs = lower_central_series(G);
    const Subgroup derived = derived_subgroup(lcs);
    r.derived_order = derived.order();
    r.lie_nilpotent = !lie_nilpotency_violation(lcs, p);
    r.brute_force = G->order() <= options.brute_force_cap;

    std::optional<DimensionSeries> series;
    if (r.lie_nilpotent) {
      r.theorem_predicts_maximal = predicate_from_series(lcs, p);
      series = dimension_series_recursive(G, p, options.convention);
      r.series_summary = series->d_values;
      r.dimension_orders = orders_of(series->terms);
      r.jennings_t_U = jennings_upper_index(*series);
    } else {
      bool rejected = false;
      try {
        dimension_series_recursive(G, p, options.convention);
      } catch (const PreconditionError&) {
        rejected = true;
      }
      r.checks["precondition_rejected"] = rejected;
    }

    if (r.brute_force) {
      const GroupAlgebra A(G, p);
      const LiePowerChain lower = lower_lie_chain(A, G->order() + 2);
      const LiePowerChain upper = upper_lie_chain(A, G->order() + 2);
      r.lower_dimensions = lower.dimensions();
      r.upper_dimensions = upper.dimensions();
      r.lower_status = to_string(lower.status);
      r.upper_status = to_string(upper.status);
      r.t_L = lower.nilpotency_index;
      r.t_U = upper.nilpotency_index;
      r.checks["nilpotency_criterion"] = (lower.status == ChainStatus::nilpotent) == r.lie_nilpotent &&
                                         (upper.status == ChainStatus::nilpotent) == r.lie_nilpotent;
      if (r.lie_nilpotent && r.t_L && r.t_U) {
        const std::size_t top = r.derived_order + 1;
        r.observed_maximal = *r.t_L == top;
        r.checks["bound"] = *r.t_L <= *r.t_U && *r.t_U <= top;
        r.checks["theorem_biconditional"] = *r.theorem_predicts_maximal == *r.observed_maximal;
        r.checks["upper_maximal_implies_equal"] = corollary_check(r);
        r.checks["jennings_matches_upper_chain"] = *r.jennings_t_U == *r.t_U;
        if (p > 3) r.checks["large_characteristic_equal"] = *r.t_L == *r.t_U;

        const auto oracle = dimension_series_oracle(A, upper);
        r.oracle_dimension_orders = orders_of(oracle);
        for (CeilConvention c : {CeilConvention::ceiling, CeilConvention::strict_greater}) {
          const DimensionSeries s = c == options.convention ? *series : dimension_series_recursive(G, p, c);
          bool agree = true;
          const std::size_t len = std::max(oracle.size(), s.terms.size());
          for (std::size_t m = 1; m <= len && agree; ++m) {
            const Subgroup& o = m <= oracle.size() ? oracle[m - 1] : oracle.back();
            agree = o == s.term(m);
          }
          r.convention_agreement[std::string(to_string(c))] = agree;
        }
        r.checks["recursion_matches_oracle"] = r.convention_agreement.at(std::string(to_string(options.convention)));
      }
    }

    if (series) {
      const std::uint64_t top = r.derived_order + 1;
      unsigned dsum = 0;
      for (std::size_t m = 2; m <= series->d_values.size(); ++m) dsum += series->d(m);
      r.checks["d_sum"] = dsum == series->derived_log();
      r.checks["vanishing"] = shalev_vanishing_check(*series).empty();
      const bool profile = maximality_profile(*series);
      bool profile_ok = profile == (*r.jennings_t_U == top);
      if (r.t_U) profile_ok = profile_ok && profile == (*r.t_U == top);
      r.checks["maximality_profile"] = profile_ok;
      r.checks["prediction_matches_recursion"] = *r.theorem_predicts_maximal == profile;
      if (profile) {
        r.checks["maximal_orders"] = corollary_orders_check(*series);
        r.checks["generator_bound"] = !derived.is_trivial() ? minimal_generator_count(derived) <= (p == 2 ? 2U : 1U)
                                                             : true;
        if (p == 2 && !is_cyclic(derived))
          r.checks["klein_class3"] = is_klein_four(derived) && gamma3(lcs).order() == 2;
      }
    }
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return r;
}

}  // namespace lienil
