#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "lienil/dimension_subgroups.hpp"
#include "lienil/group_core.hpp"

namespace lienil {

/// G nilpotent and |G'| a power of p; the condition for F_p G to be Lie
/// nilpotent.
bool is_lie_nilpotent_group(const GroupPtr& G, std::uint32_t p);

/// G' cyclic, or p = 2, G' = C2 x C2 and gamma_3(G) != 1.
/// Throws PreconditionError naming the failed clause when F_p G is not Lie
/// nilpotent.
bool theorem_predicate(const GroupPtr& G, std::uint32_t p);

struct AnalyzeOptions {
  // Brute-force Lie power chains only for |G| <= brute_force_cap.
  std::size_t brute_force_cap = 128;
  CeilConvention convention = kDefaultConvention;
};

struct LieReport {
  std::string group_name;
  std::size_t order = 0;
  std::uint32_t p = 0;
  bool lie_nilpotent = false;
  std::size_t derived_order = 0;
  // Brute-force indices; absent when not Lie nilpotent or above the cap.
  std::optional<std::size_t> t_L;
  std::optional<std::size_t> t_U;
  // From the recursion; absent when not Lie nilpotent.
  std::optional<std::uint64_t> jennings_t_U;
  std::optional<bool> theorem_predicts_maximal;
  // t_L = |G'| + 1 by brute force.
  std::optional<bool> observed_maximal;
  // d_(m) for m >= 1 from the recursion.
  std::vector<unsigned> series_summary;
  // |D_(m)| from the recursion and from G n (1 + R^(m)).
  std::vector<std::size_t> dimension_orders;
  std::vector<std::size_t> oracle_dimension_orders;
  std::vector<std::size_t> lower_dimensions;
  std::vector<std::size_t> upper_dimensions;
  std::string lower_status;
  std::string upper_status;
  // Recursion vs. oracle for each convention, when brute force ran.
  std::map<std::string, bool> convention_agreement;
  CeilConvention convention = kDefaultConvention;
  bool brute_force = false;
  std::map<std::string, bool> checks;
  std::optional<std::string> error;

  bool passed() const;
  std::vector<std::string> failed_checks() const;
};

/// t_U = |G'| + 1 implies t_L = t_U. Throws StateError unless the report is
/// Lie nilpotent with both indices present.
bool corollary_check(const LieReport& report);

/// Never throws; errors are recorded in the report.
LieReport analyze(const GroupPtr& G, std::uint32_t p, std::string name, const AnalyzeOptions& options = {});

}  // namespace lienil
