#include <iomanip>
#include <sstream>

#include "lienil/cli/report.hpp"

namespace lienil::cli {

namespace {

template <class T>
nlohmann::ordered_json opt(const std::optional<T>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

template <class T>
std::string opt_text(const std::optional<T>& v) {
  if (!v) return "-";
  std::ostringstream s;
  s << *v;
  return s.str();
}

std::string yes_no(const std::optional<bool>& v) { return !v ? "-" : *v ? "yes" : "no"; }

template <class T>
std::string join(const std::vector<T>& v) {
  std::ostringstream s;
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

}  // namespace

nlohmann::ordered_json to_json(const LieReport& r) {
  nlohmann::ordered_json j;
  j["group_name"] = r.group_name;
  j["order"] = r.order;
  j["p"] = r.p;
  j["lie_nilpotent"] = r.lie_nilpotent;
  j["derived_order"] = r.derived_order;
  j["t_L"] = opt(r.t_L);
  j["t_U"] = opt(r.t_U);
  j["jennings_t_U"] = opt(r.jennings_t_U);
  j["theorem_predicts_maximal"] = opt(r.theorem_predicts_maximal);
  j["observed_maximal"] = opt(r.observed_maximal);
  j["series_summary"] = r.series_summary;
  j["dimension_orders"] = r.dimension_orders;
  j["oracle_dimension_orders"] = r.oracle_dimension_orders;
  j["lower_dimensions"] = r.lower_dimensions;
  j["upper_dimensions"] = r.upper_dimensions;
  j["convention"] = std::string(to_string(r.convention));
  j["convention_agreement"] = r.convention_agreement;
  j["brute_force"] = r.brute_force;
  j["checks"] = r.checks;
  j["passed"] = r.passed();
  j["error"] = opt(r.error);
  return j;
}

std::string render_text(const LieReport& r, bool verbose) {
  std::ostringstream out;
  auto row = [&](const char* key, const std::string& value) { out << std::left << std::setw(16) << key << value << '\n'; };
  row("group", r.group_name);
  row("order", std::to_string(r.order));
  row("prime", std::to_string(r.p));
  if (r.error) {
    row("error", *r.error);
    return out.str();
  }
  row("|G'|", std::to_string(r.derived_order));
  row("Lie nilpotent", r.lie_nilpotent ? "yes" : "no");
  if (r.brute_force) {
    row("t_L", opt_text(r.t_L));
  } else {
    row("t_L", "- (brute force skipped, |G| above cap)");
  }
  if (r.lie_nilpotent) {
    std::string upper = "recursion " + opt_text(r.jennings_t_U);
    if (r.t_U) upper += ", brute force " + opt_text(r.t_U) + (*r.t_U == *r.jennings_t_U ? "  AGREE" : "  DISAGREE");
    row("t^L", upper);
    row("|G'| + 1", std::to_string(r.derived_order + 1));
    row("maximal", "predicted " + yes_no(r.theorem_predicts_maximal) + ", observed " + yes_no(r.observed_maximal));
    if (r.t_L && r.t_U && r.p <= 3)
      row("t_L = t^L", std::string(*r.t_L == *r.t_U ? "yes" : "no") + " (observation)");
    row("d_(m), m >= 1", join(r.series_summary));
  } else if (r.brute_force) {
    row("lower chain", r.lower_status);
  }
  row("convention", std::string(to_string(r.convention)));
  if (verbose) {
    row("|D_(m)| recur", join(r.dimension_orders));
    if (!r.oracle_dimension_orders.empty()) row("|D_(m)| oracle", join(r.oracle_dimension_orders));
    if (r.brute_force) {
      row("dim R^[n]", join(r.lower_dimensions) + " (" + r.lower_status + ")");
      row("dim R^(n)", join(r.upper_dimensions) + " (" + r.upper_status + ")");
    }
    std::string agreement;
    for (const auto& [name, ok] : r.convention_agreement)
      agreement += (agreement.empty() ? "" : ", ") + name + (ok ? " agrees" : " disagrees");
    if (!agreement.empty()) row("vs oracle", agreement);
    for (const auto& [name, ok] : r.checks) row(ok ? "  pass" : "  FAIL", name);
  }
  const auto failed = r.failed_checks();
  row("checks", std::to_string(r.checks.size() - failed.size()) + "/" + std::to_string(r.checks.size()) + " passed");
  for (const auto& f : failed) row("FAIL", f);
  return out.str();
}

}  // namespace lienil::cli
