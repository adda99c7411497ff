#include <atomic>
#include <iomanip>
#include <sstream>
#include <thread>

#include "lienil/cli/verify.hpp"

namespace lienil::cli {

std::optional<ConventionChoice> parse_convention_choice(std::string_view text) {
  if (text == "auto") return ConventionChoice::automatic;
  if (auto c = parse_convention(text))
    return *c == CeilConvention::ceiling ? ConventionChoice::ceiling : ConventionChoice::strict_greater;
  return std::nullopt;
}

namespace {

CeilConvention fixed(ConventionChoice c) {
  return c == ConventionChoice::strict_greater ? CeilConvention::strict_greater : CeilConvention::ceiling;
}

bool agrees(const LieReport& r, CeilConvention c) {
  const auto it = r.convention_agreement.find(std::string(to_string(c)));
  return it == r.convention_agreement.end() || it->second;
}

void run_all(const std::vector<CorpusEntry>& entries, const std::vector<GroupPtr>& groups,
             std::vector<LieReport>& reports, const AnalyzeOptions& options, unsigned jobs) {
  reports.assign(entries.size(), LieReport{});
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      LieReport r = analyze(groups[i], entries[i].p, entries[i].spec.name, options);
      r.checks["corpus_flag"] = r.lie_nilpotent != entries[i].negative_control;
      reports[i] = std::move(r);
    }
  };
  if (jobs == 0) jobs = std::max(1U, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, entries.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
}

}  // namespace

LieReport analyze_with_choice(const GroupPtr& G, std::uint32_t p, std::string name, std::size_t brute_force_cap,
                              ConventionChoice choice) {
  AnalyzeOptions options{brute_force_cap, fixed(choice)};
  LieReport r = analyze(G, p, name, options);
  if (choice == ConventionChoice::automatic && !agrees(r, CeilConvention::ceiling) &&
      agrees(r, CeilConvention::strict_greater)) {
    options.convention = CeilConvention::strict_greater;
    r = analyze(G, p, std::move(name), options);
  }
  return r;
}

VerifyResult verify_corpus(const VerifyOptions& options) {
  VerifyResult result;
  std::vector<GroupPtr> groups;
  for (auto& e : standard_corpus()) {
    GroupPtr G = build(e.spec);
    if (G->order() > options.max_order) {
      ++result.skipped;
      continue;
    }
    result.entries.push_back(std::move(e));
    groups.push_back(std::move(G));
  }

  AnalyzeOptions analyze_options{options.max_order, fixed(options.convention)};
  run_all(result.entries, groups, result.reports, analyze_options, options.jobs);

  std::vector<std::string> disagree_strict, disagree_ceiling;
  std::size_t compared = 0;
  for (const auto& r : result.reports) {
    if (r.convention_agreement.empty()) continue;
    ++compared;
    if (!agrees(r, CeilConvention::ceiling)) disagree_ceiling.push_back(r.group_name);
    if (!agrees(r, CeilConvention::strict_greater)) disagree_strict.push_back(r.group_name);
  }
  auto names = [](const std::vector<std::string>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i];
    return s;
  };
  std::ostringstream note;
  if (options.convention == ConventionChoice::automatic) {
    if (disagree_ceiling.empty()) {
      note << "ceiling (oracle-validated on " << compared << " entries)";
    } else if (disagree_strict.empty()) {
      note << "strict-greater (oracle-validated on " << compared << " entries)";
      analyze_options.convention = CeilConvention::strict_greater;
      run_all(result.entries, groups, result.reports, analyze_options, options.jobs);
    } else {
      note << "ceiling (no convention agrees with the oracle on the whole corpus)";
    }
  } else {
    note << to_string(analyze_options.convention) << " (requested)";
  }
  if (!disagree_ceiling.empty()) note << "; ceiling disagrees on " << names(disagree_ceiling);
  if (!disagree_strict.empty()) note << "; strict-greater disagrees on " << names(disagree_strict);
  result.convention = analyze_options.convention;
  result.convention_note = note.str();

  result.all_passed = true;
  for (const auto& r : result.reports) result.all_passed = result.all_passed && r.passed();
  return result;
}

std::string render_matrix(const VerifyResult& result) {
  struct Column {
    const char* key;
    const char* head;
  };
  static const Column kColumns[] = {
      {"corpus_flag", "flag"},
      {"nilpotency_criterion", "nil"},
      {"precondition_rejected", "pre"},
      {"bound", "bnd"},
      {"theorem_biconditional", "thm"},
      {"upper_maximal_implies_equal", "cor"},
      {"jennings_matches_upper_chain", "jen"},
      {"recursion_matches_oracle", "orc"},
      {"large_characteristic_equal", "p>3"},
      {"d_sum", "dsum"},
      {"vanishing", "van"},
      {"maximality_profile", "prof"},
      {"prediction_matches_recursion", "pred"},
      {"maximal_orders", "ord"},
      {"generator_bound", "gen"},
      {"klein_class3", "kl"},
  };
  std::size_t width = 5;
  for (const auto& r : result.reports) width = std::max(width, r.group_name.size());

  std::ostringstream out;
  auto num = [](const auto& v) { return v ? std::to_string(*v) : std::string("-"); };
  out << std::left << std::setw(static_cast<int>(width) + 2) << "group" << std::right << std::setw(3) << "p"
      << std::setw(5) << "|G|" << std::setw(5) << "|G'|" << std::setw(5) << "t_L" << std::setw(5) << "t^L"
      << std::setw(5) << "jen";
  for (const auto& c : kColumns) out << std::setw(6) << c.head;
  out << '\n';
  for (const auto& r : result.reports) {
    out << std::left << std::setw(static_cast<int>(width) + 2) << r.group_name << std::right << std::setw(3) << r.p
        << std::setw(5) << r.order << std::setw(5) << r.derived_order << std::setw(5) << num(r.t_L) << std::setw(5)
        << num(r.t_U) << std::setw(5) << num(r.jennings_t_U);
    for (const auto& c : kColumns) {
      const auto it = r.checks.find(c.key);
      out << std::setw(6) << (it == r.checks.end() ? "." : it->second ? "ok" : "FAIL");
    }
    if (r.error) out << "  error: " << *r.error;
    out << '\n';
  }

  std::size_t failed = 0;
  for (const auto& r : result.reports) {
    if (r.passed()) continue;
    ++failed;
    if (r.error) out << "FAIL (" << r.group_name << ", " << r.p << "): error: " << *r.error << '\n';
    for (const auto& f : r.failed_checks()) out << "FAIL (" << r.group_name << ", " << r.p << ", " << f << ")\n";
  }
  out << "convention: " << result.convention_note << '\n';
  out << result.reports.size() << " entries, " << failed << " failing";
  if (result.skipped) out << ", " << result.skipped << " skipped above --max-order";
  out << '\n';
  return out.str();
}

}  // namespace lienil::cli
