#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lienil/catalog.hpp"
#include "lienil/classifier.hpp"

namespace lienil::cli {

enum class ConventionChoice { ceiling, strict_greater, automatic };

std::optional<ConventionChoice> parse_convention_choice(std::string_view text);

/// With `automatic`, the ceiling reading is used unless the brute-force
/// oracle rejects it and accepts the strict-greater one.
LieReport analyze_with_choice(const GroupPtr& G, std::uint32_t p, std::string name, std::size_t brute_force_cap,
                              ConventionChoice choice);

struct VerifyOptions {
  // Entries with |G| above this are skipped; also the brute-force cap.
  std::size_t max_order = 128;
  ConventionChoice convention = ConventionChoice::automatic;
  // 0: one per hardware thread.
  unsigned jobs = 0;
};

struct VerifyResult {
  std::vector<CorpusEntry> entries;
  std::vector<LieReport> reports;
  std::size_t skipped = 0;
  CeilConvention convention = kDefaultConvention;
  std::string convention_note;
  bool all_passed = false;
};

/// Runs the standard corpus. Reports are in corpus order whatever the
/// number of worker threads.
VerifyResult verify_corpus(const VerifyOptions& options);

/// Group x check matrix followed by the failures and a summary line.
std::string render_matrix(const VerifyResult& result);

}  // namespace lienil::cli
