#include <fstream>
#include <regex>
#include <sstream>

#include "json.hpp"
#include "lienil/cli/input.hpp"
#include "lienil/errors.hpp"

namespace lienil::cli {

namespace {

std::string strip_spaces(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += c;
  return out;
}

std::int64_t to_int(const std::string& s, const std::string& rel) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw InputError("syntax error in relation '" + rel + "': bad integer '" + s + "'");
  }
}

std::string unsupported(const std::string& why) { return "unsupported presentation shape: " + why; }

}  // namespace

GroupSpec parse_presentation(std::string_view text) {
  static const std::regex word(R"([ab1](\^(-?[0-9]+|[ab]))?)");
  static const std::regex a_order(R"(a\^([0-9]+)=1)");
  static const std::regex b_square(R"(b\^([0-9]+)=(1|a|a\^(-?[0-9]+)))");
  static const std::regex a_conj(R"(a\^b=(a|a\^(-?[0-9]+)))");

  std::optional<std::int64_t> k, j, e;
  std::string body = strip_spaces(text);
  if (body.empty()) throw InputError("syntax error: empty presentation");
  std::vector<std::string> relations;
  std::string cur;
  for (char c : body) {
    if (c == ';' || c == ',') {
      relations.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  relations.push_back(cur);

  for (const std::string& rel : relations) {
    if (rel.empty()) continue;
    const auto eq = rel.find('=');
    if (eq == std::string::npos || rel.find('=', eq + 1) != std::string::npos ||
        !std::regex_match(rel.substr(0, eq), word) || !std::regex_match(rel.substr(eq + 1), word))
      throw InputError("syntax error in relation '" + rel + "'");
    std::smatch m;
    if (std::regex_match(rel, m, a_order)) {
      if (k) throw InputError(unsupported("a^k = 1 given twice"));
      k = to_int(m[1], rel);
    } else if (std::regex_match(rel, m, b_square)) {
      if (m[1] != "2") throw InputError(unsupported("b must satisfy b^2 in <a>, got '" + rel + "'"));
      if (j) throw InputError(unsupported("b^2 given twice"));
      j = m[2] == "1" ? 0 : m[2] == "a" ? 1 : to_int(m[3], rel);
    } else if (std::regex_match(rel, m, a_conj)) {
      if (e) throw InputError(unsupported("a^b given twice"));
      e = m[1] == "a" ? 1 : to_int(m[2], rel);
    } else {
      throw InputError(unsupported("relation '" + rel + "' is not a^k=1, b^2=a^j or a^b=a^e"));
    }
  }
  if (!k) throw InputError(unsupported("missing a^k=1"));
  if (!j) throw InputError(unsupported("missing b^2=1 or b^2=a^j"));
  if (!e) throw InputError(unsupported("missing a^b=a^e"));
  if (*k < 1 || *k > 512) throw InputError(unsupported("a^k=1 needs 1 <= k <= 512"));

  GroupPtr G;
  try {
    const std::int64_t jj = ((*j % *k) + *k) % *k;
    G = build_metacyclic(static_cast<unsigned>(*k), static_cast<unsigned>(jj), *e);
  } catch (const InputError& err) {
    throw InputError(unsupported(err.what()));
  }
  return raw_spec(std::string(text), G->table(), G->labels());
}

GroupSpec parse_table_json(std::string_view text, std::string name) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& err) {
    std::size_t line = 1, col = 1;
    const std::size_t stop = std::min<std::size_t>(err.byte > 0 ? err.byte - 1 : 0, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw InputError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col));
  }
  if (!doc.is_object() || !doc.contains("order") || !doc.contains("table"))
    throw InputError("JSON table must be an object with \"order\" and \"table\"");
  if (!doc["order"].is_number_unsigned()) throw InputError("\"order\" must be a positive integer");
  const auto n = doc["order"].get<std::size_t>();
  if (n == 0) throw InputError("\"order\" must be a positive integer");
  const auto& rows = doc["table"];
  if (!rows.is_array() || rows.size() != n)
    throw InputError("\"table\" must be an array of " + std::to_string(n) + " rows");
  FiniteGroup::Table table(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (!rows[i].is_array() || rows[i].size() != n)
      throw InputError("table row " + std::to_string(i) + " must have " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) {
      const auto& v = rows[i][c];
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= n)
        throw InputError("table[" + std::to_string(i) + "][" + std::to_string(c) + "] is not an element index < " +
                         std::to_string(n));
      table[i][c] = v.get<Element>();
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    if (table[0][i] != i || table[i][0] != i) throw InputError("element 0 must be the identity");

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& l = doc["labels"];
    if (!l.is_array() || l.size() != n) throw InputError("\"labels\" must be an array of " + std::to_string(n) + " strings");
    for (const auto& s : l) {
      if (!s.is_string()) throw InputError("\"labels\" must contain strings");
      labels.push_back(s.get<std::string>());
    }
  }
  make_group(table, labels);
  return raw_spec(std::move(name), std::move(table), std::move(labels));
}

GroupSpec load_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_table_json(ss.str(), path);
}

}  // namespace lienil::cli
