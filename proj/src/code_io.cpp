#include "zps/code_io.hpp"

#include <fstream>

namespace zps {

namespace {

std::uint64_t get_count(const ordered_json& j, const char* key, std::uint64_t lo, std::uint64_t hi,
                        const std::string& where) {
  if (!j.contains(key)) fail(errc::parse_error, where + ": missing field '" + key + "'");
  const auto& v = j.at(key);
  if (!v.is_number_unsigned())
    fail(errc::parse_error, where + ": field '" + key + "' must be a nonnegative integer");
  std::uint64_t x = v.get<std::uint64_t>();
  if (x < lo || x > hi)
    fail(errc::parse_error, where + ": field '" + key + "' = " + std::to_string(x) +
                                " out of range [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
  return x;
}

MatZ entries_to_matrix(const ordered_json& entries, const RingSpec& ring, std::uint32_t m,
                       std::uint32_t n, const std::string& where) {
  if (!entries.is_array() || entries.size() != m)
    fail(errc::parse_error, where + ": expected " + std::to_string(m) + " rows");
  MatZ a(ring, m, n);
  for (std::uint32_t i = 0; i < m; ++i) {
    const auto& row = entries.at(i);
    if (!row.is_array() || row.size() != n)
      fail(errc::parse_error, where + ": row " + std::to_string(i) + " must have " +
                                  std::to_string(n) + " entries");
    for (std::uint32_t j = 0; j < n; ++j) {
      const auto& cell = row.at(j);
      if (!cell.is_number_unsigned())
        fail(errc::parse_error, where + ": entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") must be a nonnegative integer");
      std::uint64_t v = cell.get<std::uint64_t>();
      if (v >= ring.modulus)
        fail(errc::parse_error, where + ": entry (" + std::to_string(i) + ", " + std::to_string(j) +
                                    ") = " + std::to_string(v) + " is not reduced modulo " +
                                    std::to_string(ring.modulus));
      a.at(i, j) = v;
    }
  }
  return a;
}

ordered_json matrix_entries(const MatZ& a) {
  ordered_json rows = ordered_json::array();
  for (std::uint32_t i = 0; i < a.rows(); ++i) {
    ordered_json row = ordered_json::array();
    for (std::uint32_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

RingSpec ring_from_json(const ordered_json& j, const std::string& where) {
  std::uint64_t p = get_count(j, "p", 2, std::uint64_t(1) << 62, where);
  std::uint64_t s = get_count(j, "s", 1, 62, where);
  try {
    return make_ring(p, static_cast<std::uint32_t>(s));
  } catch (const error& e) {
    fail(errc::parse_error, where + ": " + e.what());
  }
}

ordered_json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open '" + path + "'");
  try {
    return ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail(errc::parse_error, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void write_json_file(const ordered_json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot write '" + path + "'");
  out << j.dump(2) << '\n';
}

}  // namespace

ordered_json matrix_to_json(const MatZ& a) {
  ordered_json j;
  j["p"] = a.ring().p;
  j["s"] = a.ring().s;
  j["m"] = a.rows();
  j["n"] = a.cols();
  j["entries"] = matrix_entries(a);
  return j;
}

MatZ matrix_from_json(const ordered_json& j) {
  const std::string where = "matrix";
  if (!j.is_object()) fail(errc::parse_error, where + ": expected a JSON object");
  RingSpec ring = ring_from_json(j, where);
  auto m = static_cast<std::uint32_t>(get_count(j, "m", 1, 4096, where));
  auto n = static_cast<std::uint32_t>(get_count(j, "n", 1, 4096, where));
  if (!j.contains("entries")) fail(errc::parse_error, where + ": missing field 'entries'");
  return entries_to_matrix(j.at("entries"), ring, m, n, where);
}

void save_matrix(const MatZ& a, const std::string& path) { write_json_file(matrix_to_json(a), path); }

MatZ load_matrix(const std::string& path) { return matrix_from_json(read_json_file(path)); }

ordered_json code_to_json(const RankCode& code) {
  ordered_json j;
  j["p"] = code.ring.p;
  j["s"] = code.ring.s;
  j["m"] = code.m;
  j["n"] = code.n;
  j["d"] = code.d;
  if (code.linear != LinearFlag::unknown) j["linear"] = code.linear == LinearFlag::yes;
  ordered_json words = ordered_json::array();
  for (const MatZ& w : code.words) words.push_back(matrix_entries(w));
  j["words"] = std::move(words);
  return j;
}

RankCode code_from_json(const ordered_json& j, const Limits& limits) {
  const std::string where = "code";
  if (!j.is_object()) fail(errc::parse_error, where + ": expected a JSON object");
  RingSpec ring = ring_from_json(j, where);
  auto m = static_cast<std::uint32_t>(get_count(j, "m", 1, 4096, where));
  auto n = static_cast<std::uint32_t>(get_count(j, "n", 1, 4096, where));
  auto d = static_cast<std::uint32_t>(get_count(j, "d", 2, 4096, where));
  if (!j.contains("words") || !j.at("words").is_array())
    fail(errc::parse_error, where + ": missing word list");
  const auto& words_json = j.at("words");
  if (words_json.size() > limits.max_code_words)
    fail(errc::too_large, where + ": " + std::to_string(words_json.size()) + " words exceed the guard");
  std::vector<MatZ> words;
  words.reserve(words_json.size());
  for (std::size_t i = 0; i < words_json.size(); ++i)
    words.push_back(entries_to_matrix(words_json.at(i), ring, m, n, where + ": word " + std::to_string(i)));

  LinearFlag flag = LinearFlag::unknown;
  if (j.contains("linear")) {
    if (!j.at("linear").is_boolean()) fail(errc::parse_error, where + ": 'linear' must be boolean");
    flag = j.at("linear").get<bool>() ? LinearFlag::yes : LinearFlag::no;
  }
  try {
    return make_rank_code(ring, m, n, d, std::move(words), flag);
  } catch (const error& e) {
    if (e.kind() == errc::duplicate_word) throw;
    throw error(errc::parse_error, std::string(where) + ": " + e.what());
  }
}

void save_code(const RankCode& code, const std::string& path) { write_json_file(code_to_json(code), path); }

RankCode load_code(const std::string& path, const Limits& limits) {
  return code_from_json(read_json_file(path), limits);
}

}  // namespace zps
