#include "bperm/io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "bperm/errors.hpp"

namespace bperm {

namespace {

using nlohmann::json;

[[noreturn]] void parse_fail(const std::string& where, const std::string& what) {
  fail(Errc::parse_error, where + ": " + what);
}

std::int64_t require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) parse_fail(where, "expected an integer");
  return j.get<std::int64_t>();
}

}  // namespace

MinkowskiExpression parse_instance(const std::string& json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    parse_fail("document", e.what());
  }
  if (!doc.is_object()) parse_fail("document", "expected a JSON object");
  if (!doc.contains("n")) parse_fail("n", "missing");
  std::int64_t n = require_int(doc["n"], "n");
  if (n < 1 || n > 64) parse_fail("n", "must be in [1, 64]");
  if (!doc.contains("terms")) parse_fail("terms", "missing");
  if (!doc["terms"].is_array()) parse_fail("terms", "expected an array");
  for (const auto& [key, value] : doc.items())
    if (key != "n" && key != "terms") parse_fail(key, "unknown field");

  std::vector<Term> terms;
  int index = 0;
  for (const json& jt : doc["terms"]) {
    const std::string where = "terms[" + std::to_string(index) + "]";
    if (!jt.is_object()) parse_fail(where, "expected an object");
    if (!jt.contains("set")) parse_fail(where + ".set", "missing");
    if (!jt.contains("coeff")) parse_fail(where + ".coeff", "missing");
    for (const auto& [key, value] : jt.items())
      if (key != "set" && key != "coeff") parse_fail(where + "." + key, "unknown field");
    if (!jt["set"].is_array()) parse_fail(where + ".set", "expected an array");
    std::vector<int> values;
    for (const json& jv : jt["set"]) {
      std::int64_t v = require_int(jv, where + ".set");
      if (v < -n || v > n || v == 0)
        parse_fail(where + ".set", "entry " + std::to_string(v) + " outside [-n, n] \\ {0}");
      values.push_back(static_cast<int>(v));
    }
    std::int64_t coeff = require_int(jt["coeff"], where + ".coeff");
    try {
      terms.push_back(Term{AdmissibleSubset(values, static_cast<int>(n)), coeff});
    } catch (const Error& e) {
      parse_fail(where + ".set", e.what());
    }
    ++index;
  }
  return MinkowskiExpression(static_cast<int>(n), std::move(terms));
}

MinkowskiExpression load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(Errc::parse_error, "cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_instance(buffer.str());
}

std::string serialize_instance(const MinkowskiExpression& p) {
  nlohmann::ordered_json doc;
  doc["n"] = p.n();
  doc["terms"] = nlohmann::ordered_json::array();
  for (const Term& t : p.terms()) {
    nlohmann::ordered_json jt;
    jt["set"] = t.set.entries();
    jt["coeff"] = t.coeff;
    doc["terms"].push_back(std::move(jt));
  }
  return doc.dump();
}

std::string instance_digest(const MinkowskiExpression& p) {
  const std::string text = serialize_instance(p);
  std::uint64_t hash = 14695981039346656037ull;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[i] = hex[hash & 0xf];
    hash >>= 4;
  }
  return out;
}

std::string octant_token(const OctantLabel& t) {
  std::string out;
  for (int v : t.entries()) {
    out += v > 0 ? '+' : '-';
    out += std::to_string(std::abs(v));
  }
  return out;
}

OctantLabel parse_octant_arg(const std::string& text, int n) {
  std::vector<int> values;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(token, &used);
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used])))
        ++used;
      if (used != token.size()) throw std::invalid_argument(token);
      values.push_back(v);
    } catch (const std::exception&) {
      fail(Errc::parse_error, "octant: cannot parse entry '" + token + "'");
    }
  }
  try {
    return OctantLabel(AdmissibleSubset(values, n));
  } catch (const Error& e) {
    fail(Errc::parse_error, std::string("octant: ") + e.what());
  }
}

}  // namespace bperm
