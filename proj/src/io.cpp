#include "superdet/io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "superdet/error.hpp"

namespace superdet::io {

namespace {

// "source:line:col: message" followed by the offending line.
std::string located(std::string_view text, std::string_view source, std::size_t byte,
                    const std::string& message) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t line_start = 0;
  for (std::size_t i = 0; i < byte; ++i)
    if (text[i] == '\n') {
      ++line;
      line_start = i + 1;
    }
  std::size_t line_end = text.find('\n', line_start);
  if (line_end == std::string_view::npos) line_end = text.size();
  std::ostringstream out;
  out << source << ":" << line << ":" << (byte - line_start + 1) << ": " << message << "\n  "
      << text.substr(line_start, line_end - line_start);
  return out.str();
}

nlohmann::json parse_json(std::string_view text, std::string_view source) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    // byte is 1-based and points just past the offending character
    std::size_t at = e.byte > 0 ? e.byte - 1 : 0;
    std::string what = e.what();
    if (auto pos = what.find("parse error"); pos != std::string::npos) what = what.substr(pos);
    throw Error(ErrorCode::InvalidInput, located(text, source, at, what));
  }
}

[[noreturn]] void bad(std::string_view source, const std::string& message) {
  throw Error(ErrorCode::InvalidInput, std::string(source) + ": " + message);
}

// Reported values are rounded to 12 decimals so float noise does not leak
// into golden files.
double snap(double v) {
  if (std::abs(v) >= 1e6) return v;
  const double r = std::round(v * 1e12) / 1e12;
  return r == 0.0 ? 0.0 : r;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::InvalidInput, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

FiniteGroup parse_group(std::string_view text, std::string_view source) {
  const auto doc = parse_json(text, source);
  if (!doc.is_object()) bad(source, "group file must be a JSON object");
  const bool has_table = doc.contains("cayley_table");
  const bool has_perms = doc.contains("permutations");
  if (has_table == has_perms)
    bad(source, "exactly one of \"cayley_table\" and \"permutations\" must be present");

  std::vector<std::string> labels;
  try {
    if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
    FiniteGroup group = [&] {
      if (has_table) {
        auto table = doc.at("cayley_table").get<std::vector<std::vector<Element>>>();
        return FiniteGroup::from_cayley_table(table, labels);
      }
      if (!doc.contains("degree")) bad(source, "\"permutations\" requires \"degree\"");
      auto gens = doc.at("permutations").get<std::vector<std::string>>();
      return FiniteGroup::from_permutations(gens, doc.at("degree").get<std::size_t>());
    }();
    if (has_perms && !labels.empty()) {
      if (labels.size() != group.order()) bad(source, "\"labels\" length differs from group order");
      auto table = group.cayley_table();
      group = FiniteGroup::from_cayley_table(table, labels);
    }
    if (doc.contains("name")) group.set_name(doc.at("name").get<std::string>());
    return group;
  } catch (const nlohmann::json::exception& e) {
    bad(source, e.what());
  }
}

FiniteGroup load_group(const std::filesystem::path& path) {
  return parse_group(read_file(path), path.string());
}

GPartition parse_partition(std::string_view text, std::size_t order, std::string_view source) {
  const auto doc = parse_json(text, source);
  if (!doc.is_object() || !doc.contains("parts")) bad(source, "partition file needs \"parts\"");
  std::vector<std::vector<Element>> parts;
  try {
    parts = doc.at("parts").get<std::vector<std::vector<Element>>>();
  } catch (const nlohmann::json::exception& e) {
    bad(source, e.what());
  }
  return GPartition::from_parts(order, std::move(parts));
}

GPartition load_partition(const std::filesystem::path& path, std::size_t order) {
  return parse_partition(read_file(path), order, path.string());
}

Json complex_json(Complex z) { return Json::array({snap(z.real()), snap(z.imag())}); }

Json complex_vector_json(const std::vector<Complex>& v) {
  Json out = Json::array();
  for (const auto& z : v) out.push_back(complex_json(z));
  return out;
}

Json to_json(const CharacterTable& table) {
  Json rows = Json::array();
  for (const auto& row : table.values) rows.push_back(complex_vector_json(row));
  Json out;
  out["classes"] = table.sizes();
  out["rows"] = std::move(rows);
  out["degrees"] = table.degrees;
  out["seed"] = table.seed;
  return out;
}

Json to_json(const GPartition& partition) {
  Json parts = Json::array();
  for (const auto& p : partition.parts()) parts.push_back(p);
  return parts;
}

Json to_json(const SuperTheory& theory) {
  Json chars = Json::array();
  for (const auto& row : theory.basic_chars) chars.push_back(complex_vector_json(row));
  Json out;
  out["parts"] = to_json(theory.partition);
  out["blocks"] = theory.blocks;
  out["degrees"] = theory.degrees;
  out["basic_characters"] = std::move(chars);
  return out;
}

Json to_json(const LinearFactorization& factorization, const VerificationReport& report) {
  Json factors = Json::array();
  for (const auto& f : factorization.factors) {
    Json entry;
    entry["xi"] = complex_vector_json(f.xi);
    entry["multiplicity"] = f.multiplicity;
    factors.push_back(std::move(entry));
  }
  Json out;
  out["factors"] = std::move(factors);
  out["verified"] = report.passed;
  out["max_rel_error"] = report.max_rel_error;
  out["trials"] = report.trials;
  out["symbolic_checked"] = report.symbolic_checked;
  if (report.symbolic_checked) out["symbolic_match"] = report.symbolic_match;
  return out;
}

Json to_json(const RegularRep& rep) {
  Json matrices = Json::array();
  for (const auto& m : rep.matrices) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      Json row = Json::array();
      for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
      rows.push_back(std::move(row));
    }
    matrices.push_back(std::move(rows));
  }
  Json out;
  out["matrices"] = std::move(matrices);
  return out;
}

}  // namespace superdet::io
