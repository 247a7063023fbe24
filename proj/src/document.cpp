#include "cyclerep/document.hpp"

#include <fstream>
#include <sstream>

namespace cyclerep {

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string() + ": cannot open file");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& doc) {
  std::ofstream out(path);
  if (!out) throw InvalidInput(path.string() + ": cannot open file for writing");
  out << doc.dump(2) << '\n';
  if (!out) throw InvalidInput(path.string() + ": write failed");
}

std::string document_field(const Json& doc, const std::string& where) {
  if (!doc.is_object() || !doc.contains("field") || !doc["field"].is_string())
    throw ParseError(where + ": missing string member \"field\"");
  auto f = doc["field"].get<std::string>();
  if (f != Rational::kFieldName && f != GaussianRational::kFieldName)
    throw ParseError(where + ": unknown field \"" + f + "\" (expected \"Q\" or \"Q(i)\")");
  return f;
}

}  // namespace cyclerep
