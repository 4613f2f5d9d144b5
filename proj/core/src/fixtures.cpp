#include "penrose/fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "penrose/errors.hpp"

namespace penrose {

namespace {

Fixture parse_fixture(const std::string& filename, const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("fixture " + filename + ": " + e.what());
  }
  Fixture f;
  try {
    f.id = j.at("id").get<std::string>();
    for (const auto& a : j.at("argv")) f.argv.push_back(a.get<std::string>());
    f.expected_json = j.at("expected").dump();
    f.note = j.value("note", std::string{});
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("fixture " + filename + ": " + e.what());
  }
  if (f.argv.empty()) throw ParseError("fixture " + f.id + ": empty argv");
  if (f.argv.front() == "verify")
    throw ParseError("fixture " + f.id + ": fixtures cannot invoke verify");
  return f;
}

}  // namespace

std::vector<Fixture> load_corpus() {
  std::vector<Fixture> out;
  for (const auto& e : detail::embedded_corpus()) out.push_back(parse_fixture(e.filename, e.json));
  return out;
}

std::vector<Fixture> load_corpus(const std::string& dir) {
  namespace fs = std::filesystem;
  if (!fs::is_directory(dir)) throw InvalidArgument("corpus path is not a directory: " + dir);
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".json")
      files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  std::vector<Fixture> out;
  for (const auto& path : files) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read fixture file " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    out.push_back(parse_fixture(path.filename().string(), buffer.str()));
  }
  return out;
}

}  // namespace penrose
