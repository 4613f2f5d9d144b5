#pragma once

#include <string>
#include <vector>

namespace penrose {

namespace detail {
struct EmbeddedFixture {
  const char* filename;
  const char* json;
};
const std::vector<EmbeddedFixture>& embedded_corpus();
}  // namespace detail

// One stored check: a CLI invocation and its expected JSON output.
struct Fixture {
  std::string id;
  std::vector<std::string> argv;
  std::string expected_json;
  std::string note;  // free-text description of what the fixture pins
};

// The corpus compiled into the library, in canonical (filename) order.
std::vector<Fixture> load_corpus();
// The same format loaded from *.json files in a directory.
std::vector<Fixture> load_corpus(const std::string& dir);

}  // namespace penrose
