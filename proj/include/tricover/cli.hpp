#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace tricover::cli {

enum class Format { Human, Records };

/// One line of structured output: `<kind> key=value key=value ...`.
struct Record {
  std::string kind;
  std::vector<std::pair<std::string, std::string>> fields;

  Record& add(std::string key, std::string value);
  const std::string* get(const std::string& key) const;
};

/// Records print one per line; human output groups consecutive records of one kind as a table.
void render(std::ostream& out, const std::vector<Record>& records, Format format);

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;    // validation failure, bad input, usage error
inline constexpr int kExitInvariant = 2;  // internal invariant violated

/// Runs one invocation; `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace tricover::cli
