#ifndef KG2I_JSONL_H_
#define KG2I_JSONL_H_

#include <cstddef>
#include <filesystem>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace kg2i {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

// Reads line-delimited JSON. Blank lines are skipped. Parse failures raise
// ParseError carrying the absolute byte offset of the failing character.
class JsonlReader {
 public:
  explicit JsonlReader(std::istream &in) : in_(in) {}

  // Returns false at end of input.
  bool Next(json *value);

  // 1-based line number and byte offset of the record last returned.
  size_t line() const { return line_; }
  size_t line_offset() const { return line_offset_; }

 private:
  std::istream &in_;
  std::string buffer_;
  size_t line_ = 0;
  size_t line_offset_ = 0;
  size_t next_offset_ = 0;
};

std::vector<json> ReadJsonLines(const std::filesystem::path &path);
json ReadJsonFile(const std::filesystem::path &path);

// Opens for reading; throws Error naming the path on failure.
std::ifstream OpenInput(const std::filesystem::path &path);
std::ofstream OpenOutput(const std::filesystem::path &path);

// Compact dump, UTF-8 passed through unescaped, newline terminated.
template <typename Json>
void WriteJsonLine(std::ostream &out, const Json &value) {
  out << value.dump() << '\n';
}

// Field access with schema errors naming the field path.
const json &RequireField(const json &object, const char *field,
                         const std::string &context);
std::string RequireString(const json &object, const char *field,
                          const std::string &context);

}  // namespace kg2i

#endif  // KG2I_JSONL_H_
