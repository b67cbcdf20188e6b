#include "kg2i/jsonl.h"

#include "kg2i/errors.h"

namespace kg2i {

bool JsonlReader::Next(json *value) {
  while (std::getline(in_, buffer_)) {
    line_offset_ = next_offset_;
    next_offset_ += buffer_.size() + 1;
    ++line_;
    if (buffer_.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      *value = json::parse(buffer_);
    } catch (const json::parse_error &e) {
      // nlohmann reports a 1-based byte position within the parsed string.
      size_t within = e.byte > 0 ? e.byte - 1 : 0;
      throw ParseError("malformed JSON on line " + std::to_string(line_),
                       line_offset_ + within);
    }
    return true;
  }
  return false;
}

std::ifstream OpenInput(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  return in;
}

std::ofstream OpenOutput(const std::filesystem::path &path) {
  if (path.has_parent_path()) {
    std::filesystem::create_directories(path.parent_path());
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  return out;
}

std::vector<json> ReadJsonLines(const std::filesystem::path &path) {
  std::ifstream in = OpenInput(path);
  JsonlReader reader(in);
  std::vector<json> out;
  json value;
  while (reader.Next(&value)) out.push_back(std::move(value));
  return out;
}

json ReadJsonFile(const std::filesystem::path &path) {
  std::ifstream in = OpenInput(path);
  try {
    return json::parse(in);
  } catch (const json::parse_error &e) {
    throw ParseError("malformed JSON in '" + path.string() + "'",
                     e.byte > 0 ? e.byte - 1 : 0);
  }
}

const json &RequireField(const json &object, const char *field,
                         const std::string &context) {
  if (!object.is_object() || !object.contains(field)) {
    throw ConfigError(context + ": missing field '" + field + "'");
  }
  return object.at(field);
}

std::string RequireString(const json &object, const char *field,
                          const std::string &context) {
  const json &value = RequireField(object, field, context);
  if (!value.is_string()) {
    throw ConfigError(context + ": field '" + field + "' must be a string");
  }
  return value.get<std::string>();
}

}  // namespace kg2i
