#ifndef KG2I_ERRORS_H_
#define KG2I_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace kg2i {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input that cannot be parsed. The offset is a byte offset into the input
// stream (or into the field named in the message).
class ParseError : public Error {
 public:
  ParseError(const std::string &message, size_t byte_offset)
      : Error(message + " (at byte " + std::to_string(byte_offset) + ")"),
        byte_offset_(byte_offset) {}

  size_t byte_offset() const { return byte_offset_; }

 private:
  size_t byte_offset_;
};

// Knowledge-graph or registry file violates a load invariant.
class LoadError : public Error {
 public:
  using Error::Error;
};

// Invalid configuration value or configuration file.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Request or response that does not conform to the backend wire schema.
class ProtocolError : public Error {
 public:
  ProtocolError(const std::string &message, std::string field)
      : Error(message + " [field: " + field + "]"), field_(std::move(field)) {}

  const std::string &field() const { return field_; }

 private:
  std::string field_;
};

// Backend unreachable or failing after the retry budget is spent.
class TransportError : public Error {
 public:
  using Error::Error;
};

// A pipeline stage failed; carries the stage name for the exit message.
class StageError : public Error {
 public:
  StageError(std::string stage, const std::string &message)
      : Error("stage '" + stage + "' failed: " + message),
        stage_(std::move(stage)) {}

  const std::string &stage() const { return stage_; }

 private:
  std::string stage_;
};

}  // namespace kg2i

#endif  // KG2I_ERRORS_H_
