#ifndef KG2I_TESTS_SUPPORT_H_
#define KG2I_TESTS_SUPPORT_H_

#include <atomic>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <unistd.h>

namespace kg2i::testing {

inline std::filesystem::path SourceDir() { return KG2I_SOURCE_DIR; }
inline std::filesystem::path ConfigPath(const std::string &name) {
  return SourceDir() / "config" / name;
}
inline std::filesystem::path DataPath(const std::string &rel) {
  return SourceDir() / "tests" / "data" / rel;
}

inline std::string ReadFile(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

inline void WriteFile(const std::filesystem::path &path, const std::string &data) {
  std::ofstream out(path, std::ios::binary);
  out << data;
}

// Scratch directory removed on destruction.
class TempDir {
 public:
  TempDir() {
    static std::atomic<int> counter{0};
    path_ = std::filesystem::temp_directory_path() /
            ("kg2i-test-" + std::to_string(::getpid()) + "-" +
             std::to_string(counter++));
    std::filesystem::remove_all(path_);
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  TempDir(const TempDir &) = delete;
  TempDir &operator=(const TempDir &) = delete;

  const std::filesystem::path &path() const { return path_; }
  std::filesystem::path operator/(const std::string &name) const { return path_ / name; }

 private:
  std::filesystem::path path_;
};

}  // namespace kg2i::testing

#endif  // KG2I_TESTS_SUPPORT_H_
