// Shared plumbing: errors, deterministic RNG and hashing, small string and
// file helpers used across the toolchain.
#pragma once

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

namespace nlgp {

class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define NLGP_DEFINE_ERROR(Name)                                  \
  class Name : public Error {                                    \
   public:                                                       \
    explicit Name(const std::string& what) : Error(what) {}      \
  }

NLGP_DEFINE_ERROR(IoError);
NLGP_DEFINE_ERROR(MalformedNotebook);
NLGP_DEFINE_ERROR(NonPythonNotebook);
NLGP_DEFINE_ERROR(ParseError);
NLGP_DEFINE_ERROR(EmptyCorpus);
NLGP_DEFINE_ERROR(UnknownTokenId);
NLGP_DEFINE_ERROR(TokenizerError);
NLGP_DEFINE_ERROR(WrongAnnotatorCount);
NLGP_DEFINE_ERROR(EmptyReference);
NLGP_DEFINE_ERROR(BothEmpty);
NLGP_DEFINE_ERROR(DegenerateVariance);
NLGP_DEFINE_ERROR(JoinMismatch);
NLGP_DEFINE_ERROR(IntentEmpty);
NLGP_DEFINE_ERROR(BackendFailure);
NLGP_DEFINE_ERROR(ConfigInvalid);
NLGP_DEFINE_ERROR(MissingInput);
NLGP_DEFINE_ERROR(StageFailure);

#undef NLGP_DEFINE_ERROR

// ---------------------------------------------------------------------------
// Hashing. FNV-1a is used for stable sub-seeds and content digests; outputs
// must be identical across platforms and standard libraries, which rules out
// std::hash.

inline uint64_t fnv1a64(std::string_view data, uint64_t seed = 0xcbf29ce484222325ull) {
  uint64_t h = seed;
  for (unsigned char c : data) {
    h ^= c;
    h *= 0x100000001b3ull;
  }
  return h;
}

inline uint64_t hash_combine(uint64_t seed, std::string_view data) {
  char buf[8];
  for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((seed >> (8 * i)) & 0xff);
  uint64_t h = fnv1a64(std::string_view(buf, 8));
  return fnv1a64(data, h);
}

inline std::string hex64(uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i) {
    s[i] = digits[v & 0xf];
    v >>= 4;
  }
  return s;
}

// Content digest for run manifests: two FNV lanes over the same bytes.
inline std::string digest_bytes(std::string_view data) {
  return hex64(fnv1a64(data)) + hex64(fnv1a64(data, 0x9e3779b97f4a7c15ull));
}

// ---------------------------------------------------------------------------
// Deterministic RNG (splitmix64). Every randomized operation in the toolchain
// draws from this generator so corpora are reproducible bit-for-bit.

class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return next_double() < p; }

  // Uniform in [0, n). Rejection-free modulo bias is negligible for our n.
  uint64_t next_below(uint64_t n) { return n == 0 ? 0 : next_u64() % n; }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) {
      size_t j = static_cast<size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  uint64_t state_;
};

// ---------------------------------------------------------------------------
// String helpers.

inline std::string_view lstrip(std::string_view s) {
  size_t i = 0;
  while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  return s.substr(i);
}

inline std::string_view rstrip(std::string_view s) {
  size_t n = s.size();
  while (n > 0 && std::isspace(static_cast<unsigned char>(s[n - 1]))) --n;
  return s.substr(0, n);
}

inline std::string_view strip(std::string_view s) { return rstrip(lstrip(s)); }

inline bool is_blank(std::string_view s) { return strip(s).empty(); }

inline std::vector<std::string> split_lines(std::string_view text) {
  std::vector<std::string> lines;
  size_t start = 0;
  while (start <= text.size()) {
    size_t nl = text.find('\n', start);
    if (nl == std::string_view::npos) {
      lines.emplace_back(text.substr(start));
      break;
    }
    lines.emplace_back(text.substr(start, nl - start));
    start = nl + 1;
  }
  // A trailing newline does not open a new line.
  if (!lines.empty() && lines.back().empty() && !text.empty() && text.back() == '\n')
    lines.pop_back();
  return lines;
}

inline std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (size_t i = 0; i < lines.size(); ++i) {
    if (i) out += '\n';
    out += lines[i];
  }
  return out;
}

inline std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::string to_lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

inline std::string leading_whitespace(std::string_view line) {
  size_t i = 0;
  while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
  return std::string(line.substr(0, i));
}

// ---------------------------------------------------------------------------
// File IO.

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Writes via a temporary file in the same directory followed by a rename so
// that an interrupted run never leaves a partial file at `path`.
inline void atomic_write_file(const std::filesystem::path& path, std::string_view data) {
  namespace fs = std::filesystem;
  fs::path dir = path.parent_path();
  if (!dir.empty()) fs::create_directories(dir);
  fs::path tmp = path;
  tmp += ".tmp" + hex64(fnv1a64(path.string())).substr(0, 8);
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot open file for writing: " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw IoError("write failed: " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) {
    fs::remove(tmp);
    throw IoError("rename failed: " + tmp.string() + " -> " + path.string());
  }
}

}  // namespace nlgp
