// Small shared helpers: error-carrying results, hashing, execution policy.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace logicfuse {

// Execution policy for the enumeration kernels. Serial is the reference
// implementation; Parallel uses OpenMP when compiled in and must produce
// identical results.
enum class Exec : uint8_t { Serial, Parallel };

struct SyntaxError {
    size_t pos = 0;
    std::string message;
    std::string to_string() const {
        return "at offset " + std::to_string(pos) + ": " + message;
    }
};

// Minimal expected-like wrapper for parse-style APIs.
template <typename T>
class Result {
  public:
    Result(T value) : ok_(true), value_(std::move(value)) {}
    Result(SyntaxError err) : ok_(false), error_(std::move(err)) {}

    bool ok() const noexcept { return ok_; }
    explicit operator bool() const noexcept { return ok_; }

    const T& value() const& {
        if (!ok_) throw std::runtime_error("Result: no value (" + error_.to_string() + ")");
        return value_;
    }
    T&& value() && {
        if (!ok_) throw std::runtime_error("Result: no value (" + error_.to_string() + ")");
        return std::move(value_);
    }
    const SyntaxError& error() const {
        if (ok_) throw std::runtime_error("Result: no error");
        return error_;
    }

  private:
    bool ok_;
    T value_{};
    SyntaxError error_{};
};

// splitmix64-style mixer; all structural hashes in the library go through
// this so they are stable across runs and platforms.
inline uint64_t mix64(uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline uint64_t hash_combine(uint64_t seed, uint64_t v) noexcept {
    return mix64(seed ^ (v + 0x9e3779b97f4a7c15ull + (seed << 6) + (seed >> 2)));
}

inline uint64_t hash_string(std::string_view s) noexcept {
    uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : s) h = (h ^ c) * 0x100000001b3ull;
    return mix64(h);
}

}  // namespace logicfuse
