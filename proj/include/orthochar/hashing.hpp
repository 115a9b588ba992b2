/**
 * @file hashing.hpp
 * @brief 64-bit FNV-1a hashing for content-addressed cache keys.
 */
#pragma once

#include <cstdint>
#include <cstdio>
#include <string>

namespace orthochar {

class Fnv64 {
 public:
  void add(const std::string& s) {
    for (unsigned char c : s) {
      h_ ^= c;
      h_ *= 0x100000001b3ULL;
    }
    h_ ^= 0xff;
    h_ *= 0x100000001b3ULL;
  }
  uint64_t value() const { return h_; }
  std::string hex() const {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h_));
    return buf;
  }

 private:
  uint64_t h_ = 0xcbf29ce484222325ULL;
};

}  // namespace orthochar
