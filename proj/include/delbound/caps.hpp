#pragma once

#include <cstdint>
#include <string>

namespace delbound {

struct EnumerationCaps {
  // Largest string space [q]^n (or vertex set) any single routine may walk.
  std::uint64_t max_strings = std::uint64_t{1} << 22;
  // Largest bit-matrix footprint, in 64-bit words, for pairwise relations.
  std::uint64_t max_matrix_words = std::uint64_t{1} << 25;
  // Largest number of string pairs an exhaustive pairwise check may visit.
  std::uint64_t max_pairs = std::uint64_t{1} << 34;
};

/// q^n, saturating at UINT64_MAX.
std::uint64_t saturating_pow(std::uint64_t q, std::uint64_t n);

/// Throws ResourceError when q^n exceeds caps.max_strings.
void require_string_space(std::uint64_t q, std::uint64_t n, const EnumerationCaps& caps,
                          const std::string& what);

}  // namespace delbound
