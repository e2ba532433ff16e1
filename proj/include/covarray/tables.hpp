#pragma once

// Size comparison tables for the strength-4 constructions. N_c is the
// best size previously known for the same (t, k, v), kept verbatim as
// external reference data.

#include <array>
#include <cstdint>
#include <string_view>

#include "covarray/construct.hpp"

namespace covarray {

struct SizeTableRow {
  std::uint32_t q;
  std::uint64_t k;
  std::uint64_t n_s;  // size of our construction
  std::uint64_t n_c;  // best previously known size
  std::string_view n_c_method;
};

inline constexpr std::array<std::uint32_t, 10> kTableOrders{3, 5, 7, 9, 11, 13, 17, 19, 23, 25};

/// CA(3q^4 - 2; 4, (q^2+1)/2, q) against the best known arrays.
inline std::array<SizeTableRow, 10> half_ovoid_table() {
  constexpr std::array<std::uint64_t, 10> nc{81, 1225, 6853, 19593, 55891, 109837, 329137, 520543, 1119361, 1562497};
  constexpr std::array<std::string_view, 10> method{"Derive from strength 5",
                                                    "2-Restricted SCPHF RE (CL)",
                                                    "3-Restricted SCPHF RE (CL)",
                                                    "2-Restricted SCPHF RE (CL)",
                                                    "3,3-Restricted SCPHF RE (CL)",
                                                    "3,3-Restricted",
                                                    "3-Restricted",
                                                    "2,2-Restricted",
                                                    "CPHF IPO 4 (WCS)",
                                                    "CPHF IPO 4 (WCS)"};
  std::array<SizeTableRow, 10> rows{};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint64_t q = kTableOrders[i];
    rows[i] = {kTableOrders[i], (q * q + 1) / 2, ca4_half_size(q), nc[i], method[i]};
  }
  return rows;
}

/// CA(3q^4 + (2q^3 - q)(q - 2); 4, q^2+1, q) against the best known arrays.
inline std::array<SizeTableRow, 10> full_ovoid_table() {
  constexpr std::array<std::uint64_t, 10> nc{159, 1865, 9247, 26241, 70521, 138385, 412369, 644347, 1398101, 1951825};
  constexpr std::array<std::string_view, 10> method{"CPHF 3-stage (TJ-IM)",
                                                    "Restricted CPHF Sim Annealing (TJ-IM)",
                                                    "3-Restricted SCPHF RE (CL)",
                                                    "CPHF IPO 4 (WCS)",
                                                    "3,3-Restricted",
                                                    "3,3-Restricted",
                                                    "3,2-Restricted",
                                                    "3,2-Restricted",
                                                    "2,2-Restricted",
                                                    "2,2-Restricted"};
  std::array<SizeTableRow, 10> rows{};
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::uint64_t q = kTableOrders[i];
    rows[i] = {kTableOrders[i], q * q + 1, ca4_full_size(q, 2 * q * q * q - q), nc[i], method[i]};
  }
  return rows;
}

}  // namespace covarray
