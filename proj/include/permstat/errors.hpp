#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace permstat {

enum class Errc {
  malformed,     // input is not a permutation of 1..n
  ambiguous,     // digit form used where only comma form is valid
  size,          // n too small for the requested family
  range,         // subexcedant entry out of [1, i]
  unknown_name,  // statistic name not in the registry
  too_large,     // n exceeds the enumeration ceiling
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace permstat
