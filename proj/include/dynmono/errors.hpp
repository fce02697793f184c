#pragma once

#include <stdexcept>
#include <string>

namespace dynmono {

// Base of every typed failure raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class coefficient_blowup : public error {
 public:
  using error::error;
};

class degree_cap_exceeded : public error {
 public:
  using error::error;
};

class reducible_input : public error {
 public:
  using error::error;
};

class not_2_maximal_input : public error {
 public:
  using error::error;
};

class phi_not_irreducible_mod_p : public error {
 public:
  using error::error;
};

class division_by_zero : public error {
 public:
  using error::error;
};

class zero_input : public error {
 public:
  using error::error;
};

}  // namespace dynmono
