// Prints the first iterates of x^2 + bx + c, the critical orbit and the
// monogenicity verdict. Usage: iterate_demo [b c]
#include <iostream>

#include "dynmono/analyzer.hpp"

int main(int argc, char** argv) {
  using namespace dynmono;
  QuadParams q{0, -2};
  if (argc == 3) q = {Integer(argv[1]), Integer(argv[2])};
  for (int n = 1; n <= 4; ++n) std::cout << "f^" << n << " = " << iterate(q, n).to_string() << "\n";
  const CriticalOrbit orb = critical_orbit(q, 10);
  std::cout << "critical orbit:";
  for (const auto& v : orb.values) std::cout << " " << v.to_string();
  std::cout << (orb.is_finite() ? " (finite)" : " ...") << "\n";
  try {
    std::cout << "verdict: " << report(q).verdict.to_string() << "\n";
  } catch (const reducible_input& e) {
    std::cout << e.what() << "\n";
  }
}
