// Builds the three-strand projector two ways, verifies its defining properties,
// and prints its closure.

#include <symweb/symweb.hpp>

#include <iostream>

using namespace symweb;

int main() {
  const int k = 3;
  const JwReport rep = verify_jw(k);
  std::cout << "projector on " << k << " strands\n";
  std::cout << "  idempotent      : " << (rep.idempotent ? "yes" : "no") << "\n";
  std::cout << "  kills caps/cups : " << (rep.cap_kill ? "yes" : "no") << "\n";
  std::cout << "  recursion match : " << (rep.recursion_match ? "yes" : "no") << "\n";

  const IntertwinerMatrix m = jw_matrix(k);
  std::cout << "  matrix trace    : " << m.trace().str() << "\n";
  std::cout << "  closure         : " << trace_closure(jw_recursive(k)).str() << "\n";
  return 0;
}
