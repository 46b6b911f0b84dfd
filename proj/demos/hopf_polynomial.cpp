// Evaluates the Hopf link closure in each normalization and prints the results.

#include <symweb/symweb.hpp>

#include <iostream>

using namespace symweb;

int main() {
  const ColoredBraidWord hopf = ColoredBraidWord::parse({1, 1}, "s1 s1");

  std::cout << "Hopf link, both strands colour 1\n";
  std::cout << "  framed      : " << colored_jones(hopf, NormalizationMode::framed).str() << "\n";
  std::cout << "  paper       : " << colored_jones(hopf, NormalizationMode::paper).str() << "\n";
  std::cout << "  self-writhe : " << colored_jones(hopf, NormalizationMode::self_writhe).str()
            << "\n\n";

  const ColoredBraidWord mixed = ColoredBraidWord::parse({1, 2}, "s1 s1");
  std::cout << "Hopf link, colours 1 and 2\n";
  std::cout << "  framed      : " << colored_jones(mixed, NormalizationMode::framed).str() << "\n";

  const ColoredBraidWord trefoil = ColoredBraidWord::parse({1, 1}, "s1 s1 s1");
  std::cout << "\nTrefoil\n";
  std::cout << "  paper       : " << colored_jones(trefoil, NormalizationMode::paper).str()
            << "\n";
  return 0;
}
