#include <iostream>

#include "isgd/catalog.hpp"
#include "isgd/globalize.hpp"

int main() {
  auto glob = isgd::build_globalization(isgd::reference_partial_action());
  std::cout << glob.quotient.class_count() << " classes\n";
  return glob.quotient.class_count() == 5 ? 0 : 1;
}
