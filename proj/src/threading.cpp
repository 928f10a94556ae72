#include "subqchem/threading.hpp"

#include <cstdlib>
#include <string>

namespace subqchem {

int thread_limit() {
  if (const char* env = std::getenv("SUBQCHEM_THREADS")) {
    const int v = std::atoi(env);
    if (v <= 1) return 1;
    return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) return 1;
  return static_cast<int>(hw > 16 ? 16 : hw);
}

}  // namespace subqchem
