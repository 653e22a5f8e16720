#include <cstring>
#include <iostream>

#include "taucert/accept/acceptance.hpp"

int main(int argc, char** argv) {
  std::string filter;
  bool parallel = true;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--filter") && i + 1 < argc) {
      filter = argv[++i];
    } else if (!std::strcmp(argv[i], "--sequential")) {
      parallel = false;
    } else {
      std::cerr << "usage: acceptance [--filter TAG] [--sequential]\n";
      return 2;
    }
  }
  auto results = taucert::accept::run(filter, parallel);
  std::cout << taucert::accept::format_table(results);
  if (results.empty()) return 1;
  for (const auto& r : results)
    if (!r.pass) return 1;
  return 0;
}
