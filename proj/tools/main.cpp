#include <iostream>
#include <string>
#include <vector>

#include "cli/dispatch.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return wwmtc::cli::dispatch(args, std::cout, std::cerr);
  } catch (...) {
    std::cerr << "wwmtc: internal error\n";
    return 1;
  }
}
