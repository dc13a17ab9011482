#include <quiverrep/cli.hpp>

int main(int argc, char** argv) {
  return quiverrep::run_cli({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
