#include <vector>

#include "groupsel/cli.hpp"

int main(int argc, char** argv) {
  return groupsel::run_cli(std::vector<std::string>(argv + 1, argv + argc));
}
