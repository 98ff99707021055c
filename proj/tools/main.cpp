#include <chordsl2/cli.hpp>

#include <cstdlib>
#include <iostream>

int main(int argc, char **argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const auto result = chordsl2::cli::run_args(args, std::getenv(chordsl2::cli::cache_env_var));
  std::cout << result.out;
  std::cerr << result.err;
  return result.exit_code;
}
