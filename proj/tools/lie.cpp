#include <postlie/cli.hpp>

int main(int argc, char** argv) {
  std::vector<std::string> args{"lie"};
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return postlie::cli::run(args, std::cout, std::cerr);
}
