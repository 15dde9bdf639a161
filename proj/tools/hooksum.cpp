#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "hooksum/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    std::optional<std::string> cap;
    if (const char* env = std::getenv("HOOKSUM_ENUM_CAP")) cap = env;
    return hooksum::cli::run(args, std::cout, std::cerr, cap);
}
