#include <iostream>
#include <string>
#include <vector>

#include "ufa/cli/commands.hpp"

int main(int argc, char** argv) {
    const std::vector<std::string> args(argv + 1, argv + argc);
    return ufa::cli::run(args, std::cout, std::cerr);
}
