#include <iostream>
#include <string>
#include <vector>

#include "carries/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return carries::cli::run(args, std::cout, std::cerr);
}
