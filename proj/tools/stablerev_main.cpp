#include <iostream>
#include <vector>

#include "stablerev/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return stablerev::cli::run(std::move(args), std::cout, std::cerr);
}
