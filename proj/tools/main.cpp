#include <iostream>
#include <vector>

#include "algderiv/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return algderiv::run_cli(args, std::cout, std::cerr);
}
