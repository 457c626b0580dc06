#include <iostream>
#include <string>
#include <vector>

#include "fracdelay/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return fracdelay::run_cli(args, std::cout, std::cerr);
}
