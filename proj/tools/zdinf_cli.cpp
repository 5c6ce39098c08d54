#include <iostream>

#include "zdinf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return zdinf::run_command(args, std::cout, std::cerr);
}
