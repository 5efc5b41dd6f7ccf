#include <iostream>

#include "eesurf/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eesurf::run(args, std::cout, std::cerr);
}
