#include "eqob/cli.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return eqob::run(args, std::cout, std::cerr, std::getenv("EQOB_BUDGET"));
}
