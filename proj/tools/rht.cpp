#include <iostream>
#include <string>
#include <vector>

#include "rht/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return rht::run(args, std::cout, std::cerr);
}
