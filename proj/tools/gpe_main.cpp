#include <iostream>
#include <string>
#include <vector>

#include "gpe/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return gpe::run(args, std::cin, std::cout, std::cerr);
}
