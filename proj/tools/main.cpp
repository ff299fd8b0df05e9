#include <iostream>

#include "monoideal/cli.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return static_cast<int>(monoideal::cli::run(args, std::cout, std::cerr, std::cin));
}
