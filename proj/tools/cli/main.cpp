#include <iostream>

#include "commands.hpp"

int main(int argc, char** argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return static_cast<int>(sensorfft::cli::run(args, std::cout, std::cerr));
}
